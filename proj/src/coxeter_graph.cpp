#include "garside_kit/coxeter_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "garside_kit/errors.hpp"

namespace gk {

struct CoxeterGraph::Data {
  std::vector<std::string> names;
  std::map<std::string, Letter> index;
  std::vector<unsigned> labels;  // rank x rank
  std::string key;
};

CoxeterGraph::CoxeterGraph() : CoxeterGraph(std::vector<std::string>{}, {}) {}

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  auto d = std::make_shared<Data>();
  d->names = std::move(vertices);
  const std::size_t n = d->names.size();
  for (Letter i = 0; i < n; ++i) {
    if (d->names[i].empty()) raise(ErrorCode::MalformedSpec, "empty vertex name");
    if (!d->index.emplace(d->names[i], i).second)
      raise(ErrorCode::MalformedSpec, "duplicate vertex '" + d->names[i] + "'");
  }
  d->labels.assign(n * n, 2);
  for (std::size_t i = 0; i < n; ++i) d->labels[i * n + i] = 1;
  std::vector<bool> seen(n * n, false);
  for (const auto& [a, b, m] : edges) {
    auto ia = d->index.find(a), ib = d->index.find(b);
    if (ia == d->index.end() || ib == d->index.end())
      raise(ErrorCode::MalformedSpec, "edge mentions unknown vertex");
    Letter s = ia->second, t = ib->second;
    if (s == t) raise(ErrorCode::MalformedSpec, "diagonal label on '" + a + "' must be 1");
    if (m == 1) raise(ErrorCode::MalformedSpec, "off-diagonal label 1 between '" + a + "' and '" + b + "'");
    if (seen[s * n + t] && d->labels[s * n + t] != m)
      raise(ErrorCode::MalformedSpec, "asymmetric labels between '" + a + "' and '" + b + "'");
    seen[s * n + t] = seen[t * n + s] = true;
    d->labels[s * n + t] = d->labels[t * n + s] = m;
  }
  std::ostringstream os;
  for (auto& nm : d->names) os << nm << ',';
  os << '|';
  for (auto m : d->labels) os << m << ',';
  d->key = os.str();
  d_ = std::move(d);
}

std::size_t CoxeterGraph::rank() const { return d_->names.size(); }
const std::vector<std::string>& CoxeterGraph::vertices() const { return d_->names; }
const std::string& CoxeterGraph::name(Letter s) const { return d_->names.at(s); }

Letter CoxeterGraph::index_of(const std::string& name) const {
  auto it = d_->index.find(name);
  if (it == d_->index.end()) raise(ErrorCode::LetterNotInGraph, "'" + name + "' is not a vertex");
  return it->second;
}

bool CoxeterGraph::has_vertex(const std::string& name) const { return d_->index.count(name) > 0; }

unsigned CoxeterGraph::label(Letter s, Letter t) const { return d_->labels[s * rank() + t]; }

std::vector<CoxeterGraph::Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (Letter s = 0; s < rank(); ++s)
    for (Letter t = s + 1; t < rank(); ++t)
      if (label(s, t) != 2) out.emplace_back(name(s), name(t), label(s, t));
  return out;
}

CoxeterGraph CoxeterGraph::induced(const std::vector<Letter>& subset) const {
  std::vector<std::string> names;
  std::vector<Edge> es;
  for (Letter s : subset) names.push_back(name(s));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      unsigned m = label(subset[i], subset[j]);
      if (m != 2) es.emplace_back(names[i], names[j], m);
    }
  return CoxeterGraph(std::move(names), es);
}

std::vector<std::vector<Letter>> CoxeterGraph::components() const {
  std::vector<int> comp(rank(), -1);
  std::vector<std::vector<Letter>> out;
  for (Letter s = 0; s < rank(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Letter> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Letter u = stack.back();
      stack.pop_back();
      for (Letter v = 0; v < rank(); ++v)
        if (v != u && comp[v] < 0 && label(u, v) != 2) {
          comp[v] = comp[s];
          members.push_back(v);
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

unsigned CoxeterGraph::label_lcm() const {
  unsigned l = 1;
  for (Letter s = 0; s < rank(); ++s)
    for (Letter t = s + 1; t < rank(); ++t)
      if (label(s, t) != kInfinity) l = std::lcm(l, label(s, t));
  return l;
}

bool CoxeterGraph::operator==(const CoxeterGraph& o) const {
  return d_ == o.d_ || d_->key == o.d_->key;
}

const std::string& CoxeterGraph::key() const { return d_->key; }

std::string CoxeterGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = d_->names;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b, m] : edges()) {
    nlohmann::json lab = m == kInfinity ? nlohmann::json("inf") : nlohmann::json(m);
    j["edges"].push_back({a, b, lab});
  }
  return j.dump();
}

namespace {

std::vector<std::string> numbered(std::size_t n, std::size_t offset = 0) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i + offset));
  return v;
}

struct Shape {
  std::size_t n;
  std::vector<std::tuple<std::size_t, std::size_t, unsigned>> edges;  // 1-based
};

Shape builtin_shape(const std::string& spec) {
  std::smatch m;
  static const std::regex simple(R"(^(A|B|D|E|F|H)(\d+)$)");
  static const std::regex dihedral(R"(^I2\((\d+|inf)\)$)");
  static const std::regex affine(R"(^affA(\d+)$)");
  Shape sh;
  auto path = [&](std::size_t n) {
    sh.n = n;
    for (std::size_t i = 1; i < n; ++i) sh.edges.emplace_back(i, i + 1, 3);
  };
  if (std::regex_match(spec, m, simple)) {
    std::string fam = m[1];
    std::size_t n = std::stoul(m[2]);
    if (fam == "A") {
      if (n < 1) raise(ErrorCode::BadParameter, "A_n needs n >= 1");
      path(n);
    } else if (fam == "B") {
      if (n < 2) raise(ErrorCode::BadParameter, "B_n needs n >= 2");
      path(n);
      std::get<2>(sh.edges[0]) = 4;
    } else if (fam == "D") {
      if (n < 4) raise(ErrorCode::BadParameter, "D_n needs n >= 4");
      sh.n = n;
      sh.edges.emplace_back(1, 3, 3);
      for (std::size_t i = 2; i < n; ++i) sh.edges.emplace_back(i, i + 1, 3);
    } else if (fam == "E") {
      if (n < 6 || n > 8) raise(ErrorCode::BadParameter, "E_n needs 6 <= n <= 8");
      sh.n = n;
      sh.edges.emplace_back(1, 3, 3);
      sh.edges.emplace_back(2, 4, 3);
      for (std::size_t i = 3; i < n; ++i) sh.edges.emplace_back(i, i + 1, 3);
    } else if (fam == "F") {
      if (n != 4) raise(ErrorCode::BadParameter, "only F4 exists");
      path(4);
      std::get<2>(sh.edges[1]) = 4;
    } else {
      if (n != 3 && n != 4) raise(ErrorCode::BadParameter, "only H3 and H4 exist");
      path(n);
      std::get<2>(sh.edges[0]) = 5;
    }
    return sh;
  }
  if (std::regex_match(spec, m, dihedral)) {
    std::string p = m[1];
    unsigned lab = p == "inf" ? kInfinity : static_cast<unsigned>(std::stoul(p));
    if (lab != kInfinity && lab < 2) raise(ErrorCode::BadParameter, "I2(p) needs p >= 2");
    sh.n = 2;
    sh.edges.emplace_back(1, 2, lab);
    return sh;
  }
  if (std::regex_match(spec, m, affine)) {
    std::size_t n = std::stoul(m[1]);
    if (n < 1) raise(ErrorCode::BadParameter, "affine A_n needs n >= 1");
    sh.n = n + 1;
    if (n == 1) {
      sh.edges.emplace_back(1, 2, kInfinity);
    } else {
      for (std::size_t i = 1; i <= n; ++i) sh.edges.emplace_back(i, i + 1, 3);
      sh.edges.emplace_back(1, n + 1, 3);
    }
    return sh;
  }
  raise(ErrorCode::UnknownBuiltin, "unknown builtin graph '" + spec + "'");
}

}  // namespace

CoxeterGraph builtin_graph(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string piece;
  while (std::getline(ss, piece, '+')) parts.push_back(piece);
  if (parts.empty()) raise(ErrorCode::UnknownBuiltin, "empty graph name");
  std::vector<std::string> names;
  std::vector<CoxeterGraph::Edge> edges;
  for (const auto& p : parts) {
    Shape sh = builtin_shape(p);
    std::size_t off = names.size();
    auto nm = numbered(sh.n, off);
    names.insert(names.end(), nm.begin(), nm.end());
    for (auto [a, b, lab] : sh.edges)
      edges.emplace_back(std::to_string(a + off), std::to_string(b + off), lab);
  }
  return CoxeterGraph(std::move(names), edges);
}

CoxeterGraph graph_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    raise(ErrorCode::MalformedSpec, std::string("graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    raise(ErrorCode::MalformedSpec, "graph JSON needs a \"vertices\" array");
  std::vector<std::string> names;
  for (auto& v : j["vertices"]) {
    if (v.is_string()) names.push_back(v.get<std::string>());
    else if (v.is_number_integer()) names.push_back(std::to_string(v.get<long>()));
    else raise(ErrorCode::MalformedSpec, "vertex names must be strings");
  }
  std::vector<CoxeterGraph::Edge> edges;
  if (j.contains("edges")) {
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3) raise(ErrorCode::MalformedSpec, "edge must be [a, b, label]");
      auto vname = [](const nlohmann::json& x) {
        if (x.is_string()) return x.get<std::string>();
        if (x.is_number_integer()) return std::to_string(x.get<long>());
        raise(ErrorCode::MalformedSpec, "edge endpoint must be a vertex name");
      };
      unsigned lab;
      if (e[2].is_string() && (e[2] == "inf" || e[2] == "infinity")) lab = kInfinity;
      else if (e[2].is_number_integer() && e[2].get<long>() >= 1) lab = e[2].get<unsigned>();
      else raise(ErrorCode::MalformedSpec, "edge label must be an integer >= 2 or \"inf\"");
      edges.emplace_back(vname(e[0]), vname(e[1]), lab);
    }
  }
  return CoxeterGraph(std::move(names), edges);
}

CoxeterGraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n\r");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  std::ifstream in(text);
  if (in && text.find('.') != std::string::npos) {
    std::stringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str());
  }
  return builtin_graph(text);
}

std::string spherical_type(const CoxeterGraph& g, const std::vector<Letter>& comp) {
  const std::size_t k = comp.size();
  if (k == 0) return "";
  if (k == 1) return "A1";
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> adj(k);
  std::size_t edge_count = 0, big = 0;
  unsigned big_label = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      unsigned m = g.label(comp[i], comp[j]);
      if (m == 2) continue;
      if (m == kInfinity) return "";
      adj[i].emplace_back(j, m);
      adj[j].emplace_back(i, m);
      ++edge_count;
      if (m > 3) {
        ++big;
        big_label = m;
      }
    }
  if (edge_count != k - 1) return "";  // not a tree (or not connected)
  std::size_t max_deg = 0;
  for (auto& a : adj) max_deg = std::max(max_deg, a.size());
  if (k == 2) return big == 0 ? "A2" : (big_label == 4 ? "B2" : "I2(" + std::to_string(big_label) + ")");
  if (big > 1) return "";
  if (big == 1) {
    if (max_deg > 2) return "";
    // Walk the path from one end to find the position of the heavy edge.
    std::size_t start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<unsigned> labels;
    std::size_t prev = k, cur = start;
    for (std::size_t step = 0; step + 1 < k; ++step) {
      for (auto [nb, m] : adj[cur])
        if (nb != prev) {
          labels.push_back(m);
          prev = cur;
          cur = nb;
          break;
        }
    }
    std::size_t pos = std::find_if(labels.begin(), labels.end(), [](unsigned m) { return m > 3; }) - labels.begin();
    bool at_end = pos == 0 || pos == labels.size() - 1;
    if (big_label == 4 && at_end) return "B" + std::to_string(k);
    if (big_label == 4 && k == 4 && pos == 1) return "F4";
    if (big_label == 5 && at_end && (k == 3 || k == 4)) return "H" + std::to_string(k);
    return "";
  }
  if (max_deg <= 2) return "A" + std::to_string(k);
  if (max_deg > 3) return "";
  std::size_t branch = k, branches = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (adj[i].size() == 3) {
      branch = i;
      ++branches;
    }
  if (branches != 1) return "";
  std::vector<std::size_t> arms;
  for (auto [nb, m] : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = nb;
    while (adj[cur].size() == 2) {
      std::size_t nxt = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(k);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(k);
  return "";
}

bool is_spherical(const CoxeterGraph& g) {
  for (const auto& c : g.components())
    if (spherical_type(g, c).empty()) return false;
  return true;
}

std::vector<Letter> parse_cox_word(const CoxeterGraph& g, const std::string& text) {
  std::vector<Letter> w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) w.push_back(g.index_of(tok));
  return w;
}

std::string format_cox_word(const CoxeterGraph& g, const std::vector<Letter>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += g.name(word[i]);
  }
  return out;
}

}  // namespace gk
