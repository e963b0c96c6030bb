#include "garside_kit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <json.hpp>
#include <sstream>

#include "garside_kit/coxeter.hpp"
#include "garside_kit/errors.hpp"

#ifndef GARSIDE_KIT_DATA_DIR
#define GARSIDE_KIT_DATA_DIR "data"
#endif

namespace gk {

using nlohmann::json;

std::size_t Presentation::count(const std::string& tag) const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), tag));
}

std::string Presentation::relator_string(std::size_t i) const {
  std::string out;
  for (int x : relators.at(i)) {
    if (!out.empty()) out += ' ';
    if (x < 0) out += '-';
    out += generators.at(static_cast<std::size_t>(std::abs(x)) - 1);
  }
  return out;
}

std::string Presentation::to_json() const {
  json rels = json::array();
  for (auto& r : relators) {
    json w = json::array();
    for (int x : r) w.push_back((x < 0 ? "-" : "") + generators.at(static_cast<std::size_t>(std::abs(x)) - 1));
    rels.push_back(w);
  }
  json j{{"generators", generators}, {"relators", rels}, {"tags", tags}, {"provenance", provenance}};
  return j.dump();
}

namespace {

SignedWord inv(const SignedWord& w) {
  SignedWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

SignedWord cat(std::initializer_list<SignedWord> parts) {
  SignedWord out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

SignedWord pow(const SignedWord& w, long long k) {
  SignedWord base = k < 0 ? inv(w) : w, out;
  for (long long i = 0; i < std::llabs(k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

SignedWord alternating(int s, int t, unsigned m) {
  SignedWord w;
  for (unsigned i = 0; i < m; ++i) w.push_back(i % 2 == 0 ? s : t);
  return w;
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

Presentation braid_presentation(std::size_t n) {
  if (n < 1) raise(ErrorCode::BadParameter, "braid presentation needs n >= 1");
  Presentation P;
  P.generators = numbered(n - 1);
  P.provenance = "braid relations";
  for (int k = 1; k < static_cast<int>(n); ++k)
    for (int l = k + 1; l < static_cast<int>(n); ++l) {
      SignedWord r = l - k == 1 ? cat({{k, l, k}, {-l, -k, -l}}) : SignedWord{k, l, -k, -l};
      P.relators.push_back(r);
      P.tags.push_back("braid");
    }
  return P;
}

Presentation pure_braid_presentation(std::size_t n) {
  if (n < 1) raise(ErrorCode::BadParameter, "pure braid presentation needs n >= 1");
  Presentation P;
  P.provenance = "pure braid relations";
  std::map<std::pair<int, int>, int> index;
  for (int k = 1; k <= static_cast<int>(n); ++k)
    for (int l = k + 1; l <= static_cast<int>(n); ++l) {
      P.generators.push_back("d(" + std::to_string(k) + "," + std::to_string(l) + ")");
      index[{k, l}] = static_cast<int>(P.generators.size());
    }
  auto d = [&](int k, int l) { return SignedWord{index.at({k, l})}; };
  auto di = [&](int k, int l) { return SignedWord{-index.at({k, l})}; };
  auto add = [&](SignedWord lhs, const SignedWord& rhs, const char* tag) {
    P.relators.push_back(cat({lhs, inv(rhs)}));
    P.tags.push_back(tag);
  };
  const int N = static_cast<int>(n);
  // d_rs d_kl d_rs^-1 = d_kl for r < s < k < l or k < r < s < l.
  for (int r = 1; r <= N; ++r)
    for (int s = r + 1; s <= N; ++s)
      for (int k = 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l)
          if ((s < k) || (k < r && s < l)) add(cat({d(r, s), d(k, l), di(r, s)}), d(k, l), "disjoint");
  // d_rk d_kl d_rk^-1 = d_kl^-1 d_rl^-1 d_kl d_rl d_kl for r < k < l.
  for (int r = 1; r <= N; ++r)
    for (int k = r + 1; k <= N; ++k)
      for (int l = k + 1; l <= N; ++l)
        add(cat({d(r, k), d(k, l), di(r, k)}), cat({di(k, l), di(r, l), d(k, l), d(r, l), d(k, l)}), "chain-kl");
  // d_rk d_rl d_rk^-1 = d_kl^-1 d_rl d_kl for r < k < l.
  for (int r = 1; r <= N; ++r)
    for (int k = r + 1; k <= N; ++k)
      for (int l = k + 1; l <= N; ++l)
        add(cat({d(r, k), d(r, l), di(r, k)}), cat({di(k, l), d(r, l), d(k, l)}), "chain-rl");
  // d_rs d_kl d_rs^-1 = [d_rl^-1, d_sl^-1] d_kl [d_rl^-1, d_sl^-1]^-1 for r < k < s < l.
  for (int r = 1; r <= N; ++r)
    for (int k = r + 1; k <= N; ++k)
      for (int s = k + 1; s <= N; ++s)
        for (int l = s + 1; l <= N; ++l)
          add(cat({d(r, s), d(k, l), di(r, s)}),
              cat({di(s, l), di(r, l), d(s, l), d(r, l), d(k, l), di(r, l), di(s, l), d(r, l), d(s, l)}),
              "interleaved");
  return P;
}

Presentation artin_presentation(const CoxeterGraph& g) {
  Presentation P;
  P.generators = g.vertices();
  P.provenance = "artin relations";
  for (Letter s = 0; s < g.rank(); ++s)
    for (Letter t = s + 1; t < g.rank(); ++t) {
      unsigned m = g.label(s, t);
      if (m == kInfinity) continue;
      int a = static_cast<int>(s) + 1, b = static_cast<int>(t) + 1;
      P.relators.push_back(cat({alternating(a, b, m), inv(alternating(b, a, m))}));
      P.tags.push_back("artin");
    }
  return P;
}

Presentation coxeter_presentation(const CoxeterGraph& g) {
  Presentation P;
  P.generators = g.vertices();
  P.provenance = "coxeter relations";
  for (Letter s = 0; s < g.rank(); ++s) {
    int a = static_cast<int>(s) + 1;
    P.relators.push_back({a, a});
    P.tags.push_back("involution");
  }
  for (Letter s = 0; s < g.rank(); ++s)
    for (Letter t = s + 1; t < g.rank(); ++t) {
      unsigned m = g.label(s, t);
      if (m == kInfinity) continue;
      int a = static_cast<int>(s) + 1, b = static_cast<int>(t) + 1;
      P.relators.push_back(pow({a, b}, m));
      P.tags.push_back("coxeter");
    }
  return P;
}

// ------------------------------------------------------------------ asset

namespace {

using Vars = std::map<char, long long>;

// Linear expressions such as "2g-1", "r", "i+1", "0".
long long eval_expr(const std::string& e, const Vars& vars) {
  long long total = 0;
  std::size_t i = 0;
  if (e.empty()) raise(ErrorCode::MalformedSpec, "empty expression in graph asset");
  while (i < e.size()) {
    long long sign = 1;
    if (e[i] == '+' || e[i] == '-') {
      sign = e[i] == '-' ? -1 : 1;
      ++i;
    }
    long long coef = 1;
    bool has_num = false;
    if (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i]))) {
      coef = 0;
      while (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i]))) coef = coef * 10 + (e[i++] - '0');
      has_num = true;
    }
    if (i < e.size() && std::isalpha(static_cast<unsigned char>(e[i]))) {
      auto it = vars.find(e[i]);
      if (it == vars.end()) raise(ErrorCode::MalformedSpec, "unknown variable in graph asset: " + e);
      coef *= it->second;
      ++i;
    } else if (!has_num) {
      raise(ErrorCode::MalformedSpec, "bad expression in graph asset: " + e);
    }
    total += sign * coef;
  }
  return total;
}

bool eval_condition(const std::string& c, const Vars& vars) {
  for (const char* op : {">=", "<=", "==", ">", "<"}) {
    auto pos = c.find(op);
    if (pos == std::string::npos) continue;
    long long a = eval_expr(c.substr(0, pos), vars), b = eval_expr(c.substr(pos + std::strlen(op)), vars);
    std::string o = op;
    if (o == ">=") return a >= b;
    if (o == "<=") return a <= b;
    if (o == "==") return a == b;
    if (o == ">") return a > b;
    return a < b;
  }
  raise(ErrorCode::MalformedSpec, "bad condition in graph asset: " + c);
}

std::string instantiate(const std::string& tmpl, const Vars& vars) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] != '{') {
      out += tmpl[i];
      continue;
    }
    auto close = tmpl.find('}', i);
    if (close == std::string::npos) raise(ErrorCode::MalformedSpec, "unclosed brace in graph asset");
    out += std::to_string(eval_expr(tmpl.substr(i + 1, close - i - 1), vars));
    i = close;
  }
  return out;
}

// Calls fn(vars) once per value of the optional "i" range.
template <class Fn>
void for_each_index(const json& entry, Vars vars, Fn fn) {
  if (entry.contains("when") && !eval_condition(entry["when"].get<std::string>(), vars)) return;
  if (!entry.contains("i")) {
    fn(vars);
    return;
  }
  long long lo = eval_expr(entry["i"][0].get<std::string>(), vars);
  long long hi = eval_expr(entry["i"][1].get<std::string>(), vars);
  for (long long i = lo; i <= hi; ++i) {
    vars['i'] = i;
    fn(vars);
  }
}

}  // namespace

CoxeterGraph mcg_graph(int genus, int boundary, int punctures, const std::string& data_dir) {
  if (genus < 1 || boundary < 0 || punctures < 0)
    raise(ErrorCode::BadParameter, "mcg needs g >= 1, r >= 0, n >= 0");
  std::string dir = data_dir;
  if (dir.empty()) {
    const char* env = std::getenv("GARSIDE_KIT_DATA_DIR");
    dir = env ? env : GARSIDE_KIT_DATA_DIR;
  }
  std::string path = dir + "/mcg_graph.json";
  std::ifstream in(path);
  if (!in) raise(ErrorCode::MissingGraphAsset, "cannot open " + path);
  json asset;
  try {
    asset = json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorCode::MalformedSpec, std::string("graph asset: ") + e.what());
  }
  if (asset.value("version", 0) != 1) raise(ErrorCode::MalformedSpec, "unsupported graph asset version");

  Vars vars{{'g', genus}, {'r', std::max(boundary, 1)}, {'n', punctures}};
  std::vector<std::string> names;
  for (auto& v : asset.at("vertices"))
    for_each_index(v, vars, [&](const Vars& vs) { names.push_back(instantiate(v.at("name"), vs)); });
  std::set<std::string> present(names.begin(), names.end());
  std::vector<CoxeterGraph::Edge> edges;
  for (auto& e : asset.at("edges"))
    for_each_index(e, vars, [&](const Vars& vs) {
      std::string a = instantiate(e.at("a"), vs), b = instantiate(e.at("b"), vs);
      if (present.count(a) && present.count(b)) edges.emplace_back(a, b, e.at("label").get<unsigned>());
    });
  return CoxeterGraph(names, edges);
}

Presentation mcg_presentation(int genus, int boundary, int punctures, const std::string& data_dir) {
  CoxeterGraph G = mcg_graph(genus, boundary, punctures, data_dir);
  Presentation P = artin_presentation(G);
  const int g = genus, r = boundary, n = punctures;

  auto gen = [&](const std::string& name) { return SignedWord{static_cast<int>(G.index_of(name)) + 1}; };
  auto x = [&](int i) { return "x" + std::to_string(i); };
  auto y = [&](int i) { return "y" + std::to_string(i); };
  auto v = [&](int i) { return "v" + std::to_string(i); };
  auto ys = [&](int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(y(i));
    return out;
  };
  auto vs = [&](int to) {
    std::vector<std::string> out;
    for (int i = 1; i <= to; ++i) out.push_back(v(i));
    return out;
  };
  auto join = [](std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  // Delta(X) as the longest element word of the parabolic subgraph on X.
  auto D = [&](const std::vector<std::string>& X) {
    if (X.empty()) return SignedWord{};
    std::vector<Letter> sub;
    for (auto& name : X) sub.push_back(G.index_of(name));
    CoxeterGraph H = G.induced(sub);
    if (!is_spherical(H)) raise(ErrorCode::NotSpherical, "parabolic subgraph is not spherical");
    SignedWord w;
    CoxElement w0 = longest_element(H);
    for (Letter s : w0.word()) w.push_back(static_cast<int>(sub[s]) + 1);
    return w;
  };
  auto add = [&](const SignedWord& lhs, const SignedWord& rhs) {
    P.relators.push_back(cat({lhs, inv(rhs)}));
    P.tags.push_back("extra");
  };
  const std::vector<std::string> Y4{"y1", "y2", "y3", "z"};

  // Relations inherited from the surface with one boundary component.
  if (g >= 2) add(pow(D(Y4), 4), pow(D(join({"x0"}, Y4)), 2));
  if (g >= 3) {
    std::vector<std::string> Y6{"y1", "y2", "y3", "y4", "y5", "z"};
    add(pow(D(Y6), 2), D(join({"x0"}, Y6)));
  }

  if (r == 0 && n == 0) {
    P.provenance = "mcg relations: closed surface";
    if (g == 1) add(pow(cat({gen("x0"), gen("y1")}), 6), {});
    else add(pow(gen("x0"), 2 * g - 2), D(join({"z"}, ys(2, 2 * g - 1))));
    return P;
  }

  if (r == 0) {
    P.provenance = "mcg relations: closed surface with punctures";
    if (n >= 2) add(D({"x0", "x1", "y1", "v1"}), pow(D({"x1", "y1", "v1"}), 2));
    if (g >= 2) add(D(join({"x0", "x1"}, Y4)), pow(D(join({"x1"}, Y4)), 2));
    auto xv = join({"x1"}, vs(n - 1));
    if (g >= 2) add(cat({pow(gen("x0"), 2 * g - n - 2), D(xv)}), pow(D(join({"z"}, ys(2, 2 * g - 1))), 2));
    if (g == 1) {
      add(pow(gen("x0"), n), D(xv));
      add(pow(D({"x0", "y1"}), 4), pow(D(vs(n - 1)), 2));
    }
    return P;
  }

  P.provenance = "mcg relations: surface with boundary and punctures";
  auto conj = [&](int i, int j) {
    // Delta(x_{i+1}, x_j, y_1)^-1 x_i Delta(x_{i+1}, x_j, y_1)
    SignedWord d = D({x(i + 1), x(j), "y1"});
    return cat({inv(d), gen(x(i)), d});
  };
  // x_{i+1} with i = r-1 is x_r, which exists only with punctures.
  auto has = [&](const std::string& name) { return G.has_vertex(name); };
  for (int k = 0; k < r; ++k)
    for (int j = k + 1; j < r; ++j)
      for (int i = j + 1; i < r; ++i)
        if (has(x(i + 1))) {
          SignedWord c = conj(i, j);
          add(cat({gen(x(k)), c}), cat({c, gen(x(k))}));
        }
  if (g >= 2)
    for (int j = 0; j < r; ++j)
      for (int i = j + 1; i < r; ++i)
        if (has(x(i + 1))) {
          SignedWord c = conj(i, j);
          add(cat({gen("y2"), c}), cat({c, gen("y2")}));
        }
  if (g >= 2 && r >= 2) add(gen("u1"), cat({D(join({"x0", "x1"}, Y4)), pow(D(join({"x1"}, Y4)), -2)}));
  if (g >= 2)
    for (int i = 1; i <= r - 2; ++i)
      add(gen("u" + std::to_string(i + 1)),
          cat({D(join({x(i), x(i + 1)}, Y4)), pow(D(join({x(i + 1)}, Y4)), -2), pow(D({"x0", x(i + 1), "y1"}), 2),
               pow(D({"x0", x(i), x(i + 1), "y1"}), -1)}));
  if (n >= 2) add(D({x(r - 1), x(r), "y1", "v1"}), pow(D({x(r), "y1", "v1"}), 2));
  if (n >= 1 && g >= 2 && r == 1) add(D(join({"x0", "x1"}, Y4)), pow(D(join({"x1"}, Y4)), 2));
  if (n >= 1 && g >= 2 && r >= 2)
    add(cat({D(join({x(r - 1), x(r)}, Y4)), pow(D(join({x(r)}, Y4)), -2)}),
        cat({D({"x0", x(r - 1), x(r), "y1"}), pow(D({"x0", x(r), "y1"}), -2)}));
  return P;
}

SignedWord substitute(const SignedWord& w, const std::vector<SignedWord>& images) {
  SignedWord out;
  for (int x : w) {
    std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
    if (i >= images.size()) raise(ErrorCode::OutOfRange, "generator index out of range");
    const SignedWord& img = x > 0 ? images[i] : inv(images[i]);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

RelatorReport verify_relators(const Presentation& P, const std::function<bool(const SignedWord&)>& trivial,
                              std::size_t jobs) {
  RelatorReport rep;
  rep.checked = P.relators.size();
  std::vector<char> ok(P.relators.size(), 0);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < P.relators.size(); ++i) ok[i] = trivial(P.relators[i]);
  } else {
    std::vector<std::future<void>> tasks;
    for (std::size_t t = 0; t < jobs; ++t)
      tasks.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < P.relators.size(); i += jobs) ok[i] = trivial(P.relators[i]);
      }));
    for (auto& f : tasks) f.get();
  }
  for (std::size_t i = 0; i < ok.size(); ++i)
    if (!ok[i]) rep.failures.push_back(i);
  return rep;
}

}  // namespace gk
