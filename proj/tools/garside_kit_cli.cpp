#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "garside_kit/artin.hpp"
#include "garside_kit/conjugacy.hpp"
#include "garside_kit/coxeter.hpp"
#include "garside_kit/errors.hpp"
#include "garside_kit/free_group.hpp"
#include "garside_kit/homology.hpp"
#include "garside_kit/lkb.hpp"
#include "garside_kit/polyutil.hpp"
#include "garside_kit/presentation.hpp"
#include "garside_kit/reversing.hpp"
#include "garside_kit/roots.hpp"

using namespace gk;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct Result {
  std::string text;
  Json json = Json::object();
};

struct Args {
  std::string format = "text";
  unsigned jobs = 1;
  std::size_t budget = 0;
  std::uint64_t reversing_steps = 0;
  std::size_t sc_budget = 0;
  std::size_t tits_orbit = 0;
  unsigned root_depth = 0;

  std::string graph;
  std::vector<std::string> graphs;
  std::string word, word2;
  std::string side = "L";
  std::string method = "nf";
  std::size_t n = 0;
  std::string braid, free_word, images;
  std::string vertex;
  std::string t_table;
  unsigned degree = 2;
  std::size_t length = 4;
  bool bare = false;
  bool allow_large = false;
  unsigned depth = 0;
  int genus = 0, boundary = 0, punctures = 0;
  std::string data_dir;
  std::string f, g, points;
};

Budgets budgets_from(const Args& a) {
  Budgets b = default_budgets();
  if (a.budget) b.enumeration = a.budget;
  if (a.reversing_steps) b.reversing_steps = a.reversing_steps;
  if (a.sc_budget) b.sliding_circuits = a.sc_budget;
  if (a.tits_orbit) b.tits_orbit = a.tits_orbit;
  if (a.root_depth) b.root_depth = a.root_depth;
  b.jobs = std::max(1u, a.jobs);
  return b;
}

Json word_json(const CoxeterGraph& g, const std::vector<Letter>& w) {
  Json j = Json::array();
  for (Letter s : w) j.push_back(g.name(s));
  return j;
}

Json simple_json(const GarsideStructure& G, Simple s) {
  Json j = Json::array();
  for (auto i : G.atom_word(s)) j.push_back(G.atom_name(i));
  return j;
}

Json element_json(const GarsideStructure& G, const CoxeterGraph& g, const GarsideElement& a) {
  Json f = Json::array();
  for (Simple s : a.factors) f.push_back(simple_json(G, s));
  return {{"delta_power", a.delta_power}, {"factors", f}, {"word", format_signed_word(g, to_word(G, a))}};
}

std::string text_of(const GarsideStructure& G, const GarsideElement& a) { return element_to_string(G, a); }

// ------------------------------------------------------------------ coxeter

Result cmd_coxeter(const std::string& op, const Args& a) {
  auto g = parse_graph(a.graph);
  auto B = budgets_from(a);
  Result r;
  auto element = [&](const std::string& w) { return reduce_word(g, parse_cox_word(g, w), B); };
  if (op == "equal") {
    bool eq = elements_equal(g, parse_cox_word(g, a.word), parse_cox_word(g, a.word2), B);
    r.text = eq ? "true" : "false";
    r.json["equal"] = eq;
    return r;
  }
  CoxElement w;
  if (op == "reduce") w = element(a.word);
  if (op == "meet") w = weak_order_meet(element(a.word), element(a.word2));
  if (op == "join") w = weak_order_join(element(a.word), element(a.word2), B);
  if (op == "w0") w = longest_element(g);
  r.text = w.to_string();
  r.json["word"] = word_json(g, w.word());
  r.json["length"] = w.length();
  return r;
}

// ------------------------------------------------------------------ garside

Result cmd_garside(const std::string& op, const Args& a) {
  auto g = parse_graph(a.graph);
  auto B = budgets_from(a);
  auto G = garside_structure_of(g, true, B);
  Result r;
  auto signed_element = [&](const std::string& w) { return delta_normal_form(*G, parse_signed_word(g, w)); };
  auto put = [&](const GarsideElement& e) {
    r.text = text_of(*G, e);
    r.json = element_json(*G, g, e);
  };
  if (op == "nf") {
    auto letters = parse_cox_word(g, a.word);
    auto nf = monoid_normal_form(*G, {letters.begin(), letters.end()});
    Json f = Json::array();
    std::string text;
    for (Simple s : nf) {
      f.push_back(simple_json(*G, s));
      text += (text.empty() ? "[" : " [") + simple_to_string(*G, s) + "]";
    }
    r.text = text;
    r.json["factors"] = f;
  } else if (op == "dnf") {
    put(signed_element(a.word));
  } else if (op == "wp") {
    auto w = parse_signed_word(g, a.word);
    bool trivial;
    if (a.method == "reversing")
      trivial = word_problem_reversing(Complement::artin(g), w, B.reversing_steps);
    else if (a.method == "nf")
      trivial = word_problem_nf(*G, w);
    else
      throw CLI::ValidationError("--method", "expected nf or reversing");
    r.text = trivial ? "trivial" : "nontrivial";
    r.json["trivial"] = trivial;
    r.json["method"] = a.method;
  } else if (op == "meet" || op == "join") {
    Side side = a.side == "R" ? Side::Right : Side::Left;
    if (a.side != "L" && a.side != "R") throw CLI::ValidationError("--side", "expected L or R");
    auto x = signed_element(a.word), y = signed_element(a.word2);
    put(op == "meet" ? lattice_meet(*G, x, y, side) : lattice_join(*G, x, y, side));
  } else if (op == "slide") {
    put(cyclic_sliding(*G, signed_element(a.word)));
  } else if (op == "sc") {
    auto sc = sliding_circuits(*G, signed_element(a.word), B);
    Json members = Json::array();
    std::string text = "size " + std::to_string(sc.members.size());
    for (auto& [m, c] : sc.members) {
      members.push_back({{"element", element_json(*G, g, m)}, {"conjugator", format_signed_word(g, to_word(*G, c))}});
      text += "\n" + text_of(*G, m);
    }
    r.text = text;
    r.json["size"] = sc.members.size();
    r.json["members"] = members;
  } else if (op == "conj") {
    auto x = signed_element(a.word), y = signed_element(a.word2);
    auto res = conjugacy_test(*G, x, y, B);
    r.json["conjugate"] = res.conjugate;
    if (res.conjugate && res.witness) {
      bool verified = conjugate(*G, x, *res.witness) == y;
      std::string w = format_signed_word(g, to_word(*G, *res.witness));
      r.text = "YES\nwitness: " + w + "\nverified: " + (verified ? "true" : "false");
      r.json["witness"] = w;
      r.json["verified"] = verified;
    } else {
      r.text = "NO";
    }
  }
  return r;
}

// -------------------------------------------------------------------- roots

Result cmd_roots(const std::string& op, const Args& a) {
  auto g = parse_graph(a.graph);
  auto R = ReflectionRep::of(g);
  Result r;
  auto list = [&](const std::vector<Root>& roots) {
    Json arr = Json::array();
    std::string text;
    for (auto& f : roots) {
      arr.push_back(Json::parse(R->root_to_json(f)));
      std::string line;
      for (auto& c : f.coords) line += (line.empty() ? "" : ", ") + c.to_string();
      text += (text.empty() ? "(" : "\n(") + line + ")";
    }
    r.text = text;
    r.json["count"] = roots.size();
    r.json["roots"] = arr;
  };
  if (op == "positive") list(positive_roots(g, a.depth));
  if (op == "inversions") list(inversion_set(reduce_word(g, parse_cox_word(g, a.word), budgets_from(a)), a.depth));
  if (op == "form") {
    Json rows = Json::array();
    std::string text;
    for (auto& row : bilinear_form(g)) {
      Json jr = Json::array();
      std::string line;
      for (auto& c : row) {
        jr.push_back(c.to_string());
        line += (line.empty() ? "" : "\t") + c.to_string();
      }
      rows.push_back(jr);
      text += (text.empty() ? "" : "\n") + line;
    }
    r.text = text;
    r.json["field_modulus"] = R->field()->modulus();
    r.json["form"] = rows;
  }
  return r;
}

// --------------------------------------------------------------------- reps

SignedWord braid_word(const std::string& text) {
  SignedWord w;
  std::istringstream in(text);
  int x;
  while (in >> x) {
    if (x == 0) throw CLI::ValidationError("--braid", "letters are nonzero integers");
    w.push_back(x);
  }
  if (!in.eof()) throw CLI::ValidationError("--braid", "letters are nonzero integers");
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::BadParameter, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result cmd_reps(const std::string& op, const Args& a) {
  Result r;
  if (op == "artin" || op == "rhod") {
    auto w = parse_free_word(a.free_word);
    auto img = op == "artin" ? artin_rep_apply(a.n, braid_word(a.braid), w) : rho_D_apply(a.n, braid_word(a.braid), w);
    std::string prefix = op == "artin" ? "x" : "y";
    r.text = img.empty() ? "1" : img.to_string(prefix);
    r.json["image"] = r.text;
    return r;
  }
  if (op == "membership") {
    std::vector<FreeWord> imgs;
    std::stringstream ss(a.images);
    std::string item;
    while (std::getline(ss, item, ';')) imgs.push_back(parse_free_word(item));
    bool ok = artin_image_membership(a.n, FreeEndo(imgs));
    r.text = ok ? "true" : "false";
    r.json["member"] = ok;
    return r;
  }
  auto g = parse_graph(a.graph);
  auto B = lkb_basis(g);
  auto table = [&]() -> std::optional<TTable> {
    if (a.bare) return std::nullopt;
    if (!a.t_table.empty()) return read_T_table(B, read_file(a.t_table));
    return solve_T_table(g, a.degree);
  };
  if (op == "solve-t") {
    auto T = solve_T_table(g, a.degree);
    r.text = write_T_table(B, T);
    if (!r.text.empty() && r.text.back() == '\n') r.text.pop_back();
    Json entries = Json::array();
    for (Letter s = 0; s < g.rank(); ++s)
      for (std::size_t f = 0; f < B.size(); ++f)
        entries.push_back({{"vertex", g.name(s)}, {"root", B.roots[f]}, {"poly", T[s][f].to_string("y")}});
    r.json["table"] = entries;
    return r;
  }
  auto T = table();
  auto mats = lkb_matrices(B, T ? &*T : nullptr);
  if (op == "lkb") {
    Letter s = g.index_of(a.vertex);
    auto v = validate_lkb(B, mats);
    r.text = matrix_triples(B, mats[s]);
    if (!r.text.empty() && r.text.back() == '\n') r.text.pop_back();
    Json entries = Json::array();
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = 0; j < B.size(); ++j)
        if (!mats[s][i][j].is_zero())
          entries.push_back({{"row", B.roots[i]}, {"col", B.roots[j]}, {"entry", mats[s][i][j].to_string()}});
    r.json["entries"] = entries;
    r.json["relations_ok"] = v.relations_ok();
    r.json["invertible"] = v.invertible();
    r.json["determinant"] = v.determinants[s].to_string();
    return r;
  }
  // scan
  auto rep = injectivity_scan(g, mats, a.length, budgets_from(a));
  Json pairs = Json::array();
  std::string text = "elements " + std::to_string(rep.elements) + "\ncollisions " + std::to_string(rep.collision_count);
  auto atoms = [&](const std::vector<std::size_t>& w) {
    std::vector<Letter> l(w.begin(), w.end());
    return format_cox_word(g, l);
  };
  for (auto& [u, v] : rep.collisions) {
    pairs.push_back({atoms(u), atoms(v)});
    text += "\n" + atoms(u) + " = " + atoms(v);
  }
  r.text = text;
  r.json["elements"] = rep.elements;
  r.json["collisions"] = rep.collision_count;
  r.json["examples"] = pairs;
  return r;
}

// --------------------------------------------------------------- cohomology

Result cmd_cohomology(const Args& a) {
  HomologyOptions opts;
  opts.allow_large = a.allow_large;
  opts.budgets = budgets_from(a);
  std::vector<std::pair<std::string, std::vector<CohomologyGroup>>> rows;
  Json arr = Json::array();
  for (auto& spec : a.graphs) {
    auto h = integer_cohomology(parse_graph(spec), opts);
    rows.emplace_back(spec, h);
    arr.push_back(Json::parse(cohomology_json(spec, h)));
  }
  Result r;
  r.text = cohomology_table(rows);
  if (!r.text.empty() && r.text.back() == '\n') r.text.pop_back();
  r.json["rows"] = arr;
  return r;
}

// ------------------------------------------------------------- presentation

Result cmd_presentation(const std::string& op, const Args& a) {
  Presentation P;
  if (op == "braid") P = braid_presentation(a.n);
  if (op == "pure") P = pure_braid_presentation(a.n);
  if (op == "artin") P = artin_presentation(parse_graph(a.graph));
  if (op == "mcg") P = mcg_presentation(a.genus, a.boundary, a.punctures, a.data_dir);
  Result r;
  std::string text = "generators:";
  for (auto& gname : P.generators) text += " " + gname;
  for (std::size_t i = 0; i < P.relators.size(); ++i) text += "\n" + P.tags[i] + ": " + P.relator_string(i);
  r.text = text;
  r.json = Json::parse(P.to_json());
  return r;
}

// --------------------------------------------------------------------- poly

RatPoly coefficient_list(const std::string& text, const char* flag) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<mpq_class> c;
  std::string tok;
  while (in >> tok) {
    try {
      mpq_class q(tok);
      q.canonicalize();
      c.push_back(q);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError(flag, "not a rational: " + tok);
    }
  }
  if (c.empty()) throw CLI::ValidationError(flag, "empty coefficient list");
  return RatPoly::from_descending(c);
}

Result cmd_poly(const std::string& op, const Args& a) {
  Result r;
  if (op == "res") {
    auto v = sylvester_resultant(coefficient_list(a.f, "--f"), coefficient_list(a.g, "--g"));
    r.text = rational_string(v);
    r.json["resultant"] = r.text;
  } else if (op == "disc") {
    auto v = discriminant(coefficient_list(a.f, "--f"));
    r.text = rational_string(v);
    r.json["discriminant"] = r.text;
  } else {
    std::string s = a.points;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<GaussRational> pts;
    std::string tok;
    while (in >> tok) pts.push_back(parse_gauss(tok));
    auto img = config_to_monic(pts);
    Json coeffs = Json::array();
    for (auto& c : img.coefficients) coeffs.push_back(c.to_string());
    r.text = gauss_poly_string(img.coefficients) + "\nrepeated: " + (img.repeated ? "yes" : "no") +
             "\ndiscriminant: " + img.discriminant.to_string();
    r.json["coefficients"] = coeffs;
    r.json["repeated"] = img.repeated;
    r.json["discriminant"] = img.discriminant.to_string();
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside, Coxeter and Artin group computations"};
  app.fallthrough();
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", a.jobs, "Worker threads for parallel regions")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", a.budget, "Enumeration cap (default 200000 or GARSIDE_KIT_BUDGET)");
  app.add_option("--reversing-steps", a.reversing_steps, "Word reversing step budget (default 1000000)");
  app.add_option("--sc-budget", a.sc_budget, "Sliding circuit set size cap (default 100000)");
  app.add_option("--tits-orbit", a.tits_orbit, "Tits orbit size before fallback (default 200000)");
  app.add_option("--root-depth", a.root_depth, "Reflection depth for infinite root systems (default 16)");

  std::string chosen;
  std::function<Result()> run;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Result(const std::string&)> fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&run, fn, name] { run = [fn, name] { return fn(name); }; });
    return sub;
  };

  auto* cox = app.add_subcommand("coxeter", "Coxeter group elements")->require_subcommand(1);
  auto cox_fn = [&](const std::string& op) { return cmd_coxeter(op, a); };
  for (auto op : {"reduce", "equal", "meet", "join", "w0"}) {
    auto* s = leaf(cox, op, std::string("coxeter ") + op, cox_fn);
    s->add_option("--graph", a.graph, "Builtin name, JSON text or JSON file")->required();
    if (std::string(op) != "w0") s->add_option("--word", a.word, "Word of vertex names")->required();
    if (std::string(op) == "equal" || std::string(op) == "meet" || std::string(op) == "join")
      s->add_option("--word2", a.word2, "Second word")->required();
  }

  auto* gar = app.add_subcommand("garside", "Garside normal forms, lattice, sliding, conjugacy")->require_subcommand(1);
  auto gar_fn = [&](const std::string& op) { return cmd_garside(op, a); };
  for (auto op : {"nf", "dnf", "wp", "meet", "join", "slide", "sc", "conj"}) {
    std::string o = op;
    auto* s = leaf(gar, op, "garside " + o, gar_fn);
    s->add_option("--graph", a.graph, "Spherical graph")->required();
    s->add_option("--word", a.word, o == "nf" ? "Positive word" : "Signed word, e.g. \"1 -2\"")->required();
    if (o == "meet" || o == "join" || o == "conj") s->add_option("--word2", a.word2, "Second signed word")->required();
    if (o == "meet" || o == "join") s->add_option("--side", a.side, "L or R");
    if (o == "wp") s->add_option("--method", a.method, "nf or reversing");
  }

  auto* roots = app.add_subcommand("roots", "Root systems")->require_subcommand(1);
  auto roots_fn = [&](const std::string& op) { return cmd_roots(op, a); };
  for (auto op : {"positive", "inversions", "form"}) {
    std::string o = op;
    auto* s = leaf(roots, op, "roots " + o, roots_fn);
    s->add_option("--graph", a.graph, "Graph")->required();
    if (o == "inversions") s->add_option("--word", a.word, "Word")->required();
    if (o != "form") s->add_option("--depth", a.depth, "Reflection depth for infinite graphs");
  }

  auto* reps = app.add_subcommand("reps", "Representations")->require_subcommand(1);
  auto reps_fn = [&](const std::string& op) { return cmd_reps(op, a); };
  for (auto op : {"artin", "rhod"}) {
    auto* s = leaf(reps, op, std::string("reps ") + op, reps_fn);
    s->add_option("--n", a.n, "Strands")->required();
    s->add_option("--braid", a.braid, "Signed braid letters, e.g. \"1 -2\"");
    s->add_option("--free", a.free_word, "Free word, e.g. \"x1^-1 x2\"")->required();
  }
  {
    auto* s = leaf(reps, "membership", "Image membership criterion", reps_fn);
    s->add_option("--n", a.n, "Rank")->required();
    s->add_option("--images", a.images, "Images of x1..xn separated by ';'")->required();
  }
  for (auto op : {"lkb", "solve-t", "scan"}) {
    std::string o = op;
    auto* s = leaf(reps, op, "reps " + o, reps_fn);
    s->add_option("--graph", a.graph, "Small-type spherical graph")->required();
    s->add_option("--degree", a.degree, "Degree bound for the T-table solver");
    if (o == "lkb") s->add_option("--vertex", a.vertex, "Vertex name")->required();
    if (o != "solve-t") {
      s->add_option("--t-table", a.t_table, "T-table file (default: solve)");
      s->add_flag("--bare", a.bare, "Use phi without the x-row");
    }
    if (o == "scan") s->add_option("--length", a.length, "Maximal length");
  }

  auto* coh = app.add_subcommand("cohomology", "Integral cohomology of a spherical Artin group");
  coh->add_option("--graph", a.graphs, "Graph (repeatable)")->required();
  coh->add_flag("--allow-large", a.allow_large, "Permit groups above 50000 elements");
  coh->callback([&] { run = [&] { return cmd_cohomology(a); }; });

  auto* pres = app.add_subcommand("presentation", "Group presentations")->require_subcommand(1);
  auto pres_fn = [&](const std::string& op) { return cmd_presentation(op, a); };
  for (auto op : {"braid", "pure"}) leaf(pres, op, std::string(op) + " braid group", pres_fn)->add_option("--n", a.n)->required();
  leaf(pres, "artin", "Artin group", pres_fn)->add_option("--graph", a.graph)->required();
  {
    auto* s = leaf(pres, "mcg", "Mapping class group", pres_fn);
    s->add_option("--genus", a.genus)->required();
    s->add_option("--boundary", a.boundary)->required();
    s->add_option("--punctures", a.punctures)->required();
    s->add_option("--data-dir", a.data_dir, "Directory holding mcg_graph.json");
  }

  auto* poly = app.add_subcommand("poly", "Resultants and discriminants")->require_subcommand(1);
  auto poly_fn = [&](const std::string& op) { return cmd_poly(op, a); };
  {
    auto* s = leaf(poly, "res", "Sylvester resultant", poly_fn);
    s->add_option("--f", a.f, "Coefficients, highest degree first")->required();
    s->add_option("--g", a.g, "Coefficients, highest degree first")->required();
    leaf(poly, "disc", "Res(f, f')", poly_fn)->add_option("--f", a.f, "Coefficients, highest degree first")->required();
    leaf(poly, "config", "Monic polynomial of a configuration", poly_fn)
        ->add_option("--points", a.points, "Complex rationals, e.g. \"1 2+i -i\"")
        ->required();
  }

  try {
    app.parse(argc, argv);
    if (!run) throw CLI::CallForHelp();
    Result r = run();
    if (a.format == "json") {
      Json out = {{"schema", kSchemaVersion}};
      for (auto& [k, v] : r.json.items()) out[k] = v;
      std::cout << out.dump() << '\n';
    } else {
      std::cout << r.text << '\n';
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.name()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}
