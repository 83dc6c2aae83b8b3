// foxkit: JSON front end to the library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "foxkit/bracket.hpp"
#include "foxkit/coloring.hpp"
#include "foxkit/fixtures.hpp"
#include "foxkit/rational.hpp"
#include "foxkit/symplectic.hpp"
#include "foxkit/tait.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace foxkit;

namespace {

constexpr unsigned kDefaultSeed = 20240607;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A readable file is loaded; anything else is taken as literal text.
std::string file_or_text(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

struct Source {
  std::string pd, braid, conway, graph;

  void attach(CLI::App* app) {
    auto* g = app->add_option_group("input");
    g->add_option("--pd", pd, "PD code file or text (X[..], Xv[..], T[..], O)");
    g->add_option("--braid", braid, "braid word, e.g. \"B 3: 1 -2 1 -2\"");
    g->add_option("--conway", conway, "Conway notation C(a1,...)");
    g->add_option("--graph", graph, "signed plane graph file or text");
    g->require_option(1);
  }

  // Conway input gives the tangle itself when one is wanted, else its numerator closure.
  Diagram load(bool want_tangle = false) const {
    if (!graph.empty()) {
      std::string text = file_or_text(graph);
      if (blank(text)) throw ParseError("empty graph input");
      return graph_to_diagram(parse_graph(text));
    }
    if (!conway.empty()) {
      Diagram t = rational_tangle_diagram(parse_conway(conway));
      return want_tangle ? t : numerator_closure(t);
    }
    std::string text = pd.empty() ? braid : file_or_text(pd);
    if (blank(text)) throw ParseError("empty diagram input");
    if (!braid.empty()) return braid_closure(parse_braid(text));
    return parse_diagram(text);
  }
};

std::vector<Int> parse_list(const std::string& s) {
  std::vector<Int> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InputError("bad integer '" + tok + "'");
    }
  }
  return out;
}

json poly_json(const LaurentPoly& p, const std::string& var = "s") {
  json terms = json::array();
  for (auto [e, c] : p.terms()) terms.push_back({e, c});
  return {{"text", p.render(var)}, {"terms", terms}};
}

std::size_t reduced_dim(const ColoringSpace& sp) {
  std::size_t factors = sp.divisors.size();
  return factors == 0 ? 0 : factors - 1;
}

json coloring_json(const Diagram& d, Int k) {
  ColoringSpace sp = col_group(d, k);
  return {{"k", k}, {"divisors", sp.divisors}, {"size", sp.size}, {"reduced_dim", reduced_dim(sp)}};
}

json shape_json(const Diagram& d) {
  json j = {{"crossings", d.crossing_count()},
            {"free_loops", d.free_loops()},
            {"boundary_points", d.boundary().size()},
            {"virtual", d.has_virtual()},
            {"pd", render_pd(d)}};
  if (!d.is_tangle()) {
    j["components"] = component_count(d);
    j["alternating"] = is_alternating(d);
    j["planar"] = is_planar(d);
  }
  return j;
}

bool is_power_of(std::uint64_t v, Int k) {
  while (v > 1 && v % k == 0) v /= k;
  return v == 1;
}

// |V(i)|, the determinant; t = -1 is s = i.
Int determinant_from_jones(const LaurentPoly& v) {
  Int re = 0, im = 0;
  for (auto [e, c] : v.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  if (re != 0 && im != 0) throw InvariantViolation("V(-1) is not real or imaginary");
  return std::abs(re) + std::abs(im);
}

LaurentPoly parse_jones_field(const std::string& s) {
  LaurentPoly p;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("bad jones term '" + tok + "'");
    p.add(std::stoi(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1)));
  }
  return p;
}

// Jones values of every orientation of d and of its mirror.
bool jones_matches_some_orientation(const Diagram& d, const LaurentPoly& want, std::size_t cap) {
  std::size_t n = default_orientation(d).reversed.size();
  for (std::size_t m = 0; m < (std::size_t{1} << (n ? n - 1 : 0)); ++m) {
    Orientation o{std::vector<bool>(n)};
    for (std::size_t i = 0; i + 1 < n; ++i) o.reversed[i + 1] = m >> i & 1;
    LaurentPoly v = jones(d, o, cap);
    if (v == want || v.reflect() == want) return true;
  }
  return false;
}

// ---- verbs ----

int cmd_parse(const Source& src) {
  std::cout << shape_json(src.load(true)).dump(2) << '\n';
  return 0;
}

int cmd_invariants(const Source& src, const std::string& ks, std::size_t cap, bool no_jones) {
  Diagram d = src.load();
  json j = shape_json(d);
  bool ok = true;
  std::uint64_t t = tri(d);
  j["tri"] = t;
  j["power_of_3"] = is_power_of(t, 3);
  ok = ok && is_power_of(t, 3);
  for (Int k : parse_list(ks)) j["col_" + std::to_string(k)] = coloring_json(d, k);
  if (!d.has_virtual() && !d.is_tangle()) {
    int b = bridge_count(d);
    bool bound = t <= static_cast<std::uint64_t>(std::pow(3.0, b));
    j["bridge"] = {{"count", b}, {"bound_holds", bound}};
    ok = ok && bound;
    if (no_jones || d.crossing_count() > cap) {
      j["jones"] = nullptr;
      j["jones_skipped"] = no_jones ? "disabled" : "crossing cap " + std::to_string(cap);
    } else {
      j["bracket"] = poly_json(kauffman_bracket(d, cap), "A");
      LaurentPoly v = jones(d, cap);
      j["jones"] = poly_json(v);
      j["determinant"] = determinant_from_jones(v);
      TriIdentityReport r;
      try {
        r = check_tri_identity(d);
      } catch (const InvariantViolation& e) {
        std::cerr << e.what() << '\n';
        r.holds = false;
      }
      j["tri_identity"] = {{"tri", r.tri},
                           {"three_norm", r.three_norm},
                           {"three_abs_f", r.three_abs_f},
                           {"tri_prime", r.tri_prime},
                           {"minus_three_f", r.minus_three_f},
                           {"holds", r.holds}};
      ok = ok && r.holds;
    }
  }
  j["ok"] = ok;
  std::cout << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

json subspace_json(const Subspace& s) {
  return {{"dimension", s.dimension()}, {"rows", s.rows}, {"text", s.render()}};
}

int cmd_lagrangian(const Source& src, Int p) {
  Diagram t = src.load(true);
  if (!t.is_tangle()) throw InputError("tangle lagrangian needs a tangle (T[...] boundary or --conway)");
  if (!is_prime(p)) throw InputError("--p must be prime");
  json j;
  int code = 0;
  try {
    TangleImage im = tangle_image_lagrangian(t, p);
    j = {{"n", im.space.n},
         {"p", p},
         {"image", subspace_json(im.image)},
         {"reduced", subspace_json(im.reduced)},
         {"contains_trivial", im.contains_trivial},
         {"alternating", im.alternating},
         {"classical", im.classical},
         {"lagrangian", im.verdict.holds}};
    if (im.verdict.violating_rows)
      j["violation"] = {{"rows", {im.verdict.violating_rows->first, im.verdict.violating_rows->second}},
                        {"value", im.verdict.value}};
  } catch (const InvariantViolation& e) {
    j = {{"p", p}, {"lagrangian", false}, {"error", e.what()}};
    code = 1;
  }
  std::cout << j.dump(2) << '\n';
  return code;
}

MoveSpec parse_move(const std::string& s) {
  MoveSpec m;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      m.kind = MoveSpec::Kind::NMove;
      m.n = std::stoi(s);
    } else {
      m.kind = MoveSpec::Kind::PQMove;
      m.pq = make_fraction(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
  } catch (const std::logic_error&) {
    throw InputError("bad move '" + s + "' (use n or p/q)");
  }
  return m;
}

std::string move_name(const MoveSpec& m) {
  if (m.kind == MoveSpec::Kind::NMove) return std::to_string(m.n);
  return std::to_string(m.pq.p) + "/" + std::to_string(m.pq.q);
}

Int move_modulus(const MoveSpec& m) { return std::abs(m.kind == MoveSpec::Kind::NMove ? m.n : m.pq.p); }

int cmd_moves_apply(const Source& src, const std::string& move, int site, int count, unsigned seed) {
  Diagram d = src.load();
  MoveSpec spec = parse_move(move);
  Int k = move_modulus(spec);
  if (k < 2) throw InputError("move modulus must be at least 2");
  std::mt19937 rng(seed);
  json steps = json::array();
  bool ok = true;
  std::uint64_t start = col(d, k);
  for (int i = 0; i < count; ++i) {
    auto sites = two_sites(d);
    if (sites.empty()) throw InputError("diagram has no site for a move");
    int idx = site >= 0 && i == 0 ? site : static_cast<int>(rng() % sites.size());
    if (idx >= static_cast<int>(sites.size())) throw InputError("site index out of range");
    MoveSpec m = spec;
    m.site = sites[idx];
    std::uint64_t before = col(d, k);
    d = apply_move(d, m);
    std::uint64_t after = col(d, k);
    ok = ok && before == after;
    steps.push_back({{"site", idx}, {"crossings", d.crossing_count()}, {"col_before", before}, {"col_after", after}});
  }
  json j = {{"move", move_name(spec)},
            {"k", k},
            {"seed", seed},
            {"steps", steps},
            {"col_start", start},
            {"col_end", col(d, k)},
            {"preserved", ok},
            {"result", shape_json(d)}};
  std::cout << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_moves_search(const Source& src, const std::string& moves, int depth, std::size_t max_states,
                     std::size_t max_crossings) {
  Diagram d = src.load();
  std::vector<MoveSpec> kinds;
  std::istringstream in(moves);
  std::string tok;
  while (std::getline(in, tok, ',')) kinds.push_back(parse_move(tok));
  SearchLimits lim;
  lim.depth = depth;
  lim.max_states = max_states;
  lim.max_crossings = max_crossings;
  SearchResult r = move_search(d, kinds, lim);
  json path = json::array();
  for (const auto& s : r.path)
    path.push_back({{"move", move_name(s.move)}, {"crossings", s.result.crossing_count()}, {"pd", render_pd(s.result)}});
  json j = {{"found", r.found}, {"states", r.states}, {"truncated", r.truncated}, {"depth", depth}, {"path", path}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_tait(const Source& src) {
  if (src.graph.empty()) throw InputError("tait convert needs --graph");
  std::string text = file_or_text(src.graph);
  if (blank(text)) throw ParseError("empty graph input");
  SignedPlaneGraph g = parse_graph(text);
  Diagram d = graph_to_diagram(g);
  bool mono = true;
  for (const auto& e : g.edges) mono = mono && e.sign == g.edges.front().sign;
  json j = shape_json(d);
  j["vertices"] = g.vertices;
  j["edges"] = g.edges.size();
  j["monosigned"] = mono;
  j["connected"] = is_connected(g);
  std::cout << j.dump(2) << '\n';
  return 0;
}

json run_entry(const FixtureEntry& e, std::size_t cap, int fuzz, std::mt19937& rng) {
  json r = {{"name", e.name}, {"line", e.line}};
  json failures = json::array();
  if (!e.diagram) {
    r["ok"] = false;
    r["error"] = e.error;
    return r;
  }
  const Diagram& d = *e.diagram;
  auto fail = [&](const std::string& what) { failures.push_back(what); };
  try {
    std::uint64_t t = tri(d);
    r["tri"] = t;
    if (!is_power_of(t, 3)) fail("power law");
    std::size_t quads = 0;
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      if (d.crossings()[c].is_virtual) continue;
      try {
        check_quadruple(d, c);
        ++quads;
      } catch (const InvariantViolation& ex) {
        fail(ex.what());
      }
    }
    r["quadruple_sites"] = quads;
    std::optional<LaurentPoly> v;
    if (!d.has_virtual() && d.crossing_count() <= cap) {
      v = jones(d, cap);
      TriIdentityReport id = check_tri_identity(d);
      r["tri_identity"] = id.holds;
    } else {
      r["tri_identity"] = nullptr;
    }
    for (const auto& [key, val] : e.fields) {
      if (key == "det" && v) {
        if (determinant_from_jones(*v) != std::stoll(val)) fail("det mismatch");
      } else if (key == "jones" && v) {
        if (!jones_matches_some_orientation(d, parse_jones_field(val), cap)) fail("jones mismatch");
      } else if (key == "tri") {
        if (t != std::stoull(val)) fail("tri mismatch");
      } else if (key.rfind("col_", 0) == 0) {
        if (col(d, std::stoll(key.substr(4))) != std::stoull(val)) fail(key + " mismatch");
      } else if (key == "bridge") {
        if (bridge_count(d) != std::stoi(val)) fail("bridge mismatch");
      }
    }
    // Random Reidemeister moves keep tri; the drift in crossings is bounded by simplifying.
    Diagram cur = d;
    for (int i = 0; i < fuzz; ++i) {
      if (cur.crossing_count() == 0 && cur.free_loops() == 0) break;
      cur = apply_reidemeister(cur, random_reidemeister_move(cur, rng));
      if (cur.crossing_count() > d.crossing_count() + 6) cur = simplify(cur);
      if (tri(cur) != t) {
        fail("tri changed under a Reidemeister move");
        break;
      }
    }
  } catch (const std::exception& ex) {
    fail(ex.what());
  }
  r["failures"] = failures;
  r["ok"] = failures.empty();
  return r;
}

int cmd_table(const std::string& path, std::size_t cap, int fuzz, unsigned seed) {
  std::ifstream probe(path);
  if (!probe) throw InputError("cannot read table '" + path + "'");
  std::vector<FixtureEntry> entries = load_table(path);
  std::mt19937 rng(seed);
  json results = json::array(), failed = json::array();
  std::set<std::string> names;
  for (const auto& e : entries) {
    json r = run_entry(e, cap, fuzz, rng);
    if (!names.insert(e.name).second) {
      r["ok"] = false;
      r["failures"].push_back("duplicate name");
    }
    if (!r["ok"].get<bool>()) failed.push_back(e.name);
    results.push_back(r);
  }
  json j = {{"table", path},
            {"seed", seed},
            {"fuzz", fuzz},
            {"entries", entries.size()},
            {"passed", entries.size() - failed.size()},
            {"failed", failed},
            {"results", results}};
  std::cout << j.dump(2) << '\n';
  return failed.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"foxkit: colorings, brackets and tangle invariants of knot diagrams"};
  app.require_subcommand(1);

  Source parse_src, inv_src, lag_src, apply_src, search_src, tait_src;
  std::string ks = "3", move = "3", moves = "3,-3", table_path;
  std::size_t cap = kDefaultCrossingCap, max_states = 20000, max_crossings = 30;
  bool no_jones = false;
  Int p = 3;
  int site = -1, count = 1, depth = 3, fuzz = 5;
  unsigned seed = kDefaultSeed;

  auto* parse = app.add_subcommand("parse", "parse a diagram and describe it");
  parse_src.attach(parse);

  auto* inv = app.add_subcommand("invariants", "colorings, Jones polynomial and identity checks");
  inv_src.attach(inv);
  inv->add_option("--k", ks, "comma-separated coloring moduli")->capture_default_str();
  inv->add_option("--cap", cap, "crossing cap for the state sum")->capture_default_str();
  inv->add_flag("--no-jones", no_jones, "skip the bracket");

  auto* tangle = app.add_subcommand("tangle", "tangle invariants");
  tangle->require_subcommand(1);
  auto* lag = tangle->add_subcommand("lagrangian", "boundary coloring image and its Lagrangian verdict");
  lag_src.attach(lag);
  lag->add_option("--p", p, "prime modulus")->capture_default_str();

  auto* mv = app.add_subcommand("moves", "n-moves and p/q-moves");
  mv->require_subcommand(1);
  auto* apply = mv->add_subcommand("apply", "apply moves and compare colorings");
  apply_src.attach(apply);
  apply->add_option("--move", move, "n or p/q")->capture_default_str();
  apply->add_option("--site", site, "site index for the first move (random by default)");
  apply->add_option("--count", count, "number of moves")->capture_default_str()->check(CLI::PositiveNumber);
  apply->add_option("--seed", seed, "random seed")->capture_default_str();
  auto* search = mv->add_subcommand("search", "breadth-first search for a trivial diagram");
  search_src.attach(search);
  search->add_option("--moves", moves, "comma-separated moves (n or p/q)")->capture_default_str();
  search->add_option("--depth", depth, "depth 0..8")->capture_default_str();
  search->add_option("--max-states", max_states)->capture_default_str();
  search->add_option("--max-crossings", max_crossings)->capture_default_str();

  auto* tait = app.add_subcommand("tait", "signed plane graphs");
  tait->require_subcommand(1);
  auto* convert = tait->add_subcommand("convert", "graph to Tait diagram");
  convert->add_option("--graph", tait_src.graph, "graph file or text")->required();

  auto* table = app.add_subcommand("table", "fixture tables");
  table->require_subcommand(1);
  auto* run = table->add_subcommand("run", "check every entry of a table");
  run->add_option("table", table_path, "table file")->required();
  run->add_option("--cap", cap, "crossing cap for the state sum")->capture_default_str();
  run->add_option("--fuzz", fuzz, "random Reidemeister moves per entry")->capture_default_str();
  run->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(parse_src);
    if (*inv) return cmd_invariants(inv_src, ks, cap, no_jones);
    if (*lag) return cmd_lagrangian(lag_src, p);
    if (*apply) return cmd_moves_apply(apply_src, move, site, count, seed);
    if (*search) return cmd_moves_search(search_src, moves, depth, max_states, max_crossings);
    if (*convert) return cmd_tait(tait_src);
    if (*run) return cmd_table(table_path, cap, fuzz, seed);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
