#include "foxkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "internal.hpp"

namespace foxkit {

namespace {

// Result of the canonical traversal of a labeled diagram.
struct Traversal {
  std::unordered_map<int, int> relabel;
  std::vector<int> head_port;  // indexed by new label: port id where the edge arrives
  std::vector<int> rotation;
  std::vector<Component> comps;
};

Traversal traverse(const std::vector<Crossing>& cs, const std::vector<int>& boundary) {
  const int C = static_cast<int>(cs.size());
  const int P = 4 * C + static_cast<int>(boundary.size());
  std::vector<int> label(P);
  for (int c = 0; c < C; ++c)
    for (int s = 0; s < 4; ++s) label[4 * c + s] = cs[c].arcs[s];
  for (std::size_t b = 0; b < boundary.size(); ++b) label[4 * C + b] = boundary[b];

  std::unordered_map<int, std::vector<int>> occ;
  for (int p = 0; p < P; ++p) occ[label[p]].push_back(p);
  for (auto& [l, v] : occ)
    if (v.size() != 2)
      throw ParseError("edge label " + std::to_string(l) + " appears " + std::to_string(v.size()) +
                       " times (expected 2)");
  std::vector<int> partner(P);
  for (auto& [l, v] : occ) {
    partner[v[0]] = v[1];
    partner[v[1]] = v[0];
  }
  auto through = [](int p) { return (p / 4) * 4 + (p % 4 + 2) % 4; };

  Traversal t;
  t.head_port.push_back(-1);
  std::vector<bool> visited(P, false), is_head(P, false);
  auto walk = [&](int headp, bool closed) {
    Component comp;
    comp.closed = closed;
    while (true) {
      int L = label[headp];
      if (t.relabel.count(L)) break;
      int nl = static_cast<int>(t.head_port.size());
      t.relabel[L] = nl;
      t.head_port.push_back(headp);
      comp.labels.push_back(nl);
      visited[headp] = visited[partner[headp]] = true;
      is_head[headp] = true;
      if (headp >= 4 * C) break;
      headp = partner[through(headp)];
    }
    t.comps.push_back(std::move(comp));
  };
  for (int b = 4 * C; b < P; ++b)
    if (!visited[b]) walk(partner[b], false);
  for (int c = 0; c < C; ++c) {
    while (true) {
      if (!visited[4 * c]) {
        walk(4 * c, true);
        continue;
      }
      if (!visited[4 * c + 1]) {
        int r = (!cs[c].is_virtual && !is_head[4 * c]) ? 2 : 0;
        walk(4 * c + (3 + r) % 4, true);
        continue;
      }
      break;
    }
  }
  t.rotation.assign(C, 0);
  for (int c = 0; c < C; ++c)
    if (!cs[c].is_virtual && !is_head[4 * c]) t.rotation[c] = 2;
  return t;
}

}  // namespace

Diagram DiagramBuilderAccess::make(std::vector<Crossing> cs, std::vector<int> boundary, int free_loops,
                                   Normalization* map) {
  if (free_loops < 0) throw ParseError("negative free loop count");
  if (boundary.size() % 2) throw ParseError("tangle boundary must have an even number of points");
  Traversal t = traverse(cs, boundary);
  Diagram d;
  const int C = static_cast<int>(cs.size());
  d.crossings_.resize(C);
  for (int c = 0; c < C; ++c) {
    d.crossings_[c].is_virtual = cs[c].is_virtual;
    for (int s = 0; s < 4; ++s) d.crossings_[c].arcs[s] = t.relabel.at(cs[c].arcs[(s + t.rotation[c]) % 4]);
  }
  for (int b : boundary) d.boundary_.push_back(t.relabel.at(b));
  d.free_loops_ = free_loops;
  d.arc_count_ = static_cast<int>(t.relabel.size());
  d.index();
  if (map) {
    map->relabel = std::move(t.relabel);
    map->rotation = std::move(t.rotation);
  }
  return d;
}

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<int> boundary, int free_loops) {
  *this = DiagramBuilderAccess::make(std::move(crossings), std::move(boundary), free_loops, nullptr);
}

void Diagram::index() {
  const int C = static_cast<int>(crossings_.size());
  occ_.assign(arc_count_ + 1, {Port{-2, -2}, Port{-2, -2}});
  std::vector<int> seen(arc_count_ + 1, 0);
  auto put = [&](int l, Port p) { occ_[l][seen[l]++] = p; };
  for (int c = 0; c < C; ++c)
    for (int s = 0; s < 4; ++s) put(crossings_[c].arcs[s], Port{c, s});
  for (std::size_t b = 0; b < boundary_.size(); ++b) put(boundary_[b], Port{Port::kBoundary, static_cast<int>(b)});

  Traversal t = traverse(crossings_, boundary_);
  for (auto& [from, to] : t.relabel)
    if (from != to) throw InvariantViolation("normalization is not idempotent");
  for (int r : t.rotation)
    if (r) throw InvariantViolation("normalization left a crossing unrotated");
  heads_.assign(arc_count_ + 1, Port{});
  for (int l = 1; l <= arc_count_; ++l) {
    int p = t.head_port[l];
    heads_[l] = p < 4 * C ? Port{p / 4, p % 4} : Port{Port::kBoundary, p - 4 * C};
  }
  comps_ = std::move(t.comps);
  comp_of_.assign(arc_count_ + 1, -1);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (int l : comps_[i].labels) comp_of_[l] = static_cast<int>(i);
  for (int i = 0; i < free_loops_; ++i) comps_.push_back(Component{{}, true, true});
}

std::size_t Diagram::classical_count() const {
  return std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return !c.is_virtual; });
}

bool Diagram::has_virtual() const {
  return std::any_of(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.is_virtual; });
}

int Diagram::label_at(Port p) const {
  if (p.crossing == Port::kBoundary) return boundary_.at(p.slot);
  return crossings_.at(p.crossing).arcs.at(p.slot);
}

Port Diagram::partner(Port p) const {
  const auto& o = occ_.at(label_at(p));
  return o[0] == p ? o[1] : o[0];
}

std::array<Port, 2> Diagram::occurrences(int label) const { return occ_.at(label); }

// ---- orientation ----

std::vector<Component> components(const Diagram& d) { return d.component_list(); }
std::size_t component_count(const Diagram& d) {
  if (d.is_tangle()) throw std::invalid_argument("component count requested for a tangle");
  return d.component_list().size();
}

Orientation default_orientation(const Diagram& d) {
  return Orientation{std::vector<bool>(d.component_list().size(), false)};
}

Port head(const Diagram& d, const Orientation& o, int label) {
  Port h = d.default_head(label);
  if (!o.reversed.at(d.component_index(label))) return h;
  auto occ = d.occurrences(label);
  return occ[0] == h ? occ[1] : occ[0];
}

Port tail(const Diagram& d, const Orientation& o, int label) {
  Port h = head(d, o, label);
  auto occ = d.occurrences(label);
  return occ[0] == h ? occ[1] : occ[0];
}

int component_of(const Diagram& d, int label) { return d.component_index(label); }

int crossing_sign(const Diagram& d, const Orientation& o, std::size_t c) {
  const Crossing& x = d.crossings().at(c);
  if (x.is_virtual) return 0;
  int ci = static_cast<int>(c);
  bool under_fwd = head(d, o, x.arcs[0]) == Port{ci, 0};
  bool over_from_d = head(d, o, x.arcs[3]) == Port{ci, 3};
  return (under_fwd ? 1 : -1) * (over_from_d ? 1 : -1);
}

int writhe(const Diagram& d, const Orientation& o) {
  if (d.has_virtual()) throw std::invalid_argument("writhe of a virtual diagram");
  int w = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) w += crossing_sign(d, o, c);
  return w;
}

int linking_with_rest(const Diagram& d, const Orientation& o, std::size_t i) {
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    if (x.is_virtual) continue;
    int cu = d.component_index(x.arcs[0]), co = d.component_index(x.arcs[1]);
    if (cu == co) continue;
    if (cu == static_cast<int>(i) || co == static_cast<int>(i)) total += crossing_sign(d, o, c);
  }
  return total / 2;
}

bool is_alternating(const Diagram& d) {
  for (const Component& comp : d.component_list()) {
    std::vector<int> seq;  // 1 over, 0 under
    for (int l : comp.labels) {
      Port h = d.default_head(l);
      if (h.crossing == Port::kBoundary || d.crossings()[h.crossing].is_virtual) continue;
      seq.push_back(h.slot % 2);
    }
    for (std::size_t j = 1; j < seq.size(); ++j)
      if (seq[j] == seq[j - 1]) return false;
    if (comp.closed && seq.size() > 1 && seq.front() == seq.back()) return false;
  }
  return true;
}

bool is_planar(const Diagram& d) {
  if (d.has_virtual()) return false;
  const int C = static_cast<int>(d.crossing_count());
  // Planarity: every connected piece must satisfy Euler's formula on the sphere.
  std::vector<int> parent(C + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto owner = [&](Port p) { return p.crossing == Port::kBoundary ? C : p.crossing; };
  for (int l = 1; l <= d.arc_count(); ++l)
    parent[find(owner(d.occurrences(l)[0]))] = find(owner(d.occurrences(l)[1]));
  int pieces = 0;
  for (int x = 0; x < C; ++x)
    if (find(x) == x) ++pieces;
  std::size_t expected;
  if (d.is_tangle()) {
    if (find(C) == C) ++pieces;
    expected = C + d.boundary().size() / 2 + 1 + 2 * (pieces - 1);
  } else {
    expected = C + 2 * pieces;
  }
  return faces(d).size() == expected;
}

// ---- faces ----

std::vector<Face> faces(const Diagram& d) {
  const int C = static_cast<int>(d.crossing_count());
  const int nb = static_cast<int>(d.boundary().size());
  auto id = [&](Port p) { return p.crossing == Port::kBoundary ? 4 * C + p.slot : 4 * p.crossing + p.slot; };
  auto port = [&](int i) { return i < 4 * C ? Port{i / 4, i % 4} : Port{Port::kBoundary, i - 4 * C}; };
  std::vector<bool> used(4 * C + nb, false);
  std::vector<Face> out;
  for (int start = 0; start < 4 * C + nb; ++start) {
    if (used[start]) continue;
    Face f;
    int cur = start;
    while (!used[cur]) {
      used[cur] = true;
      f.darts.push_back(port(cur));
      Port arrive = d.partner(port(cur));
      Port next = arrive.crossing == Port::kBoundary ? Port{Port::kBoundary, (arrive.slot + nb - 1) % nb}
                                                     : Port{arrive.crossing, (arrive.slot + 1) % 4};
      cur = id(next);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TwoSite> two_sites(const Diagram& d) {
  std::vector<TwoSite> out;
  for (const Face& f : faces(d))
    for (std::size_t i = 0; i < f.darts.size(); ++i)
      for (std::size_t j = i + 1; j < f.darts.size(); ++j)
        if (d.label_at(f.darts[i]) != d.label_at(f.darts[j])) out.push_back({f.darts[i], f.darts[j]});
  for (int i = 0; i < d.free_loops(); ++i) {
    out.push_back({FreeLoopRef{i}, FreeLoopRef{i}});
    for (int j = i + 1; j < d.free_loops(); ++j) out.push_back({FreeLoopRef{i}, FreeLoopRef{j}});
    for (int l = 1; l <= d.arc_count(); ++l) out.push_back({FreeLoopRef{i}, d.occurrences(l)[0]});
  }
  return out;
}

// ---- text formats ----

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',' || s[i] == ';')) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(i));
  }
  int integer() {
    skip();
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) fail("expected integer");
    int v = std::stoi(s.substr(i, k - i));
    i = k;
    return v;
  }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::vector<int> list() {
    expect('[');
    std::vector<int> v;
    skip();
    while (i < s.size() && s[i] != ']') {
      v.push_back(integer());
      skip();
    }
    expect(']');
    return v;
  }
};

}  // namespace

Diagram parse_pd(const std::string& text) {
  Lexer lx{text};
  std::vector<Crossing> cs;
  std::vector<int> boundary;
  int loops = 0;
  bool have_boundary = false;
  lx.skip();
  bool wrapped = text.compare(lx.i, 3, "PD[") == 0;
  if (wrapped) lx.i += 3;
  while (!lx.done()) {
    char c = text[lx.i];
    if (wrapped && c == ']') {
      ++lx.i;
      wrapped = false;
      continue;
    }
    if (c == 'X') {
      ++lx.i;
      Crossing x;
      if (lx.i < text.size() && text[lx.i] == 'v') {
        x.is_virtual = true;
        ++lx.i;
      }
      auto v = lx.list();
      if (v.size() != 4) lx.fail("crossing needs 4 labels");
      std::copy(v.begin(), v.end(), x.arcs.begin());
      cs.push_back(x);
    } else if (c == 'O') {
      ++lx.i;
      ++loops;
    } else if (c == 'T') {
      ++lx.i;
      if (have_boundary) lx.fail("duplicate boundary");
      boundary = lx.list();
      have_boundary = true;
      if (boundary.empty()) lx.fail("empty boundary");
    } else if (c == '#') {
      break;
    } else {
      lx.fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (wrapped) throw ParseError("unterminated PD[");
  if (cs.empty() && boundary.empty() && loops == 0) throw ParseError("empty diagram");
  return Diagram(std::move(cs), std::move(boundary), loops);
}

std::string render_pd(const Diagram& d) {
  std::ostringstream os;
  auto sep = [&, first = true]() mutable {
    if (!first) os << ' ';
    first = false;
  };
  for (const Crossing& c : d.crossings()) {
    sep();
    os << (c.is_virtual ? "Xv[" : "X[") << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3]
       << ']';
  }
  for (int i = 0; i < d.free_loops(); ++i) {
    sep();
    os << 'O';
  }
  if (d.is_tangle()) {
    sep();
    os << "T[";
    for (std::size_t b = 0; b < d.boundary().size(); ++b) os << (b ? "," : "") << d.boundary()[b];
    os << ']';
  }
  return os.str();
}

BraidWord parse_braid(const std::string& text) {
  Lexer lx{text};
  lx.skip();
  if (lx.i >= text.size() || text[lx.i] != 'B') lx.fail("braid word must start with 'B'");
  ++lx.i;
  BraidWord w;
  w.strands = lx.integer();
  if (w.strands < 1) lx.fail("braid needs at least one strand");
  lx.expect(':');
  // Letters, or parenthesized groups with an optional ^n repeat.
  std::function<std::vector<int>(bool)> seq = [&](bool nested) {
    std::vector<int> out;
    while (true) {
      lx.skip();
      if (lx.i >= text.size() || text[lx.i] == '#') {
        if (nested) lx.fail("unbalanced '('");
        break;
      }
      if (text[lx.i] == ')') {
        if (!nested) lx.fail("unbalanced ')'");
        ++lx.i;
        break;
      }
      std::vector<int> unit;
      int power = 1;
      if (text[lx.i] == '(') {
        ++lx.i;
        unit = seq(true);
      } else {
        bool inv = false;
        if (text[lx.i] == 's' || text[lx.i] == 'S') {
          inv = text[lx.i] == 'S';
          ++lx.i;
        }
        int gen = lx.integer();
        if (gen < 0) {
          gen = -gen;
          inv = !inv;
        }
        if (gen < 1 || gen >= w.strands) lx.fail("generator index out of range");
        unit.push_back(inv ? -gen : gen);
      }
      if (lx.i < text.size() && text[lx.i] == '^') {
        ++lx.i;
        power = lx.integer();
      }
      if (power < 0) {
        std::reverse(unit.begin(), unit.end());
        for (int& g : unit) g = -g;
      }
      for (int k = 0; k < std::abs(power); ++k) out.insert(out.end(), unit.begin(), unit.end());
    }
    return out;
  };
  w.letters = seq(false);
  return w;
}

Diagram braid_closure(const BraidWord& w) {
  int next = 1;
  std::vector<int> first(w.strands), cur(w.strands);
  for (int j = 0; j < w.strands; ++j) first[j] = cur[j] = next++;
  std::vector<Crossing> cs;
  for (int letter : w.letters) {
    int a = std::abs(letter) - 1, b = a + 1;
    int BL = cur[a], BR = cur[b], TL = next++, TR = next++;
    Crossing x;
    x.arcs = letter > 0 ? std::array<int, 4>{BR, TR, TL, BL} : std::array<int, 4>{BL, BR, TR, TL};
    cs.push_back(x);
    cur[a] = TL;
    cur[b] = TR;
  }
  std::unordered_map<int, int> alias;
  int loops = 0;
  for (int j = 0; j < w.strands; ++j) {
    if (cur[j] == first[j])
      ++loops;
    else
      alias[cur[j]] = first[j];
  }
  for (auto& x : cs)
    for (auto& l : x.arcs)
      if (alias.count(l)) l = alias[l];
  return Diagram(std::move(cs), {}, loops);
}

}  // namespace foxkit
