#include "foxkit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "foxkit/coloring.hpp"

namespace foxkit {

namespace {

// Boundary-crossing signs giving a positive horizontal (F -> F + 1) or vertical (1/F -> 1/F + 1) twist.
constexpr int kHorizontalSign = -1;
constexpr int kVerticalSign = 1;

}  // namespace

Fraction make_fraction(Int p, Int q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a fraction");
  Int g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Fraction{p, q};
}

Fraction conway_fraction(const std::vector<int>& a) {
  if (a.empty()) return Fraction{0, 1};
  Int p = a[0], q = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Int np = a[i] * p + q;
    q = p;
    p = np;
  }
  return make_fraction(p, q);
}

std::vector<int> continued_fraction(Fraction f) {
  if (f.q == 0) return {0, 0};
  if (f.p == 0) return {};
  int sign = f.p < 0 ? -1 : 1;
  Int p = f.p * sign, q = f.q;
  std::vector<int> cf;  // a_n, a_{n-1}, ...
  while (q != 0) {
    cf.push_back(static_cast<int>(p / q) * sign);
    Int r = p % q;
    p = q;
    q = r;
  }
  std::reverse(cf.begin(), cf.end());
  return cf;
}

RationalTangle parse_conway(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t");
  if (i == std::string::npos || text[i] != 'C') throw ParseError("Conway notation must look like C(a1,...)");
  std::size_t open = text.find('(', i), close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("Conway notation must look like C(a1,...)");
  if (text.find_first_not_of(" \t", close + 1) != std::string::npos) throw ParseError("trailing text after C(...)");
  RationalTangle rt;
  std::string body = text.substr(open + 1, close - open - 1);
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad Conway coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError("bad Conway coefficient '" + tok + "'");
    rt.coefficients.push_back(v);
  }
  return rt;
}

Diagram rational_tangle_diagram(const RationalTangle& rt) {
  const auto& a = rt.coefficients;
  const std::size_t n = a.size();
  Diagram t = n % 2 ? trivial_tangle(2) : (n == 0 ? trivial_tangle(2) : infinity_tangle());
  for (std::size_t i = 0; i < n; ++i) {
    bool horizontal = (n - 1 - i) % 2 == 0;
    int sign = (a[i] > 0 ? 1 : -1) * (horizontal ? kHorizontalSign : kVerticalSign);
    for (int k = 0; k < std::abs(a[i]); ++k) t = add_boundary_crossing(t, horizontal ? 4 : 3, sign);
  }
  return t;
}

Diagram rational_tangle_diagram(Fraction f) { return rational_tangle_diagram(RationalTangle{continued_fraction(f)}); }

std::array<Int, 3> rational_boundary_relation(Fraction f, Int k, Int x1, Int x) {
  if (k < 2) throw std::invalid_argument("modulus must be at least 2");
  Int d = mod(x - x1, k);
  Int x4 = mod(x1 + mod(f.p, k) * d, k);
  Int x2 = mod(x1 + mod(f.q, k) * d, k);
  Int x3 = mod(x2 + x4 - x1, k);
  return {x2, x3, x4};
}

std::array<Int, 2> twist_color_map(int n, Int b, Int a, Int k) {
  Int s = mod(static_cast<Int>(n) * (b - a), k);
  return {mod(s + b, k), mod(s + a, k)};
}

bool check_twist_colors(int n, Int k) {
  Diagram t = integer_tangle(n);
  ColoringSpace sp = col_group(t, k);
  // Pairs are read bottom to top: (b, a) = (SW, NW) enters, (SE, NE) leaves.
  auto at = [&](const Vec& v, int pos) { return v[t.boundary()[pos - 1] - 1]; };
  for (const Vec& v : sp.basis) {
    auto out = twist_color_map(n, at(v, 3), at(v, 2), k);
    if (out[0] != at(v, 4) || out[1] != at(v, 1)) return false;
  }
  return true;
}

Diagram apply_move(const Diagram& d, const MoveSpec& m) {
  if (m.kind == MoveSpec::Kind::NMove) {
    if (!check_twist_colors(m.n, 1000003)) throw InvariantViolation("twist coloring map self-check failed");
    return insert_tangle(d, m.site, integer_tangle(m.n));
  }
  if (gcd(m.pq.p, m.pq.q) != 1) throw std::invalid_argument("p/q-move needs coprime p and q");
  return insert_tangle(d, m.site, rational_tangle_diagram(m.pq));
}

std::string canonical_form(const Diagram& d) {
  std::vector<std::string> tokens;
  for (const Crossing& c : d.crossings()) {
    std::ostringstream os;
    os << (c.is_virtual ? "Xv[" : "X[") << c.arcs[0] << ',' << c.arcs[1] << ',' << c.arcs[2] << ',' << c.arcs[3] << ']';
    tokens.push_back(os.str());
  }
  std::sort(tokens.begin(), tokens.end());
  std::ostringstream os;
  for (auto& t : tokens) os << t << ' ';
  os << "O" << d.free_loops() << " T";
  for (int b : d.boundary()) os << ',' << b;
  os << " c" << d.component_list().size();
  return os.str();
}

SearchResult move_search(const Diagram& d, const std::vector<MoveSpec>& kinds, const SearchLimits& limits) {
  if (limits.depth < 0 || limits.depth > 8) throw std::invalid_argument("search depth must be in 0..8");
  struct Node {
    Diagram diagram;
    int parent;
    MoveSpec move;
    int depth;
  };
  SearchResult res;
  std::vector<Node> nodes;
  nodes.push_back(Node{simplify(d), -1, MoveSpec{}, 0});
  auto finish = [&](int idx) {
    res.found = true;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent)
      res.path.push_back(SearchStep{nodes[i].move, nodes[i].diagram});
    std::reverse(res.path.begin(), res.path.end());
  };
  res.states = 1;
  if (nodes[0].diagram.crossing_count() == 0) {
    finish(0);
    return res;
  }
  std::unordered_set<std::string> seen{canonical_form(nodes[0].diagram)};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (nodes[cur].depth >= limits.depth) continue;
    const Diagram base = nodes[cur].diagram;
    for (const MoveSpec& kind : kinds) {
      for (const TwoSite& site : two_sites(base)) {
        MoveSpec m = kind;
        m.site = site;
        Diagram next = simplify(apply_move(base, m));
        if (next.crossing_count() > limits.max_crossings) continue;
        if (!seen.insert(canonical_form(next)).second) continue;
        nodes.push_back(Node{next, cur, m, nodes[cur].depth + 1});
        ++res.states;
        int idx = static_cast<int>(nodes.size()) - 1;
        if (next.crossing_count() == 0) {
          finish(idx);
          return res;
        }
        if (res.states >= limits.max_states) {
          res.truncated = true;
          return res;
        }
        queue.push_back(idx);
      }
    }
  }
  return res;
}

}  // namespace foxkit
