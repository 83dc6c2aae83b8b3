#pragma once
// Conway rational tangles, slopes, n-moves and p/q-moves.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "foxkit/diagram.hpp"
#include "foxkit/modular.hpp"

namespace foxkit {

// Reduced p/q with q >= 0; infinity is 1/0.
struct Fraction {
  Int p = 0, q = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(Int p, Int q);

struct RationalTangle {
  std::vector<int> coefficients;  // Conway notation T(a1, ..., an)
};

// a_n + 1/(a_{n-1} + ... + 1/a_1)
Fraction conway_fraction(const std::vector<int>& coefficients);
// Coefficients whose fraction is p/q (positive entries for p/q > 0).
std::vector<int> continued_fraction(Fraction f);
RationalTangle parse_conway(const std::string& text);

// Twist blocks alternate so that a_n is horizontal; the empty list gives the 0 tangle.
Diagram rational_tangle_diagram(const RationalTangle& rt);
Diagram rational_tangle_diagram(Fraction f);

// Boundary colors x1 = NW, x2 = SW, x3 = SE, x4 = NE; returns (x2, x3, x4) forced by x1 and the parameter x.
std::array<Int, 3> rational_boundary_relation(Fraction f, Int k, Int x1, Int x);

struct MoveSpec {
  enum class Kind { NMove, PQMove };
  Kind kind = Kind::NMove;
  int n = 0;        // NMove
  Fraction pq{};    // PQMove
  TwoSite site{Port{}, Port{}};
};
Diagram apply_move(const Diagram& d, const MoveSpec& m);

// Colors leaving [n] on the right when (b, a) = (SW, NW) enter on the left: (n(b-a)+b, n(b-a)+a) = (SE, NE).
std::array<Int, 2> twist_color_map(int n, Int b, Int a, Int k);
// Compares twist_color_map against the colorings of the diagram of [n].
bool check_twist_colors(int n, Int k);

struct SearchLimits {
  int depth = 3;
  std::size_t max_crossings = 30;
  std::size_t max_states = 20000;
};
struct SearchStep {
  MoveSpec move;
  Diagram result;  // after greedy R1/R2 simplification
};
struct SearchResult {
  bool found = false;
  std::vector<SearchStep> path;
  std::size_t states = 0;
  bool truncated = false;  // a cap stopped the search
};
// Breadth-first search for a crossing-free diagram using the given move kinds at every site.
SearchResult move_search(const Diagram& d, const std::vector<MoveSpec>& kinds, const SearchLimits& limits);
std::string canonical_form(const Diagram& d);

}  // namespace foxkit
