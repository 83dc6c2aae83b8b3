#pragma once
// Fox k-colorings, ABF colorings and the laws they satisfy.

#include <cstdint>
#include <vector>

#include "foxkit/diagram.hpp"
#include "foxkit/modular.hpp"

namespace foxkit {

// Columns are Fox arcs (edges joined along over-strands and through virtual crossings).
struct ColoringMatrix {
  Matrix matrix;                  // one row per classical crossing: 2 over - under - under
  std::vector<int> arc_of_label;  // edge label -> column (index 0 unused)
  std::size_t arc_count = 0;
};
ColoringMatrix coloring_matrix(const Diagram& d);

// Basis entries are indexed by edge label - 1, followed by one coordinate per free loop.
struct ColoringSpace {
  Int modulus = 0;
  std::vector<Int> divisors;  // invariant factors > 1, descending
  std::vector<Vec> basis;     // RREF basis (prime modulus) or cyclic generators (composite)
  std::vector<Int> orders;    // order of each basis element
  std::uint64_t size = 1;
  std::size_t dimension() const { return basis.size(); }
};

ColoringSpace col_group(const Diagram& d, Int k);
std::uint64_t col(const Diagram& d, Int k);
std::uint64_t tri(const Diagram& d);
// Checks 2*over - under_in - under_out = 0 at every classical crossing.
bool is_coloring(const Diagram& d, const Vec& values, Int k);

// Alexander-Burau-Fox colorings over Z_p: c = (1 - t) a + t b, b on the right of the over-strand.
ColoringSpace abf_colorings(const Diagram& d, Int p, Int t, const Orientation& o);
ColoringSpace abf_colorings(const Diagram& d, Int p, Int t);

// Maximal over-arcs, counting each overpass-free component once.
int bridge_count(const Diagram& d);

struct QuadrupleReport {
  std::vector<std::uint64_t> values;  // col_k of L_0 .. L_{k-1}, L_inf (or D+, D-, D0, Dinf)
  std::size_t largest = 0;
  long long signed_sum = 0;  // sum of (-1)^{log_k col} col
  bool holds = false;
};
// tri of the four variants at c: three agree and the fourth is three times bigger.
QuadrupleReport check_quadruple(const Diagram& d, std::size_t c);
// Integer tangles [0..k-1] and the infinity tangle replacing crossing c.
QuadrupleReport check_k_quadruple(const Diagram& d, std::size_t c, Int k);

// Reduced space: the quotient by the monochromatic colorings.
std::size_t reduced_dimension(const Diagram& d, Int p);

}  // namespace foxkit
