#pragma once
// Boundary colorings of tangles as pre-Lagrangian subspaces of the alternating space.
// Vectors use e-coordinates e_1..e_2n (boundary positions) unless noted.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foxkit/diagram.hpp"
#include "foxkit/modular.hpp"

namespace foxkit {

struct BoundarySpace {
  int n = 1;  // half the number of boundary points
  Int p = 3;
  std::size_t dim() const { return 2 * static_cast<std::size_t>(n); }
  Vec e(int i) const;        // 1-based
  Vec f(int k) const;        // e_k + e_{k+1}, k cyclic in 1..2n
  Vec trivial() const;       // e_1 + ... + e_2n
  bool is_alternating(const Vec& v) const;  // sum (-1)^i v_i = 0
  // Coordinates c_1..c_{2n-1} with v = sum c_k f_k; throws std::invalid_argument off the alternating space.
  Vec f_coordinates(const Vec& v) const;
};

// RREF row basis over Z_p.
struct Subspace {
  std::size_t ambient = 0;
  Int p = 3;
  std::vector<Vec> rows;
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient, Int p);
  std::size_t dimension() const { return rows.size(); }
  bool contains(const Vec& v) const;
  bool operator==(const Subspace&) const = default;
  std::string render() const;  // one row of Z_p digits per line
};

Int form_value(const BoundarySpace& sp, const Vec& u, const Vec& v);
Vec transvection(const BoundarySpace& sp, const Vec& v, const Vec& b, int power = 1);

// Reduced space Z_p^{2n-2}: f-coordinates with the trivial vector eliminated via c_{2n-1}.
Vec reduce_vector(const BoundarySpace& sp, const Vec& v);
Subspace reduce_mod_trivial(const BoundarySpace& sp, const Subspace& s);  // throws if s misses the trivial vector
// The induced symplectic form on reduced coordinates (tridiagonal of size 2n-2).
Int reduced_form(const BoundarySpace& sp, const Vec& a, const Vec& b);

struct LagrangianVerdict {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> violating_rows;  // pair with nonzero form value
  Int value = 0;
};
LagrangianVerdict is_lagrangian(const BoundarySpace& sp, const Subspace& reduced);
LagrangianVerdict is_pre_lagrangian(const BoundarySpace& sp, const Subspace& s);

// Boundary map of adding a crossing on positions (i, i+1): e_{i+1} -> 2e_{i+1} + e_i, e_i -> -e_{i+1}
// for sign +1 (the strand from i passes under), and its inverse for sign -1. Acts on e-coordinates.
Matrix crossing_action(const BoundarySpace& sp, int i, int sign);
Subspace act(const Matrix& m, const Subspace& s);

struct CupReport {
  Subspace result;  // in the (n-1)-space
  bool dim_kept_1 = false;  // case (1)(i): dim F1 = dim F
  bool dim_kept_2 = false;  // case (2)(i): dim F2 = dim F1
};
// Right cup joining positions 2n-1 and 2n. Throws InvariantViolation if a classical case split is violated.
CupReport cup_contraction(const BoundarySpace& sp, const Subspace& s);

Subspace boundary_colorings(const Diagram& t, Int p);

struct TangleImage {
  BoundarySpace space;
  Subspace image;
  Subspace reduced;
  bool contains_trivial = false;
  bool alternating = false;
  bool classical = true;
  LagrangianVerdict verdict;
};
// Throws InvariantViolation if a classical tangle fails the Lagrangian verdict.
TangleImage tangle_image_lagrangian(const Diagram& t, Int p);

Subspace trivial_lagrangian(const BoundarySpace& sp);  // reduced span{f_1, f_3, ..., f_{2n-3}}
std::vector<Subspace> enumerate_lagrangians(int n, Int p);
std::uint64_t lagrangian_count(int n, Int p);  // prod_{i=1}^{n-1} (p^i + 1)

using TransvectionWord = std::vector<std::pair<int, int>>;  // (position, sign)
// Breadth-first search from the trivial tangle's Lagrangian.
std::optional<TransvectionWord> realize_lagrangian(const Subspace& reduced, int n, Int p, int depth = 8);
// Trivial n-tangle followed by the crossings of the word; its image is the word applied to T0.
Diagram word_tangle(const TransvectionWord& w, int n);

}  // namespace foxkit
