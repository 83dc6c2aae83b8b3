#pragma once
// Linear algebra over Z_k: row reduction for prime k, diagonalization for composite k.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace foxkit {

using Int = std::int64_t;
using Vec = std::vector<Int>;

inline Int mod(Int a, Int k) {
  a %= k;
  return a < 0 ? a + k : a;
}

Int gcd(Int a, Int b);
// Solves s*a + t*b = g = gcd(a, b) over the integers.
Int ext_gcd(Int a, Int b, Int& s, Int& t);
Int inverse_mod(Int a, Int p);  // throws std::domain_error if not a unit
Int pow_mod(Int a, Int e, Int k);
bool is_prime(Int n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

Vec mat_vec(const Matrix& m, const Vec& v, Int k);

struct RowEchelon {
  std::vector<Vec> rows;           // nonzero rows, leading entry 1
  std::vector<std::size_t> pivots; // pivot column of each row
};

// Reduced row echelon form over the field Z_p.
RowEchelon rref_mod_p(const Matrix& m, Int p);
// Normalized basis (itself in RREF) of {x : m x = 0} over Z_p.
std::vector<Vec> nullspace_mod_p(const Matrix& m, Int p);
// Canonical RREF basis of the span of the given vectors.
std::vector<Vec> span_basis_mod_p(const std::vector<Vec>& vectors, std::size_t dim, Int p);
std::size_t rank_mod_p(const Matrix& m, Int p);

// U m V = diag(d) over Z_k with U, V invertible; only V is tracked.
struct Diagonalization {
  std::vector<Int> diagonal;  // length min(rows, cols); entries in [0, k)
  Matrix right;               // V, cols x cols
};
Diagonalization diagonalize_mod_k(const Matrix& m, Int k);

// Kernel of m over Z_k as a list of cyclic generators with their orders (orders > 1 only).
struct CyclicKernel {
  std::vector<Vec> generators;
  std::vector<Int> orders;
};
CyclicKernel kernel_mod_k(const Matrix& m, Int k);

// Invariant-factor form of a finite abelian group given by cyclic orders, sorted descending.
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);

}  // namespace foxkit
