#include "foxkit/modular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace foxkit {

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

Int ext_gcd(Int a, Int b, Int& s, Int& t) {
  Int old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
    old_t -= q * cur_t;
    std::swap(old_t, cur_t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Int inverse_mod(Int a, Int p) {
  Int s, t;
  if (ext_gcd(mod(a, p), p, s, t) != 1) throw std::domain_error("element is not a unit");
  return mod(s, p);
}

Int pow_mod(Int a, Int e, Int k) {
  Int r = 1 % k;
  a = mod(a, k);
  while (e > 0) {
    if (e & 1) r = static_cast<Int>((__int128)r * a % k);
    a = static_cast<Int>((__int128)a * a % k);
    e >>= 1;
  }
  return r;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r].at(c);
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

Vec mat_vec(const Matrix& m, const Vec& v, Int k) {
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = mod(acc + mod(m(r, c), k) * mod(v[c], k), k);
    out[r] = acc;
  }
  return out;
}

RowEchelon rref_mod_p(const Matrix& input, Int p) {
  Matrix m = input;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod(m(r, c), p);
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, row);
    Int inv = inverse_mod(m(row, col), p);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) * inv % p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Int f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod(m(r, c) - f * m(row, c), p);
    }
    out.pivots.push_back(col);
    ++row;
  }
  for (std::size_t r = 0; r < row; ++r) out.rows.push_back(m.row(r));
  return out;
}

std::size_t rank_mod_p(const Matrix& m, Int p) { return rref_mod_p(m, p).rows.size(); }

std::vector<Vec> nullspace_mod_p(const Matrix& m, Int p) {
  RowEchelon e = rref_mod_p(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = mod(-e.rows[i][free], p);
    basis.push_back(std::move(v));
  }
  return span_basis_mod_p(basis, m.cols(), p);
}

std::vector<Vec> span_basis_mod_p(const std::vector<Vec>& vectors, std::size_t dim, Int p) {
  if (vectors.empty()) return {};
  return rref_mod_p(Matrix::from_rows(vectors, dim), p).rows;
}

namespace {

// Column op on both m and V: (col a, col b) <- (s*a + t*b, u*a + v*b).
void combine_cols(Matrix& m, Matrix& V, std::size_t a, std::size_t b, Int s, Int t, Int u, Int v, Int k) {
  auto apply = [&](Matrix& x) {
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Int xa = x(r, a), xb = x(r, b);
      x(r, a) = mod(mod(s, k) * xa % k + mod(t, k) * xb % k, k);
      x(r, b) = mod(mod(u, k) * xa % k + mod(v, k) * xb % k, k);
    }
  };
  apply(m);
  apply(V);
}

void combine_rows(Matrix& m, std::size_t a, std::size_t b, Int s, Int t, Int u, Int v, Int k) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int xa = m(a, c), xb = m(b, c);
    m(a, c) = mod(mod(s, k) * xa % k + mod(t, k) * xb % k, k);
    m(b, c) = mod(mod(u, k) * xa % k + mod(v, k) * xb % k, k);
  }
}

}  // namespace

Diagonalization diagonalize_mod_k(const Matrix& input, Int k) {
  Matrix m = input;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod(m(r, c), k);
  Matrix V = Matrix::identity(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());
  Diagonalization out;
  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: entry whose ideal gcd(a, k) is smallest.
    std::size_t br = m.rows(), bc = 0;
    Int best = k;
    for (std::size_t r = t; r < m.rows(); ++r)
      for (std::size_t c = t; c < m.cols(); ++c)
        if (m(r, c) != 0 && gcd(m(r, c), k) < best) {
          best = gcd(m(r, c), k);
          br = r;
          bc = c;
        }
    if (br == m.rows()) {
      out.diagonal.resize(n, 0);
      out.right = V;
      return out;
    }
    m.swap_rows(t, br);
    m.swap_cols(t, bc);
    V.swap_cols(t, bc);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        Int a = m(t, t), b = m(r, t), s, u;
        if (b % a == 0) {
          combine_rows(m, t, r, 1, 0, -b / a, 1, k);
          continue;
        }
        Int g = ext_gcd(a, b, s, u);
        combine_rows(m, t, r, s, u, -b / g, a / g, k);
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        Int a = m(t, t), b = m(t, c), s, u;
        if (b % a == 0) {
          combine_cols(m, V, t, c, 1, 0, -b / a, 1, k);
          continue;
        }
        Int g = ext_gcd(a, b, s, u);
        combine_cols(m, V, t, c, s, u, -b / g, a / g, k);
      }
      for (std::size_t r = t + 1; r < m.rows(); ++r)
        if (m(r, t) != 0) dirty = true;
    }
    out.diagonal.push_back(m(t, t));
  }
  out.right = V;
  return out;
}

CyclicKernel kernel_mod_k(const Matrix& m, Int k) {
  Diagonalization d = diagonalize_mod_k(m, k);
  CyclicKernel out;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    Int g = i < d.diagonal.size() ? gcd(d.diagonal[i], k) : k;
    if (g == 0) g = k;
    if (g == 1) continue;
    Vec v = d.right.column(i);
    Int scale = k / g;
    for (auto& x : v) x = mod(x * scale, k);
    out.generators.push_back(std::move(v));
    out.orders.push_back(g);
  }
  return out;
}

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  std::map<Int, std::vector<Int>> by_prime;  // prime -> prime powers
  for (Int n : cyclic_orders) {
    for (Int q = 2; q * q <= n; ++q) {
      if (n % q) continue;
      Int pw = 1;
      while (n % q == 0) {
        n /= q;
        pw *= q;
      }
      by_prime[q].push_back(pw);
    }
    if (n > 1) by_prime[n].push_back(n);
  }
  std::size_t len = 0;
  for (auto& [q, v] : by_prime) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<Int> out(len, 1);
  for (auto& [q, v] : by_prime)
    for (std::size_t j = 0; j < v.size(); ++j) out[j] *= v[j];
  return out;
}

}  // namespace foxkit
