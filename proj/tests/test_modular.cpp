#include <random>

#include "doctest.h"
#include "foxkit/modular.hpp"

using namespace foxkit;

namespace {

// Brute-force kernel size over Z_k.
std::uint64_t count_kernel(const Matrix& m, Int k) {
  std::size_t n = m.cols();
  std::vector<Int> x(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (auto v : mat_vec(m, x, k)) ok = ok && v == 0;
    count += ok;
    std::size_t i = 0;
    while (i < n && ++x[i] == k) x[i++] = 0;
    if (i == n) break;
  }
  return count;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Int k) {
  Matrix m(r, c);
  std::uniform_int_distribution<Int> d(0, k - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("gcd helpers") {
  Int s, t;
  CHECK(ext_gcd(240, 46, s, t) == 2);
  CHECK(240 * s + 46 * t == 2);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS(inverse_mod(2, 4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("nullspace over a prime field matches brute force") {
  std::mt19937 rng(7);
  for (Int p : {2, 3, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      Matrix m = random_matrix(rng, 3, 4, p);
      auto basis = nullspace_mod_p(m, p);
      std::uint64_t expect = count_kernel(m, p);
      std::uint64_t got = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) got *= p;
      CHECK(got == expect);
      for (auto& v : basis)
        for (auto r : mat_vec(m, v, p)) CHECK(r == 0);
    }
  }
}

TEST_CASE("diagonalization over Z_k gives the kernel group") {
  std::mt19937 rng(11);
  for (Int k : {4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      Matrix m = random_matrix(rng, 3, 4, k);
      CyclicKernel ker = kernel_mod_k(m, k);
      std::uint64_t size = 1;
      for (auto o : ker.orders) size *= o;
      CHECK(size == count_kernel(m, k));
      for (std::size_t g = 0; g < ker.generators.size(); ++g) {
        for (auto r : mat_vec(m, ker.generators[g], k)) CHECK(r == 0);
      }
    }
  }
}

TEST_CASE("invariant factors") {
  CHECK(invariant_factors({2, 3}) == std::vector<Int>{6});
  CHECK(invariant_factors({2, 2, 4}) == std::vector<Int>{4, 2, 2});
  CHECK(invariant_factors({7, 7}) == std::vector<Int>{7, 7});
  CHECK(invariant_factors({}).empty());
}
