#pragma once
// Kauffman bracket, Jones polynomial and exact evaluation at a primitive 12th root of unity.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "foxkit/diagram.hpp"
#include "foxkit/modular.hpp"

namespace foxkit {

// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int c) { add(0, c); }
  static LaurentPoly monomial(int e, Int c = 1);

  const std::map<int, Int>& terms() const { return terms_; }
  Int coefficient(int e) const;
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const;
  int max_degree() const;
  void add(int e, Int c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly pow(int n) const;  // n >= 0, or a monomial with any n
  // Substitutes v -> v^factor.
  LaurentPoly scale_exponents(int factor) const;
  LaurentPoly reflect() const { return scale_exponents(-1); }
  bool operator==(const LaurentPoly&) const = default;

  std::complex<double> evaluate(std::complex<double> v) const;
  // "c*v^e" terms in ascending exponent order, "0" for the zero polynomial.
  std::string render(const std::string& var = "s") const;

 private:
  std::map<int, Int> terms_;
};

// c0 + c1 x + c2 x^2 + c3 x^3 in Z[x]/(x^4 - x^2 + 1), with x = e^{i pi/6}.
class Cyclotomic12 {
 public:
  Cyclotomic12() = default;
  explicit Cyclotomic12(std::array<Int, 4> c) : c_(c) {}
  Cyclotomic12(Int v) : c_{v, 0, 0, 0} {}
  static Cyclotomic12 power_of_x(int e);  // any integer e, using x^12 = 1

  const std::array<Int, 4>& coefficients() const { return c_; }
  bool is_integer() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  Cyclotomic12 operator+(const Cyclotomic12& o) const;
  Cyclotomic12 operator-(const Cyclotomic12& o) const;
  Cyclotomic12 operator-() const { return Cyclotomic12{} - *this; }
  Cyclotomic12 operator*(const Cyclotomic12& o) const;
  Cyclotomic12 conj() const;  // x -> x^11
  bool operator==(const Cyclotomic12&) const = default;
  std::complex<double> to_complex() const;

 private:
  std::array<Int, 4> c_{0, 0, 0, 0};
};

inline constexpr std::size_t kDefaultCrossingCap = 24;

// In the variable A; <unknot> = 1, loops weighted by -A^2 - A^-2, A-smoothing joins slots 0-1 and 2-3.
LaurentPoly kauffman_bracket(const Diagram& d, std::size_t cap = kDefaultCrossingCap);
// In s = t^{1/2}: (-A^3)^{-w} <d> with A^e -> s^{-e/2}.
LaurentPoly jones(const Diagram& d, const Orientation& o, std::size_t cap = kDefaultCrossingCap);
LaurentPoly jones(const Diagram& d, std::size_t cap = kDefaultCrossingCap);

Cyclotomic12 eval_at_zeta(const LaurentPoly& v);  // s -> x
Int norm_squared(const Cyclotomic12& z);          // throws InvariantViolation unless z conj(z) is an integer
// (-1)^{com - 1} V(e^{2 pi i/6})^2, which is the Kauffman polynomial F(1, -1).
Int f_at_one_minusone(const Diagram& d, const Orientation& o);
Int f_at_one_minusone(const Diagram& d);

struct TriIdentityReport {
  std::uint64_t tri = 0;
  Int three_norm = 0;      // 3 |V(zeta)|^2
  Int three_abs_f = 0;     // 3 |F(1,-1)|
  long long tri_prime = 0; // (-1)^{log_3 tri} tri
  Int minus_three_f = 0;   // -3 F(1,-1)
  bool holds = false;
};
TriIdentityReport check_tri_identity(const Diagram& d);  // throws InvariantViolation on mismatch

struct ThreeMoveReport {
  Diagram result;
  std::uint64_t tri_before = 0, tri_after = 0;
  Cyclotomic12 v_before, v_after;
  int unit = 0;  // v_after = i^unit v_before
  std::size_t com_before = 0, com_after = 0;
  Int abs_f_before = 0, abs_f_after = 0;
  bool holds = false;
};
// Applies a positive 3-move at the site; throws InvariantViolation if a covariance law fails.
ThreeMoveReport check_three_move_covariance(const Diagram& d, const TwoSite& site);

}  // namespace foxkit
