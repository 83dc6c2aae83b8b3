#include "foxkit/bracket.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "foxkit/coloring.hpp"
#include "foxkit/rational.hpp"

namespace foxkit {

LaurentPoly LaurentPoly::monomial(int e, Int c) {
  LaurentPoly p;
  p.add(e, c);
  return p;
}

Int LaurentPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add(int e, Int c) {
  if (c == 0) return;
  Int& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (auto [e, c] : o.terms_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto [e1, c1] : terms_)
    for (auto [e2, c2] : o.terms_) r.add(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
    auto [e, c] = *terms_.begin();
    if (c != 1 && c != -1) throw std::domain_error("negative power of a non-unit monomial");
    return monomial(e * n, (n % 2) ? c : 1);
  }
  LaurentPoly r(1), base = *this;
  for (; n; n >>= 1, base = base * base)
    if (n & 1) r = r * base;
  return r;
}

LaurentPoly LaurentPoly::scale_exponents(int factor) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.add(e * factor, c);
  return r;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> v) const {
  std::complex<double> sum = 0;
  for (auto [e, c] : terms_) sum += static_cast<double>(c) * std::pow(v, e);
  return sum;
}

std::string LaurentPoly::render(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (first)
      os << c;
    else
      os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    os << '*' << var << '^' << e;
    first = false;
  }
  return os.str();
}

// ---- Z[x]/(x^4 - x^2 + 1) ----

Cyclotomic12 Cyclotomic12::power_of_x(int e) {
  e = static_cast<int>(mod(e, 12));
  Cyclotomic12 r(1), x({0, 1, 0, 0});
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

Cyclotomic12 Cyclotomic12::operator+(const Cyclotomic12& o) const {
  Cyclotomic12 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Cyclotomic12 Cyclotomic12::operator-(const Cyclotomic12& o) const {
  Cyclotomic12 r;
  for (int i = 0; i < 4; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Cyclotomic12 Cyclotomic12::operator*(const Cyclotomic12& o) const {
  std::array<Int, 7> p{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p[i + j] += c_[i] * o.c_[j];
  // x^4 = x^2 - 1, applied from the top degree down.
  for (int d = 6; d >= 4; --d) {
    p[d - 2] += p[d];
    p[d - 4] -= p[d];
    p[d] = 0;
  }
  return Cyclotomic12({p[0], p[1], p[2], p[3]});
}

Cyclotomic12 Cyclotomic12::conj() const {
  Cyclotomic12 r;
  for (int i = 0; i < 4; ++i) r = r + Cyclotomic12(c_[i]) * power_of_x(12 - i);
  return r;
}

std::complex<double> Cyclotomic12::to_complex() const {
  const std::complex<double> x = std::polar(1.0, M_PI / 6);
  std::complex<double> sum = 0;
  for (int i = 0; i < 4; ++i) sum += static_cast<double>(c_[i]) * std::pow(x, i);
  return sum;
}

// ---- bracket and Jones ----

LaurentPoly kauffman_bracket(const Diagram& d, std::size_t cap) {
  if (d.is_tangle()) throw std::invalid_argument("bracket needs a link diagram");
  if (d.has_virtual()) throw std::invalid_argument("bracket needs a classical diagram");
  const std::size_t n = d.crossing_count();
  if (n > cap) throw std::invalid_argument("crossing count " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  const int L = d.arc_count();
  const int max_loops = L + d.free_loops() + 1;
  // counts[a][loops]: states with a A-smoothings and the given loop count.
  std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(max_loops + 1, 0));
  std::vector<int> parent(L + 1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = L;
    auto join = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --loops;
      }
    };
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = d.crossings()[c].arcs;
      if (mask >> c & 1) {
        join(x[0], x[3]);
        join(x[1], x[2]);
      } else {
        join(x[0], x[1]);
        join(x[2], x[3]);
      }
    }
    counts[n - std::popcount(mask)][loops + d.free_loops()]++;
  }
  const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  LaurentPoly result;
  for (std::size_t a = 0; a <= n; ++a) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      if (!counts[a][loops]) continue;
      while (static_cast<int>(delta_pow.size()) < loops) delta_pow.push_back(delta_pow.back() * delta);
      int e = static_cast<int>(a) - static_cast<int>(n - a);
      result = result + LaurentPoly::monomial(e, static_cast<Int>(counts[a][loops])) * delta_pow[loops - 1];
    }
  }
  return result;
}

LaurentPoly jones(const Diagram& d, const Orientation& o, std::size_t cap) {
  LaurentPoly br = kauffman_bracket(d, cap);
  int w = writhe(d, o);
  LaurentPoly v = br * LaurentPoly::monomial(-3 * w, w % 2 ? -1 : 1);
  LaurentPoly s;
  for (auto [e, c] : v.terms()) {
    if (e % 2) throw InvariantViolation("odd A-exponent in the normalized bracket");
    s.add(-e / 2, c);
  }
  return s;
}

LaurentPoly jones(const Diagram& d, std::size_t cap) { return jones(d, default_orientation(d), cap); }

Cyclotomic12 eval_at_zeta(const LaurentPoly& v) {
  Cyclotomic12 r;
  for (auto [e, c] : v.terms()) r = r + Cyclotomic12(c) * Cyclotomic12::power_of_x(e);
  return r;
}

Int norm_squared(const Cyclotomic12& z) {
  Cyclotomic12 n = z * z.conj();
  if (!n.is_integer()) throw InvariantViolation("norm is not a rational integer");
  return n.coefficients()[0];
}

Int f_at_one_minusone(const Diagram& d, const Orientation& o) {
  Cyclotomic12 v = eval_at_zeta(jones(d, o));
  Cyclotomic12 sq = v * v;
  if (!sq.is_integer()) throw InvariantViolation("V(e^{2 pi i/6})^2 is not an integer");
  std::size_t com = component_count(d);
  return com % 2 ? sq.coefficients()[0] : -sq.coefficients()[0];
}

Int f_at_one_minusone(const Diagram& d) { return f_at_one_minusone(d, default_orientation(d)); }

TriIdentityReport check_tri_identity(const Diagram& d) {
  TriIdentityReport r;
  r.tri = tri(d);
  Int f = f_at_one_minusone(d);
  r.three_norm = 3 * norm_squared(eval_at_zeta(jones(d)));
  r.three_abs_f = 3 * (f < 0 ? -f : f);
  int log3 = 0;
  for (std::uint64_t v = r.tri; v > 1; v /= 3) ++log3;
  r.tri_prime = log3 % 2 ? -static_cast<long long>(r.tri) : static_cast<long long>(r.tri);
  r.minus_three_f = -3 * f;
  const Int t = static_cast<Int>(r.tri);
  r.holds = t == r.three_norm && t == r.three_abs_f && r.tri_prime == r.minus_three_f;
  if (!r.holds) throw InvariantViolation("tri identity fails for " + (d.name().empty() ? render_pd(d) : d.name()));
  return r;
}

ThreeMoveReport check_three_move_covariance(const Diagram& d, const TwoSite& site) {
  ThreeMoveReport r;
  MoveSpec m;
  m.n = 3;
  m.site = site;
  r.result = apply_move(d, m);
  r.tri_before = tri(d);
  r.tri_after = tri(r.result);
  r.v_before = eval_at_zeta(jones(d));
  r.v_after = eval_at_zeta(jones(r.result));
  r.com_before = component_count(d);
  r.com_after = component_count(r.result);
  Int f0 = f_at_one_minusone(d), f1 = f_at_one_minusone(r.result);
  r.abs_f_before = f0 < 0 ? -f0 : f0;
  r.abs_f_after = f1 < 0 ? -f1 : f1;
  r.unit = -1;
  for (int u = 0; u < 4; ++u)
    if (r.v_after == Cyclotomic12::power_of_x(3 * u) * r.v_before) r.unit = u;
  r.holds = r.tri_before == r.tri_after && r.unit >= 0 && r.abs_f_before == r.abs_f_after;
  if (!r.holds) throw InvariantViolation("3-move covariance fails");
  return r;
}

}  // namespace foxkit
