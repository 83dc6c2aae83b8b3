#include "foxkit/coloring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace foxkit {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b && a > std::numeric_limits<std::uint64_t>::max() / b) throw std::overflow_error("coloring count overflows");
  return a * b;
}

void check_modulus(Int k) {
  if (k < 2) throw std::invalid_argument("modulus must be at least 2");
}

// Extends label-column vectors to edge labels plus free-loop coordinates.
Vec lift(const Vec& arc_values, const ColoringMatrix& cm, const Diagram& d) {
  Vec out(d.arc_count() + d.free_loops(), 0);
  for (int l = 1; l <= d.arc_count(); ++l) out[l - 1] = arc_values[cm.arc_of_label[l]];
  return out;
}

ColoringSpace kernel_space(const Matrix& m, const ColoringMatrix& cm, const Diagram& d, Int k) {
  ColoringSpace sp;
  sp.modulus = k;
  const std::size_t nloops = d.free_loops();
  std::vector<Int> cyclic;
  if (is_prime(k)) {
    std::vector<Vec> lifted;
    for (const Vec& v : nullspace_mod_p(m, k)) lifted.push_back(lift(v, cm, d));
    for (std::size_t i = 0; i < nloops; ++i) {
      Vec e(d.arc_count() + nloops, 0);
      e[d.arc_count() + i] = 1;
      lifted.push_back(e);
    }
    sp.basis = span_basis_mod_p(lifted, d.arc_count() + nloops, k);
    sp.orders.assign(sp.basis.size(), k);
  } else {
    CyclicKernel ker = kernel_mod_k(m, k);
    for (std::size_t g = 0; g < ker.generators.size(); ++g) {
      sp.basis.push_back(lift(ker.generators[g], cm, d));
      sp.orders.push_back(ker.orders[g]);
    }
    for (std::size_t i = 0; i < nloops; ++i) {
      Vec e(d.arc_count() + nloops, 0);
      e[d.arc_count() + i] = 1;
      sp.basis.push_back(e);
      sp.orders.push_back(k);
    }
  }
  for (Int o : sp.orders) sp.size = checked_mul(sp.size, static_cast<std::uint64_t>(o));
  sp.divisors = invariant_factors(sp.orders);
  return sp;
}

}  // namespace

ColoringMatrix coloring_matrix(const Diagram& d) {
  const int L = d.arc_count();
  std::vector<int> parent(L + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const Crossing& x : d.crossings()) {
    join(x.arcs[1], x.arcs[3]);
    if (x.is_virtual) join(x.arcs[0], x.arcs[2]);
  }
  ColoringMatrix cm;
  cm.arc_of_label.assign(L + 1, -1);
  std::vector<int> col_of_root(L + 1, -1);
  for (int l = 1; l <= L; ++l) {
    int r = find(l);
    if (col_of_root[r] < 0) col_of_root[r] = static_cast<int>(cm.arc_count++);
    cm.arc_of_label[l] = col_of_root[r];
  }
  cm.matrix = Matrix(d.classical_count(), cm.arc_count);
  std::size_t row = 0;
  for (const Crossing& x : d.crossings()) {
    if (x.is_virtual) continue;
    cm.matrix(row, cm.arc_of_label[x.arcs[1]]) += 2;
    cm.matrix(row, cm.arc_of_label[x.arcs[0]]) -= 1;
    cm.matrix(row, cm.arc_of_label[x.arcs[2]]) -= 1;
    ++row;
  }
  return cm;
}

ColoringSpace col_group(const Diagram& d, Int k) {
  check_modulus(k);
  ColoringMatrix cm = coloring_matrix(d);
  return kernel_space(cm.matrix, cm, d, k);
}

std::uint64_t col(const Diagram& d, Int k) { return col_group(d, k).size; }
std::uint64_t tri(const Diagram& d) { return col(d, 3); }

bool is_coloring(const Diagram& d, const Vec& values, Int k) {
  if (values.size() < static_cast<std::size_t>(d.arc_count())) return false;
  for (const Crossing& x : d.crossings()) {
    auto v = [&](int slot) { return values[x.arcs[slot] - 1]; };
    if (x.is_virtual) {
      if (mod(v(0) - v(2), k) || mod(v(1) - v(3), k)) return false;
      continue;
    }
    if (mod(v(1) - v(3), k)) return false;
    if (mod(2 * v(1) - v(0) - v(2), k)) return false;
  }
  return true;
}

ColoringSpace abf_colorings(const Diagram& d, Int p, Int t, const Orientation& o) {
  if (!is_prime(p)) throw std::invalid_argument("ABF colorings need a prime modulus");
  if (mod(t, p) == 0) throw std::invalid_argument("t must be invertible mod p");
  if (d.has_virtual()) throw std::invalid_argument("ABF colorings need a classical diagram");
  ColoringMatrix cm = coloring_matrix(d);
  Matrix m(d.classical_count(), cm.arc_count);
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    bool over_from_d = head(d, o, x.arcs[3]) == Port{static_cast<int>(c), 3};
    int a = cm.arc_of_label[x.arcs[1]];
    int right = cm.arc_of_label[x.arcs[over_from_d ? 0 : 2]];
    int left = cm.arc_of_label[x.arcs[over_from_d ? 2 : 0]];
    m(c, a) = mod(m(c, a) + 1 - t, p);
    m(c, right) = mod(m(c, right) + t, p);
    m(c, left) = mod(m(c, left) - 1, p);
  }
  return kernel_space(m, cm, d, p);
}

ColoringSpace abf_colorings(const Diagram& d, Int p, Int t) { return abf_colorings(d, p, t, default_orientation(d)); }

int bridge_count(const Diagram& d) {
  if (d.has_virtual()) throw std::invalid_argument("bridge count needs a classical diagram");
  ColoringMatrix cm = coloring_matrix(d);
  std::vector<bool> bridge(cm.arc_count, false);
  for (const Crossing& x : d.crossings()) bridge[cm.arc_of_label[x.arcs[1]]] = true;
  int count = static_cast<int>(std::count(bridge.begin(), bridge.end(), true));
  for (const Component& comp : d.component_list()) {
    bool has = std::any_of(comp.labels.begin(), comp.labels.end(),
                           [&](int l) { return bridge[cm.arc_of_label[l]]; });
    if (!has) ++count;
  }
  return count;
}

namespace {

int log_k(std::uint64_t v, Int k) {
  int e = 0;
  while (v > 1) {
    if (v % k) throw InvariantViolation("coloring count is not a power of the modulus");
    v /= k;
    ++e;
  }
  return e;
}

QuadrupleReport judge(std::vector<std::uint64_t> values, Int k) {
  QuadrupleReport r;
  r.values = std::move(values);
  r.largest = std::max_element(r.values.begin(), r.values.end()) - r.values.begin();
  std::uint64_t small = r.values[r.largest == 0 ? 1 : 0];
  std::size_t equal = std::count(r.values.begin(), r.values.end(), small);
  r.holds = equal == r.values.size() - 1 && r.values[r.largest] == small * static_cast<std::uint64_t>(k);
  for (auto v : r.values) {
    long long sv = static_cast<long long>(v);
    r.signed_sum += log_k(v, k) % 2 ? -sv : sv;
  }
  r.holds = r.holds && r.signed_sum == 0;
  return r;
}

}  // namespace

QuadrupleReport check_quadruple(const Diagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw std::invalid_argument("crossing index out of range");
  if (d.crossings()[c].is_virtual) throw std::invalid_argument("quadruple at a virtual crossing");
  std::vector<std::uint64_t> v = {tri(d), tri(switch_crossing(d, c)), tri(smooth_zero(d, c)),
                                  tri(smooth_infinity(d, c))};
  QuadrupleReport r = judge(v, 3);
  if (!r.holds) throw InvariantViolation("quadruple law fails at crossing " + std::to_string(c));
  return r;
}

QuadrupleReport check_k_quadruple(const Diagram& d, std::size_t c, Int k) {
  if (!is_prime(k)) throw std::invalid_argument("k-quadruple law needs a prime k");
  if (c >= d.crossing_count()) throw std::invalid_argument("crossing index out of range");
  if (d.crossings()[c].is_virtual) throw std::invalid_argument("quadruple at a virtual crossing");
  std::vector<std::uint64_t> v;
  for (Int i = 0; i < k; ++i) v.push_back(col(replace_crossing(d, c, integer_tangle(static_cast<int>(i)), 0), k));
  v.push_back(col(replace_crossing(d, c, infinity_tangle(), 0), k));
  QuadrupleReport r = judge(v, k);
  if (!r.holds) throw InvariantViolation("k-quadruple law fails at crossing " + std::to_string(c));
  return r;
}

std::size_t reduced_dimension(const Diagram& d, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("reduced dimension needs a prime");
  std::size_t dim = col_group(d, p).dimension();
  return dim == 0 ? 0 : dim - 1;
}

}  // namespace foxkit
