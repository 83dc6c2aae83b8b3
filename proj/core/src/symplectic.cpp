#include "foxkit/symplectic.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "foxkit/coloring.hpp"

namespace foxkit {

Vec BoundarySpace::e(int i) const {
  Vec v(dim(), 0);
  v[i - 1] = 1;
  return v;
}

Vec BoundarySpace::f(int k) const {
  Vec v(dim(), 0);
  v[k - 1] = 1;
  v[k % dim()] = mod(v[k % dim()] + 1, p);
  return v;
}

Vec BoundarySpace::trivial() const { return Vec(dim(), 1); }

bool BoundarySpace::is_alternating(const Vec& v) const {
  Int s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += (i % 2 ? 1 : -1) * v[i];
  return mod(s, p) == 0;
}

Vec BoundarySpace::f_coordinates(const Vec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector has the wrong length");
  Vec c(dim() - 1);
  c[0] = mod(v[0], p);
  for (std::size_t k = 1; k + 1 < dim(); ++k) c[k] = mod(v[k] - c[k - 1], p);
  if (mod(c.back() - v.back(), p) != 0) throw std::invalid_argument("vector violates the alternating condition");
  return c;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient, Int p) {
  Subspace s;
  s.ambient = ambient;
  s.p = p;
  s.rows = span_basis_mod_p(vectors, ambient, p);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  std::vector<Vec> all = rows;
  all.push_back(v);
  return span_basis_mod_p(all, ambient, p).size() == rows.size();
}

std::string Subspace::render() const {
  std::ostringstream os;
  for (const Vec& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
    os << '\n';
  }
  return os.str();
}

Int form_value(const BoundarySpace& sp, const Vec& u, const Vec& v) {
  Vec c = sp.f_coordinates(u), d = sp.f_coordinates(v);
  Int s = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) s += c[k] * d[k + 1] - c[k + 1] * d[k];
  return mod(s, sp.p);
}

Vec transvection(const BoundarySpace& sp, const Vec& v, const Vec& b, int power) {
  Int phi = form_value(sp, v, b);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod(v[i] - power * phi * b[i], sp.p);
  return out;
}

Vec reduce_vector(const BoundarySpace& sp, const Vec& v) {
  Vec c = sp.f_coordinates(v);
  Int t = c.back();
  c.pop_back();
  for (std::size_t k = 0; k < c.size(); k += 2) c[k] = mod(c[k] - t, sp.p);
  return c;
}

Subspace reduce_mod_trivial(const BoundarySpace& sp, const Subspace& s) {
  if (!s.contains(sp.trivial())) throw std::invalid_argument("subspace lacks the trivial colorings");
  std::vector<Vec> red;
  for (const Vec& r : s.rows) red.push_back(reduce_vector(sp, r));
  return Subspace::span(red, sp.dim() - 2, sp.p);
}

Int reduced_form(const BoundarySpace& sp, const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) s += a[k] * b[k + 1] - a[k + 1] * b[k];
  return mod(s, sp.p);
}

namespace {

template <class Form>
LagrangianVerdict isotropy(const std::vector<Vec>& rows, std::size_t want_dim, Form form) {
  LagrangianVerdict v;
  for (std::size_t a = 0; a < rows.size() && !v.violating_rows; ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      Int x = form(rows[a], rows[b]);
      if (x) {
        v.violating_rows = std::make_pair(a, b);
        v.value = x;
        break;
      }
    }
  v.holds = !v.violating_rows && rows.size() == want_dim;
  return v;
}

}  // namespace

LagrangianVerdict is_lagrangian(const BoundarySpace& sp, const Subspace& reduced) {
  if (reduced.ambient != sp.dim() - 2) throw std::invalid_argument("subspace is not in the reduced space");
  return isotropy(reduced.rows, sp.n - 1, [&](const Vec& a, const Vec& b) { return reduced_form(sp, a, b); });
}

LagrangianVerdict is_pre_lagrangian(const BoundarySpace& sp, const Subspace& s) {
  for (const Vec& r : s.rows)
    if (!sp.is_alternating(r)) return LagrangianVerdict{};
  LagrangianVerdict v = isotropy(s.rows, sp.n, [&](const Vec& a, const Vec& b) { return form_value(sp, a, b); });
  v.holds = v.holds && s.contains(sp.trivial());
  return v;
}

Matrix crossing_action(const BoundarySpace& sp, int i, int sign) {
  const std::size_t m = sp.dim();
  if (i < 1 || i > static_cast<int>(m)) throw std::invalid_argument("position out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::size_t a = i - 1, b = i % m;
  Matrix t = Matrix::identity(m);
  t(a, a) = 0;
  t(b, b) = 0;
  if (sign > 0) {  // columns are images: e_a -> -e_b, e_b -> e_a + 2 e_b
    t(b, a) = mod(-1, sp.p);
    t(a, b) = 1;
    t(b, b) = 2 % sp.p;
  } else {  // e_a -> 2 e_a + e_b, e_b -> -e_a
    t(a, a) = 2 % sp.p;
    t(b, a) = 1;
    t(a, b) = mod(-1, sp.p);
  }
  return t;
}

Subspace act(const Matrix& m, const Subspace& s) {
  std::vector<Vec> img;
  for (const Vec& r : s.rows) img.push_back(mat_vec(m, r, s.p));
  return Subspace::span(img, s.ambient, s.p);
}

CupReport cup_contraction(const BoundarySpace& sp, const Subspace& s) {
  if (sp.n < 1) throw std::invalid_argument("nothing to contract");
  const std::size_t m = sp.dim();
  std::vector<Vec> f1;
  int pivot = -1;
  Vec g(s.rows.size());
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    g[r] = mod(s.rows[r][m - 2] - s.rows[r][m - 1], sp.p);
    if (g[r] && pivot < 0) pivot = static_cast<int>(r);
  }
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    if (static_cast<int>(r) == pivot) continue;
    Vec v = s.rows[r];
    if (pivot >= 0) {
      Int factor = mod(g[r] * inverse_mod(g[pivot], sp.p), sp.p);
      for (std::size_t i = 0; i < m; ++i) v[i] = mod(v[i] - factor * s.rows[pivot][i], sp.p);
    }
    f1.push_back(v);
  }
  std::vector<Vec> f2;
  for (const Vec& v : f1) f2.push_back(Vec(v.begin(), v.end() - 2));
  CupReport rep;
  rep.result = Subspace::span(f2, m - 2, sp.p);
  rep.dim_kept_1 = pivot < 0;
  std::size_t f1_dim = span_basis_mod_p(f1, m, sp.p).size();
  rep.dim_kept_2 = rep.result.dimension() == f1_dim;
  if (is_pre_lagrangian(sp, s).holds && rep.dim_kept_1 == rep.dim_kept_2)
    throw InvariantViolation("cup contraction hit a case excluded for pre-Lagrangians");
  return rep;
}

Subspace boundary_colorings(const Diagram& t, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("boundary colorings need a prime modulus");
  const auto& bd = t.boundary();
  if (bd.empty() || bd.size() % 2) throw std::invalid_argument("need a tangle with an even number of endpoints");
  std::vector<Vec> img;
  for (const Vec& v : col_group(t, p).basis) {
    Vec b;
    for (int l : bd) b.push_back(v[l - 1]);
    img.push_back(b);
  }
  return Subspace::span(img, bd.size(), p);
}

TangleImage tangle_image_lagrangian(const Diagram& t, Int p) {
  TangleImage r;
  r.space = BoundarySpace{static_cast<int>(t.boundary().size() / 2), p};
  r.image = boundary_colorings(t, p);
  r.classical = !t.has_virtual();
  r.contains_trivial = r.image.contains(r.space.trivial());
  r.alternating = true;
  for (const Vec& v : r.image.rows) r.alternating = r.alternating && r.space.is_alternating(v);
  if (r.contains_trivial && r.alternating) {
    r.reduced = reduce_mod_trivial(r.space, r.image);
    r.verdict = is_lagrangian(r.space, r.reduced);
    r.verdict.holds = r.verdict.holds && is_pre_lagrangian(r.space, r.image).holds;
  }
  if (r.classical && !r.verdict.holds) throw InvariantViolation("boundary image of a classical tangle is not Lagrangian");
  return r;
}

Subspace trivial_lagrangian(const BoundarySpace& sp) {
  std::vector<Vec> gens;
  for (int k = 1; k <= 2 * sp.n - 1; k += 2) gens.push_back(sp.f(k));
  return reduce_mod_trivial(sp, Subspace::span(gens, sp.dim(), sp.p));
}

std::uint64_t lagrangian_count(int n, Int p) {
  std::uint64_t c = 1, pw = 1;
  for (int i = 1; i < n; ++i) {
    pw *= static_cast<std::uint64_t>(p);
    c *= pw + 1;
  }
  return c;
}

std::vector<Subspace> enumerate_lagrangians(int n, Int p) {
  if (!is_prime(p) || p > 5 || n < 1 || n > 4) throw std::invalid_argument("enumeration is capped at p <= 5, n <= 4");
  BoundarySpace sp{n, p};
  const std::size_t m = 2 * n - 2, k = n - 1;
  std::vector<Subspace> out;
  if (k == 0) {
    out.push_back(Subspace{0, p, {}});
    return out;
  }
  // Walk every RREF shape with k pivots, filling the free entries.
  std::vector<std::size_t> piv(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
    if (idx == k) {
      std::vector<bool> is_piv(m, false);
      for (auto c : piv) is_piv[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < m; ++c)
          if (!is_piv[c]) free.emplace_back(r, c);
      std::vector<Vec> rows(k, Vec(m, 0));
      for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = 1;
      std::vector<Int> digits(free.size(), 0);
      while (true) {
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
        bool iso = true;
        for (std::size_t a = 0; a < k && iso; ++a)
          for (std::size_t b = a + 1; b < k && iso; ++b) iso = reduced_form(sp, rows[a], rows[b]) == 0;
        if (iso) out.push_back(Subspace{m, p, rows});
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
        if (f == digits.size()) break;
      }
      return;
    }
    for (std::size_t c = from; c + (k - idx) <= m; ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

std::optional<TransvectionWord> realize_lagrangian(const Subspace& reduced, int n, Int p, int depth) {
  BoundarySpace sp{n, p};
  if (!is_lagrangian(sp, reduced).holds) throw std::invalid_argument("target is not a Lagrangian subspace");
  std::vector<Vec> gens;
  for (int k = 1; k <= 2 * n - 1; k += 2) gens.push_back(sp.f(k));
  Subspace start = Subspace::span(gens, sp.dim(), p);
  std::vector<Matrix> moves;
  std::vector<std::pair<int, int>> labels;
  for (int i = 1; i <= 2 * n; ++i)
    for (int s : {1, -1}) {
      moves.push_back(crossing_action(sp, i, s));
      labels.emplace_back(i, s);
    }
  struct State {
    Subspace pre;
    TransvectionWord word;
  };
  std::set<std::vector<Vec>> seen{reduce_mod_trivial(sp, start).rows};
  std::deque<State> queue{State{start, {}}};
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (reduce_mod_trivial(sp, st.pre) == reduced) return st.word;
    if (static_cast<int>(st.word.size()) >= depth) continue;
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      Subspace next = act(moves[mv], st.pre);
      if (!seen.insert(reduce_mod_trivial(sp, next).rows).second) continue;
      TransvectionWord w = st.word;
      w.push_back(labels[mv]);
      queue.push_back(State{next, w});
    }
  }
  return std::nullopt;
}

Diagram word_tangle(const TransvectionWord& w, int n) {
  Diagram t = trivial_tangle(n);
  for (auto [i, s] : w) t = add_boundary_crossing(t, i, s);
  return t;
}

}  // namespace foxkit
