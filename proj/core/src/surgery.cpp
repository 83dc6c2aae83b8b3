#include <algorithm>
#include <map>
#include <set>

#include "internal.hpp"

namespace foxkit {

namespace {

void check_crossing(const Diagram& d, std::size_t c) {
  if (c >= d.crossing_count()) throw std::invalid_argument("crossing index " + std::to_string(c) + " out of range");
}

int check_position(const Diagram& t, int i) {
  int m = static_cast<int>(t.boundary().size());
  if (m == 0) throw std::invalid_argument("not a tangle");
  if (i < 1 || i > m) throw std::invalid_argument("boundary position " + std::to_string(i) + " out of range");
  return m;
}

// Face id of every dart, indexed like faces().
std::map<Port, std::size_t> face_of_dart(const Diagram& d) {
  std::map<Port, std::size_t> out;
  auto fs = faces(d);
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (const Port& p : fs[f].darts) out[p] = f;
  return out;
}

void check_site(const Diagram& d, const TwoSite& site) {
  const Port* a = std::get_if<Port>(&site.first);
  const Port* b = std::get_if<Port>(&site.second);
  for (const Port* p : {a, b}) {
    if (!p) continue;
    if (p->crossing == Port::kBoundary ? (p->slot < 0 || p->slot >= static_cast<int>(d.boundary().size()))
                                       : (p->crossing < 0 || p->crossing >= static_cast<int>(d.crossing_count()) ||
                                          p->slot < 0 || p->slot > 3))
      throw std::invalid_argument("site dart out of range");
  }
  if (a && b) {
    if (d.label_at(*a) == d.label_at(*b)) throw std::invalid_argument("site uses the same edge twice");
    auto f = face_of_dart(d);
    if (f.at(*a) != f.at(*b)) throw std::invalid_argument("site strands do not bound a common region");
  }
}

}  // namespace

Diagram trivial_tangle(int n) {
  if (n < 0) throw std::invalid_argument("negative tangle size");
  std::vector<int> b;
  for (int i = 1; i <= n; ++i) b.insert(b.end(), {i, i});
  if (n == 0) return Diagram();
  return Diagram({}, b, 0);
}

Diagram infinity_tangle() { return Diagram({}, {1, 2, 2, 1}, 0); }

Diagram add_boundary_crossing(const Diagram& t, int i, int sign) {
  int m = check_position(t, i);
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  int j = i % m + 1;
  Wiring w(t);
  int bi = w.boundary[i - 1], bj = w.boundary[j - 1];
  w.node(bi).kind = Wiring::Kind::Junction;
  w.node(bj).kind = Wiring::Kind::Junction;
  int c = w.add_crossing(false);
  // Legs counterclockwise: inner at i, outer at i, outer at i+1, inner at i+1.
  std::array<int, 4> legs;  // IR, OR, OL, IL -> slot
  legs = sign > 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{3, 0, 1, 2};
  int ni = w.add_junction(), nj = w.add_junction();
  w.node(ni).kind = w.node(nj).kind = Wiring::Kind::Boundary;
  w.connect(w.port(c, legs[0]), bi);
  w.connect(w.port(c, legs[1]), ni);
  w.connect(w.port(c, legs[2]), nj);
  w.connect(w.port(c, legs[3]), bj);
  w.boundary[i - 1] = ni;
  w.boundary[j - 1] = nj;
  return w.build().diagram;
}

Diagram add_cup(const Diagram& t, int i) {
  int m = check_position(t, i);
  int j = i % m + 1;
  Wiring w(t);
  int bi = w.boundary[i - 1], bj = w.boundary[j - 1];
  w.node(bi).kind = w.node(bj).kind = Wiring::Kind::Junction;
  w.connect(bi, bj);
  w.boundary.erase(std::remove_if(w.boundary.begin(), w.boundary.end(), [&](int n) { return n == bi || n == bj; }),
                   w.boundary.end());
  return w.build().diagram;
}

Diagram add_cap(const Diagram& t, int i) {
  int m = static_cast<int>(t.boundary().size());
  if (i < 0 || i > m) throw std::invalid_argument("cap position out of range");
  Wiring w(t);
  int a = w.add_junction(), b = w.add_junction();
  w.node(a).kind = w.node(b).kind = Wiring::Kind::Boundary;
  w.connect(a, b);
  w.boundary.insert(w.boundary.begin() + i, {a, b});
  return w.build().diagram;
}

Diagram numerator_closure(const Diagram& t) {
  if (t.boundary().size() != 4) throw std::invalid_argument("numerator closure needs a 2-tangle");
  return add_cup(add_cup(t, 1), 1);
}

Diagram denominator_closure(const Diagram& t) {
  if (t.boundary().size() != 4) throw std::invalid_argument("denominator closure needs a 2-tangle");
  return add_cup(add_cup(t, 2), 1);
}

Diagram integer_tangle(int n) {
  // H twist on positions 4 (SE) and 1 (NE); sign chosen so that [n] has fraction n.
  Diagram t = trivial_tangle(2);
  for (int k = 0; k < std::abs(n); ++k) t = add_boundary_crossing(t, 4, n > 0 ? -1 : 1);
  return t;
}

Diagram insert_tangle(const Diagram& d, const TwoSite& site, const Diagram& tangle) {
  if (tangle.boundary().size() != 4) throw std::invalid_argument("site insertion needs a 2-tangle");
  check_site(d, site);
  Wiring w(d);
  std::unordered_map<int, std::array<int, 2>> loops;
  CutStrand s1 = cut_strand(w, w.base, d, site.first, loops);
  CutStrand s2 = cut_strand(w, w.base, d, site.second, loops);
  w.attach_tangle(tangle, {s1.y, s1.x, s2.y, s2.x});
  return w.build().diagram;
}

OrientedDiagram switch_crossing(const OrientedDiagram& od, std::size_t c) {
  check_crossing(od.diagram, c);
  if (od.diagram.crossings()[c].is_virtual) throw std::invalid_argument("cannot switch a virtual crossing");
  Wiring w(od.diagram, &od.orientation);
  w.rotate(w.base.crossings[c]);
  return w.build();
}

Diagram switch_crossing(const Diagram& d, std::size_t c) {
  return switch_crossing(OrientedDiagram{d, default_orientation(d)}, c).diagram;
}

Diagram smooth_zero(const Diagram& d, std::size_t c) {
  check_crossing(d, c);
  Wiring w(d);
  w.dissolve(w.base.crossings[c], {{{0, 1}, {2, 3}}});
  return w.build().diagram;
}

Diagram smooth_infinity(const Diagram& d, std::size_t c) {
  check_crossing(d, c);
  Wiring w(d);
  w.dissolve(w.base.crossings[c], {{{0, 3}, {1, 2}}});
  return w.build().diagram;
}

OrientedDiagram oriented_smoothing(const OrientedDiagram& od, std::size_t c) {
  const Diagram& d = od.diagram;
  check_crossing(d, c);
  const Crossing& x = d.crossings()[c];
  int ci = static_cast<int>(c);
  int u_in = head(d, od.orientation, x.arcs[0]) == Port{ci, 0} ? 0 : 2;
  int o_in = head(d, od.orientation, x.arcs[3]) == Port{ci, 3} ? 3 : 1;
  Wiring w(d, &od.orientation);
  w.dissolve(w.base.crossings[c], {{{u_in, (o_in + 2) % 4}, {o_in, (u_in + 2) % 4}}});
  return w.build();
}

Diagram replace_crossing(const Diagram& d, std::size_t c, const Diagram& tangle, int rotation) {
  check_crossing(d, c);
  if (tangle.boundary().size() != 4) throw std::invalid_argument("replacement needs a 2-tangle");
  Wiring w(d);
  auto ports = w.open_crossing(w.base.crossings[c]);
  std::vector<int> attach(4);
  for (int i = 0; i < 4; ++i) attach[i] = ports[((i + rotation) % 4 + 4) % 4];
  w.attach_tangle(tangle, attach);
  return w.build().diagram;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  Wiring w(a);
  w.import(b, nullptr, true);
  return w.build().diagram;
}

Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2, int arc2) {
  if (d1.is_tangle() || d2.is_tangle()) throw std::invalid_argument("connected sum of tangles is not supported");
  Orientation o1 = default_orientation(d1), o2 = default_orientation(d2);
  Wiring w(d1, &o1);
  Wiring::Imported im2 = w.import(d2, &o2, true);
  auto open = [&](const Diagram& d, const Wiring::Imported& im, int arc) -> std::array<int, 2> {
    if (arc == 0) {
      auto ab = w.materialize_loop();
      w.cut(w.node(ab[0]).wires[0]);
      return ab;
    }
    if (arc < 1 || arc > d.arc_count()) throw std::invalid_argument("arc label out of range");
    Port t = tail(d, default_orientation(d), arc), h = head(d, default_orientation(d), arc);
    auto node_of = [&](Port p) { return w.port(im.crossings[p.crossing], p.slot); };
    w.cut(im.label_wire[arc]);
    return {node_of(t), node_of(h)};
  };
  if ((arc1 == 0 && d1.free_loops() == 0) || (arc2 == 0 && d2.free_loops() == 0))
    throw std::invalid_argument("arc 0 requires a free loop");
  auto e1 = open(d1, w.base, arc1);
  auto e2 = open(d2, im2, arc2);
  w.connect(e1[0], e2[1], e2[1]);
  w.connect(e2[0], e1[1], e1[1]);
  return w.build().diagram;
}

Diagram mirror(const Diagram& d) {
  Wiring w(d);
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    if (!d.crossings()[c].is_virtual) w.rotate(w.base.crossings[c]);
  return w.build().diagram;
}

// ---- Reidemeister moves ----

namespace {

bool has_curl(const Diagram& d, int c) {
  if (d.crossings()[c].is_virtual) return false;
  for (int s = 0; s < 4; ++s)
    if (d.partner(Port{c, s}) == Port{c, (s + 1) % 4}) return true;
  return false;
}

// Bigon darts between c1 and c2 whose one strand passes over (or under) at both ends.
bool valid_bigon(const Diagram& d, const Face& f) {
  if (f.darts.size() != 2) return false;
  Port p = f.darts[0], q = d.partner(p);
  if (p.crossing == Port::kBoundary || q.crossing == Port::kBoundary || f.darts[1].crossing == Port::kBoundary)
    return false;
  if (p.crossing == q.crossing) return false;
  if (d.crossings()[p.crossing].is_virtual || d.crossings()[q.crossing].is_virtual) return false;
  return p.slot % 2 == q.slot % 2;
}

struct Triangle {
  std::array<Port, 3> darts;  // darts in face order
};

bool triangle_face(const Diagram& d, const Face& f, Triangle& tri) {
  if (f.darts.size() != 3) return false;
  std::set<int> cs;
  for (const Port& p : f.darts) {
    if (p.crossing == Port::kBoundary) return false;
    if (d.crossings()[p.crossing].is_virtual) return false;
    cs.insert(p.crossing);
  }
  if (cs.size() != 3) return false;
  bool nonalternating = false;
  for (const Port& p : f.darts) {
    Port q = d.partner(p);
    if (q.crossing == Port::kBoundary) return false;
    if (p.slot % 2 == q.slot % 2) nonalternating = true;
  }
  if (!nonalternating) return false;
  std::copy(f.darts.begin(), f.darts.end(), tri.darts.begin());
  return true;
}

Wiring r3_rewire(const Diagram& d, const Triangle& tri, const Orientation* o) {
  Wiring w(d, o);
  // External legs in counterclockwise order around the triangle (reverse of face order).
  std::vector<int> P;
  for (int i = 2; i >= 0; --i) {
    Port leave = tri.darts[i];
    int t = (leave.slot + 3) % 4;  // arrival slot at this crossing
    int c = w.base.crossings[leave.crossing];
    P.push_back(w.port(c, (t + 2) % 4));
    P.push_back(w.port(c, (t + 3) % 4));
  }
  std::vector<int> J(6);
  for (int j = 0; j < 6; ++j) {
    J[j] = w.add_junction();
    w.replace_endpoint(w.single_wire(P[j]), P[j], J[j]);
  }
  for (int j = 0; j < 6; ++j) w.connect(P[j], J[(j + 3) % 6]);
  // Each strand now crosses the triangle the other way round; its orientation comes from the legs.
  for (const Port& leave : tri.darts) w.wire(w.single_wire(w.port(w.base.crossings[leave.crossing], leave.slot))).head = -1;
  return w;
}

Wiring move_wiring(const Diagram& d, const ReidemeisterMove& m, const Orientation* o) {
  switch (m.kind) {
    case MoveKind::R1Add: {
      if (m.variant < 0 || m.variant > 3) throw std::invalid_argument("R1 variant must be 0..3");
      if (const Port* p = std::get_if<Port>(&m.strand)) check_site(d, TwoSite{*p, FreeLoopRef{-1}});
      Wiring w(d, o);
      std::unordered_map<int, std::array<int, 2>> loops;
      CutStrand s = cut_strand(w, w.base, d, m.strand, loops);
      int c = w.add_crossing(false), v = m.variant;
      w.connect(w.port(c, v), w.port(c, (v + 1) % 4));
      w.connect(s.x, w.port(c, (v + 2) % 4));
      w.connect(w.port(c, (v + 3) % 4), s.y);
      return w;
    }
    case MoveKind::R1Remove: {
      if (m.crossings.size() != 1) throw std::invalid_argument("R1 removal needs one crossing");
      int c = m.crossings[0];
      check_crossing(d, c);
      if (!has_curl(d, c)) throw std::invalid_argument("crossing has no curl");
      Wiring w(d, o);
      w.dissolve(w.base.crossings[c], {{{0, 2}, {1, 3}}});
      return w;
    }
    case MoveKind::R2Add: {
      if (m.variant != 0 && m.variant != 1) throw std::invalid_argument("R2 variant must be 0 or 1");
      check_site(d, m.site);
      // cL legs ccw: 2 up, 3 left, 5 down, 6 right; cR: 1 up, 6 left, 5 down, 4 right.
      Diagram t = m.variant == 0 ? Diagram({{{3, 5, 6, 2}}, {{6, 5, 4, 1}}}, {1, 2, 3, 4})
                                 : Diagram({{{2, 3, 5, 6}}, {{1, 6, 5, 4}}}, {1, 2, 3, 4});
      Wiring w(d, o);
      std::unordered_map<int, std::array<int, 2>> loops;
      CutStrand s1 = cut_strand(w, w.base, d, m.site.first, loops);
      CutStrand s2 = cut_strand(w, w.base, d, m.site.second, loops);
      w.attach_tangle(t, {s1.y, s1.x, s2.y, s2.x});
      return w;
    }
    case MoveKind::R2Remove: {
      if (m.crossings.size() != 2) throw std::invalid_argument("R2 removal needs two crossings");
      int a = m.crossings[0], b = m.crossings[1];
      check_crossing(d, a);
      check_crossing(d, b);
      bool found = false;
      for (const Face& f : faces(d)) {
        if (!valid_bigon(d, f)) continue;
        int x = f.darts[0].crossing, y = d.partner(f.darts[0]).crossing;
        if ((x == a && y == b) || (x == b && y == a)) found = true;
      }
      if (!found) throw std::invalid_argument("crossings do not bound a removable bigon");
      Wiring w(d, o);
      w.dissolve(w.base.crossings[a], {{{0, 2}, {1, 3}}});
      w.dissolve(w.base.crossings[b], {{{0, 2}, {1, 3}}});
      return w;
    }
    case MoveKind::R3: {
      for (const Face& f : faces(d)) {
        if (std::find(f.darts.begin(), f.darts.end(), m.face_dart) == f.darts.end()) continue;
        Triangle tri;
        if (!triangle_face(d, f, tri)) throw std::invalid_argument("dart does not lie on an R3 triangle");
        return r3_rewire(d, tri, o);
      }
      throw std::invalid_argument("dart not found");
    }
  }
  throw std::invalid_argument("unknown move");
}

}  // namespace

Diagram apply_reidemeister(const Diagram& d, const ReidemeisterMove& m) {
  return move_wiring(d, m, nullptr).build().diagram;
}

OrientedDiagram apply_reidemeister(const OrientedDiagram& od, const ReidemeisterMove& m) {
  return move_wiring(od.diagram, m, &od.orientation).build();
}

std::vector<ReidemeisterMove> r1_remove_sites(const Diagram& d) {
  std::vector<ReidemeisterMove> out;
  for (int c = 0; c < static_cast<int>(d.crossing_count()); ++c)
    if (has_curl(d, c)) out.push_back(ReidemeisterMove{MoveKind::R1Remove, {c}});
  return out;
}

std::vector<ReidemeisterMove> r2_remove_sites(const Diagram& d) {
  std::vector<ReidemeisterMove> out;
  std::set<std::pair<int, int>> seen;
  for (const Face& f : faces(d)) {
    if (!valid_bigon(d, f)) continue;
    int x = f.darts[0].crossing, y = d.partner(f.darts[0]).crossing;
    if (!seen.insert({std::min(x, y), std::max(x, y)}).second) continue;
    out.push_back(ReidemeisterMove{MoveKind::R2Remove, {x, y}});
  }
  return out;
}

std::vector<ReidemeisterMove> r3_sites(const Diagram& d) {
  std::vector<ReidemeisterMove> out;
  for (const Face& f : faces(d)) {
    Triangle tri;
    if (!triangle_face(d, f, tri)) continue;
    ReidemeisterMove m;
    m.kind = MoveKind::R3;
    m.face_dart = f.darts[0];
    out.push_back(m);
  }
  return out;
}

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (true) {
    auto r1 = r1_remove_sites(cur);
    if (!r1.empty()) {
      cur = apply_reidemeister(cur, r1.front());
      continue;
    }
    auto r2 = r2_remove_sites(cur);
    if (!r2.empty()) {
      cur = apply_reidemeister(cur, r2.front());
      continue;
    }
    return cur;
  }
}

// A random legal Reidemeister move, preferring removals and R3 when available.
ReidemeisterMove random_reidemeister_move(const Diagram& d, std::mt19937& rng) {
  std::vector<ReidemeisterMove> pool;
  for (auto& m : r3_sites(d)) pool.push_back(m);
  for (auto& m : r1_remove_sites(d)) pool.push_back(m);
  for (auto& m : r2_remove_sites(d)) pool.push_back(m);
  ReidemeisterMove add;
  if (rng() % 2 || pool.empty()) {
    auto sites = two_sites(d);
    if (!sites.empty() && rng() % 2) {
      add.kind = MoveKind::R2Add;
      add.site = sites[rng() % sites.size()];
      add.variant = static_cast<int>(rng() % 2);
      return add;
    }
    std::vector<StrandRef> ds;
    for (std::size_t c = 0; c < d.crossing_count(); ++c)
      for (int s = 0; s < 4; ++s) ds.push_back(Port{static_cast<int>(c), s});
    for (int i = 0; i < d.free_loops(); ++i) ds.push_back(FreeLoopRef{i});
    if (ds.empty()) return add;  // the empty diagram has no strands
    add.kind = MoveKind::R1Add;
    add.strand = ds[rng() % ds.size()];
    add.variant = static_cast<int>(rng() % 4);
    return add;
  }
  return pool[rng() % pool.size()];
}

}  // namespace foxkit
