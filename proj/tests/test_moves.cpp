#include <random>

#include "doctest.h"
#include "foxkit/coloring.hpp"
#include "foxkit/fixtures.hpp"
#include "support/oracles.hpp"

using namespace foxkit;

namespace {

std::vector<StrandRef> darts(const Diagram& d) {
  std::vector<StrandRef> out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) out.push_back(Port{static_cast<int>(c), s});
  for (int i = 0; i < d.free_loops(); ++i) out.push_back(FreeLoopRef{i});
  return out;
}

int crossing_change(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return 1;
    case MoveKind::R1Remove: return -1;
    case MoveKind::R2Add: return 2;
    case MoveKind::R2Remove: return -2;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("curl removal") {
  Diagram curl = parse_pd("X[1,1,2,2]");
  auto sites = r1_remove_sites(curl);
  REQUIRE(sites.size() == 1);
  Diagram u = apply_reidemeister(curl, sites[0]);
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);
}

TEST_CASE("R2 on the unknot") {
  Diagram u = parse_pd("O");
  ReidemeisterMove m;
  m.kind = MoveKind::R2Add;
  m.site = two_sites(u).front();
  Diagram r = apply_reidemeister(u, m);
  CHECK(r.crossing_count() == 2);
  CHECK(tri(r) == 3);
  CHECK(oracle::fox_count(r, 3) == 3);
  CHECK(is_planar(r));
}

TEST_CASE("illegal sites are rejected") {
  Diagram t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  ReidemeisterMove m;
  m.kind = MoveKind::R1Remove;
  m.crossings = {0};
  CHECK_THROWS(apply_reidemeister(t, m));
  m.kind = MoveKind::R2Remove;
  m.crossings = {0, 1};
  CHECK_THROWS(apply_reidemeister(t, m));
  m.kind = MoveKind::R3;
  m.face_dart = Port{0, 0};
  CHECK_THROWS(apply_reidemeister(t, m));
}

TEST_CASE("random Reidemeister walks preserve colorings") {
  std::mt19937 rng(99);
  std::vector<Diagram> pool;
  for (auto& e : oracle::rolfsen())
    if (e.diagram->crossing_count() <= 6) pool.push_back(*e.diagram);
  pool.push_back(parse_pd("O"));
  pool.push_back(parse_pd("O O"));
  int applied = 0, r3 = 0;
  for (int walk = 0; walk < 20; ++walk) {
    Diagram d = pool[rng() % pool.size()];
    std::vector<std::uint64_t> before;
    for (Int k : {2, 3, 5, 7}) before.push_back(col(d, k));
    std::size_t comps = d.component_list().size();
    for (int step = 0; step < 10; ++step) {
      ReidemeisterMove m = random_reidemeister_move(d, rng);
      Diagram next = apply_reidemeister(d, m);
      ++applied;
      if (m.kind == MoveKind::R3) ++r3;
      CHECK(static_cast<int>(next.crossing_count()) - static_cast<int>(d.crossing_count()) == crossing_change(m.kind));
      CHECK(next.component_list().size() == comps);
      CHECK(is_planar(next));
      d = next;
      std::vector<std::uint64_t> after;
      for (Int k : {2, 3, 5, 7}) after.push_back(col(d, k));
      CHECK(after == before);
    }
  }
  CHECK(applied == 200);
  CHECK(r3 > 0);
}

TEST_CASE("simplify undoes added kinks") {
  std::mt19937 rng(5);
  Diagram t = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  Diagram d = t;
  for (int i = 0; i < 4; ++i) {
    ReidemeisterMove m;
    m.kind = MoveKind::R1Add;
    auto ds = darts(d);
    m.strand = ds[rng() % ds.size()];
    m.variant = i;
    d = apply_reidemeister(d, m);
  }
  CHECK(d.crossing_count() == 7);
  CHECK(simplify(d).crossing_count() == 3);
  CHECK(tri(simplify(d)) == 9);
}
