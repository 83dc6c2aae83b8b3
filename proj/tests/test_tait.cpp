#include <random>

#include "doctest.h"
#include "foxkit/bracket.hpp"
#include "foxkit/coloring.hpp"
#include "foxkit/tait.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

using namespace foxkit;

namespace {

// Two vertices joined by three paths of 3, 3 and 2 edges, the last path negative.
const char* kPretzel = R"(V 7
1: 1 4 7
2: 3 9 6
3: 1 2
4: 2 3
5: 4 5
6: 5 6
7: 7 9
E 1: 1 3 +
E 2: 3 4 +
E 3: 4 2 +
E 4: 1 5 +
E 5: 5 6 +
E 6: 6 2 +
E 7: 1 7 -
E 9: 7 2 -
)";

}  // namespace

TEST_CASE("graph format") {
  SignedPlaneGraph g = parse_graph("V 1\n1: 5 5\nE 5: 1 1\n");
  CHECK(g.edges.size() == 1);
  CHECK(g.edges[0].sign == 1);
  CHECK(parse_graph(render_graph(g)).rotation == g.rotation);
  CHECK_THROWS_AS(parse_graph("V 2\n1: 1\nE 1: 1 2 +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("V 1\n1: 2\nE 1: 1 1 +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("1: 1\n"), ParseError);
  // K4 needs three edges per vertex in a consistent order; a twisted rotation is not planar.
  const char* k4_twisted = "V 4\n1: 1 2 3\n2: 1 4 5\n3: 2 6 4\n4: 3 5 6\nE 1: 1 2\nE 2: 1 3\nE 3: 1 4\nE 4: 2 3\nE 5: 2 4\nE 6: 3 4\n";
  const char* k4 = "V 4\n1: 1 2 3\n2: 1 5 4\n3: 2 4 6\n4: 3 6 5\nE 1: 1 2\nE 2: 1 3\nE 3: 1 4\nE 4: 2 3\nE 5: 2 4\nE 6: 3 4\n";
  bool one_planar = false;
  for (const char* text : {k4_twisted, k4}) {
    try {
      parse_graph(text);
      one_planar = true;
    } catch (const ParseError&) {
    }
  }
  CHECK(one_planar);
}

TEST_CASE("small Tait diagrams") {
  Diagram curl = graph_to_diagram(parse_graph("V 1\n1: 1 1\nE 1: 1 1 +\n"));
  CHECK(curl.crossing_count() == 1);
  CHECK(component_count(curl) == 1);
  Diagram tref = graph_to_diagram(parse_graph("V 3\n1: 1 3\n2: 1 2\n3: 2 3\nE 1: 1 2 +\nE 2: 2 3 +\nE 3: 3 1 +\n"));
  CHECK(tref.crossing_count() == 3);
  CHECK(is_alternating(tref));
  CHECK(tri(tref) == 9);
  CHECK(oracle::fox_count(tref, 3) == 9);
  CHECK(is_planar(tref));
  CHECK(graph_to_diagram(parse_graph("V 1\n")).free_loops() == 1);
}

TEST_CASE("the 8_19 pretzel graph") {
  Diagram d = graph_to_diagram(parse_graph(kPretzel));
  CHECK(d.crossing_count() == 8);
  CHECK(component_count(d) == 1);
  CHECK_FALSE(is_alternating(d));
  LaurentPoly v = jones(d);
  LaurentPoly want = jones(oracle::named("8_19"));
  CHECK((v == want || v.reflect() == want));
}

TEST_CASE("alternating criterion") {
  CHECK(is_alternating(parse_pd("O")));
  CHECK(is_alternating(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")));
  SignedPlaneGraph bigon = parse_graph("V 2\n1: 1 2\n2: 2 1\nE 1: 1 2 +\nE 2: 1 2 -\n");
  CHECK_FALSE(is_alternating(graph_to_diagram(bigon)));
  std::mt19937 rng(12);
  int mixed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    bool mono = trial % 2 == 0;
    SignedPlaneGraph g = graphs::random_graph(7, rng, mono);
    REQUIRE_NOTHROW(validate(g));
    CHECK(is_connected(g));
    bool all_same = true;
    for (auto& e : g.edges) all_same = all_same && e.sign == g.edges[0].sign;
    mixed += !all_same;
    Diagram d = graph_to_diagram(g);
    INFO(render_graph(g));
    CHECK(d.crossing_count() == g.edges.size());
    CHECK(is_planar(d));
    CHECK(is_alternating(d) == all_same);
    // Flipping every sign mirrors the diagram.
    SignedPlaneGraph flipped = g;
    for (auto& e : flipped.edges) e.sign = -e.sign;
    Diagram m = graph_to_diagram(flipped);
    CHECK(component_count(m) == component_count(d));
    CHECK(m.free_loops() == d.free_loops());
    CHECK(kauffman_bracket(m) == kauffman_bracket(d).reflect());
  }
  CHECK(mixed > 50);
}
