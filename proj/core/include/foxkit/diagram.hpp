#pragma once
// Planar diagrams of links and tangles in PD form.
//
// X[a,b,c,d] lists the four edge labels around a crossing counterclockwise,
// a = incoming under-strand, so the under-strand is a->c and the over-strand is b-d.
// Xv[a,b,c,d] is a virtual crossing (a-c and b-d pass through each other).
// A tangle carries its boundary labels in counterclockwise order.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace foxkit {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a checked mathematical identity fails to hold.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Crossing {
  std::array<int, 4> arcs{};
  bool is_virtual = false;
  bool operator==(const Crossing&) const = default;
};

// A crossing slot, or a boundary position when crossing == kBoundary.
struct Port {
  static constexpr int kBoundary = -1;
  int crossing = 0;
  int slot = 0;  // 0..3, or 0-based boundary position
  bool operator==(const Port&) const = default;
  auto operator<=>(const Port&) const = default;
};

struct Component {
  std::vector<int> labels;  // in default traversal order
  bool closed = true;
  bool free_loop = false;
};

class Diagram {
 public:
  Diagram() = default;
  // Validates and normalizes: labels become 1..lambda assigned along a canonical traversal.
  Diagram(std::vector<Crossing> crossings, std::vector<int> boundary = {}, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<int>& boundary() const { return boundary_; }
  int free_loops() const { return free_loops_; }
  int arc_count() const { return arc_count_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t classical_count() const;
  bool is_tangle() const { return !boundary_.empty(); }
  bool has_virtual() const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  bool operator==(const Diagram& o) const {
    return crossings_ == o.crossings_ && boundary_ == o.boundary_ && free_loops_ == o.free_loops_;
  }

  // Label at a port, and the port at the other end of that edge.
  int label_at(Port p) const;
  Port partner(Port p) const;
  std::array<Port, 2> occurrences(int label) const;
  // Default traversal data (orientation by increasing labels).
  Port default_head(int label) const { return heads_.at(label); }
  int component_index(int label) const { return comp_of_.at(label); }
  const std::vector<Component>& component_list() const { return comps_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> boundary_;
  int free_loops_ = 0;
  int arc_count_ = 0;
  std::string name_;
  std::vector<std::array<Port, 2>> occ_;  // indexed by label
  std::vector<Port> heads_;
  std::vector<int> comp_of_;
  std::vector<Component> comps_;
  void index();
  friend struct DiagramBuilderAccess;
};

// Per-component reversal relative to the default orientation (increasing labels).
// Components: traversal components in order of their smallest label, then free loops.
struct Orientation {
  std::vector<bool> reversed;
  bool operator==(const Orientation&) const = default;
};

std::vector<Component> components(const Diagram& d);
std::size_t component_count(const Diagram& d);  // links only
Orientation default_orientation(const Diagram& d);
// Port where the edge `label` arrives under orientation o.
Port head(const Diagram& d, const Orientation& o, int label);
Port tail(const Diagram& d, const Orientation& o, int label);
int component_of(const Diagram& d, int label);
// +1 / -1 for classical crossings, 0 for virtual ones.
int crossing_sign(const Diagram& d, const Orientation& o, std::size_t c);
int writhe(const Diagram& d, const Orientation& o);
// Half the signed count of crossings between component i and the others.
int linking_with_rest(const Diagram& d, const Orientation& o, std::size_t i);
bool is_alternating(const Diagram& d);

// ---- text formats ----
Diagram parse_pd(const std::string& text);
std::string render_pd(const Diagram& d);
// Braid word "B m: s1 s2^-1 ..." closed into a link.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;  // +i for sigma_i, -i for its inverse
};
BraidWord parse_braid(const std::string& text);
Diagram braid_closure(const BraidWord& w);

// ---- faces ----
// A dart runs from `from` along its edge to the partner port; faces keep the region on the right.
struct Face {
  std::vector<Port> darts;
};
std::vector<Face> faces(const Diagram& d);
// Euler-characteristic test on the face structure (false for virtual diagrams).
bool is_planar(const Diagram& d);

// ---- strand sites ----
struct FreeLoopRef {
  int index = 0;
  bool operator==(const FreeLoopRef&) const = default;
};
// A strand segment: a dart (edge traversed from a port) or a free loop.
using StrandRef = std::variant<Port, FreeLoopRef>;
// Two strand segments bounding a common region; the insertion point of a 2-tangle.
struct TwoSite {
  StrandRef first;
  StrandRef second;
};
std::vector<TwoSite> two_sites(const Diagram& d);

// ---- tangles ----
// Positions are 1-based, counterclockwise, cyclic.
Diagram trivial_tangle(int n);  // T0(n): position 2i-1 joined to 2i
Diagram infinity_tangle();      // 2-tangle joining 1-4 and 2-3
// Crossing outside the disk on positions i, i+1. Sign +1: the strand from i is under.
Diagram add_boundary_crossing(const Diagram& t, int i, int sign);
Diagram add_cup(const Diagram& t, int i);  // join positions i and i+1
Diagram add_cap(const Diagram& t, int i);  // two new joined points after position i (0..2n)
Diagram numerator_closure(const Diagram& t);
Diagram denominator_closure(const Diagram& t);
// Replace the two strands of a site by a 2-tangle (positions 1=NE 2=NW 3=SW 4=SE, 0-tangle = identity).
Diagram insert_tangle(const Diagram& d, const TwoSite& site, const Diagram& tangle);
Diagram integer_tangle(int n);

// ---- surgery ----
Diagram switch_crossing(const Diagram& d, std::size_t c);
Diagram smooth_zero(const Diagram& d, std::size_t c);      // joins slots 0-1 and 2-3
Diagram smooth_infinity(const Diagram& d, std::size_t c);  // joins slots 0-3 and 1-2
// Replace crossing c by a 2-tangle: position i attaches to slot (i - 1 + rotation) % 4.
Diagram replace_crossing(const Diagram& d, std::size_t c, const Diagram& tangle, int rotation);
Diagram disjoint_union(const Diagram& a, const Diagram& b);
// Join along edge labels arc1 of d1 and arc2 of d2 (0 means a free loop), orientation-coherent.
Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2, int arc2);
Diagram mirror(const Diagram& d);

// ---- Reidemeister moves ----
enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };
struct ReidemeisterMove {
  MoveKind kind = MoveKind::R1Add;
  std::vector<int> crossings;  // R1Remove: {c}; R2Remove: {c1, c2}
  StrandRef strand = Port{};   // R1Add
  int variant = 0;             // R1Add: 0..3; R2Add: 0 = first strand over, 1 = second over
  TwoSite site{Port{}, Port{}};// R2Add
  Port face_dart{};            // R3: any dart of the triangle face
};
Diagram apply_reidemeister(const Diagram& d, const ReidemeisterMove& m);
std::vector<ReidemeisterMove> r1_remove_sites(const Diagram& d);
std::vector<ReidemeisterMove> r2_remove_sites(const Diagram& d);
std::vector<ReidemeisterMove> r3_sites(const Diagram& d);
// A random legal move, preferring removals and R3 when available. R1Add with no strand data on an empty diagram.
ReidemeisterMove random_reidemeister_move(const Diagram& d, std::mt19937& rng);
// Greedy R1/R2 reduction until neither applies.
Diagram simplify(const Diagram& d);

// Orientation-carrying result of a surgery.
struct OrientedDiagram {
  Diagram diagram;
  Orientation orientation;
};
OrientedDiagram switch_crossing(const OrientedDiagram& d, std::size_t c);
// Smoothing that respects the orientation at crossing c.
OrientedDiagram oriented_smoothing(const OrientedDiagram& d, std::size_t c);
OrientedDiagram apply_reidemeister(const OrientedDiagram& d, const ReidemeisterMove& m);

}  // namespace foxkit
