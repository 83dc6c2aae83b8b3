#pragma once
// Internal helpers shared by the diagram surgeries.

#include <array>
#include <unordered_map>
#include <vector>

#include "foxkit/diagram.hpp"

namespace foxkit {

struct Normalization {
  std::unordered_map<int, int> relabel;  // input label -> normalized label
  std::vector<int> rotation;             // per crossing: normalized slot s = input slot (s + r) % 4
};

struct DiagramBuilderAccess {
  static Diagram make(std::vector<Crossing> cs, std::vector<int> boundary, int free_loops, Normalization* map);
};

// Mutable port graph: crossing ports, boundary points and pass-through junctions joined by wires.
// build() collapses junction chains into edges and renormalizes.
class Wiring {
 public:
  enum class Kind { Port, Junction, Boundary };
  struct Node {
    Kind kind = Kind::Junction;
    int crossing = -1;
    int slot = 0;
    std::vector<int> wires;
  };
  struct Wire {
    int a = -1, b = -1;
    bool alive = true;
    int head = -1;  // node the orientation points to, -1 if unknown
  };
  struct Imported {
    std::vector<int> crossings;       // input crossing -> wiring crossing
    std::vector<int> boundary_nodes;  // boundary position -> node
    std::vector<int> label_wire;      // label -> wire
  };

  Wiring() = default;
  // Imports d; its boundary becomes this wiring's boundary.
  explicit Wiring(const Diagram& d, const Orientation* o = nullptr);

  // Imports d as a sub-diagram; its boundary points become junctions (returned in order).
  Imported import(const Diagram& d, const Orientation* o, bool boundary_is_outer);

  int add_crossing(bool is_virtual);
  int port(int c, int s) const { return crossings_[c].ports[s]; }
  int add_junction();
  int connect(int a, int b, int head = -1);
  void cut(int w);
  int single_wire(int node) const;  // the only live wire at a degree-1 node
  int other_end(int w, int node) const;
  Node& node(int n) { return nodes_[n]; }
  const Node& node(int n) const { return nodes_[n]; }
  Wire& wire(int w) { return wires_[w]; }
  void replace_endpoint(int w, int old_node, int new_node);

  // Ports of crossing c become junctions; returns them indexed by slot.
  std::array<int, 4> open_crossing(int c);
  // Unmark as a crossing and wire slot pairs; `pairs` lists slot pairs to join.
  void dissolve(int c, std::array<std::array<int, 2>, 2> pairs);
  // Rotate slots by one: (a,b,c,d) -> (b,c,d,a).
  void rotate(int c);
  // Replaces one free loop by two junctions a, b with wires a->b and b->a (returned in that order).
  std::array<int, 2> materialize_loop();
  // Wire tangle t into the given attachment nodes (position i -> attach[i-1]).
  void attach_tangle(const Diagram& t, const std::vector<int>& attach);

  Imported base;  // the diagram given to the constructor
  std::vector<int> boundary;
  int free_loops = 0;

  OrientedDiagram build() const;

 private:
  struct CrossingRec {
    std::array<int, 4> ports{};
    bool is_virtual = false;
    bool alive = true;
  };
  std::vector<Node> nodes_;
  std::vector<Wire> wires_;
  std::vector<CrossingRec> crossings_;
};

// Strand site endpoints x -> y inside a wiring (cuts the wire between them).
struct CutStrand {
  int x = -1, y = -1;
};
CutStrand cut_strand(Wiring& w, const Wiring::Imported& im, const Diagram& d, const StrandRef& s,
                     std::unordered_map<int, std::array<int, 2>>& loops);

}  // namespace foxkit
