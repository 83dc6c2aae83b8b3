#pragma once
// Signed plane graphs and the Tait (medial) diagram.

#include <string>
#include <vector>

#include "foxkit/diagram.hpp"

namespace foxkit {

struct GraphEdge {
  int id = 0;
  int u = 0, v = 0;  // 0-based vertices
  int sign = 1;
};

// Rotation lists give the counterclockwise edge order (indices into edges) at each vertex.
// A loop appears twice at its vertex; its first occurrence is taken as the u end.
struct SignedPlaneGraph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> rotation;
};

// `V n`, then `v: e1 e2 ...` rotations (vertices 1-based, edges by id) and `E id: u v [+|-]` lines.
SignedPlaneGraph parse_graph(const std::string& text);
std::string render_graph(const SignedPlaneGraph& g);
// Throws std::invalid_argument when the rotation system is inconsistent or not planar.
void validate(const SignedPlaneGraph& g);
bool is_connected(const SignedPlaneGraph& g);

// One crossing per edge. For a positive edge u -> v drawn horizontally, the over-strand has positive slope.
Diagram graph_to_diagram(const SignedPlaneGraph& g);

}  // namespace foxkit
