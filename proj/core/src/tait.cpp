#include "foxkit/tait.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace foxkit {

namespace {

// Legs around the crossing of an edge, counterclockwise: (v,L), (u,L), (u,R), (v,R).
enum Leg { kVL = 0, kUL = 1, kUR = 2, kVR = 3 };

std::string strip(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Position of each rotation entry as an edge end: 0 = u end, 1 = v end.
std::vector<std::vector<int>> end_of_occurrence(const SignedPlaneGraph& g) {
  std::vector<std::vector<int>> ends(g.vertices);
  std::vector<int> seen(g.edges.size(), 0);
  for (int w = 0; w < g.vertices; ++w)
    for (int e : g.rotation[w]) {
      const GraphEdge& ed = g.edges[e];
      if (ed.u == ed.v)
        ends[w].push_back(seen[e]++);
      else
        ends[w].push_back(w == ed.u ? 0 : 1);
    }
  return ends;
}

}  // namespace

void validate(const SignedPlaneGraph& g) {
  if (g.vertices < 1) throw std::invalid_argument("graph needs a vertex");
  if (static_cast<int>(g.rotation.size()) != g.vertices) throw std::invalid_argument("one rotation per vertex required");
  std::vector<std::map<int, int>> count(g.vertices);
  for (int w = 0; w < g.vertices; ++w)
    for (int e : g.rotation[w]) {
      if (e < 0 || e >= static_cast<int>(g.edges.size())) throw std::invalid_argument("rotation names an unknown edge");
      count[w][e]++;
    }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const GraphEdge& ed = g.edges[e];
    if (ed.u < 0 || ed.u >= g.vertices || ed.v < 0 || ed.v >= g.vertices) throw std::invalid_argument("edge endpoint out of range");
    if (ed.sign != 1 && ed.sign != -1) throw std::invalid_argument("edge sign must be + or -");
    int ei = static_cast<int>(e);
    bool ok = ed.u == ed.v ? count[ed.u][ei] == 2 : count[ed.u][ei] == 1 && count[ed.v][ei] == 1;
    if (!ok) throw std::invalid_argument("edge " + std::to_string(ed.id) + " is not listed once at each endpoint");
  }
  for (int w = 0; w < g.vertices; ++w)
    for (auto [e, c] : count[w])
      if (g.edges[e].u != w && g.edges[e].v != w) throw std::invalid_argument("rotation lists an edge not incident to the vertex");
  // Euler characteristic of the rotation system via face tracing on darts.
  auto ends = end_of_occurrence(g);
  std::vector<std::array<std::pair<int, int>, 2>> where(g.edges.size());  // edge end -> (vertex, position)
  for (int w = 0; w < g.vertices; ++w)
    for (std::size_t k = 0; k < g.rotation[w].size(); ++k) where[g.rotation[w][k]][ends[w][k]] = {w, static_cast<int>(k)};
  std::vector<std::vector<bool>> used(g.vertices);
  for (int w = 0; w < g.vertices; ++w) used[w].assign(g.rotation[w].size(), false);
  int faces = 0, isolated = 0;
  for (int w = 0; w < g.vertices; ++w) {
    if (g.rotation[w].empty()) ++isolated;
    for (std::size_t k = 0; k < g.rotation[w].size(); ++k) {
      if (used[w][k]) continue;
      ++faces;
      int cw = w, ck = static_cast<int>(k);
      while (!used[cw][ck]) {
        used[cw][ck] = true;
        int e = g.rotation[cw][ck];
        auto [nw, nk] = where[e][1 - ends[cw][ck]];
        int deg = static_cast<int>(g.rotation[nw].size());
        cw = nw;
        ck = (nk + deg - 1) % deg;
      }
    }
  }
  // Planar per connected piece: V - E + F = 2.
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& ed : g.edges) parent[find(ed.u)] = find(ed.v);
  int pieces = 0;
  for (int w = 0; w < g.vertices; ++w) pieces += find(w) == w;
  int chi = g.vertices - static_cast<int>(g.edges.size()) + faces + isolated;
  if (chi != 2 * pieces) throw std::invalid_argument("rotation system is not a plane embedding");
}

bool is_connected(const SignedPlaneGraph& g) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& ed : g.edges) parent[find(ed.u)] = find(ed.v);
  int pieces = 0;
  for (int w = 0; w < g.vertices; ++w) pieces += find(w) == w;
  return pieces == 1;
}

SignedPlaneGraph parse_graph(const std::string& text) {
  SignedPlaneGraph g;
  std::istringstream in(text);
  std::string line;
  bool have_v = false;
  std::map<int, int> edge_index;
  std::vector<std::pair<int, std::vector<int>>> rot_lines;
  while (std::getline(in, line)) {
    line = strip(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == 'V') {
      std::string tag;
      ls >> tag >> g.vertices;
      if (!ls || g.vertices < 1) throw ParseError("bad vertex count line '" + line + "'");
      have_v = true;
      continue;
    }
    if (line[0] == 'E') {
      std::string tag, sign = "+";
      GraphEdge e;
      char colon;
      ls >> tag >> e.id >> colon >> e.u >> e.v;
      if (!ls || colon != ':') throw ParseError("bad edge line '" + line + "'");
      ls >> sign;
      if (sign != "+" && sign != "-") throw ParseError("edge sign must be + or -");
      e.sign = sign == "+" ? 1 : -1;
      --e.u;
      --e.v;
      if (edge_index.count(e.id)) throw ParseError("duplicate edge id " + std::to_string(e.id));
      edge_index[e.id] = static_cast<int>(g.edges.size());
      g.edges.push_back(e);
      continue;
    }
    int v;
    char colon;
    ls >> v >> colon;
    if (!ls || colon != ':') throw ParseError("bad rotation line '" + line + "'");
    std::vector<int> ids;
    int id;
    while (ls >> id) ids.push_back(id);
    if (!ls.eof()) throw ParseError("bad rotation line '" + line + "'");
    rot_lines.emplace_back(v, ids);
  }
  if (!have_v) throw ParseError("missing `V n` line");
  g.rotation.assign(g.vertices, {});
  for (auto& [v, ids] : rot_lines) {
    if (v < 1 || v > g.vertices) throw ParseError("rotation for unknown vertex " + std::to_string(v));
    for (int id : ids) {
      auto it = edge_index.find(id);
      if (it == edge_index.end()) throw ParseError("rotation names unknown edge " + std::to_string(id));
      g.rotation[v - 1].push_back(it->second);
    }
  }
  try {
    validate(g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string render_graph(const SignedPlaneGraph& g) {
  std::ostringstream os;
  os << "V " << g.vertices << '\n';
  for (int w = 0; w < g.vertices; ++w) {
    os << w + 1 << ':';
    for (int e : g.rotation[w]) os << ' ' << g.edges[e].id;
    os << '\n';
  }
  for (const auto& e : g.edges) os << "E " << e.id << ": " << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  return os.str();
}

Diagram graph_to_diagram(const SignedPlaneGraph& g) {
  validate(g);
  if (g.edges.empty()) return parse_pd("O");
  auto ends = end_of_occurrence(g);
  std::vector<std::array<int, 4>> leg_label(g.edges.size(), {0, 0, 0, 0});
  int next = 1;
  // The corner after occurrence k at w joins the counterclockwise leg of that end to the clockwise leg of the next.
  for (int w = 0; w < g.vertices; ++w) {
    const auto& rot = g.rotation[w];
    for (std::size_t k = 0; k < rot.size(); ++k) {
      std::size_t k2 = (k + 1) % rot.size();
      int label = next++;
      leg_label[rot[k]][ends[w][k] == 0 ? kUL : kVR] = label;
      leg_label[rot[k2]][ends[w][k2] == 0 ? kUR : kVL] = label;
    }
  }
  std::vector<Crossing> cs;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& l = leg_label[e];
    Crossing x;
    // Positive: over through (v,L) and (u,R); negative: over through (u,L) and (v,R).
    x.arcs = g.edges[e].sign > 0 ? std::array<int, 4>{l[kUL], l[kUR], l[kVR], l[kVL]}
                                 : std::array<int, 4>{l[kVL], l[kUL], l[kUR], l[kVR]};
    cs.push_back(x);
  }
  int isolated = 0;
  for (int w = 0; w < g.vertices; ++w) isolated += g.rotation[w].empty();
  return Diagram(std::move(cs), {}, isolated);
}

}  // namespace foxkit
