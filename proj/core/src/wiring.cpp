#include <algorithm>
#include <map>

#include "internal.hpp"

namespace foxkit {

Wiring::Wiring(const Diagram& d, const Orientation* o) { base = import(d, o, true); }

Wiring::Imported Wiring::import(const Diagram& d, const Orientation* o, bool boundary_is_outer) {
  Imported im;
  for (const Crossing& x : d.crossings()) im.crossings.push_back(add_crossing(x.is_virtual));
  for (std::size_t b = 0; b < d.boundary().size(); ++b) {
    int n = add_junction();
    if (boundary_is_outer) {
      nodes_[n].kind = Kind::Boundary;
      boundary.push_back(n);
    }
    im.boundary_nodes.push_back(n);
  }
  free_loops += d.free_loops();
  auto node_of = [&](Port p) {
    return p.crossing == Port::kBoundary ? im.boundary_nodes[p.slot] : port(im.crossings[p.crossing], p.slot);
  };
  im.label_wire.assign(d.arc_count() + 1, -1);
  for (int l = 1; l <= d.arc_count(); ++l) {
    auto occ = d.occurrences(l);
    int h = o ? node_of(head(d, *o, l)) : -1;
    im.label_wire[l] = connect(node_of(occ[0]), node_of(occ[1]), h);
  }
  return im;
}

int Wiring::add_crossing(bool is_virtual) {
  CrossingRec rec;
  rec.is_virtual = is_virtual;
  int c = static_cast<int>(crossings_.size());
  for (int s = 0; s < 4; ++s) {
    rec.ports[s] = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{Kind::Port, c, s, {}});
  }
  crossings_.push_back(rec);
  return c;
}

int Wiring::add_junction() {
  nodes_.push_back(Node{});
  return static_cast<int>(nodes_.size()) - 1;
}

int Wiring::connect(int a, int b, int head) {
  int w = static_cast<int>(wires_.size());
  wires_.push_back(Wire{a, b, true, head});
  nodes_[a].wires.push_back(w);
  nodes_[b].wires.push_back(w);
  return w;
}

void Wiring::cut(int w) {
  Wire& x = wires_[w];
  if (!x.alive) throw std::logic_error("wire already cut");
  x.alive = false;
  for (int n : {x.a, x.b}) {
    auto& ws = nodes_[n].wires;
    ws.erase(std::find(ws.begin(), ws.end(), w));
  }
}

int Wiring::single_wire(int node) const {
  if (nodes_[node].wires.size() != 1) throw std::logic_error("expected a degree-1 node");
  return nodes_[node].wires[0];
}

int Wiring::other_end(int w, int node) const { return wires_[w].a == node ? wires_[w].b : wires_[w].a; }

void Wiring::replace_endpoint(int w, int old_node, int new_node) {
  Wire& x = wires_[w];
  if (x.a == old_node)
    x.a = new_node;
  else if (x.b == old_node)
    x.b = new_node;
  else
    throw std::logic_error("node is not an endpoint of the wire");
  if (x.head == old_node) x.head = new_node;
  auto& ws = nodes_[old_node].wires;
  ws.erase(std::find(ws.begin(), ws.end(), w));
  nodes_[new_node].wires.push_back(w);
}

std::array<int, 4> Wiring::open_crossing(int c) {
  CrossingRec& rec = crossings_[c];
  if (!rec.alive) throw std::logic_error("crossing already removed");
  rec.alive = false;
  for (int n : rec.ports) {
    nodes_[n].kind = Kind::Junction;
    nodes_[n].crossing = -1;
  }
  return rec.ports;
}

void Wiring::dissolve(int c, std::array<std::array<int, 2>, 2> pairs) {
  auto p = open_crossing(c);
  for (auto& pr : pairs) connect(p[pr[0]], p[pr[1]]);
}

void Wiring::rotate(int c) {
  auto& ports = crossings_[c].ports;
  std::rotate(ports.begin(), ports.begin() + 1, ports.end());
  for (int s = 0; s < 4; ++s) nodes_[ports[s]].slot = s;
}

std::array<int, 2> Wiring::materialize_loop() {
  if (free_loops <= 0) throw std::invalid_argument("no free loop available");
  --free_loops;
  int a = add_junction(), b = add_junction();
  connect(a, b);
  connect(b, a);
  return {a, b};
}

void Wiring::attach_tangle(const Diagram& t, const std::vector<int>& attach) {
  if (attach.size() != t.boundary().size()) throw std::invalid_argument("tangle boundary size mismatch");
  Imported im = import(t, nullptr, false);
  for (std::size_t i = 0; i < attach.size(); ++i) connect(im.boundary_nodes[i], attach[i]);
}

OrientedDiagram Wiring::build() const {
  std::vector<int> new_index(crossings_.size(), -1);
  std::vector<Crossing> cs;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (!crossings_[c].alive) continue;
    new_index[c] = static_cast<int>(cs.size());
    Crossing x;
    x.is_virtual = crossings_[c].is_virtual;
    cs.push_back(x);
  }
  std::map<int, int> boundary_index;
  for (std::size_t b = 0; b < boundary.size(); ++b) boundary_index[boundary[b]] = static_cast<int>(b);

  std::vector<int> node_label(nodes_.size(), 0);
  std::vector<bool> wire_used(wires_.size(), false);
  struct Chain {
    int from, to, dir;
  };
  std::vector<Chain> chains(1);
  auto is_endpoint = [&](int n) { return nodes_[n].kind != Kind::Junction; };
  auto is_live_endpoint = [&](int n) {
    return nodes_[n].kind == Kind::Boundary || (nodes_[n].kind == Kind::Port && crossings_[nodes_[n].crossing].alive);
  };
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    if (!is_live_endpoint(static_cast<int>(n)) || node_label[n]) continue;
    int start = static_cast<int>(n);
    int w = single_wire(start), prev = start, cur = other_end(w, start), dir = 0;
    while (true) {
      wire_used[w] = true;
      if (wires_[w].head >= 0) {
        int d = wires_[w].head == cur ? 1 : -1;
        if (dir && d != dir) throw InvariantViolation("inconsistent strand orientation");
        dir = d;
      }
      if (is_endpoint(cur)) break;
      const auto& ws = nodes_[cur].wires;
      if (ws.size() != 2) throw std::logic_error("junction of degree " + std::to_string(ws.size()));
      int nw = ws[0] == w ? ws[1] : ws[0];
      prev = cur;
      cur = other_end(nw, prev);
      w = nw;
    }
    if (!is_live_endpoint(cur) || nodes_[cur].wires.size() != 1) throw std::logic_error("chain ends at a dead port");
    int label = static_cast<int>(chains.size());
    chains.push_back(Chain{start, cur, dir});
    node_label[start] = node_label[cur] = label;
  }
  int loops = free_loops;
  for (std::size_t w = 0; w < wires_.size(); ++w) {
    if (!wires_[w].alive || wire_used[w]) continue;
    // An untouched cycle of junctions.
    int cur = wires_[w].a, cw = static_cast<int>(w);
    while (!wire_used[cw]) {
      wire_used[cw] = true;
      int nxt = other_end(cw, cur);
      if (is_endpoint(nxt)) throw std::logic_error("unvisited wire reaches an endpoint");
      const auto& ws = nodes_[nxt].wires;
      if (ws.size() != 2) throw std::logic_error("junction of degree " + std::to_string(ws.size()));
      cw = ws[0] == cw ? ws[1] : ws[0];
      cur = nxt;
    }
    ++loops;
  }
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    if (!crossings_[c].alive) continue;
    for (int s = 0; s < 4; ++s) cs[new_index[c]].arcs[s] = node_label[crossings_[c].ports[s]];
  }
  std::vector<int> bl;
  for (int n : boundary) bl.push_back(node_label[n]);

  Normalization map;
  OrientedDiagram out;
  out.diagram = DiagramBuilderAccess::make(std::move(cs), std::move(bl), loops, &map);
  const Diagram& d = out.diagram;
  out.orientation = default_orientation(d);
  std::vector<int> decided(out.orientation.reversed.size(), 0);
  for (std::size_t l = 1; l < chains.size(); ++l) {
    const Chain& ch = chains[l];
    if (!ch.dir) continue;
    int hn = ch.dir > 0 ? ch.to : ch.from;
    Port hp;
    if (nodes_[hn].kind == Kind::Boundary) {
      hp = Port{Port::kBoundary, boundary_index.at(hn)};
    } else {
      int c = new_index[nodes_[hn].crossing];
      hp = Port{c, (nodes_[hn].slot - map.rotation[c] + 4) % 4};
    }
    int nl = map.relabel.at(static_cast<int>(l));
    int comp = d.component_index(nl);
    int want = d.default_head(nl) == hp ? 1 : 2;
    if (decided[comp] && decided[comp] != want) throw InvariantViolation("orientation conflict after rewiring");
    decided[comp] = want;
    out.orientation.reversed[comp] = want == 2;
  }
  return out;
}

CutStrand cut_strand(Wiring& w, const Wiring::Imported& im, const Diagram& d, const StrandRef& s,
                     std::unordered_map<int, std::array<int, 2>>& loops) {
  if (const auto* fl = std::get_if<FreeLoopRef>(&s)) {
    if (fl->index < 0 || fl->index >= d.free_loops()) throw std::invalid_argument("free loop index out of range");
    auto it = loops.find(fl->index);
    if (it == loops.end()) {
      auto ab = w.materialize_loop();
      loops[fl->index] = ab;
      w.cut(w.node(ab[0]).wires[0]);
      return {ab[0], ab[1]};
    }
    auto ab = it->second;
    w.cut(w.node(ab[1]).wires.at(0));
    return {ab[1], ab[0]};
  }
  Port p = std::get<Port>(s);
  Port q = d.partner(p);
  auto node_of = [&](Port x) {
    return x.crossing == Port::kBoundary ? im.boundary_nodes.at(x.slot) : w.port(im.crossings.at(x.crossing), x.slot);
  };
  int x = node_of(p), y = node_of(q);
  w.cut(im.label_wire.at(d.label_at(p)));
  return {x, y};
}

}  // namespace foxkit
