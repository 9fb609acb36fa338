#include "vogan/render.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace vogan {

namespace {

std::string glyph(const Diagram& d, Circling c, NodeId id) {
  const Node& n = d.node(id);
  const char g = n.color == Color::White ? 'O' : n.color == Color::Grey ? 'X' : '@';
  std::string s(1, g);
  s += c.contains(id) ? "(" + std::to_string(id) + ")" : std::to_string(id);
  if (id == d.lowest) s += "'";
  return s;
}

std::string connector(const Edge& e, NodeId left) {
  if (e.multiplicity == 1) return " --- ";
  const std::string k = std::to_string(e.multiplicity);
  // The arrow points from the longer root toward the shorter one.
  return *e.longer == left ? " =" + k + "> " : " <" + k + "= ";
}

// Longest simple path, ties broken by the lexicographically smallest id list.
std::vector<NodeId> longest_path(const Diagram& d) {
  std::vector<NodeId> best;
  std::vector<NodeId> cur;
  std::vector<bool> used(d.size() + 1, false);
  std::function<void(NodeId)> walk = [&](NodeId v) {
    cur.push_back(v);
    used[v] = true;
    if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) best = cur;
    for (NodeId w : d.neighbors(v)) {
      if (!used[w]) walk(w);
    }
    used[v] = false;
    cur.pop_back();
  };
  for (NodeId s = 1; s <= d.size(); ++s) walk(s);
  return best;
}

}  // namespace

std::string render_ascii(const Diagram& d, Circling c) {
  std::ostringstream out;
  out << d.family.name() << "  parity rule: " << to_string(d.family.parity_rule)
      << "  phi: " << d.lowest << "\n";
  const std::vector<NodeId> path = longest_path(d);
  std::set<std::pair<NodeId, NodeId>> drawn;
  out << glyph(d, c, path.front());
  for (std::size_t k = 1; k < path.size(); ++k) {
    const Edge* e = d.edge_between(path[k - 1], path[k]);
    out << connector(*e, path[k - 1]) << glyph(d, c, path[k]);
    drawn.insert({std::min(e->u, e->v), std::max(e->u, e->v)});
  }
  out << "\n";
  for (const Edge& e : d.edges) {
    if (drawn.count({e.u, e.v}) != 0) continue;
    out << "  also " << glyph(d, c, e.u) << connector(e, e.u) << glyph(d, c, e.v) << "\n";
  }
  out << "  a-labels:";
  for (const Node& n : d.nodes) out << " " << n.id << ":" << n.a_label;
  out << "\n";
  return out.str();
}

std::string render_dot(const Diagram& d, Circling c) {
  std::ostringstream out;
  out << "graph vogan {\n";
  out << "  label=\"" << d.family.name() << "\";\n";
  out << "  node [shape=circle, style=filled, fontname=\"Helvetica\"];\n";
  for (const Node& n : d.nodes) {
    out << "  n" << n.id << " [label=\"" << n.id << "\"";
    switch (n.color) {
      case Color::White: out << ", fillcolor=white"; break;
      case Color::Grey: out << ", fillcolor=gray70"; break;
      case Color::Black: out << ", fillcolor=black, fontcolor=white"; break;
    }
    if (c.contains(n.id)) out << ", peripheries=2";
    if (n.id == d.lowest) out << ", xlabel=\"phi\"";
    out << "];\n";
  }
  for (const Edge& e : d.edges) {
    out << "  n" << e.u << " -- n" << e.v;
    if (e.multiplicity > 1) {
      const NodeId shorter = *e.longer == e.u ? e.v : e.u;
      std::string color = "black";
      for (int k = 1; k < e.multiplicity; ++k) color += ":black";
      out << " [color=\"" << color << "\", dir=" << (shorter == e.v ? "forward" : "back")
          << ", label=\"" << e.multiplicity << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vogan
