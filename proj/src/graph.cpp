#include "vogan/graph.hpp"

#include <algorithm>
#include <queue>

namespace vogan {

int LabeledGraph::degree(int v) const {
  return static_cast<int>(std::count_if(edge[v].begin(), edge[v].end(), [](int c) { return c != 0; }));
}

int edge_code(const Edge& e, NodeId from, NodeId to) {
  int side = 0;
  if (e.longer && *e.longer == from) side = 1;
  if (e.longer && *e.longer == to) side = 2;
  return e.multiplicity * 4 + side;
}

namespace {

LabeledGraph empty_graph(int n) {
  LabeledGraph g;
  g.vertex_color.assign(n, 0);
  g.edge.assign(n, std::vector<int>(n, 0));
  return g;
}

void put_edge(LabeledGraph& g, const Edge& e, int iu, int iv) {
  g.edge[iu][iv] = edge_code(e, e.u, e.v);
  g.edge[iv][iu] = edge_code(e, e.v, e.u);
}

// BFS order inside each connected component keeps partial maps connected,
// which prunes the search early.
std::vector<int> search_order(const LabeledGraph& g) {
  std::vector<int> order;
  std::vector<bool> seen(g.size(), false);
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int w = 0; w < g.size(); ++w) {
        if (g.edge[v][w] != 0 && !seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
  }
  return order;
}

}  // namespace

LabeledGraph to_labeled_graph(const Diagram& d) {
  LabeledGraph g = empty_graph(d.size());
  for (const Node& n : d.nodes) {
    g.vertex_color[n.id - 1] = static_cast<long>(n.parity) * 1'000'000L +
                               static_cast<long>(n.color) * 100'000L + n.a_label;
  }
  for (const Edge& e : d.edges) put_edge(g, e, e.u - 1, e.v - 1);
  return g;
}

LabeledGraph induced_shape(const Diagram& d, const std::vector<NodeId>& ids) {
  LabeledGraph g = empty_graph(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (const Edge* e = d.edge_between(ids[i], ids[j])) {
        g.edge[i][j] = edge_code(*e, ids[i], ids[j]);
        g.edge[j][i] = edge_code(*e, ids[j], ids[i]);
      }
    }
  }
  return g;
}

void for_each_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.size();
  if (n != h.size()) return;
  const std::vector<int> order = search_order(g);
  std::vector<int> gdeg(n), hdeg(n);
  for (int v = 0; v < n; ++v) {
    gdeg[v] = g.degree(v);
    hdeg[v] = h.degree(v);
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;

  std::function<void(int)> extend = [&](int depth) {
    if (stop) return;
    if (depth == n) {
      if (!visit(map)) stop = true;
      return;
    }
    const int v = order[depth];
    for (int w = 0; w < n && !stop; ++w) {
      if (used[w] || g.vertex_color[v] != h.vertex_color[w] || gdeg[v] != hdeg[w]) continue;
      bool consistent = true;
      for (int k = 0; k < depth && consistent; ++k) {
        const int u = order[k];
        consistent = g.edge[v][u] == h.edge[w][map[u]];
      }
      if (!consistent) continue;
      map[v] = w;
      used[w] = true;
      extend(depth + 1);
      used[w] = false;
      map[v] = -1;
    }
  };
  extend(0);
}

bool isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  bool found = false;
  for_each_isomorphism(g, h, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

LabeledGraph dynkin_shape(char type, int rank) {
  LabeledGraph g = empty_graph(rank);
  auto link = [&](int a, int b, int mult = 1, int longer = -1) {
    Edge e{a + 1, b + 1, mult, longer < 0 ? std::nullopt : std::optional<NodeId>(longer + 1)};
    put_edge(g, e, a, b);
  };
  switch (type) {
    case 'A':
      for (int k = 0; k + 1 < rank; ++k) link(k, k + 1);
      break;
    case 'B':
    case 'C':
      for (int k = 0; k + 2 < rank; ++k) link(k, k + 1);
      if (rank >= 2) link(rank - 2, rank - 1, 2, type == 'B' ? rank - 2 : rank - 1);
      break;
    case 'D':
      if (rank < 4) return dynkin_shape('A', rank);  // D3 = A3; callers normalise D2
      for (int k = 0; k + 3 < rank; ++k) link(k, k + 1);
      link(rank - 3, rank - 2);
      link(rank - 3, rank - 1);
      break;
    case 'G':
      link(0, 1, 3, 0);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, 2, 1);
      link(2, 3);
      break;
    default:
      break;
  }
  return g;
}

}  // namespace vogan
