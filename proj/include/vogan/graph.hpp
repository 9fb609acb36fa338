#pragma once

#include <functional>
#include <vector>

#include "vogan/types.hpp"

namespace vogan {

// Vertex- and edge-coloured graph on vertices 0..n-1, used for automorphism
// search and for matching g_0^ss components against standard Dynkin shapes.
// edge[i][j] == 0 means no edge; otherwise it is an ordered attribute code so
// that direction-sensitive data (which endpoint is longer) is respected.
struct LabeledGraph {
  std::vector<long> vertex_color;
  std::vector<std::vector<int>> edge;

  int size() const { return static_cast<int>(vertex_color.size()); }
  int degree(int v) const;
};

int edge_code(const Edge& e, NodeId from, NodeId to);

// Whole diagram; vertex colour packs parity, colour and a-label.
LabeledGraph to_labeled_graph(const Diagram& d);

// Induced subgraph on `ids` (vertex k of the result is ids[k]); vertex colours
// are ignored (all zero) so only the edge pattern is compared.
LabeledGraph induced_shape(const Diagram& d, const std::vector<NodeId>& ids);

// Calls visit(map) for every isomorphism g -> h (map[i] is the image of i).
// Enumeration stops early when visit returns false.
void for_each_isomorphism(const LabeledGraph& g, const LabeledGraph& h,
                          const std::function<bool(const std::vector<int>&)>& visit);

bool isomorphic(const LabeledGraph& g, const LabeledGraph& h);

// Standard Dynkin shape of the given type ('A','B','C','D','E','F','G') and rank.
LabeledGraph dynkin_shape(char type, int rank);

}  // namespace vogan
