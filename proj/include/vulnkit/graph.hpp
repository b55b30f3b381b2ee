#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace vulnkit {

inline constexpr int kMaxOrder = 32;

// A set of vertices of some host graph, one bit per vertex.
using VertexSet = std::uint32_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Immutable simple graph of order at most 32, adjacency held as one bitmask
// per vertex.  Everything downstream iterates over vertex subsets, so the
// single-word representation keeps those 2^n loops cheap.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);
  static Graph empty(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  // Star K_{1,leaves}: the centre is vertex 0.
  static Graph star(int leaves);
  static Graph complete_bipartite(int a, int b);

  // Join inserts all edges between the operands; disjoint union inserts none.
  // In both, vertices of g keep their labels and vertices of h are shifted up.
  static Graph join(const Graph& g, const Graph& h);
  static Graph disjoint_union(const Graph& g, const Graph& h);

  Graph with_edge(int u, int v) const;

  int order() const { return n_; }
  int edge_count() const;
  int min_degree() const;  // order >= 1 required
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const;
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet vertices() const { return all_vertices(n_); }
  const std::uint32_t* adj_data() const { return adj_.data(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void add_edge(int u, int v);

  int n_ = 0;
  std::array<std::uint32_t, kMaxOrder> adj_{};
};

// Induced subgraph on V(g) \ removed, relabelled order-preservingly.
Graph remove_vertices(const Graph& g, VertexSet removed);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

int omega(const Graph& g);      // number of components (0 for the null graph)
int big_omega(const Graph& g);  // order of the largest component (0 for null)

// Exact independence number by branch and bound.
int alpha(const Graph& g);

// Minimum, over all j-element vertex sets W, of |common neighborhood of W|.
// For j = 1 this is the minimum degree.
int common_neighborhood_min(const Graph& g, int j);

// Component count and largest component order of the graph induced on
// `present`, straight off an adjacency array.  This is the inner loop of
// every subset sweep, so it avoids constructing Graph objects.
struct ComponentSummary {
  int count = 0;
  int largest = 0;
};
ComponentSummary component_summary(const std::uint32_t* adj, VertexSet present);

// Orders of the components of the graph induced on `present`, unsorted.
std::vector<int> component_orders(const std::uint32_t* adj, VertexSet present);

// Graph of order n from an edge bitmask in column-major pair order: bit 0 is
// {0,1}, bit 1 is {0,2}, bit 2 is {1,2}, ... — the order graph6 uses.  The
// exhaustive sweeps and the seeded random corpus both draw graphs this way.
Graph graph_from_edge_mask(std::uint64_t mask, int n);

}  // namespace vulnkit
