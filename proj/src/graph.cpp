#include "vulnkit/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vulnkit {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be between 0 and " +
                                std::to_string(kMaxOrder) + ", got " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  adj_[u] |= vertex_bit(v);
  adj_[v] |= vertex_bit(u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = all_vertices(n) & ~vertex_bit(v);
  return g;
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::join(const Graph& g, const Graph& h) {
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < g.n_; ++u)
    for (int v = g.n_; v < r.n_; ++v) r.add_edge(u, v);
  return r;
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
  check_order(g.n_ + h.n_);
  Graph r(g.n_ + h.n_);
  for (int v = 0; v < g.n_; ++v) r.adj_[v] = g.adj_[v];
  for (int v = 0; v < h.n_; ++v) r.adj_[g.n_ + v] = h.adj_[v] << g.n_;
  return r;
}

Graph Graph::with_edge(int u, int v) const {
  Graph r = *this;
  r.add_edge(u, v);
  return r;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("minimum degree of the null graph is undefined");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

Graph remove_vertices(const Graph& g, VertexSet removed) {
  if ((removed & ~g.vertices()) != 0)
    throw std::invalid_argument("removed set contains vertices outside the graph");
  const VertexSet kept = g.vertices() & ~removed;
  // Order-preserving relabelling: old vertex v becomes the rank of v in kept.
  std::array<int, kMaxOrder> label{};
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (kept & vertex_bit(v)) label[v] = next++;
  Graph r(next);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    if (!(kept & vertex_bit(u))) continue;
    VertexSet nb = g.neighbors(u) & kept;
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (u < v) edges.emplace_back(label[u], label[v]);
    }
  }
  return Graph::from_edges(next, edges);
}

ComponentSummary component_summary(const std::uint32_t* adj, VertexSet present) {
  ComponentSummary s;
  VertexSet todo = present;
  while (todo) {
    VertexSet comp = 0;
    VertexSet frontier = vertex_bit(std::countr_zero(todo));
    while (frontier) {
      comp |= frontier;
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      frontier = next & present & ~comp;
    }
    ++s.count;
    s.largest = std::max(s.largest, std::popcount(comp));
    todo &= ~comp;
  }
  return s;
}

std::vector<int> component_orders(const std::uint32_t* adj, VertexSet present) {
  std::vector<int> orders;
  VertexSet todo = present;
  while (todo) {
    VertexSet comp = 0;
    VertexSet frontier = vertex_bit(std::countr_zero(todo));
    while (frontier) {
      comp |= frontier;
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      frontier = next & present & ~comp;
    }
    orders.push_back(std::popcount(comp));
    todo &= ~comp;
  }
  return orders;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet todo = g.vertices();
  while (todo) {
    VertexSet comp = 0;
    VertexSet frontier = vertex_bit(std::countr_zero(todo));
    while (frontier) {
      comp |= frontier;
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      frontier = next & g.vertices() & ~comp;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

int omega(const Graph& g) { return component_summary(g.adj_data(), g.vertices()).count; }

int big_omega(const Graph& g) { return component_summary(g.adj_data(), g.vertices()).largest; }

namespace {

int alpha_rec(const std::uint32_t* adj, VertexSet mask) {
  if (mask == 0) return 0;
  // Branch on a vertex of maximum degree inside the remaining set; if every
  // remaining vertex is isolated the whole set is independent.
  int pick = -1, pick_deg = -1;
  VertexSet m = mask;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    const int d = std::popcount(adj[v] & mask);
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  if (pick_deg == 0) return std::popcount(mask);
  const int with = 1 + alpha_rec(adj, mask & ~(adj[pick] | vertex_bit(pick)));
  const int without = alpha_rec(adj, mask & ~vertex_bit(pick));
  return std::max(with, without);
}

}  // namespace

int alpha(const Graph& g) { return alpha_rec(g.adj_data(), g.vertices()); }

namespace {

int ncap_rec(const Graph& g, int remaining, int first, VertexSet common, int best) {
  if (remaining == 0) return std::popcount(common);
  for (int v = first; v <= g.order() - remaining; ++v) {
    const VertexSet next = common & g.neighbors(v);
    // Choosing further vertices only shrinks the intersection, so once the
    // global best is zero nothing can improve.
    best = std::min(best, ncap_rec(g, remaining - 1, v + 1, next, best));
    if (best == 0) return 0;
  }
  return best;
}

}  // namespace

int common_neighborhood_min(const Graph& g, int j) {
  if (j < 1 || j > g.order())
    throw std::invalid_argument("common neighborhood size j out of range");
  return ncap_rec(g, j, 0, g.vertices(), g.order());
}

Graph graph_from_edge_mask(std::uint64_t mask, int n) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace vulnkit
