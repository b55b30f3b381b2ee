/*
 * Hub-plus-cliques compositions: the graph K(parts, y) obtained by joining a
 * hub clique on y vertices to a disjoint union of cliques with the given part
 * orders, the enumeration of all such compositions under the two gain
 * constraints, and membership testing for the family of graphs that decompose
 * the same way.
 */

#ifndef VULNKIT_COMPOSITION_HPP
#define VULNKIT_COMPOSITION_HPP

#include <string>
#include <vector>

#include "vulnkit/graph.hpp"

namespace vulnkit {

// Canonical form keeps parts non-increasing; every part is at least 1.
struct Composition {
  std::vector<int> parts;
  int y = 0;

  int sum_parts() const;
  int n() const { return y + sum_parts(); }
  int part_count() const { return static_cast<int>(parts.size()); }
  int max_part() const;
  int min_part() const;

  // Renders as "(3+3+2;y=2)" for ledger and witness columns.
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
};

// Non-increasing part lists summing to `total`, in ascending lexicographic
// order: all of them, those with exactly `count` parts, and those whose
// largest part is exactly `largest`.
std::vector<std::vector<int>> partitions_all(int total);
std::vector<std::vector<int>> partitions_with_count(int total, int count);
std::vector<std::vector<int>> partitions_with_max(int total, int largest);

// The graph K(parts, y): vertices 0..y-1 form the hub, joined to everything;
// the parts follow in order as consecutive clique blocks.
Graph build_k(const Composition& c);

// True when some y-element vertex set Y of h leaves components whose order
// multiset equals the parts.  (Connected, mutually independent pieces are
// exactly the components of h - Y, so this is the decomposition test.)
bool is_in_family(const Graph& h, const Composition& c);

}  // namespace vulnkit

#endif
