/*
 * Iteration over fixed-size vertex subsets, shared by the exhaustive sweeps.
 */

#ifndef VULNKIT_SUBSETS_HPP
#define VULNKIT_SUBSETS_HPP

#include "vulnkit/graph.hpp"

namespace vulnkit {

// Visits every subset of {0..n-1} of the given size (Gosper's hack).
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k == 0) {
    fn(VertexSet{0});
    return;
  }
  if (k > n) return;
  const VertexSet limit = all_vertices(n);
  VertexSet s = (VertexSet{1} << k) - 1;
  while (true) {
    fn(s);
    if (s == (limit & ~(limit >> k))) break;  // highest k bits: last subset
    const VertexSet c = s & -s;
    const VertexSet r = s + c;
    s = (((s ^ r) >> 2) / c) | r;
  }
}

}  // namespace vulnkit

#endif
