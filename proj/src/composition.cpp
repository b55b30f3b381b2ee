#include "vulnkit/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vulnkit/subsets.hpp"

namespace vulnkit {

namespace {

// Extends `cur` by non-increasing parts summing to `total`, each at most
// `max_allowed`; when `count` is nonnegative exactly that many parts are
// still owed, otherwise any number is accepted.
void extend_parts(int total, int count, int max_allowed, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (total == 0 && count <= 0) {
    out.push_back(cur);
    return;
  }
  if (total <= 0 || count == 0) return;
  int hi = std::min(max_allowed, total);
  if (count > 0) hi = std::min(hi, total - (count - 1));
  for (int p = hi; p >= 1; --p) {
    if (count > 0 && static_cast<long long>(p) * count < total) break;
    cur.push_back(p);
    extend_parts(total - p, count > 0 ? count - 1 : -1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int Composition::sum_parts() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::max_part() const {
  if (parts.empty()) throw std::logic_error("composition has no parts");
  return *std::max_element(parts.begin(), parts.end());
}

int Composition::min_part() const {
  if (parts.empty()) throw std::logic_error("composition has no parts");
  return *std::min_element(parts.begin(), parts.end());
}

// Comma-free so the string can sit in a CSV field unquoted.
std::string Composition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(parts[i]);
  }
  out += ";y=" + std::to_string(y) + ")";
  return out;
}

std::vector<std::vector<int>> partitions_all(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  extend_parts(total, -1, total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> partitions_with_count(int total, int count) {
  std::vector<std::vector<int>> out;
  if (count <= 0 || count > total) return out;
  std::vector<int> cur;
  extend_parts(total, count, total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> partitions_with_max(int total, int largest) {
  std::vector<std::vector<int>> out;
  if (largest <= 0 || largest > total) return out;
  std::vector<int> cur{largest};
  extend_parts(total - largest, -1, largest, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Graph build_k(const Composition& c) {
  for (int p : c.parts)
    if (p < 1) throw std::invalid_argument("composition part below 1");
  if (c.y < 0) throw std::invalid_argument("negative hub size");
  Graph body = Graph::empty(0);
  for (int p : c.parts) body = Graph::disjoint_union(body, Graph::complete(p));
  return Graph::join(Graph::complete(c.y), body);
}

bool is_in_family(const Graph& h, const Composition& c) {
  if (h.order() != c.n()) return false;
  if (c.y > h.order()) return false;
  std::vector<int> want(c.parts);
  std::sort(want.begin(), want.end());
  bool found = false;
  for_each_subset_of_size(h.order(), c.y, [&](VertexSet ys) {
    if (found) return;
    std::vector<int> got = component_orders(h.adj_data(), h.vertices() & ~ys);
    std::sort(got.begin(), got.end());
    if (got == want) found = true;
  });
  return found;
}

}  // namespace vulnkit
