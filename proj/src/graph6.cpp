#include "vulnkit/graph6.hpp"

#include <string>

namespace vulnkit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int body_bytes(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty())
    throw Graph6Error(Graph6Error::Kind::kMalformedLength, "empty graph6 line");

  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first == 126)
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge,
                      "multi-byte graph6 order (> 62) exceeds the order cap of 32");
  if (first < 63 || first > 125)
    throw Graph6Error(Graph6Error::Kind::kMalformedLength,
                      "invalid graph6 order byte " + std::to_string(int(first)));
  const int n = first - 63;
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge,
                      "graph6 order " + std::to_string(n) + " exceeds the cap of 32");

  const int need = body_bytes(n);
  if (static_cast<int>(text.size()) - 1 < need)
    throw Graph6Error(Graph6Error::Kind::kTruncated,
                      "graph6 line for order " + std::to_string(n) + " needs " +
                          std::to_string(need) + " adjacency bytes, got " +
                          std::to_string(text.size() - 1));
  if (static_cast<int>(text.size()) - 1 > need)
    throw Graph6Error(Graph6Error::Kind::kTrailingGarbage,
                      "trailing bytes after graph6 data");

  std::vector<std::pair<int, int>> edges;
  int bit_index = 0;
  for (int byte = 0; byte < need; ++byte) {
    const unsigned char c = static_cast<unsigned char>(text[1 + byte]);
    if (c < 63 || c > 126)
      throw Graph6Error(Graph6Error::Kind::kInvalidChar,
                        "graph6 byte " + std::to_string(int(c)) + " out of range");
    const int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const bool set = (group >> b) & 1;
      if (bit_index >= n * (n - 1) / 2) {
        if (set)
          throw Graph6Error(Graph6Error::Kind::kTrailingGarbage,
                            "nonzero padding bits in graph6 data");
        continue;
      }
      if (!set) continue;
      // bit_index enumerates the upper triangle column by column:
      // (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
      int v = 1, col_start = 0;
      while (col_start + v <= bit_index) {
        col_start += v;
        ++v;
      }
      edges.emplace_back(bit_index - col_start, v);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace vulnkit
