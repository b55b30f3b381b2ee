#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vulnkit/graph.hpp"

namespace vulnkit {

// graph6 interchange: order byte(s) offset by 63, then the upper-triangle
// adjacency bits (column by column) packed big-endian into 6-bit groups,
// each group offset by 63.  Input may carry the optional ">>graph6<<"
// header; output never emits it.
class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    kMalformedLength,  // missing or invalid order byte
    kOrderTooLarge,    // valid graph6, but order above this library's cap
    kTruncated,        // fewer adjacency bytes than the order requires
    kTrailingGarbage,  // extra bytes, or nonzero padding bits
    kInvalidChar,      // adjacency byte outside the printable graph6 range
  };

  Graph6Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace vulnkit
