#pragma once

#include <string>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

// Which quantity of G - S counts as the enemy's gain.
enum class GainVariant {
  kOmega,     // number of components
  kBigOmega,  // order of the largest component
};

std::string variant_name(GainVariant v);

// The map x -> minimum number of vertices to remove so the gain is exactly x.
// Domain: [0, alpha(G)] for the component-count variant, [0, Omega(G)] for
// the largest-component variant.  A cost of -1 marks a gain value that no
// subset achieves; the certification suite asserts this never happens on the
// stated domains.
struct PropertyFunction {
  GainVariant variant = GainVariant::kOmega;
  int n = 0;
  std::vector<int> cost;

  int domain_max() const { return static_cast<int>(cost.size()) - 1; }
  bool defined_at(int x) const {
    return x >= 0 && x <= domain_max() && cost[x] >= 0;
  }
  int at(int x) const;  // throws std::out_of_range if !defined_at(x)

  // JSON object {variant, n, values: [[x, y], ...]} sorted by x.
  std::string to_json() const;
};

inline constexpr int kSweepOrderCap = 24;  // 2^n subset sweeps stop here

PropertyFunction psi(const Graph& g, GainVariant variant);

struct FeasiblePair {
  int gain = 0;
  int cost = 0;
  friend bool operator==(const FeasiblePair&, const FeasiblePair&) = default;
};

// Every (gain, cost) pair achieved by some vertex subset, sorted.
std::vector<FeasiblePair> feasibility(const Graph& g, GainVariant variant);

// Recovers the component orders of the source graph, smallest first, from
// successive differences of the component-count property function.
std::vector<int> component_orders_from_psi(const PropertyFunction& pf);

// True iff psi(x) >= t*x + k for every x in [max(l, 1), domain_max];
// vacuously true when the domain ends below l.
bool psi_satisfies(const PropertyFunction& pf, const Rational& t, const Rational& k, int l);

}  // namespace vulnkit
