#include "vulnkit/property_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "vulnkit/subsets.hpp"

namespace vulnkit {

namespace {

void check_sweep_order(const Graph& g) {
  if (g.order() > kSweepOrderCap)
    throw std::invalid_argument("order " + std::to_string(g.order()) +
                                " above the subset sweep cap of " +
                                std::to_string(kSweepOrderCap));
}

}  // namespace

std::string variant_name(GainVariant v) {
  return v == GainVariant::kOmega ? "omega" : "Omega";
}

int PropertyFunction::at(int x) const {
  if (!defined_at(x))
    throw std::out_of_range("property function undefined at gain " + std::to_string(x));
  return cost[x];
}

std::string PropertyFunction::to_json() const {
  std::string out = "{\"variant\":\"" + variant_name(variant) +
                    "\",\"n\":" + std::to_string(n) + ",\"values\":[";
  bool first = true;
  for (int x = 0; x <= domain_max(); ++x) {
    if (cost[x] < 0) continue;
    if (!first) out += ",";
    first = false;
    out += "[" + std::to_string(x) + "," + std::to_string(cost[x]) + "]";
  }
  out += "]}";
  return out;
}

PropertyFunction psi(const Graph& g, GainVariant variant) {
  check_sweep_order(g);
  const int n = g.order();
  const int dmax = variant == GainVariant::kOmega ? alpha(g) : big_omega(g);

  PropertyFunction pf;
  pf.variant = variant;
  pf.n = n;
  pf.cost.assign(dmax + 1, -1);

  // Sweep subsets by increasing size: the first size that achieves a gain is
  // its minimum cost, so each slot is written once.
  int unset = dmax + 1;
  for (int k = 0; k <= n && unset > 0; ++k) {
    for_each_subset_of_size(n, k, [&](VertexSet s) {
      if (unset == 0) return;
      const ComponentSummary cs = component_summary(g.adj_data(), g.vertices() & ~s);
      const int gain = variant == GainVariant::kOmega ? cs.count : cs.largest;
      if (gain <= dmax && pf.cost[gain] < 0) {
        pf.cost[gain] = k;
        --unset;
      }
    });
  }
  return pf;
}

std::vector<FeasiblePair> feasibility(const Graph& g, GainVariant variant) {
  check_sweep_order(g);
  const int n = g.order();
  // seen[gain] is a bitmask over achievable costs.
  std::vector<std::uint64_t> seen(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    for_each_subset_of_size(n, k, [&](VertexSet s) {
      const ComponentSummary cs = component_summary(g.adj_data(), g.vertices() & ~s);
      const int gain = variant == GainVariant::kOmega ? cs.count : cs.largest;
      seen[gain] |= std::uint64_t{1} << k;
    });
  }
  std::vector<FeasiblePair> pairs;
  for (int gain = 0; gain <= n; ++gain)
    for (int cost = 0; cost <= n; ++cost)
      if ((seen[gain] >> cost) & 1) pairs.push_back({gain, cost});
  return pairs;
}

std::vector<int> component_orders_from_psi(const PropertyFunction& pf) {
  if (pf.variant != GainVariant::kOmega)
    throw std::invalid_argument("component orders are recovered from the component-count variant");
  // The unique zero of psi sits at the component count of the source graph.
  int w = -1;
  for (int x = 0; x <= pf.domain_max(); ++x) {
    if (!pf.defined_at(x)) continue;
    if (pf.cost[x] == 0) {
      if (w >= 0) throw std::invalid_argument("property function has two zeros");
      w = x;
    }
  }
  if (w < 0) throw std::invalid_argument("property function has no zero");
  // Removing the i smallest components entirely is the cheapest way to drop
  // the count by i, so successive differences give the orders smallest first.
  std::vector<int> orders;
  for (int x = w - 1; x >= 0; --x) orders.push_back(pf.at(x) - pf.at(x + 1));
  return orders;
}

bool psi_satisfies(const PropertyFunction& pf, const Rational& t, const Rational& k, int l) {
  if (pf.variant != GainVariant::kOmega)
    throw std::invalid_argument("line conditions are evaluated on the component-count variant");
  if (l < 0) throw std::invalid_argument("lower bound l must be nonnegative");
  for (int x = std::max(l, 1); x <= pf.domain_max(); ++x) {
    if (!pf.defined_at(x)) continue;
    if (Rational(pf.cost[x]) < t * Rational(x) + k) return false;
  }
  return true;
}

}  // namespace vulnkit
