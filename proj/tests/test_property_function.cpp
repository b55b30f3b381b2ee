#include "doctest.h"

#include <algorithm>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/rational.hpp"

using namespace vulnkit;

namespace {

std::vector<int> costs(const PropertyFunction& pf) {
  std::vector<int> out;
  for (int x = 0; x <= pf.domain_max(); ++x)
    out.push_back(pf.defined_at(x) ? pf.at(x) : -1);
  return out;
}

}  // namespace

TEST_CASE("component-count property function on fixed graphs") {
  const PropertyFunction p4 = psi(Graph::path(4), GainVariant::kOmega);
  CHECK(costs(p4) == std::vector<int>{4, 0, 1});

  const PropertyFunction star = psi(Graph::star(4), GainVariant::kOmega);
  CHECK(costs(star) == std::vector<int>{5, 0, 3, 2, 1});

  const PropertyFunction k4 = psi(Graph::complete(4), GainVariant::kOmega);
  CHECK(costs(k4) == std::vector<int>{4, 0});
}

TEST_CASE("largest-order property function on fixed graphs") {
  const PropertyFunction star = psi(Graph::star(4), GainVariant::kBigOmega);
  CHECK(costs(star) == std::vector<int>{5, 1, 3, 2, 1, 0});
  CHECK(star.domain_max() == 5);

  const PropertyFunction p4 = psi(Graph::path(4), GainVariant::kBigOmega);
  // Cheapest deletions leaving largest order exactly 0, 1, 2, 3, 4: all four
  // vertices, both middle vertices, one middle vertex, one end, nothing.
  CHECK(costs(p4) == std::vector<int>{4, 2, 1, 1, 0});
}

TEST_CASE("undefined gains throw") {
  const PropertyFunction p4 = psi(Graph::path(4), GainVariant::kOmega);
  CHECK(p4.domain_max() == 2);
  CHECK_THROWS_AS(p4.at(3), std::out_of_range);
}

TEST_CASE("feasible pairs bucket into cost intervals") {
  const Graph g = Graph::path(4);
  const std::vector<FeasiblePair> pairs = feasibility(g, GainVariant::kOmega);
  CHECK(pairs.size() == 7);
  for (int x = 0; x <= 2; ++x) {
    std::vector<int> bucket;
    for (const FeasiblePair& fp : pairs)
      if (fp.gain == x) bucket.push_back(fp.cost);
    std::sort(bucket.begin(), bucket.end());
    const PropertyFunction pf = psi(g, GainVariant::kOmega);
    std::vector<int> expect;
    for (int c = pf.at(x); c <= 4 - x; ++c) expect.push_back(c);
    CHECK(bucket == expect);
  }
}

TEST_CASE("component orders are recovered from the property function") {
  const Graph g =
      Graph::disjoint_union(Graph::path(3), Graph::complete(2));
  const PropertyFunction pf = psi(g, GainVariant::kOmega);
  CHECK(component_orders_from_psi(pf) == std::vector<int>{2, 3});

  const PropertyFunction one = psi(Graph::cycle(5), GainVariant::kOmega);
  CHECK(component_orders_from_psi(one) == std::vector<int>{5});

  const PropertyFunction big = psi(g, GainVariant::kBigOmega);
  CHECK_THROWS_AS(component_orders_from_psi(big), std::invalid_argument);
}

TEST_CASE("line condition checks") {
  const PropertyFunction c5 = psi(Graph::cycle(5), GainVariant::kOmega);
  CHECK(psi_satisfies(c5, Rational(1), Rational(0), 2));       // 1-tough
  CHECK_FALSE(psi_satisfies(c5, Rational(3, 2), Rational(0), 2));
  CHECK(psi_satisfies(c5, Rational(0), Rational(2), 2));       // 2-connected

  // Complete graphs satisfy every line vacuously: no gain of 2 is feasible.
  const PropertyFunction k4 = psi(Graph::complete(4), GainVariant::kOmega);
  CHECK(psi_satisfies(k4, Rational(100), Rational(100), 2));

  const PropertyFunction big = psi(Graph::cycle(5), GainVariant::kBigOmega);
  CHECK_THROWS_AS(psi_satisfies(big, Rational(1), Rational(0), 2),
                  std::invalid_argument);
}

TEST_CASE("property function serializes to sorted JSON pairs") {
  const PropertyFunction p4 = psi(Graph::path(4), GainVariant::kOmega);
  CHECK(p4.to_json() ==
        "{\"variant\":\"omega\",\"n\":4,\"values\":[[0,4],[1,0],[2,1]]}");
}
