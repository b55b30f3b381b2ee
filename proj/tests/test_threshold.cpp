#include "doctest.h"

#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/graph6.hpp"
#include "vulnkit/mu.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"
#include "vulnkit/threshold.hpp"

using namespace vulnkit;

TEST_CASE("exhaustive thresholds at fixed small orders") {
  const ThresholdResult e =
      threshold_brute(parse_mu("e"), parse_property("conn:k=1"), 5);
  REQUIRE(e.has_value);
  CHECK(e.value == Rational(6));
  CHECK(e.witness_graph6 ==
        to_graph6(Graph::disjoint_union(Graph::complete(4), Graph::empty(1))));

  const ThresholdResult d =
      threshold_brute(parse_mu("delta"), parse_property("integ:i=4"), 6);
  REQUIRE(d.has_value);
  CHECK(d.value == Rational(2));

  const ThresholdResult c =
      threshold_brute(parse_mu("delta"), parse_property("conn:k=2"), 6);
  REQUIRE(c.has_value);
  CHECK(c.value == Rational(2));
}

TEST_CASE("exhaustive search rejects orders beyond the sweep cap") {
  CHECK_THROWS_AS(
      threshold_brute(parse_mu("e"), parse_property("conn:k=1"), 8),
      std::invalid_argument);
}

TEST_CASE("region optimization matches exhaustive search on spot checks") {
  for (const char* mu : {"delta", "e", "kappa", "tau", "sc"}) {
    for (const char* prop : {"conn:k=2", "tough:t=1", "unscat:s=0",
                             "lconn:k=2,l=3", "integ:i=4", "coc:k=2,l=3"}) {
      for (int n : {5, 6}) {
        const ThresholdResult region =
            threshold_by_region(parse_mu(mu), parse_property(prop), n);
        const ThresholdResult brute =
            threshold_brute(parse_mu(mu), parse_property(prop), n);
        INFO(mu << " vs " << prop << " at n=" << n);
        CHECK(region.has_value == brute.has_value);
        if (region.has_value && brute.has_value)
          CHECK(region.value == brute.value);
      }
    }
  }
}

TEST_CASE("the region threshold for connectivity under toughness") {
  const ThresholdResult r =
      threshold_by_region(parse_mu("kappa"), parse_property("tough:t=1"), 8);
  REQUIRE(r.has_value);
  CHECK(r.value == Rational(3));
}

TEST_CASE("three-term minimum-degree formula") {
  CHECK(delta_threshold_theorem(Rational(0), Rational(2), 2, 6) == Rational(2));

  // The middle term can overshoot the true threshold.
  CHECK(delta_threshold_theorem(Rational(1), Rational(0), 2, 10) == Rational(5));
  const ThresholdResult r10 = threshold_by_region(
      parse_mu("delta"), parse_property("tkl:t=1,k=0,l=2"), 10);
  REQUIRE(r10.has_value);
  CHECK(r10.value == Rational(4));

  CHECK(delta_threshold_theorem(Rational(2), Rational(2), 2, 5) == Rational(4));
  const ThresholdResult b5 = threshold_brute(
      parse_mu("delta"), parse_property("tkl:t=2,k=2,l=2"), 5);
  REQUIRE(b5.has_value);
  CHECK(b5.value == Rational(3));

  // Slope -1 puts the pivot gamma on a zero divisor.
  CHECK_THROWS_AS(delta_threshold_theorem(Rational(-1), Rational(0), 2, 6),
                  std::invalid_argument);
}

TEST_CASE("batched exhaustive search is worker-count independent") {
  std::vector<BruteQuery> queries;
  for (const char* prop : {"conn:k=1", "conn:k=2", "tough:t=1", "integ:i=3"})
    queries.push_back(BruteQuery{parse_mu("delta"), parse_property(prop)});
  queries.push_back(BruteQuery{parse_mu("tau"), parse_property("conn:k=2")});

  const std::vector<ThresholdResult> one = threshold_brute_batch(queries, 6, 1);
  const std::vector<ThresholdResult> four =
      threshold_brute_batch(queries, 6, 4);
  REQUIRE(one.size() == queries.size());
  REQUIRE(four.size() == queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) {
    CHECK(one[i].has_value == four[i].has_value);
    CHECK(one[i].value == four[i].value);
    CHECK(one[i].witness_graph6 == four[i].witness_graph6);
  }
}

TEST_CASE("threshold results serialize to JSON") {
  const ThresholdResult r =
      threshold_brute(parse_mu("e"), parse_property("conn:k=1"), 5);
  const std::string json = r.to_json();
  CHECK(json.find("\"mu\":\"e\"") != std::string::npos);
  CHECK(json.find("\"property\":\"conn:k=1\"") != std::string::npos);
  CHECK(json.find("\"method\":\"brute\"") != std::string::npos);
  CHECK(json.find("\"value\":\"6\"") != std::string::npos);
  CHECK(json.find("\"witness\":") != std::string::npos);
}
