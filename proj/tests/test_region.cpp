#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "vulnkit/property_spec.hpp"
#include "vulnkit/region.hpp"

using namespace vulnkit;

TEST_CASE("forbidden region of a connectivity requirement") {
  const ForbiddenRegion r = region_for(parse_property("conn:k=2"), 6);
  CHECK(r.contains(2, 0));
  CHECK(r.contains(2, 1));
  CHECK_FALSE(r.contains(2, 2));   // two removals meet the requirement
  CHECK_FALSE(r.contains(1, 0));   // below the gain range
  CHECK_FALSE(r.contains(6, 1));   // profile cap y <= n - x
  CHECK(r.points().size() == 9);
}

TEST_CASE("forbidden region of a toughness requirement") {
  const ForbiddenRegion r = region_for(parse_property("tough:t=1"), 6);
  CHECK(r.contains(3, 2));
  CHECK_FALSE(r.contains(3, 3));  // 3 removals for 3 components is 1-tough
  const auto pts = r.points();
  CHECK(std::find(pts.begin(), pts.end(), std::make_pair(2, 1)) != pts.end());
}

TEST_CASE("largest-order kinds expose failure points, not regions") {
  CHECK_THROWS_AS(region_for(parse_property("integ:i=4"), 6),
                  std::invalid_argument);
  CHECK(failure_points(parse_property("integ:i=4"), 6).size() == 6);
  CHECK(failure_points(parse_property("coc:k=2,l=3"), 6).size() == 4);
}

TEST_CASE("region containment reproduces known implications") {
  // Two-connected graphs are connected.
  CHECK(region_implies(parse_property("conn:k=2"), parse_property("conn:k=1"), 6));
  CHECK_FALSE(
      region_implies(parse_property("conn:k=1"), parse_property("conn:k=2"), 6));

  // One-tough graphs are two-connected, not conversely.
  CHECK(region_implies(parse_property("tough:t=1"), parse_property("conn:k=2"), 6));
  CHECK_FALSE(
      region_implies(parse_property("conn:k=2"), parse_property("tough:t=1"), 6));

  // Every property implies itself.
  for (const char* spec : {"conn:k=3", "tough:t=3/2", "unscat:s=1",
                           "lconn:k=2,l=3", "tkl:t=1/2,k=1,l=2"}) {
    CHECK(region_implies(parse_property(spec), parse_property(spec), 7));
  }
}

TEST_CASE("property specs parse and print canonically") {
  CHECK(parse_property("conn:k=2").str() == "conn:k=2");
  CHECK(parse_property("tough:t=3/2").str() == "tough:t=3/2");
  CHECK(parse_property("unscat:s=-1").str() == "unscat:s=-1");
  CHECK(parse_property("lconn:k=2,l=3").str() == "lconn:k=2,l=3");
  CHECK(parse_property("tkl:t=1/2,k=-1,l=2").str() == "tkl:t=1/2,k=-1,l=2");
  CHECK(parse_property("integ:i=4").str() == "integ:i=4");
  CHECK(parse_property("coc:k=2,l=3").str() == "coc:k=2,l=3");
  CHECK(parse_property("cotough:t=1/2").str() == "cotough:t=1/2");
  CHECK_THROWS_AS(parse_property("conn"), std::invalid_argument);
  CHECK_THROWS_AS(parse_property("conn:k="), std::invalid_argument);
  CHECK_THROWS_AS(parse_property("nope:k=1"), std::invalid_argument);
}
