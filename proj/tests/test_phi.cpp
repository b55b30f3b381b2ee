#include "doctest.h"

#include <vector>

#include "vulnkit/mu.hpp"
#include "vulnkit/phi.hpp"
#include "vulnkit/rational.hpp"

using namespace vulnkit;

TEST_CASE("exhaustive density values with witnesses") {
  const PhiValue e = phi_oracle(parse_mu("e"), GainVariant::kOmega, 5, 2, 1);
  REQUIRE(e.defined);
  CHECK(e.value == Rational(7));
  CHECK(e.witness.str() == "(3+1;y=1)");

  const PhiValue d =
      phi_oracle(parse_mu("delta"), GainVariant::kOmega, 10, 3, 2);
  REQUIRE(d.defined);
  CHECK(d.value == Rational(3));
  CHECK(d.witness.str() == "(3+3+2;y=2)");
}

TEST_CASE("infeasible points are reported, not invented") {
  // Gaining two components with zero removals is impossible for any graph in
  // the family at (x, y) = (2, 0) only when no disconnected member exists;
  // here the single-clique column x = 1 with y > 0 is the infeasible one.
  const PhiValue v = phi_oracle(parse_mu("kappa"), GainVariant::kOmega, 5, 1, 2);
  CHECK_FALSE(v.defined);
  CHECK(v.str() == "undefined:infeasible");
}

TEST_CASE("closed forms at fixed points") {
  CHECK(phi_closed(parse_mu("e"), GainVariant::kOmega, 5, 2, 1).value ==
        Rational(7));
  CHECK(phi_closed(parse_mu("kappa"), GainVariant::kOmega, 6, 2, 3).value ==
        Rational(3));
  CHECK(phi_closed(parse_mu("tau"), GainVariant::kOmega, 6, 3, 2).value ==
        Rational(2, 3));
  CHECK(phi_closed(parse_mu("sc"), GainVariant::kOmega, 6, 3, 2).value ==
        Rational(1));

  // The largest-order edge cell uses a first term that disagrees with the
  // join count; the oracle maximum at (n, x, y) = (5, 2, 1) is 6.
  CHECK(phi_closed(parse_mu("e"), GainVariant::kBigOmega, 5, 2, 1).value ==
        Rational(9, 2));
  CHECK(phi_oracle(parse_mu("e"), GainVariant::kBigOmega, 5, 2, 1).value ==
        Rational(6));

  // Cells the source tables leave out or that divide by zero say so.
  CHECK(phi_closed(parse_mu("coc:2"), GainVariant::kBigOmega, 6, 2, 1).str() ==
        "undefined:paper_omits");
  CHECK(phi_closed(parse_mu("delta"), GainVariant::kBigOmega, 5, 3, 2).str() ==
        "undefined:division_by_zero");
}

TEST_CASE("grid comparison flags only ledgered disagreement classes") {
  for (const char* name : {"e", "delta", "kappa", "tau", "sc", "integrity"}) {
    for (GainVariant variant : {GainVariant::kOmega, GainVariant::kBigOmega}) {
      const std::vector<PhiComparison> rows =
          compare_phi(parse_mu(name), variant, 5);
      CHECK(rows.size() == 15);
      for (const PhiComparison& row : rows) {
        INFO(name << " x=" << row.x << " y=" << row.y);
        CHECK(row.verdict != PhiVerdict::kMismatchUnexpected);
        CHECK(row.verdict != PhiVerdict::kClosedUndefinedUnexpected);
      }
    }
  }

  bool expected_seen = false;
  for (const PhiComparison& row :
       compare_phi(parse_mu("e"), GainVariant::kBigOmega, 5))
    if (row.verdict == PhiVerdict::kMismatchExpected) expected_seen = true;
  CHECK(expected_seen);
}

TEST_CASE("comparison rows serialize to the ledger schema") {
  CHECK(phi_comparison_csv_header() ==
        "mu,variant,n,x,y,paper_value,oracle_value,verdict");
  const std::vector<PhiComparison> rows =
      compare_phi(parse_mu("kappa"), GainVariant::kOmega, 4);
  REQUIRE(!rows.empty());
  const std::string line = phi_comparison_csv_row(rows.front());
  CHECK(line.substr(0, 14) == "kappa,omega,4,");
}
