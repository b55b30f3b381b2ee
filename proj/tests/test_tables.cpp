#include "doctest.h"

#include <algorithm>
#include <vector>

#include "vulnkit/mu.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"
#include "vulnkit/tables.hpp"

using namespace vulnkit;

TEST_CASE("closed minimum-degree thresholds at fixed points") {
  CHECK(closed_delta_threshold(parse_property("conn:k=2"), 6).value ==
        Rational(2));
  CHECK(closed_delta_threshold(parse_property("conn:k=3"), 7).value ==
        Rational(3));
  CHECK(closed_delta_threshold(parse_property("integ:i=5"), 7).value ==
        Rational(3));
  CHECK(closed_delta_threshold(parse_property("tkl:t=1,k=0,l=2"), 6).str() ==
        "undefined:paper_omits");
}

TEST_CASE("closed cross-table thresholds at fixed points") {
  const PropertySpec conn3 = parse_property("conn:k=3");
  CHECK(closed_cross_threshold(parse_mu("kappa"), conn3, 7).value ==
        Rational(2));
  CHECK(closed_cross_threshold(parse_mu("tau"), conn3, 7).value ==
        Rational(1));
  CHECK(closed_cross_threshold(parse_mu("sc"), conn3, 7).value == Rational(0));
  CHECK(closed_cross_threshold(parse_mu("integrity"), conn3, 7).value ==
        Rational(6));
  CHECK(closed_cross_threshold(parse_mu("cotough"), conn3, 7).value ==
        Rational(2, 3));

  CHECK(closed_cross_threshold(parse_mu("kappa"),
                               parse_property("tough:t=1"), 8)
            .value == Rational(3));
  CHECK(closed_cross_threshold(parse_mu("integrity"),
                               parse_property("integ:i=4"), 7)
            .value == Rational(3));

  // Cells printed only asymptotically or with an unbound symbol are skipped.
  CHECK(closed_cross_threshold(parse_mu("tau"), parse_property("tough:t=1"), 7)
            .str() == "undefined:approximate_only");
  CHECK(closed_cross_threshold(parse_mu("cotough"),
                               parse_property("unscat:s=1"), 7)
            .str() == "undefined:unbound_symbol");
}

TEST_CASE("table generation produces verified rows") {
  const std::vector<TableRow> rows =
      generate_tables(TableKind::kDeltaTable, 4, 5);
  CHECK(rows.size() == 110);  // 55 properties at each of two orders
  bool match_seen = false;
  for (const TableRow& row : rows) {
    CHECK(row.table == "delta");
    CHECK(row.mu == "delta");
    CHECK(row.has_brute);  // both orders are within the sweep cap
    CHECK((row.verdict == "MATCH" || row.verdict == "PAPER_ERRATUM?" ||
           row.verdict == "UNCHECKED"));
    if (row.advisory) CHECK(row.verdict == "UNCHECKED");
    if (row.verdict == "MATCH") match_seen = true;
  }
  CHECK(match_seen);
}

TEST_CASE("cross table rows include matches and ledgered errata") {
  const std::vector<TableRow> rows =
      generate_tables(TableKind::kCrossTable, 5, 5);
  CHECK(rows.size() == 5 * 55);
  bool match_seen = false;
  bool erratum_seen = false;
  for (const TableRow& row : rows) {
    if (row.verdict == "MATCH") match_seen = true;
    if (row.verdict == "PAPER_ERRATUM?") {
      erratum_seen = true;
      CHECK(row.has_brute);
      CHECK(!row.brute.witness_graph6.empty());
    }
  }
  CHECK(match_seen);
  CHECK(erratum_seen);
}

TEST_CASE("table rows serialize with the versioned header") {
  CHECK(table_csv_header() ==
        "table,mu,property,parameters,n,closed_form,region_value,brute_value,"
        "verdict");
  const std::vector<TableRow> rows =
      generate_tables(TableKind::kDeltaTable, 4, 4);
  REQUIRE(!rows.empty());
  const std::string line = table_csv_row(rows.front());
  CHECK(line.substr(0, 12) == "delta,delta,");
  CHECK(table_row_json(rows.front()).find("\"verdict\"") != std::string::npos);

  /* Two-parameter specs must not leak a comma into their cells: every row
     carries exactly as many fields as the header. */
  const auto commas = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  const long header_commas = commas(table_csv_header());
  for (const TableRow& row : rows) {
    CHECK(commas(table_csv_row(row)) == header_commas);
  }
  bool saw_two_param = false;
  for (const TableRow& row : rows) {
    if (row.property.rfind("lconn:", 0) == 0) {
      saw_two_param = true;
      CHECK(table_csv_row(row).find(";l=") != std::string::npos);
    }
  }
  CHECK(saw_two_param);
}
