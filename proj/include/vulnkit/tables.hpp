/*
 * Reproduction of the two reference threshold tables: for every table row,
 * each order n gets the closed-form value (where the reference prints one),
 * the region-optimized value, the exhaustive value (where n permits), and a
 * three-way verdict.
 */

#ifndef VULNKIT_TABLES_HPP
#define VULNKIT_TABLES_HPP

#include <string>
#include <vector>

#include "vulnkit/mu.hpp"
#include "vulnkit/phi.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/threshold.hpp"

namespace vulnkit {

enum class TableKind {
  kDeltaTable,  // minimum-degree thresholds, one row per property family
  kCrossTable,  // kappa/tau/sc/integrity/cotough rows x property columns
};

struct TableRow {
  std::string table;     // "delta" or "cross"
  std::string mu;
  std::string property;  // canonical spelling, parameters included
  int n = 0;
  PhiValue closed;  // undefined carries the reason (approximate_only, ...)
  ThresholdResult region;
  bool has_brute = false;
  ThresholdResult brute;
  bool advisory = false;  // cotough column: region results are advisory
  std::string verdict;    // "MATCH", "PAPER_ERRATUM?", or "UNCHECKED"
};

// The closed minimum-degree threshold printed for this property family, or
// undefined with a reason when the reference gives none or the expression
// divides by zero at these values.
PhiValue closed_delta_threshold(const PropertySpec& p, int n);

// The closed cross-table cell for (density parameter row, property column);
// cells printed as approximations carry reason "approximate_only", the one
// with an unbound symbol carries "unbound_symbol".
PhiValue closed_cross_threshold(const MuParam& mu, const PropertySpec& p,
                                int n);

// The fixed property grid the certification suites sweep: connectivity
// k in [1,5], toughness t in {1/2, 1, 3/2, 2}, scattering s in [-3,3],
// l-connectivity and component-order connectivity over k in [1,5] x
// l in [2,4], integrity i in [2,6], plus the advisory cotough column.
std::vector<PropertySpec> certification_property_grid();

// All rows of one table for n in [n_lo, n_hi] (n_hi <= 12; exhaustive
// certification fills in up to order 7).
std::vector<TableRow> generate_tables(TableKind which, int n_lo, int n_hi,
                                      int workers = 0);

std::string table_csv_header();
std::string table_csv_row(const TableRow& row);
std::string table_row_json(const TableRow& row);

}  // namespace vulnkit

#endif
