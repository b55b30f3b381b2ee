/*
 * Density functions: for a gain variant and a density parameter mu, the
 * optimum of mu over hub-plus-cliques graphs whose removal profile passes
 * through the point (x, y).  Each value is computed from an exhaustive
 * composition sweep (the oracle) and from the reference closed form, and
 * compare_phi records the agreement verdict per grid point.
 */

#ifndef VULNKIT_PHI_HPP
#define VULNKIT_PHI_HPP

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "vulnkit/composition.hpp"
#include "vulnkit/mu.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

struct PhiValue {
  bool defined = false;
  // When undefined: "infeasible" (no composition qualifies),
  // "division_by_zero" (closed form denominator vanishes), or
  // "paper_omits" (the reference gives no formula for this cell).
  std::string reason;
  Rational value;
  // Oracle results carry the optimizing composition; closed forms leave it
  // empty.
  Composition witness;

  // Value as "p" / "p/q", or "undefined:<reason>".
  std::string str() const;
};

// The symbols used by the closed forms.  r_prime is exposed for completeness
// and reported as 0 when its divisor ceil(lambda) is not positive.
struct PhiSymbols {
  Rational gamma;   // (n - y) / x
  Rational lambda;  // (n - y - x) / x
  int r = 0;        // remainder of (n - y) / x
  int r_prime = 0;  // remainder of (n - y - x) / ceil(lambda)
};
PhiSymbols phi_symbols(int n, int x, int y);

// Exhaustive: optimizes mu over every composition with x parts (component
// count variant) or largest part x (largest-order variant) whose built graph
// really has removal cost y at gain x.  Ties break to the lexicographically
// smallest composition.
PhiValue phi_oracle(const MuParam& mu, GainVariant variant, int n, int x, int y);

// The closed-form table cell, evaluated as written.
PhiValue phi_closed(const MuParam& mu, GainVariant variant, int n, int x, int y);

// Memoizes the validated composition lists per (variant, x, y) and the
// direct parameter values per composition, so that grid sweeps over many
// density parameters share the expensive work.
class PhiCache {
 public:
  explicit PhiCache(int n);

  int n() const { return n_; }
  PhiValue oracle(const MuParam& mu, GainVariant variant, int x, int y);

 private:
  const std::vector<Composition>& valid_compositions(GainVariant variant, int x, int y);

  int n_;
  std::map<std::tuple<int, int, int>, std::vector<Composition>> valid_;
  std::unordered_map<std::string, Rational> mu_values_;
};

enum class PhiVerdict {
  kMatch,
  kMismatchExpected,
  kMismatchUnexpected,
  kClosedUndefinedExpected,
  kClosedUndefinedUnexpected,
  kInfeasibleSkipped,
  kPaperOmits,
};
std::string verdict_name(PhiVerdict v);

// True when a disagreement at this grid point is a documented defect of the
// closed form (see the ledger notes) rather than a new finding.
bool expected_phi_discrepancy(const MuParam& mu, GainVariant variant, int n, int x, int y);

struct PhiComparison {
  MuParam mu;
  GainVariant variant = GainVariant::kOmega;
  int n = 0;
  int x = 0;
  int y = 0;
  PhiValue closed;
  PhiValue oracle;
  PhiVerdict verdict = PhiVerdict::kMatch;
};

// Full grid x in [1, n], y in [0, n - x], row-major in (x, y).
std::vector<PhiComparison> compare_phi(const MuParam& mu, GainVariant variant, int n);
std::vector<PhiComparison> compare_phi(const MuParam& mu, GainVariant variant,
                                       PhiCache& cache);

// Ledger row: "mu,variant,n,x,y,paper_value,oracle_value,verdict".
std::string phi_comparison_csv_header();
std::string phi_comparison_csv_row(const PhiComparison& row);

}  // namespace vulnkit

#endif
