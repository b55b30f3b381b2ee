/*
 * Density thresholds: the extremal value of a density parameter over the
 * graphs of a given order that lack a property.  Three routes: optimizing a
 * density function over the property's forbidden points, a closed-form
 * expression for the minimum-degree threshold of the linear conditions, and
 * a literal sweep of every labeled graph.
 */

#ifndef VULNKIT_THRESHOLD_HPP
#define VULNKIT_THRESHOLD_HPP

#include <string>
#include <vector>

#include "vulnkit/mu.hpp"
#include "vulnkit/phi.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

enum class ThresholdMethod { kRegion, kTheorem, kBrute };
std::string method_name(ThresholdMethod m);

// Largest order whose full labeled-graph space (2^C(n,2) graphs) is swept.
inline constexpr int kBruteOrderCap = 7;

struct ThresholdResult {
  std::string mu;
  std::string property;
  int n = 0;
  ThresholdMethod method = ThresholdMethod::kRegion;
  bool has_value = false;  // false: every graph of this order has the property
  Rational value;
  std::string witness_graph6;  // an extremal graph lacking the property
  bool has_point = false;      // region method: the optimizing profile point
  int x = 0;
  int y = 0;

  std::string value_str() const;  // "none" when has_value is false
  std::string to_json() const;
};

// Optimizes the density function over the property's forbidden points
// (linear kinds) or failure points (largest-order kinds).  The exhaustive
// oracle is the default source; use_closed switches to the closed forms.
// Ties break to the smallest (x, y), then the smallest composition.
ThresholdResult threshold_by_region(const MuParam& mu, const PropertySpec& p,
                                    int n, bool use_closed = false);
ThresholdResult threshold_by_region(const MuParam& mu, const PropertySpec& p,
                                    bool use_closed, PhiCache& cache);

// The closed three-term minimum-degree threshold for the linear condition
// psi(x) >= t*x + k on [l, alpha]; the single first term when t <= 0.
// Rejects t = -1 (the pivot gamma = (n-k)/(t+1) divides by zero) and guards
// the middle term when floor(gamma) = 0.
Rational delta_threshold_theorem(const Rational& t, const Rational& k, int l,
                                 int n);

struct BruteQuery {
  MuParam mu;
  PropertySpec p;
};

// Sweeps every labeled graph of order n (n <= 7) once, answering all queries
// from the same pass.  Witnesses are the graphs with the smallest edge
// bitmask among the extremal ones, independent of worker count.
std::vector<ThresholdResult> threshold_brute_batch(
    const std::vector<BruteQuery>& queries, int n, int workers = 0);
ThresholdResult threshold_brute(const MuParam& mu, const PropertySpec& p, int n,
                                int workers = 0);

// Worker-count default: the VULNKIT_THREADS environment variable, else the
// hardware concurrency, clamped to [1, 8].
int default_worker_count();

}  // namespace vulnkit

#endif
