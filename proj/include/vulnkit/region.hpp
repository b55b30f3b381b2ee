/*
 * Forbidden regions: the integer point sets a removal profile must avoid for
 * a property to hold.  A linear-condition property forbids the points under
 * its boundary line; the largest-order properties get the analogous failure
 * point sets on the largest-order profile.
 */

#ifndef VULNKIT_REGION_HPP
#define VULNKIT_REGION_HPP

#include <utility>
#include <vector>

#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

struct ForbiddenRegion {
  int n = 0;      // host order
  int l = 2;      // lower gain bound
  Rational t;     // boundary slope:      f(x) = t*x + k
  Rational k;     // boundary intercept
  int x_max = 0;  // upper gain bound, n by default

  // Points on the boundary line itself satisfy the property, so membership
  // stops at ceil(f(x)) - 1; the profile bound y <= n - x caps the top.
  bool contains(int x, int y) const;

  // Member points in ascending (x, y) order.
  std::vector<std::pair<int, int>> points() const;
};

// The region a linear-condition property forbids; throws for the
// largest-order kinds.
ForbiddenRegion region_for(const PropertySpec& p, int n);

// True iff every point forbidden by q is forbidden by p — then any graph
// with property p also has property q.
bool region_implies(const PropertySpec& p, const PropertySpec& q, int n);

// The failure point sets of the largest-order properties: points (x, y)
// such that a largest-order profile through (x, y) witnesses the property's
// defining inequality failing.  For the co-toughness kind the set ignores
// the separate cutset requirement, so results based on it are advisory.
std::vector<std::pair<int, int>> failure_points(const PropertySpec& p, int n);

}  // namespace vulnkit

#endif
