#include "vulnkit/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace vulnkit {

bool ForbiddenRegion::contains(int x, int y) const {
  if (x < std::max(l, 1) || x > x_max) return false;
  if (y < 0 || y > n - x) return false;
  const Rational f = t * Rational(x) + k;
  return Rational(y) <= Rational(f.ceil() - 1);
}

std::vector<std::pair<int, int>> ForbiddenRegion::points() const {
  std::vector<std::pair<int, int>> out;
  for (int x = std::max(l, 1); x <= std::min(x_max, n); ++x) {
    const Rational f = t * Rational(x) + k;
    const int top = static_cast<int>(
        std::min<std::int64_t>(f.ceil() - 1, static_cast<std::int64_t>(n - x)));
    for (int y = 0; y <= top; ++y) out.push_back({x, y});
  }
  return out;
}

ForbiddenRegion region_for(const PropertySpec& p, int n) {
  ForbiddenRegion r;
  r.n = n;
  r.x_max = n;
  linear_form(p, r.t, r.k, r.l);
  return r;
}

bool region_implies(const PropertySpec& p, const PropertySpec& q, int n) {
  const ForbiddenRegion rp = region_for(p, n);
  const ForbiddenRegion rq = region_for(q, n);
  for (const auto& [x, y] : rq.points())
    if (!rp.contains(x, y)) return false;
  return true;
}

std::vector<std::pair<int, int>> failure_points(const PropertySpec& p, int n) {
  std::vector<std::pair<int, int>> out;
  switch (p.kind) {
    case PropertyKind::kIntegrity:
      // integrity < i iff some profile point has x + y <= i - 1.
      for (int x = 1; x <= n; ++x) {
        const int top = std::min(p.i - 1 - x, n - x);
        for (int y = 0; y <= top; ++y) out.push_back({x, y});
      }
      return out;
    case PropertyKind::kCoc: {
      // kappa^c_l < k iff some x <= l - 1 is reached at cost y <= k - 1.
      const int kc = static_cast<int>(p.k.ceil());
      for (int x = 1; x <= std::min(p.l - 1, n); ++x) {
        const int top = std::min(kc - 1, n - x);
        for (int y = 0; y <= top; ++y) out.push_back({x, y});
      }
      return out;
    }
    case PropertyKind::kCoTough:
      // co-toughness < t iff some cutset leaves largest order x at cost
      // y < t(n - x); the cutset side condition is not visible here.
      for (int x = 1; x <= n - 1; ++x) {
        const Rational bound = p.t * Rational(n - x);
        const int top = static_cast<int>(std::min<std::int64_t>(
            bound.ceil() - 1, static_cast<std::int64_t>(n - x)));
        for (int y = 0; y <= top; ++y) out.push_back({x, y});
      }
      return out;
    default:
      throw std::invalid_argument("property '" + p.str() +
                                  "' uses a drawn region, not failure points");
  }
}

}  // namespace vulnkit
