#include "vulnkit/threshold.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "vulnkit/graph.hpp"
#include "vulnkit/graph6.hpp"
#include "vulnkit/region.hpp"
#include "vulnkit/subsets.hpp"

namespace vulnkit {

std::string method_name(ThresholdMethod m) {
  switch (m) {
    case ThresholdMethod::kRegion:
      return "region";
    case ThresholdMethod::kTheorem:
      return "theorem";
    case ThresholdMethod::kBrute:
      return "brute";
  }
  throw std::logic_error("unknown threshold method");
}

std::string ThresholdResult::value_str() const {
  return has_value ? value.str() : "none";
}

std::string ThresholdResult::to_json() const {
  std::ostringstream out;
  out << "{\"mu\":\"" << mu << "\",\"property\":\"" << property
      << "\",\"n\":" << n << ",\"method\":\"" << method_name(method) << "\"";
  out << ",\"value\":";
  if (has_value)
    out << '"' << value.str() << '"';
  else
    out << "null";
  if (!witness_graph6.empty()) out << ",\"witness\":\"" << witness_graph6 << '"';
  if (has_point) out << ",\"point\":[" << x << ',' << y << ']';
  out << '}';
  return out.str();
}

ThresholdResult threshold_by_region(const MuParam& mu, const PropertySpec& p,
                                    bool use_closed, PhiCache& cache) {
  const int n = cache.n();
  ThresholdResult res;
  res.mu = mu.name();
  res.property = p.str();
  res.n = n;
  res.method = ThresholdMethod::kRegion;
  const bool linear = p.omega_family();
  const GainVariant variant =
      linear ? GainVariant::kOmega : GainVariant::kBigOmega;
  const std::vector<std::pair<int, int>> pts =
      linear ? region_for(p, n).points() : failure_points(p, n);
  for (const auto& [px, py] : pts) {
    const PhiValue v = use_closed ? phi_closed(mu, variant, n, px, py)
                                  : cache.oracle(mu, variant, px, py);
    if (!v.defined) continue;
    const bool better =
        !res.has_value ||
        (mu.increasing() ? res.value < v.value : v.value < res.value);
    if (!better) continue;
    res.has_value = true;
    res.value = v.value;
    res.has_point = true;
    res.x = px;
    res.y = py;
    res.witness_graph6 =
        v.witness.parts.empty() ? std::string() : to_graph6(build_k(v.witness));
  }
  return res;
}

ThresholdResult threshold_by_region(const MuParam& mu, const PropertySpec& p,
                                    int n, bool use_closed) {
  PhiCache cache(n);
  return threshold_by_region(mu, p, use_closed, cache);
}

Rational delta_threshold_theorem(const Rational& t, const Rational& k, int l,
                                 int n) {
  if (l < 2) throw std::invalid_argument("gain lower bound l must be at least 2");
  if (n < l + 1)
    throw std::invalid_argument("order n must be at least l + 1");
  if (t == Rational(-1))
    throw std::invalid_argument(
        "slope t = -1 makes the pivot gamma = (n - k) / (t + 1) undefined");

  const std::int64_t inner = (t * Rational(l) + k - Rational(1)).ceil();
  const Rational term1 =
      Rational(Rational(n + static_cast<std::int64_t>(l - 1) * inner, l).floor() - 1);
  if (t <= Rational(0)) return term1;

  Rational best = term1;
  const Rational gamma = (Rational(n) - k) / (t + Rational(1));
  const std::int64_t fg = gamma.floor();
  if (fg >= 1) {
    const std::int64_t tc = (t * Rational(fg)).ceil();
    const Rational term2 =
        Rational(((Rational(n - tc) - k) / Rational(fg)).floor() + tc - 1) - k;
    best = std::max(best, term2);
  }
  const std::int64_t cg = gamma.ceil();
  if (cg >= 1) {
    const Rational term3 = Rational(Rational(cg + 1, cg).floor() + n - cg - 2);
    best = std::max(best, term3);
  }
  return best;
}

/*
 * Exhaustive thresholds.  One pass over all 2^C(n,2) labeled graphs answers
 * every query: per graph, a single 2^n subset sweep yields the removal
 * profile, each distinct property is tested once against it, and each
 * distinct density parameter is evaluated once if some tested property
 * failed.
 */

namespace {

// Exact fraction without reduction; denominators stay positive.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

bool frac_less(const Frac& a, const Frac& b) {
  return a.num * b.den < b.num * a.den;
}

// Removal profile of one labeled graph.
struct SweepStats {
  int psi_count[kBruteOrderCap + 1];  // least |S| per exact component count
  int psi_big[kBruteOrderCap + 1];    // least |S| per exact largest order
  int max_count = 0;                  // independence number
  bool has_cutset = false;
  Frac tauc;  // min |S| / (n - largest order) over disconnecting sets
};

void adjacency_from_mask(std::uint64_t mask, int n, std::uint32_t* adj) {
  std::fill(adj, adj + n, 0u);
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1) {
        adj[u] |= vertex_bit(v);
        adj[v] |= vertex_bit(u);
      }
}

void compute_stats(const std::uint32_t* adj, int n, SweepStats& st) {
  std::fill(st.psi_count, st.psi_count + n + 1, -1);
  std::fill(st.psi_big, st.psi_big + n + 1, -1);
  st.max_count = 0;
  st.has_cutset = false;
  st.tauc = Frac{};
  const VertexSet full = all_vertices(n);
  for (VertexSet s = 0;; ++s) {
    const ComponentSummary cs = component_summary(adj, full & ~s);
    const int size = std::popcount(s);
    if (st.psi_count[cs.count] < 0 || size < st.psi_count[cs.count])
      st.psi_count[cs.count] = size;
    if (st.psi_big[cs.largest] < 0 || size < st.psi_big[cs.largest])
      st.psi_big[cs.largest] = size;
    if (cs.count > st.max_count) st.max_count = cs.count;
    if (cs.count >= 2) {
      const Frac ratio{size, n - cs.largest};
      if (!st.has_cutset || frac_less(ratio, st.tauc)) {
        st.has_cutset = true;
        st.tauc = ratio;
      }
    }
    if (s == full) break;
  }
}

int stats_kappa(const SweepStats& st, int n) {
  int best = -1;
  for (int x = 2; x <= n; ++x)
    if (st.psi_count[x] >= 0 && (best < 0 || st.psi_count[x] < best))
      best = st.psi_count[x];
  return best >= 0 ? best : n - 1;
}

Frac stats_tau(const SweepStats& st, int n) {
  Frac best{n - 1, 1};
  bool found = false;
  for (int x = 2; x <= n; ++x) {
    if (st.psi_count[x] < 0) continue;
    const Frac f{st.psi_count[x], x};
    if (!found || frac_less(f, best)) {
      best = f;
      found = true;
    }
  }
  return best;
}

int stats_sc(const SweepStats& st, int n) {
  int best = -n;
  bool found = false;
  for (int x = 2; x <= n; ++x) {
    if (st.psi_count[x] < 0) continue;
    const int v = x - st.psi_count[x];
    if (!found || v > best) {
      best = v;
      found = true;
    }
  }
  return best;
}

int stats_kappa_ell(const SweepStats& st, int n, int ell) {
  int best = -1;
  for (int x = std::max(ell, 1); x <= n; ++x)
    if (st.psi_count[x] >= 0 && (best < 0 || st.psi_count[x] < best))
      best = st.psi_count[x];
  return best >= 0 ? best : n - st.max_count;
}

int stats_integrity(const SweepStats& st, int n) {
  int best = n + 1;
  for (int big = 0; big <= n; ++big)
    if (st.psi_big[big] >= 0) best = std::min(best, big + st.psi_big[big]);
  return best;  // removing everything is always available, so best <= n
}

int stats_coc(const SweepStats& st, int n, int ell) {
  int best = -1;
  const int top = std::min(ell - 1, n);
  for (int big = 0; big <= top; ++big)
    if (st.psi_big[big] >= 0 && (best < 0 || st.psi_big[big] < best))
      best = st.psi_big[big];
  return best;  // the largest order 0 is always reachable
}

Frac stats_cotough(const SweepStats& st) {
  return st.has_cutset ? st.tauc : Frac{1, 1};
}

int stats_ncap(const std::uint32_t* adj, int n, int j) {
  int best = n;
  for_each_subset_of_size(n, j, [&](VertexSet w) {
    std::uint32_t inter = all_vertices(n);
    for (int v = 0; v < n; ++v)
      if ((w >> v) & 1) inter &= adj[v];
    best = std::min(best, std::popcount(inter));
  });
  return best;
}

Frac eval_mu(const MuParam& mu, const SweepStats& st, const std::uint32_t* adj,
             std::uint64_t mask, int n) {
  switch (mu.kind) {
    case MuKind::kDelta: {
      int d = n;
      for (int v = 0; v < n; ++v) d = std::min(d, std::popcount(adj[v]));
      return Frac{d, 1};
    }
    case MuKind::kEdges:
      return Frac{std::popcount(mask), 1};
    case MuKind::kNcap:
      return Frac{stats_ncap(adj, n, mu.arg), 1};
    case MuKind::kKappa:
      return Frac{stats_kappa(st, n), 1};
    case MuKind::kLconn:
      return Frac{stats_kappa_ell(st, n, mu.arg), 1};
    case MuKind::kTau:
      return stats_tau(st, n);
    case MuKind::kSc:
      return Frac{stats_sc(st, n), 1};
    case MuKind::kCoc:
      return Frac{stats_coc(st, n, mu.arg), 1};
    case MuKind::kIntegrity:
      return Frac{stats_integrity(st, n), 1};
    case MuKind::kCoTau:
      return stats_cotough(st);
  }
  throw std::logic_error("unknown density parameter");
}

// One distinct property, with the line thresholds t*x + k pre-expanded to a
// common-denominator fraction per x so the inner loop is integer compares.
struct PropCheck {
  PropertySpec p;
  bool linear = false;
  int l = 1;  // effective lower gain bound, max(l, 1)
  std::int64_t thr_num[kBruteOrderCap + 1] = {};
  std::int64_t thr_den = 1;
};

PropCheck make_prop_check(const PropertySpec& p, int n) {
  PropCheck pc;
  pc.p = p;
  if (!p.omega_family()) return pc;
  pc.linear = true;
  Rational t, k;
  int l = 2;
  linear_form(p, t, k, l);
  pc.l = std::max(l, 1);
  pc.thr_den = t.den * k.den;
  for (int x = 0; x <= n; ++x)
    pc.thr_num[x] = t.num * k.den * x + k.num * t.den;
  return pc;
}

bool prop_fails(const PropCheck& pc, const SweepStats& st, int n) {
  if (pc.linear) {
    for (int x = pc.l; x <= n; ++x) {
      if (st.psi_count[x] < 0) continue;
      if (static_cast<std::int64_t>(st.psi_count[x]) * pc.thr_den <
          pc.thr_num[x])
        return true;
    }
    return false;
  }
  switch (pc.p.kind) {
    case PropertyKind::kIntegrity:
      return stats_integrity(st, n) < pc.p.i;
    case PropertyKind::kCoc:
      return static_cast<std::int64_t>(stats_coc(st, n, pc.p.l)) * pc.p.k.den <
             pc.p.k.num;
    case PropertyKind::kCoTough: {
      const Frac tc = stats_cotough(st);
      return tc.num * pc.p.t.den < pc.p.t.num * tc.den;
    }
    default:
      throw std::logic_error("property kind without a profile test");
  }
}

struct SweepPlan {
  std::vector<PropCheck> props;               // distinct properties
  std::vector<MuParam> mus;                   // distinct density parameters
  std::vector<std::pair<int, int>> query_to;  // query -> (prop, mu) indices
};

struct BestCell {
  bool found = false;
  Frac value;
  std::uint64_t mask = 0;
};

void sweep_range(const SweepPlan& plan, int n, std::uint64_t lo,
                 std::uint64_t hi, std::vector<BestCell>& best) {
  best.assign(plan.query_to.size(), BestCell{});
  std::uint32_t adj[kBruteOrderCap];
  SweepStats st;
  std::vector<char> fails(plan.props.size(), 0);
  std::vector<char> mu_done(plan.mus.size(), 0);
  std::vector<Frac> mu_val(plan.mus.size());
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    adjacency_from_mask(mask, n, adj);
    compute_stats(adj, n, st);
    bool any = false;
    for (std::size_t i = 0; i < plan.props.size(); ++i) {
      fails[i] = prop_fails(plan.props[i], st, n) ? 1 : 0;
      if (fails[i]) any = true;
    }
    if (!any) continue;
    std::fill(mu_done.begin(), mu_done.end(), 0);
    for (std::size_t q = 0; q < plan.query_to.size(); ++q) {
      const auto& [pi, mi] = plan.query_to[q];
      if (!fails[pi]) continue;
      if (!mu_done[mi]) {
        mu_val[mi] = eval_mu(plan.mus[mi], st, adj, mask, n);
        mu_done[mi] = 1;
      }
      BestCell& b = best[q];
      const bool better =
          !b.found || (plan.mus[mi].increasing()
                           ? frac_less(b.value, mu_val[mi])
                           : frac_less(mu_val[mi], b.value));
      if (better) {
        b.found = true;
        b.value = mu_val[mi];
        b.mask = mask;
      }
    }
  }
}

}  // namespace

std::vector<ThresholdResult> threshold_brute_batch(
    const std::vector<BruteQuery>& queries, int n, int workers) {
  if (n < 1 || n > kBruteOrderCap)
    throw std::invalid_argument(
        "exhaustive thresholds cover orders 1 through " +
        std::to_string(kBruteOrderCap));
  SweepPlan plan;
  for (const BruteQuery& q : queries) {
    if (q.mu.kind == MuKind::kNcap && (q.mu.arg < 1 || q.mu.arg > n))
      throw std::invalid_argument(
          "common neighborhood order j must lie in [1, n]");
    int pi = -1;
    for (std::size_t i = 0; i < plan.props.size(); ++i)
      if (plan.props[i].p == q.p) {
        pi = static_cast<int>(i);
        break;
      }
    if (pi < 0) {
      pi = static_cast<int>(plan.props.size());
      plan.props.push_back(make_prop_check(q.p, n));
    }
    int mi = -1;
    for (std::size_t i = 0; i < plan.mus.size(); ++i)
      if (plan.mus[i] == q.mu) {
        mi = static_cast<int>(i);
        break;
      }
    if (mi < 0) {
      mi = static_cast<int>(plan.mus.size());
      plan.mus.push_back(q.mu);
    }
    plan.query_to.emplace_back(pi, mi);
  }

  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  int w = workers > 0 ? workers : default_worker_count();
  w = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(w), total));
  std::vector<std::vector<BestCell>> partial(w);
  if (w == 1) {
    sweep_range(plan, n, 0, total, partial[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (int i = 0; i < w; ++i) {
      const std::uint64_t lo = total / w * i + std::min<std::uint64_t>(i, total % w);
      const std::uint64_t hi =
          total / w * (i + 1) + std::min<std::uint64_t>(i + 1, total % w);
      threads.emplace_back(
          [&plan, n, lo, hi, &slot = partial[i]] { sweep_range(plan, n, lo, hi, slot); });
    }
    for (std::thread& t : threads) t.join();
  }

  // Merge in ascending mask order; strict improvement keeps the earliest
  // (smallest-mask) witness, so results do not depend on the worker count.
  std::vector<BestCell> merged(queries.size());
  for (int i = 0; i < w; ++i)
    for (std::size_t q = 0; q < queries.size(); ++q) {
      const BestCell& c = partial[i][q];
      if (!c.found) continue;
      BestCell& m = merged[q];
      const bool better =
          !m.found || (plan.mus[plan.query_to[q].second].increasing()
                           ? frac_less(m.value, c.value)
                           : frac_less(c.value, m.value));
      if (better) m = c;
    }

  std::vector<ThresholdResult> out(queries.size());
  for (std::size_t q = 0; q < queries.size(); ++q) {
    ThresholdResult& r = out[q];
    r.mu = queries[q].mu.name();
    r.property = queries[q].p.str();
    r.n = n;
    r.method = ThresholdMethod::kBrute;
    if (merged[q].found) {
      r.has_value = true;
      r.value = Rational(merged[q].value.num, merged[q].value.den);
      r.witness_graph6 = to_graph6(graph_from_edge_mask(merged[q].mask, n));
    }
  }
  return out;
}

ThresholdResult threshold_brute(const MuParam& mu, const PropertySpec& p, int n,
                                int workers) {
  return threshold_brute_batch({BruteQuery{mu, p}}, n, workers)[0];
}

int default_worker_count() {
  if (const char* env = std::getenv("VULNKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      return static_cast<int>(std::min<long>(v, 64));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace vulnkit
