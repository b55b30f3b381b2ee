#include "vulnkit/vuln_params.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "vulnkit/graph6.hpp"

namespace vulnkit {

namespace {

void require_order(const Graph& g, int minimum) {
  if (g.order() < minimum)
    throw std::invalid_argument("graph order must be at least " + std::to_string(minimum));
  if (g.order() > kSweepOrderCap)
    throw std::invalid_argument("order above the subset sweep cap");
}

// Runs fn(size, summary-of-G-minus-S) over every vertex subset S.
template <typename Fn>
void sweep_subsets(const Graph& g, Fn&& fn) {
  const VertexSet all = g.vertices();
  const std::uint32_t* adj = g.adj_data();
  for (VertexSet s = 0;; ++s) {
    fn(std::popcount(s), component_summary(adj, all & ~s));
    if (s == all) break;
  }
}

}  // namespace

int kappa(const Graph& g) {
  require_order(g, 1);
  int best = -1;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.count >= 2 && (best < 0 || size < best)) best = size;
  });
  return best >= 0 ? best : g.order() - 1;
}

Rational toughness(const Graph& g) {
  require_order(g, 1);
  bool found = false;
  Rational best;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.count < 2) return;
    const Rational value(size, cs.count);
    if (!found || value < best) {
      best = value;
      found = true;
    }
  });
  return found ? best : Rational(g.order() - 1);
}

int scattering(const Graph& g) {
  require_order(g, 1);
  bool found = false;
  int best = 0;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.count < 2) return;
    best = found ? std::max(best, cs.count - size) : cs.count - size;
    found = true;
  });
  return found ? best : -g.order();
}

int kappa_ell(const Graph& g, int l) {
  require_order(g, 1);
  if (l < 2) throw std::invalid_argument("kappa_ell needs l >= 2");
  int best = -1;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.count >= l && (best < 0 || size < best)) best = size;
  });
  return best >= 0 ? best : g.order() - alpha(g);
}

int integrity(const Graph& g) {
  require_order(g, 1);
  int best = g.order() + 1;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    best = std::min(best, size + cs.largest);
  });
  return best;
}

int coc(const Graph& g, int l) {
  require_order(g, 1);
  if (l < 1) throw std::invalid_argument("coc needs l >= 1");
  int best = g.order();
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.largest < l) best = std::min(best, size);
  });
  return best;
}

Rational co_toughness(const Graph& g) {
  require_order(g, 1);
  const int n = g.order();
  bool found = false;
  Rational best;
  sweep_subsets(g, [&](int size, const ComponentSummary& cs) {
    if (cs.count < 2) return;
    const Rational value(size, n - cs.largest);
    if (!found || value < best) {
      best = value;
      found = true;
    }
  });
  return found ? best : Rational(1);
}

int kappa_from_psi(const PropertyFunction& pf) {
  if (pf.domain_max() < 2) return pf.n - 1;
  int best = pf.n;
  for (int x = 2; x <= pf.domain_max(); ++x)
    if (pf.defined_at(x)) best = std::min(best, pf.cost[x]);
  return best;
}

Rational toughness_from_psi(const PropertyFunction& pf) {
  if (pf.domain_max() < 2) return Rational(pf.n - 1);
  Rational best(pf.n);
  for (int x = 2; x <= pf.domain_max(); ++x)
    if (pf.defined_at(x)) best = std::min(best, Rational(pf.cost[x], x));
  return best;
}

int scattering_from_psi(const PropertyFunction& pf) {
  if (pf.domain_max() < 2) return -pf.n;
  int best = -pf.n;
  for (int x = 2; x <= pf.domain_max(); ++x)
    if (pf.defined_at(x)) best = std::max(best, x - pf.cost[x]);
  return best;
}

int kappa_ell_from_psi(const PropertyFunction& pf, int l) {
  if (l < 2) throw std::invalid_argument("kappa_ell needs l >= 2");
  if (pf.domain_max() < l) return pf.n - pf.domain_max();  // domain ends at alpha
  int best = pf.n;
  for (int x = l; x <= pf.domain_max(); ++x)
    if (pf.defined_at(x)) best = std::min(best, pf.cost[x]);
  return best;
}

int integrity_from_psi(const PropertyFunction& pf) {
  int best = pf.n + 1;
  for (int x = 0; x <= pf.domain_max(); ++x)
    if (pf.defined_at(x)) best = std::min(best, x + pf.cost[x]);
  return best;
}

int coc_from_psi(const PropertyFunction& pf, int l) {
  if (l < 1) throw std::invalid_argument("coc needs l >= 1");
  int best = pf.n;
  for (int x = 0; x <= std::min(l - 1, pf.domain_max()); ++x)
    if (pf.defined_at(x)) best = std::min(best, pf.cost[x]);
  return best;
}

namespace {

template <typename T>
void cross_check(const std::string& name, const T& direct, const T& extracted) {
  if (!(direct == extracted))
    throw std::logic_error("internal cross-check failed for " + name +
                           ": the definition sweep and the property-function extraction disagree");
}

}  // namespace

ParamReport param_report(const Graph& g) {
  require_order(g, 1);
  const PropertyFunction pf_omega = psi(g, GainVariant::kOmega);
  const PropertyFunction pf_big = psi(g, GainVariant::kBigOmega);

  ParamReport r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.omega = omega(g);
  r.big_omega = big_omega(g);
  r.alpha = alpha(g);
  r.min_degree = g.min_degree();
  r.edge_count = g.edge_count();

  r.kappa = kappa(g);
  cross_check("kappa", r.kappa, kappa_from_psi(pf_omega));
  if (r.alpha < 2) r.extended.push_back("kappa");

  r.toughness = toughness(g);
  cross_check("toughness", r.toughness, toughness_from_psi(pf_omega));
  if (r.alpha < 2) r.extended.push_back("toughness");

  r.scattering = scattering(g);
  cross_check("scattering", r.scattering, scattering_from_psi(pf_omega));
  if (r.alpha < 2) r.extended.push_back("scattering");

  for (int l = 2; l <= 5; ++l) {
    r.kappa_ell[l] = kappa_ell(g, l);
    cross_check("kappa_ell:" + std::to_string(l), r.kappa_ell[l], kappa_ell_from_psi(pf_omega, l));
    if (r.alpha < l) r.extended.push_back("kappa_ell:" + std::to_string(l));
  }

  r.integrity = integrity(g);
  cross_check("integrity", r.integrity, integrity_from_psi(pf_big));

  for (int l = 1; l <= 4; ++l) {
    r.coc[l] = coc(g, l);
    cross_check("coc:" + std::to_string(l), r.coc[l], coc_from_psi(pf_big, l));
  }

  // Only the definition sweep covers co-toughness: its cutset constraint is
  // about the component count, which the largest-component function cannot
  // see, so no extraction is attempted.
  r.co_toughness = co_toughness(g);
  if (r.alpha < 2) r.extended.push_back("co_toughness");

  return r;
}

std::string ParamReport::to_json() const {
  std::string out = "{";
  out += "\"graph6\":\"" + graph6 + "\"";
  out += ",\"n\":" + std::to_string(n);
  out += ",\"omega\":" + std::to_string(omega);
  out += ",\"big_omega\":" + std::to_string(big_omega);
  out += ",\"alpha\":" + std::to_string(alpha);
  out += ",\"min_degree\":" + std::to_string(min_degree);
  out += ",\"edge_count\":" + std::to_string(edge_count);
  out += ",\"kappa\":" + std::to_string(kappa);
  out += ",\"toughness\":\"" + toughness.str() + "\"";
  out += ",\"scattering\":" + std::to_string(scattering);
  out += ",\"kappa_ell\":{";
  bool first = true;
  for (const auto& [l, v] : kappa_ell) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(l) + "\":" + std::to_string(v);
  }
  out += "},\"integrity\":" + std::to_string(integrity);
  out += ",\"coc\":{";
  first = true;
  for (const auto& [l, v] : coc) {
    if (!first) out += ",";
    first = false;
    out += "\"" + std::to_string(l) + "\":" + std::to_string(v);
  }
  out += "},\"co_toughness\":\"" + co_toughness.str() + "\"";
  out += ",\"extended\":[";
  first = true;
  for (const auto& name : extended) {
    if (!first) out += ",";
    first = false;
    out += "\"" + name + "\"";
  }
  out += "]}";
  return out;
}

std::string ParamReport::csv_header() {
  return "graph6,n,omega,big_omega,alpha,min_degree,edge_count,kappa,toughness,"
         "scattering,kappa_ell_2,kappa_ell_3,kappa_ell_4,kappa_ell_5,integrity,"
         "coc_1,coc_2,coc_3,coc_4,co_toughness,extended";
}

std::string ParamReport::to_csv_row() const {
  std::string out = graph6;
  out += "," + std::to_string(n);
  out += "," + std::to_string(omega);
  out += "," + std::to_string(big_omega);
  out += "," + std::to_string(alpha);
  out += "," + std::to_string(min_degree);
  out += "," + std::to_string(edge_count);
  out += "," + std::to_string(kappa);
  out += "," + toughness.str();
  out += "," + std::to_string(scattering);
  for (int l = 2; l <= 5; ++l) out += "," + std::to_string(kappa_ell.at(l));
  out += "," + std::to_string(integrity);
  for (int l = 1; l <= 4; ++l) out += "," + std::to_string(coc.at(l));
  out += "," + co_toughness.str();
  out += ",";
  bool first = true;
  for (const auto& name : extended) {
    if (!first) out += ";";
    first = false;
    out += name;
  }
  return out;
}

std::vector<std::pair<std::string, bool>> check_inequalities(const Graph& g) {
  require_order(g, 2);
  if (omega(g) != 1) throw std::invalid_argument("the inequalities assume a connected graph");

  const Rational n(g.order());
  const Rational kap(kappa(g));
  const Rational tau = toughness(g);
  const Rational sc(scattering(g));
  const Rational alf(alpha(g));
  const Rational one(1);

  const auto rational_max = [](const Rational& a, const Rational& b) { return a < b ? b : a; };

  // Item (1) bounds the cut-based toughness, so on graphs with no cutset at
  // all (the complete graphs, alpha = 1) it holds vacuously; the dense-graph
  // extension tau = n - 1 belongs to the other items, which stay tight on K_n.
  const bool has_cutset = alf >= Rational(2);

  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("kappa >= 2*tau",
                   !has_cutset || kap >= Rational(2) * tau);
  out.emplace_back("tau >= kappa/alpha", tau >= kap / alf);
  out.emplace_back("tau >= k/(n-k) at k=kappa", tau >= kap / (n - kap));
  out.emplace_back("alpha <= n - kappa", alf <= n - kap);
  out.emplace_back("alpha <= n/(tau+1)", alf <= n / (tau + one));
  out.emplace_back("sc <= alpha - kappa", sc <= alf - kap);
  out.emplace_back("sc <= max(1, n-2k) at k=kappa",
                   sc <= rational_max(one, n - Rational(2) * kap));
  out.emplace_back("sc <= max(1, n(1-tau)/(tau+1))",
                   sc <= rational_max(one, n * (one - tau) / (tau + one)));
  return out;
}

}  // namespace vulnkit
