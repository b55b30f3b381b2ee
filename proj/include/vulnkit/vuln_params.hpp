#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

// Vulnerability parameters, each computed straight from its definition by a
// vertex-subset sweep.  Dense graphs that admit no qualifying subset take the
// standard monotone extension values: kappa(K_n) = tau(K_n) = n - 1,
// sc(K_n) = -n, co_toughness(K_n) = 1, kappa_ell = n - alpha when alpha < l.
int kappa(const Graph& g);
Rational toughness(const Graph& g);
int scattering(const Graph& g);
int kappa_ell(const Graph& g, int l);  // l >= 2
int integrity(const Graph& g);
int coc(const Graph& g, int l);  // min removals forcing every component below order l; l >= 1
Rational co_toughness(const Graph& g);

// The same parameters extracted from precomputed property functions; the
// report below cross-checks the two routes and refuses to return mismatches.
int kappa_from_psi(const PropertyFunction& pf_omega);
Rational toughness_from_psi(const PropertyFunction& pf_omega);
int scattering_from_psi(const PropertyFunction& pf_omega);
int kappa_ell_from_psi(const PropertyFunction& pf_omega, int l);
int integrity_from_psi(const PropertyFunction& pf_big);
int coc_from_psi(const PropertyFunction& pf_big, int l);

struct ParamReport {
  std::string graph6;
  int n = 0;
  int omega = 0;
  int big_omega = 0;
  int alpha = 0;
  int min_degree = 0;  // -1 for the null graph
  int edge_count = 0;
  int kappa = 0;
  Rational toughness;
  int scattering = 0;
  std::map<int, int> kappa_ell;  // l in [2, 5]
  int integrity = 0;
  std::map<int, int> coc;  // l in [1, 4]
  Rational co_toughness;
  std::vector<std::string> extended;  // parameters that took a dense-graph extension value

  std::string to_json() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

// Computes every parameter twice (definition sweep and psi extraction) and
// throws std::logic_error on any disagreement.
ParamReport param_report(const Graph& g);

// The eight exact inequalities relating kappa, tau, sc, and alpha on a
// connected graph, evaluated at k = kappa(G).
std::vector<std::pair<std::string, bool>> check_inequalities(const Graph& g);

}  // namespace vulnkit
