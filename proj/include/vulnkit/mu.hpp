/*
 * Density parameters: the measures a network designer maximizes (or, for the
 * scattering number, minimizes) subject to a vulnerability property.  Each
 * parameter is computed two ways — directly on a graph, and by the closed
 * hub-plus-cliques formula row — and compare_mu records where the two agree.
 */

#ifndef VULNKIT_MU_HPP
#define VULNKIT_MU_HPP

#include <string>
#include <vector>

#include "vulnkit/composition.hpp"
#include "vulnkit/graph.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

enum class MuKind {
  kDelta,      // minimum degree
  kEdges,      // edge count
  kNcap,       // minimum common neighborhood over j-element vertex sets
  kKappa,      // connectivity
  kLconn,      // kappa_ell: cost of reaching ell components
  kTau,        // toughness
  kSc,         // scattering number
  kCoc,        // component-order connectivity at ell
  kIntegrity,  // integrity
  kCoTau,      // component-order toughness
};

struct MuParam {
  MuKind kind = MuKind::kDelta;
  int arg = 0;  // j for kNcap, ell for kLconn and kCoc; unused otherwise

  // Spellings used by flags and ledgers: "delta", "e", "ncap:J", "kappa",
  // "lconn:L", "tau", "sc", "coc:L", "integrity", "cotough".
  std::string name() const;

  // Whether larger values indicate a denser graph; sc alone is decreasing.
  bool increasing() const;

  friend bool operator==(const MuParam&, const MuParam&) = default;
};

MuParam parse_mu(const std::string& text);

// The parameter evaluated directly on a graph, sparse-case extensions
// included.
Rational mu_direct(const MuParam& mu, const Graph& g);

// The closed formula row for K(parts, y), evaluated as written — known
// defects included, so that compare_mu can document them.
Rational mu_formula(const MuParam& mu, const Composition& c);

struct MuComparison {
  Composition c;
  Rational formula;
  Rational direct;
  bool equal = false;
};

// Every composition of total order n (hub 0..n-1, parts of the remainder),
// in (y, parts) lexicographic order.
std::vector<MuComparison> compare_mu(const MuParam& mu, int n);

}  // namespace vulnkit

#endif
