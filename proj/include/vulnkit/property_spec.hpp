/*
 * Vulnerability properties: parsed parameter bundles plus the predicate that
 * decides whether a graph has the property.  The first five kinds are linear
 * conditions on the component-count removal profile; the last three are
 * bound conditions on largest-order parameters.
 */

#ifndef VULNKIT_PROPERTY_SPEC_HPP
#define VULNKIT_PROPERTY_SPEC_HPP

#include <string>

#include "vulnkit/graph.hpp"
#include "vulnkit/rational.hpp"

namespace vulnkit {

enum class PropertyKind {
  kConnectivity,  // conn:k=K        kappa >= k
  kToughness,     // tough:t=P/Q     tau >= t
  kUnscattered,   // unscat:s=S      sc <= s
  kLconn,         // lconn:k=K,l=L   kappa_ell >= k
  kGeneralTkl,    // tkl:t=,k=,l=    psi(x) >= t*x + k on x in [max(l,1), alpha]
  kIntegrity,     // integ:i=I       integrity >= i
  kCoc,           // coc:k=K,l=L     kappa^c_ell >= k
  kCoTough,       // cotough:t=P/Q   co_toughness >= t
};

struct PropertySpec {
  PropertyKind kind = PropertyKind::kConnectivity;
  Rational t;  // slope (toughness, general, cotough)
  Rational k;  // connectivity bound / intercept
  int l = 2;   // lower gain bound (lconn, general, coc)
  int s = 0;   // scattering bound
  int i = 0;   // integrity bound

  // Whether the property is a linear condition on the component-count
  // profile (and so has a drawn forbidden region).
  bool omega_family() const;

  // Canonical spelling, identical to what parse_property accepts.
  std::string str() const;

  friend bool operator==(const PropertySpec&, const PropertySpec&) = default;
};

// Grammar: conn:k=K | tough:t=P/Q | unscat:s=S | lconn:k=K,l=L |
// tkl:t=P/Q,k=P/Q,l=L | integ:i=I | coc:k=K,l=L | cotough:t=P/Q.
PropertySpec parse_property(const std::string& text);

// The slope/intercept/lower-bound triple of the equivalent linear condition;
// throws for the largest-order kinds.
void linear_form(const PropertySpec& p, Rational& t, Rational& k, int& l);

// Whether the graph has the property, sparse-case extensions included.
bool holds(const PropertySpec& p, const Graph& g);

}  // namespace vulnkit

#endif
