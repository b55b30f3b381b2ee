/*
 * Python bindings.  The heavy objects stay in C++; functions accept graph6
 * strings and property/parameter specs in the same mini-grammar as the CLI
 * and return JSON payloads (decoded by the package wrapper) or plain values.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "vulnkit/graph.hpp"
#include "vulnkit/graph6.hpp"
#include "vulnkit/mu.hpp"
#include "vulnkit/phi.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"
#include "vulnkit/region.hpp"
#include "vulnkit/threshold.hpp"
#include "vulnkit/vuln_params.hpp"

namespace py = pybind11;

namespace {

using namespace vulnkit;

GainVariant variant_from(const std::string& name) {
  if (name == "omega") return GainVariant::kOmega;
  if (name == "Omega") return GainVariant::kBigOmega;
  throw std::invalid_argument("unknown variant: " + name +
                              " (expected omega or Omega)");
}

std::string params_json(const std::string& graph6) {
  return param_report(from_graph6(graph6)).to_json();
}

std::string psi_json(const std::string& graph6, const std::string& variant) {
  return psi(from_graph6(graph6), variant_from(variant)).to_json();
}

bool check(const std::string& graph6, const std::string& t,
           const std::string& k, int l) {
  return psi_satisfies(psi(from_graph6(graph6), GainVariant::kOmega),
                       parse_rational(t), parse_rational(k), l);
}

std::string phi(const std::string& mu, const std::string& variant, int n,
                int x, int y, bool closed) {
  const MuParam m = parse_mu(mu);
  const GainVariant v = variant_from(variant);
  return (closed ? phi_closed(m, v, n, x, y) : phi_oracle(m, v, n, x, y)).str();
}

std::string threshold_json(const std::string& mu, const std::string& property,
                           int n, const std::string& method, int workers) {
  const MuParam m = parse_mu(mu);
  const PropertySpec p = parse_property(property);
  if (method == "brute") return threshold_brute(m, p, n, workers).to_json();
  if (method == "theorem") {
    if (m.kind != MuKind::kDelta || !p.omega_family())
      throw std::invalid_argument(
          "the theorem method covers the minimum degree against linear "
          "conditions only");
    Rational t, k;
    int l = 2;
    linear_form(p, t, k, l);
    ThresholdResult res;
    res.mu = m.name();
    res.property = p.str();
    res.n = n;
    res.method = ThresholdMethod::kTheorem;
    res.has_value = true;
    res.value = delta_threshold_theorem(t, k, l, n);
    return res.to_json();
  }
  if (method != "region")
    throw std::invalid_argument("unknown method: " + method);
  return threshold_by_region(m, p, n).to_json();
}

bool implies(const std::string& p, const std::string& q, int n) {
  return region_implies(parse_property(p), parse_property(q), n);
}

std::string canonical_graph6(const std::string& graph6) {
  return to_graph6(from_graph6(graph6));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact graph vulnerability toolkit core";
  m.attr("__version__") = "1.0.0";
  m.def("params_json", &params_json, py::arg("graph6"),
        "vulnerability parameter report for one graph, as a JSON string");
  m.def("psi_json", &psi_json, py::arg("graph6"), py::arg("variant") = "omega",
        "property function of one graph, as a JSON string");
  m.def("check", &check, py::arg("graph6"), py::arg("t"), py::arg("k"),
        py::arg("l") = 2,
        "whether psi(x) >= t*x + k holds for every x in [max(l, 1), alpha]");
  m.def("phi", &phi, py::arg("mu"), py::arg("variant"), py::arg("n"),
        py::arg("x"), py::arg("y"), py::arg("closed") = false,
        "one extremal density value, as its exact string form");
  m.def("threshold_json", &threshold_json, py::arg("mu"), py::arg("property"),
        py::arg("n"), py::arg("method") = "region", py::arg("workers") = 0,
        "largest minimum density forcing the property, as a JSON string");
  m.def("implies", &implies, py::arg("p"), py::arg("q"), py::arg("n"),
        "whether every point forbidden by q is forbidden by p, so property p "
        "implies property q at order n");
  m.def("canonical_graph6", &canonical_graph6, py::arg("graph6"),
        "decode and re-encode a graph6 line");
}
