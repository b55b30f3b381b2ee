#include "doctest.h"

#include <map>

#include "vulnkit/graph.hpp"
#include "vulnkit/graph6.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/rational.hpp"
#include "vulnkit/vuln_params.hpp"

using namespace vulnkit;

TEST_CASE("parameters of the five-cycle") {
  const Graph g = Graph::cycle(5);
  CHECK(kappa(g) == 2);
  CHECK(toughness(g) == Rational(1));
  CHECK(scattering(g) == 0);
  CHECK(kappa_ell(g, 2) == 2);
  CHECK(kappa_ell(g, 3) == 3);  // only two components fit; extension n - alpha
  CHECK(kappa_ell(g, 4) == 3);
  CHECK(integrity(g) == 4);
  CHECK(coc(g, 1) == 5);
  CHECK(coc(g, 2) == 3);
  CHECK(coc(g, 3) == 2);
  CHECK(coc(g, 4) == 2);
  CHECK(co_toughness(g) == Rational(2, 3));
}

TEST_CASE("parameters of the four-leaf star") {
  const Graph g = Graph::star(4);
  CHECK(kappa(g) == 1);
  CHECK(toughness(g) == Rational(1, 4));
  CHECK(scattering(g) == 3);
  CHECK(kappa_ell(g, 2) == 1);
  CHECK(integrity(g) == 2);
  CHECK(co_toughness(g) == Rational(1, 4));
}

TEST_CASE("parameters of paths and cliques") {
  CHECK(co_toughness(Graph::path(3)) == Rational(1, 2));
  CHECK(integrity(Graph::path(4)) == 3);
  CHECK(coc(Graph::complete(4), 1) == 4);

  // Complete graphs take the dense-graph extension values.
  CHECK(kappa(Graph::complete(1)) == 0);
  CHECK(toughness(Graph::complete(1)) == Rational(0));
  CHECK(scattering(Graph::complete(1)) == -1);
  CHECK(integrity(Graph::complete(1)) == 1);
  CHECK(kappa(Graph::complete(2)) == 1);
  CHECK(toughness(Graph::complete(2)) == Rational(1));
  CHECK(scattering(Graph::complete(2)) == -2);
  CHECK(integrity(Graph::complete(2)) == 2);
  CHECK(toughness(Graph::complete(6)) == Rational(5));
  CHECK(scattering(Graph::complete(4)) == -4);
  CHECK(co_toughness(Graph::complete(4)) == Rational(1));
}

TEST_CASE("definition sweeps agree with the psi extractions") {
  for (const Graph& g :
       {Graph::cycle(5), Graph::path(4), Graph::star(4), Graph::complete(4),
        Graph::complete_bipartite(2, 3),
        Graph::disjoint_union(Graph::path(3), Graph::complete(2))}) {
    const PropertyFunction pw = psi(g, GainVariant::kOmega);
    const PropertyFunction pb = psi(g, GainVariant::kBigOmega);
    CHECK(kappa(g) == kappa_from_psi(pw));
    CHECK(toughness(g) == toughness_from_psi(pw));
    CHECK(scattering(g) == scattering_from_psi(pw));
    for (int l = 2; l <= 5; ++l)
      CHECK(kappa_ell(g, l) == kappa_ell_from_psi(pw, l));
    CHECK(integrity(g) == integrity_from_psi(pb));
    for (int l = 1; l <= 4; ++l) CHECK(coc(g, l) == coc_from_psi(pb, l));
  }
}

TEST_CASE("parameter report carries every field and round trips") {
  const ParamReport r = param_report(Graph::cycle(5));
  CHECK(r.n == 5);
  CHECK(r.omega == 1);
  CHECK(r.big_omega == 5);
  CHECK(r.alpha == 2);
  CHECK(r.min_degree == 2);
  CHECK(r.edge_count == 5);
  CHECK(r.kappa == 2);
  CHECK(r.toughness == Rational(1));
  CHECK(r.scattering == 0);
  CHECK(r.kappa_ell == std::map<int, int>{{2, 2}, {3, 3}, {4, 3}, {5, 3}});
  CHECK(r.integrity == 4);
  CHECK(r.coc == std::map<int, int>{{1, 5}, {2, 3}, {3, 2}, {4, 2}});
  CHECK(r.co_toughness == Rational(2, 3));
  CHECK(r.graph6 == to_graph6(Graph::cycle(5)));
  CHECK(r.to_json().find("\"kappa\":2") != std::string::npos);
  CHECK(r.to_csv_row().find("2/3") != std::string::npos);
}

TEST_CASE("the eight inequalities hold on fixed connected graphs") {
  for (const Graph& g : {Graph::cycle(5), Graph::path(4), Graph::star(4),
                         Graph::complete(4), Graph::complete_bipartite(2, 3)}) {
    for (const auto& [name, ok] : check_inequalities(g)) {
      INFO(name);
      CHECK(ok);
    }
    CHECK(check_inequalities(g).size() == 8);
  }
}

TEST_CASE("the independence bound is tight on stars") {
  for (int leaves = 1; leaves <= 8; ++leaves) {
    const Graph g = Graph::star(leaves);
    CHECK(Rational(alpha(g)) ==
          Rational(g.order()) / (toughness(g) + Rational(1)));
  }
}
