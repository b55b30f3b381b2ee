#include "vulnkit/mu.hpp"

#include <stdexcept>

#include "vulnkit/vuln_params.hpp"

namespace vulnkit {

namespace {

int64_t choose2(int64_t m) { return m * (m - 1) / 2; }

int parse_arg(const std::string& text, std::size_t colon) {
  const std::string tail = text.substr(colon + 1);
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tail, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad density parameter argument: '" + text + "'");
  }
  if (pos != tail.size())
    throw std::invalid_argument("bad density parameter argument: '" + text + "'");
  return value;
}

}  // namespace

std::string MuParam::name() const {
  switch (kind) {
    case MuKind::kDelta: return "delta";
    case MuKind::kEdges: return "e";
    case MuKind::kNcap: return "ncap:" + std::to_string(arg);
    case MuKind::kKappa: return "kappa";
    case MuKind::kLconn: return "lconn:" + std::to_string(arg);
    case MuKind::kTau: return "tau";
    case MuKind::kSc: return "sc";
    case MuKind::kCoc: return "coc:" + std::to_string(arg);
    case MuKind::kIntegrity: return "integrity";
    case MuKind::kCoTau: return "cotough";
  }
  throw std::logic_error("unreachable");
}

bool MuParam::increasing() const { return kind != MuKind::kSc; }

MuParam parse_mu(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  MuParam mu;
  if (head == "delta") mu.kind = MuKind::kDelta;
  else if (head == "e") mu.kind = MuKind::kEdges;
  else if (head == "ncap") mu.kind = MuKind::kNcap;
  else if (head == "kappa") mu.kind = MuKind::kKappa;
  else if (head == "lconn") mu.kind = MuKind::kLconn;
  else if (head == "tau") mu.kind = MuKind::kTau;
  else if (head == "sc") mu.kind = MuKind::kSc;
  else if (head == "coc") mu.kind = MuKind::kCoc;
  else if (head == "integrity") mu.kind = MuKind::kIntegrity;
  else if (head == "cotough") mu.kind = MuKind::kCoTau;
  else throw std::invalid_argument("unknown density parameter: '" + text + "'");

  const bool takes_arg = mu.kind == MuKind::kNcap || mu.kind == MuKind::kLconn ||
                         mu.kind == MuKind::kCoc;
  if (takes_arg != (colon != std::string::npos))
    throw std::invalid_argument("density parameter argument mismatch: '" + text + "'");
  if (takes_arg) mu.arg = parse_arg(text, colon);
  return mu;
}

Rational mu_direct(const MuParam& mu, const Graph& g) {
  switch (mu.kind) {
    case MuKind::kDelta: return Rational(g.min_degree());
    case MuKind::kEdges: return Rational(g.edge_count());
    case MuKind::kNcap: return Rational(common_neighborhood_min(g, mu.arg));
    case MuKind::kKappa: return Rational(kappa(g));
    case MuKind::kLconn: return Rational(kappa_ell(g, mu.arg));
    case MuKind::kTau: return toughness(g);
    case MuKind::kSc: return Rational(scattering(g));
    case MuKind::kCoc: return Rational(coc(g, mu.arg));
    case MuKind::kIntegrity: return Rational(integrity(g));
    case MuKind::kCoTau: return co_toughness(g);
  }
  throw std::logic_error("unreachable");
}

Rational mu_formula(const MuParam& mu, const Composition& c) {
  const int n = c.n();
  const int z = c.part_count();
  const int y = c.y;
  switch (mu.kind) {
    case MuKind::kDelta:
      return Rational(y + c.min_part());
    case MuKind::kEdges: {
      int64_t e = static_cast<int64_t>(y) * (n - y) + choose2(y);
      for (int p : c.parts) e += choose2(p);
      return Rational(e);
    }
    case MuKind::kNcap:
      return Rational(y);  // the row is stated for j >= 2
    case MuKind::kKappa:
      return Rational(y);
    case MuKind::kLconn:
      return Rational(mu.arg <= z ? y : n - mu.arg);
    case MuKind::kTau:
      return Rational(y, z);
    case MuKind::kSc:
      return Rational(z - y);
    case MuKind::kCoc:
      return Rational(mu.arg >= c.max_part() ? y : n - c.max_part());
    case MuKind::kIntegrity:
      return Rational(c.max_part() + y);
    case MuKind::kCoTau:
      return Rational(static_cast<int64_t>(y) * (c.max_part() + n),
                      static_cast<int64_t>(n) * n);
  }
  throw std::logic_error("unreachable");
}

std::vector<MuComparison> compare_mu(const MuParam& mu, int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("composition sweep supports 1 <= n <= 10");
  std::vector<MuComparison> rows;
  for (int y = 0; y <= n - 1; ++y) {
    for (const auto& parts : partitions_all(n - y)) {
      MuComparison row;
      row.c = Composition{parts, y};
      row.formula = mu_formula(mu, row.c);
      row.direct = mu_direct(mu, build_k(row.c));
      row.equal = row.formula == row.direct;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace vulnkit
