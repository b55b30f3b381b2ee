/*
 * vulnkit command-line front end.
 *
 * Reads graph6 lines from standard input for the streaming subcommands
 * (params, psi, check) and emits machine-readable output: CSV/TSV tables
 * carry a #schema comment so downstream golden files stay versioned, JSON
 * payloads are one object per line.  Malformed graph6 lines are reported to
 * standard error with their line number and never abort the stream.
 */

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vulnkit/certify.hpp"
#include "vulnkit/graph.hpp"
#include "vulnkit/graph6.hpp"
#include "vulnkit/mu.hpp"
#include "vulnkit/phi.hpp"
#include "vulnkit/property_function.hpp"
#include "vulnkit/property_spec.hpp"
#include "vulnkit/rational.hpp"
#include "vulnkit/region.hpp"
#include "vulnkit/tables.hpp"
#include "vulnkit/threshold.hpp"
#include "vulnkit/vuln_params.hpp"

namespace {

using namespace vulnkit;

/* csv <-> tsv: data columns never contain commas, so a swap is enough */
std::string with_separator(std::string row, const std::string& format) {
  if (format == "tsv") std::replace(row.begin(), row.end(), ',', '\t');
  return row;
}

struct StreamStats {
  long long ok = 0;
  long long failed = 0;
};

// Feeds every decodable graph6 line to fn(graph, line_text); skips blank
// lines, reports bad ones to stderr, and prints the ok/failed trailer.
template <typename Fn>
StreamStats for_each_input_graph(std::istream& in, Fn&& fn) {
  StreamStats stats;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const Graph g = from_graph6(line);
      fn(g, line);
      ++stats.ok;
    } catch (const std::exception& e) {
      std::cerr << "line " << line_no << ": " << e.what() << '\n';
      ++stats.failed;
    }
  }
  std::cerr << "ok " << stats.ok << " failed " << stats.failed << '\n';
  return stats;
}

GainVariant variant_from_flag(const std::string& name) {
  return name == "Omega" ? GainVariant::kBigOmega : GainVariant::kOmega;
}

int run_params(const std::string& format) {
  if (format != "json")
    std::cout << "#schema=vulnkit.params.v1\n"
              << with_separator(ParamReport::csv_header(), format) << '\n';
  for_each_input_graph(std::cin, [&](const Graph& g, const std::string&) {
    const ParamReport report = param_report(g);
    if (format == "json")
      std::cout << report.to_json() << '\n';
    else
      std::cout << with_separator(report.to_csv_row(), format) << '\n';
  });
  return 0;
}

int run_psi(const std::string& variant_flag) {
  const GainVariant variant = variant_from_flag(variant_flag);
  for_each_input_graph(std::cin, [&](const Graph& g, const std::string&) {
    std::cout << psi(g, variant).to_json() << '\n';
  });
  return 0;
}

int run_check(const Rational& t, const Rational& k, int l) {
  std::cout << "#schema=vulnkit.check.v1\n"
            << "graph6,satisfies\n";
  for_each_input_graph(std::cin, [&](const Graph& g, const std::string& line) {
    const bool ok = psi_satisfies(psi(g, GainVariant::kOmega), t, k, l);
    std::cout << line << ',' << (ok ? "true" : "false") << '\n';
  });
  return 0;
}

int run_phi(const MuParam& mu, const std::string& variant_flag, int n,
            bool closed, const std::string& format) {
  const GainVariant variant = variant_from_flag(variant_flag);
  std::ostringstream out;
  out << "#schema=vulnkit.phi_grid.v1\n";
  out << "y\\x";
  for (int x = 1; x <= n; ++x) out << ',' << x;
  out << '\n';
  for (int y = 0; y <= n - 1; ++y) {
    out << y;
    for (int x = 1; x <= n; ++x) {
      out << ',';
      if (x + y > n) continue;
      const PhiValue v = closed ? phi_closed(mu, variant, n, x, y)
                                : phi_oracle(mu, variant, n, x, y);
      out << v.str();
    }
    out << '\n';
  }
  std::cout << with_separator(out.str(), format);
  return 0;
}

int run_threshold(const MuParam& mu, const PropertySpec& p, int n,
                  const std::string& method, int workers) {
  ThresholdResult res;
  if (method == "brute") {
    res = threshold_brute(mu, p, n, workers);
  } else if (method == "theorem") {
    if (mu.kind != MuKind::kDelta || !p.omega_family()) {
      std::cerr << "the theorem method covers the minimum degree against "
                   "linear conditions only\n";
      return 2;
    }
    Rational t, k;
    int l = 2;
    linear_form(p, t, k, l);
    res.mu = mu.name();
    res.property = p.str();
    res.n = n;
    res.method = ThresholdMethod::kTheorem;
    res.has_value = true;
    res.value = delta_threshold_theorem(t, k, l, n);
  } else {
    res = threshold_by_region(mu, p, n);
  }
  std::cout << res.to_json() << '\n';
  return 0;
}

int run_certify(int n_max, std::uint64_t seed, int workers,
                const std::string& out_dir) {
  CertifyConfig cfg;
  cfg.n_max = n_max;
  cfg.seed = seed;
  cfg.workers = workers;
  const CertifyOutcome outcome = run_certification(cfg);
  for (const CriterionResult& c : outcome.criteria)
    std::cout << criterion_line(c) << '\n';
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, body] : outcome.reports) {
      std::ofstream file(std::filesystem::path(out_dir) / name,
                         std::ios::binary);
      file << body;
    }
  }
  return outcome.all_passed ? 0 : 1;
}

int run_tables(const std::string& which, int n_lo, int n_hi, int workers,
               const std::string& format) {
  const TableKind kind =
      which == "delta" ? TableKind::kDeltaTable : TableKind::kCrossTable;
  const std::vector<TableRow> rows = generate_tables(kind, n_lo, n_hi, workers);
  if (format == "json") {
    for (const TableRow& row : rows) std::cout << table_row_json(row) << '\n';
    return 0;
  }
  std::ostringstream out;
  out << "#schema=vulnkit.threshold_cells.v1\n"
      << table_csv_header() << ",brute_witness\n";
  for (const TableRow& row : rows) {
    out << table_csv_row(row) << ',';
    if (row.has_brute) out << row.brute.witness_graph6;
    out << '\n';
  }
  std::cout << with_separator(out.str(), format);
  return 0;
}

int run_implies(const PropertySpec& p, const PropertySpec& q, int n) {
  std::cout << "{\"p\":\"" << p.str() << "\",\"q\":\"" << q.str()
            << "\",\"n\":" << n << ",\"implies\":"
            << (region_implies(p, q, n) ? "true" : "false") << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph vulnerability toolkit"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string variant_flag = "omega";
  std::string mu_flag = "delta";
  std::string property_flag;
  std::string property_q_flag;
  std::string method = "region";
  std::string t_flag = "0";
  std::string k_flag = "0";
  std::string n_range = "4..6";
  std::string which = "delta";
  std::string out_dir;
  int l = 2;
  int n = 0;
  int n_max = 12;
  int workers = 0;
  std::uint64_t seed = 1729;
  bool closed = false;

  CLI::App* params = app.add_subcommand(
      "params", "vulnerability parameter report per graph6 input line");
  params->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));

  CLI::App* psi_cmd = app.add_subcommand(
      "psi", "property function of each graph6 input line, as JSON");
  psi_cmd->add_option("--variant", variant_flag, "gain measure")
      ->check(CLI::IsMember({"omega", "Omega"}));

  CLI::App* check = app.add_subcommand(
      "check", "test the linear condition psi(x) >= t*x + k on [l, alpha]");
  check->add_option("--t", t_flag, "slope, an integer fraction")->required();
  check->add_option("--k", k_flag, "intercept, an integer fraction")
      ->required();
  check->add_option("--l", l, "lower end of the tested range")
      ->check(CLI::Range(0, kMaxOrder));

  CLI::App* phi = app.add_subcommand(
      "phi", "extremal density grid over (x, y) at a fixed order");
  phi->add_option("--mu", mu_flag, "density parameter")->required();
  phi->add_option("--variant", variant_flag, "gain measure")
      ->check(CLI::IsMember({"omega", "Omega"}));
  phi->add_option("--n", n, "graph order")->required()->check(CLI::Range(1, 12));
  phi->add_flag("--closed", closed, "print the closed forms instead of the "
                                    "exhaustive family optimum");
  phi->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "tsv"}));

  CLI::App* threshold = app.add_subcommand(
      "threshold", "largest minimum density forcing the property");
  threshold->add_option("--mu", mu_flag, "density parameter")->required();
  threshold->add_option("--property", property_flag, "property spec")
      ->required();
  threshold->add_option("--n", n, "graph order")
      ->required()
      ->check(CLI::Range(1, 12));
  threshold->add_option("--method", method, "computation method")
      ->check(CLI::IsMember({"region", "theorem", "brute"}));
  threshold->add_option("--workers", workers, "worker threads (0 = default)")
      ->check(CLI::Range(0, 64));

  CLI::App* certify = app.add_subcommand(
      "certify", "run every certification suite and discrepancy ledger");
  certify->add_option("--n-max", n_max, "largest order any suite sweeps")
      ->check(CLI::Range(1, 12));
  certify->add_option("--seed", seed, "random corpus seed");
  certify->add_option("--workers", workers, "worker threads (0 = default)")
      ->check(CLI::Range(0, 64));
  certify->add_option("--out", out_dir, "directory for the ledger CSVs");

  CLI::App* tables = app.add_subcommand(
      "tables", "threshold tables with region and exhaustive verification");
  tables->add_option("--which", which, "delta or cross table")
      ->required()
      ->check(CLI::IsMember({"delta", "cross"}));
  tables->add_option("--n-range", n_range, "order range A..B")->required();
  tables->add_option("--workers", workers, "worker threads (0 = default)")
      ->check(CLI::Range(0, 64));
  tables->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "tsv"}));

  CLI::App* implies = app.add_subcommand(
      "implies", "forbidden-region containment between two properties");
  implies->add_option("--p", property_flag, "the property assumed to hold")
      ->required();
  implies->add_option("--q", property_q_flag, "the property to be implied")
      ->required();
  implies->add_option("--n", n, "graph order")
      ->required()
      ->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (params->parsed()) return run_params(format);
    if (psi_cmd->parsed()) return run_psi(variant_flag);
    if (check->parsed())
      return run_check(parse_rational(t_flag), parse_rational(k_flag), l);
    if (phi->parsed())
      return run_phi(parse_mu(mu_flag), variant_flag, n, closed, format);
    if (threshold->parsed()) {
      if (method == "brute" && n > kBruteOrderCap) {
        std::cerr << "the brute method sweeps every labeled graph and is "
                     "capped at order "
                  << kBruteOrderCap << '\n';
        return 2;
      }
      return run_threshold(parse_mu(mu_flag), parse_property(property_flag), n,
                           method, workers);
    }
    if (certify->parsed()) return run_certify(n_max, seed, workers, out_dir);
    if (tables->parsed()) {
      const std::size_t dots = n_range.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("bad order range: " + n_range);
      const int lo = std::stoi(n_range.substr(0, dots));
      const int hi = std::stoi(n_range.substr(dots + 2));
      return run_tables(which, lo, hi, workers, format);
    }
    if (implies->parsed())
      return run_implies(parse_property(property_flag),
                         parse_property(property_q_flag), n);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
