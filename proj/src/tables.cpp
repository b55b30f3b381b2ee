#include "vulnkit/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vulnkit {

namespace {

PhiValue defined_value(const Rational& v) {
  PhiValue out;
  out.defined = true;
  out.value = v;
  return out;
}

PhiValue undefined_value(const std::string& reason) {
  PhiValue out;
  out.reason = reason;
  return out;
}

constexpr const char* kApproximate = "approximate_only";
constexpr const char* kUnbound = "unbound_symbol";
constexpr const char* kOmitted = "paper_omits";
constexpr const char* kDivZero = "division_by_zero";

}  // namespace

PhiValue closed_delta_threshold(const PropertySpec& p, int n) {
  switch (p.kind) {
    case PropertyKind::kConnectivity:
      return defined_value(
          Rational(((Rational(n) + p.k - Rational(3)) / Rational(2)).floor()));
    case PropertyKind::kToughness: {
      const Rational term1(
          ((Rational(n) + Rational(2) * p.t - Rational(3)) / Rational(2))
              .floor());
      if (p.t <= Rational(0)) return defined_value(term1);
      const Rational gamma = Rational(n) / (p.t + Rational(1));
      const std::int64_t fg = gamma.floor();
      const std::int64_t cg = gamma.ceil();
      if (fg == 0 || cg == 0) return undefined_value(kDivZero);
      const std::int64_t tc = (p.t * Rational(fg)).ceil();
      const Rational term2(Rational(n - tc, fg).floor() + tc - 1);
      const Rational term3(Rational(cg + 1, cg).floor() + n - cg - 2);
      return defined_value(std::max({term1, term2, term3}));
    }
    case PropertyKind::kUnscattered: {
      const int half_up = (n + 1) / 2;
      const int half_down = n / 2;
      if (half_down == 0) return undefined_value(kDivZero);
      const Rational term1(Rational(n - p.s - 1, 2).floor());
      const Rational term2(Rational(half_up + p.s, half_down).floor() +
                           half_up + p.s - 1);
      const Rational term3(half_up - 1);
      return defined_value(std::max({term1, term2, term3}));
    }
    case PropertyKind::kLconn: {
      if (p.k == Rational(0)) return undefined_value(kDivZero);
      const Rational quot = (Rational(n) + p.k * Rational(p.l)) / p.k;
      return defined_value(Rational(quot.floor()) + p.k - Rational(1));
    }
    case PropertyKind::kIntegrity:
      return defined_value(Rational(p.i - 2));
    case PropertyKind::kCoc: {
      const Rational nk1 = Rational(n) - p.k - Rational(1);
      const Rational ell(p.l);
      Rational xi = ell;
      if (!(nk1 / ell).is_integer())
        xi = ell - (Rational((nk1 / ell).ceil()) * ell - nk1);
      if (xi == Rational(0)) return undefined_value(kDivZero);
      const Rational den =
          Rational(((Rational(n) - p.k + Rational(1)) / xi).ceil()) -
          Rational(1);
      if (den == Rational(0)) return undefined_value(kDivZero);
      const Rational quot = (Rational(n) - p.k - xi + Rational(1)) / den;
      return defined_value(Rational(quot.floor()) + p.k - Rational(2));
    }
    case PropertyKind::kGeneralTkl:
    case PropertyKind::kCoTough:
      return undefined_value(kOmitted);
  }
  throw std::logic_error("unknown property kind");
}

PhiValue closed_cross_threshold(const MuParam& mu, const PropertySpec& p,
                                int n) {
  switch (mu.kind) {
    case MuKind::kKappa:
      switch (p.kind) {
        case PropertyKind::kConnectivity:
        case PropertyKind::kLconn:
        case PropertyKind::kCoc:
          return defined_value(p.k - Rational(1));
        case PropertyKind::kToughness: {
          if (p.t + Rational(1) == Rational(0))
            return undefined_value(kDivZero);
          return defined_value(
              Rational((Rational(n) * p.t / (p.t + Rational(1))).ceil() - 1));
        }
        case PropertyKind::kUnscattered:
          return defined_value(Rational(Rational(n - p.s, 2).floor() - 1));
        case PropertyKind::kIntegrity:
          return defined_value(Rational(p.i - 2));
        default:
          return undefined_value(kOmitted);
      }
    case MuKind::kTau:
      switch (p.kind) {
        case PropertyKind::kConnectivity:
          return defined_value((p.k - Rational(1)) / Rational(2));
        case PropertyKind::kLconn:
          return defined_value((p.k - Rational(1)) / Rational(p.l));
        case PropertyKind::kToughness:
          return undefined_value(kApproximate);
        case PropertyKind::kUnscattered: {
          if (p.s > 0) {
            if (n + p.s - 2 == 0) return undefined_value(kDivZero);
            return defined_value(Rational(n - p.s - 2, n + p.s - 2));
          }
          if (p.s == 0)
            return defined_value(Rational((n + 1) / 2 - 1, n / 2 + 2));
          return defined_value(Rational(1 - p.s, 2));
        }
        case PropertyKind::kCoc:
        case PropertyKind::kIntegrity:
          return undefined_value(kApproximate);
        default:
          return undefined_value(kOmitted);
      }
    case MuKind::kSc:
      switch (p.kind) {
        case PropertyKind::kConnectivity:
          return defined_value(Rational(3) - p.k);
        case PropertyKind::kLconn:
          return defined_value(Rational(p.l) - p.k + Rational(1));
        case PropertyKind::kToughness: {
          if (p.t <= Rational(1)) {
            if (p.t == Rational(0)) return undefined_value(kDivZero);
            return defined_value(Rational(1) / p.t);
          }
          const std::int64_t q = (Rational(n) / (p.t + Rational(1))).floor();
          return defined_value(Rational(2 * q + 2 - n));
        }
        case PropertyKind::kUnscattered:
          return defined_value(Rational(p.s + 1));
        case PropertyKind::kCoc:
        case PropertyKind::kIntegrity:
          return undefined_value(kApproximate);
        default:
          return undefined_value(kOmitted);
      }
    case MuKind::kIntegrity:
      switch (p.kind) {
        case PropertyKind::kConnectivity:
        case PropertyKind::kToughness:
          return defined_value(Rational(n - 1));
        case PropertyKind::kLconn:
          return defined_value(Rational(n - p.l + 1));
        case PropertyKind::kUnscattered:
          return defined_value(Rational(n - p.s - 1));
        case PropertyKind::kCoc:
          return defined_value(p.k + Rational(p.l) - Rational(1));
        case PropertyKind::kIntegrity:
          return defined_value(Rational(p.i - 1));
        default:
          return undefined_value(kOmitted);
      }
    case MuKind::kCoTau:
      switch (p.kind) {
        case PropertyKind::kConnectivity: {
          if (p.k == Rational(0)) return undefined_value(kDivZero);
          return defined_value((p.k - Rational(1)) / p.k);
        }
        case PropertyKind::kLconn: {
          const Rational den = p.k + Rational(p.l) - Rational(2);
          if (den == Rational(0)) return undefined_value(kDivZero);
          return defined_value((p.k - Rational(1)) / den);
        }
        case PropertyKind::kToughness:
          return undefined_value(kApproximate);
        case PropertyKind::kUnscattered:
          return undefined_value(kUnbound);
        case PropertyKind::kCoc: {
          if (n - p.l + 1 == 0) return undefined_value(kDivZero);
          return defined_value(p.k / Rational(n - p.l + 1));
        }
        case PropertyKind::kIntegrity: {
          if (n - p.i + 1 == 0) return undefined_value(kDivZero);
          return defined_value(Rational(1, n - p.i + 1));
        }
        default:
          return undefined_value(kOmitted);
      }
    default:
      return undefined_value(kOmitted);
  }
}

std::vector<PropertySpec> certification_property_grid() {
  std::vector<PropertySpec> grid;
  for (int k = 1; k <= 5; ++k) {
    PropertySpec p;
    p.kind = PropertyKind::kConnectivity;
    p.k = Rational(k);
    grid.push_back(p);
  }
  const Rational toughness_values[] = {Rational(1, 2), Rational(1),
                                       Rational(3, 2), Rational(2)};
  for (const Rational& t : toughness_values) {
    PropertySpec p;
    p.kind = PropertyKind::kToughness;
    p.t = t;
    grid.push_back(p);
  }
  for (int s = -3; s <= 3; ++s) {
    PropertySpec p;
    p.kind = PropertyKind::kUnscattered;
    p.s = s;
    grid.push_back(p);
  }
  for (int k = 1; k <= 5; ++k)
    for (int l = 2; l <= 4; ++l) {
      PropertySpec p;
      p.kind = PropertyKind::kLconn;
      p.k = Rational(k);
      p.l = l;
      grid.push_back(p);
    }
  for (int i = 2; i <= 6; ++i) {
    PropertySpec p;
    p.kind = PropertyKind::kIntegrity;
    p.i = i;
    grid.push_back(p);
  }
  for (int k = 1; k <= 5; ++k)
    for (int l = 2; l <= 4; ++l) {
      PropertySpec p;
      p.kind = PropertyKind::kCoc;
      p.k = Rational(k);
      p.l = l;
      grid.push_back(p);
    }
  for (const Rational& t : toughness_values) {
    PropertySpec p;
    p.kind = PropertyKind::kCoTough;
    p.t = t;
    grid.push_back(p);
  }
  return grid;
}

std::vector<TableRow> generate_tables(TableKind which, int n_lo, int n_hi,
                                      int workers) {
  if (n_lo < 2 || n_hi > 12 || n_lo > n_hi)
    throw std::invalid_argument("table orders must satisfy 2 <= lo <= hi <= 12");
  const std::vector<PropertySpec> props = certification_property_grid();
  std::vector<MuParam> mus;
  if (which == TableKind::kDeltaTable) {
    mus.push_back(MuParam{MuKind::kDelta, 0});
  } else {
    mus.push_back(MuParam{MuKind::kKappa, 0});
    mus.push_back(MuParam{MuKind::kTau, 0});
    mus.push_back(MuParam{MuKind::kSc, 0});
    mus.push_back(MuParam{MuKind::kIntegrity, 0});
    mus.push_back(MuParam{MuKind::kCoTau, 0});
  }

  std::vector<TableRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    PhiCache cache(n);
    std::vector<ThresholdResult> brute;
    if (n <= kBruteOrderCap) {
      std::vector<BruteQuery> queries;
      for (const MuParam& mu : mus)
        for (const PropertySpec& p : props)
          queries.push_back(BruteQuery{mu, p});
      brute = threshold_brute_batch(queries, n, workers);
    }
    std::size_t qi = 0;
    for (const MuParam& mu : mus)
      for (const PropertySpec& p : props) {
        TableRow row;
        row.table = which == TableKind::kDeltaTable ? "delta" : "cross";
        row.mu = mu.name();
        row.property = p.str();
        row.n = n;
        row.closed = which == TableKind::kDeltaTable
                         ? closed_delta_threshold(p, n)
                         : closed_cross_threshold(mu, p, n);
        row.region = threshold_by_region(mu, p, false, cache);
        if (!brute.empty()) {
          row.has_brute = true;
          row.brute = brute[qi];
        }
        ++qi;
        row.advisory = p.kind == PropertyKind::kCoTough;
        if (row.advisory || !row.closed.defined) {
          row.verdict = "UNCHECKED";
        } else {
          const ThresholdResult& ref = row.has_brute ? row.brute : row.region;
          row.verdict = ref.has_value && row.closed.value == ref.value
                            ? "MATCH"
                            : "PAPER_ERRATUM?";
        }
        rows.push_back(row);
      }
  }
  return rows;
}

std::string table_csv_header() {
  return "table,mu,property,parameters,n,closed_form,region_value,brute_value,"
         "verdict";
}

std::string table_csv_row(const TableRow& row) {
  /* Property specs such as lconn:k=2,l=3 embed a comma, so the name and the
     parameter list go into separate columns, with ';' between parameters,
     keeping every cell free of the field separator. */
  std::string name = row.property;
  std::string params;
  const auto colon = row.property.find(':');
  if (colon != std::string::npos) {
    name = row.property.substr(0, colon);
    params = row.property.substr(colon + 1);
    std::replace(params.begin(), params.end(), ',', ';');
  }
  std::ostringstream out;
  out << row.table << ',' << row.mu << ',' << name << ',' << params << ','
      << row.n << ',' << row.closed.str() << ',' << row.region.value_str()
      << ',' << (row.has_brute ? row.brute.value_str() : std::string()) << ','
      << row.verdict;
  return out.str();
}

std::string table_row_json(const TableRow& row) {
  std::ostringstream out;
  out << "{\"table\":\"" << row.table << "\",\"mu\":\"" << row.mu
      << "\",\"property\":\"" << row.property << "\",\"n\":" << row.n
      << ",\"closed_form\":\"" << row.closed.str() << "\",\"region_value\":\""
      << row.region.value_str() << "\",\"brute_value\":";
  if (row.has_brute)
    out << '"' << row.brute.value_str() << '"';
  else
    out << "null";
  out << ",\"verdict\":\"" << row.verdict << "\"}";
  return out.str();
}

}  // namespace vulnkit
