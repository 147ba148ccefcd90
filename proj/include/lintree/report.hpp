#pragma once

// CSV and JSON serialization of tables, census rows, constants and CLT
// diagnostics. All output is deterministic for a given input.

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lintree/asymptotics.hpp"
#include "lintree/counts.hpp"

namespace lintree::report {

/// Exact integers become JSON numbers when they fit in 64 bits, strings otherwise.
inline nlohmann::json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline std::string decimal(const BigFloat& v, unsigned digits) {
  return v.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

/// First row emitted by the table and census writers.
inline std::size_t first_row(std::size_t maxN) { return maxN >= 10 ? 10 : 1; }

/// Highest k column in the wide table: floor((maxN - 2) / 2), at least 1.
inline std::size_t wide_columns(std::size_t maxN) { return maxN >= 4 ? (maxN - 2) / 2 : 1; }

/// Wide form: n,k1,...,kK,total (total includes the k = 0 path).
inline void write_table_csv(std::ostream& os, const KLinearTable& table) {
  const std::size_t K = wide_columns(table.max_n());
  os << "n";
  for (std::size_t k = 1; k <= K; ++k) os << ",k" << k;
  os << ",total\n";
  for (std::size_t n = first_row(table.max_n()); n <= table.max_n(); ++n) {
    os << n;
    for (std::size_t k = 1; k <= K; ++k) os << ',' << table.count(n, k);
    os << ',' << linear_total(table, n) << '\n';
  }
}

/// Long form: n,k,a for 0 <= k <= max_k(n).
inline void write_table_long_csv(std::ostream& os, const KLinearTable& table) {
  os << "n,k,a\n";
  for (std::size_t n = first_row(table.max_n()); n <= table.max_n(); ++n)
    for (std::size_t k = 0; k <= table.max_k(n); ++k) os << n << ',' << k << ',' << table.count(n, k) << '\n';
}

inline nlohmann::json table_json(const KLinearTable& table) {
  auto rows = nlohmann::json::array();
  for (std::size_t n = first_row(table.max_n()); n <= table.max_n(); ++n) {
    auto counts = nlohmann::json::array();
    for (std::size_t k = 0; k <= table.max_k(n); ++k) counts.push_back(to_json(table.count(n, k)));
    rows.push_back({{"n", n}, {"counts", counts}, {"total", to_json(linear_total(table, n))}});
  }
  return rows;
}

inline void write_census_csv(std::ostream& os, const std::vector<TreeCensus>& rows) {
  os << "n,nonlinear,linear,percent_nonlinear,total\n";
  for (const auto& c : rows)
    os << c.n << ',' << c.nonlinear << ',' << c.linearTotal << ',' << c.percent_string() << ',' << c.totalTrees
       << '\n';
}

inline nlohmann::json census_json(const std::vector<TreeCensus>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& c : rows)
    out.push_back({{"n", c.n},
                   {"nonlinear", to_json(c.nonlinear)},
                   {"linear", to_json(c.linearTotal)},
                   {"percent_nonlinear", c.percent_string()},
                   {"total", to_json(c.totalTrees)}});
  return out;
}

/// The asymptotics.json record. Reals are decimal strings carrying the
/// requested number of significant digits.
inline nlohmann::json asymptotics_json(const AsymptoticConstants& k, const SchemaReport* schema = nullptr) {
  const unsigned d = k.precision;
  PrecisionScope scope(d + kGuardDigits);
  auto s = [d](const BigFloat& v) { return decimal(v, d); };
  nlohmann::json j;
  j["precision"] = d;
  j["truncation"] = k.truncation;
  j["x0"] = s(k.x0);
  j["sqrt_x0"] = s(boost::multiprecision::sqrt(k.x0));
  j["growth_rate"] = s(k.growthRate);
  j["prefactor"] = s(k.prefactor);
  j["P0"] = s(k.P0);
  j["P1"] = s(k.P1);
  j["P2"] = s(k.P2);
  j["c10"] = s(k.c10);
  j["c01"] = s(k.c01);
  j["c11"] = s(k.c11);
  j["c20"] = s(k.c20);
  j["c02"] = s(k.c02);
  j["nondegeneracy"] = s(k.c01 * k.c10);
  j["gamma"] = s(k.gamma);
  j["delta"] = s(k.delta);
  j["mu"] = s(k.mu);
  j["sigma2"] = s(k.sigma2);
  j["closed_form"] = {{"mu", s(k.muClosedForm)}, {"delta", s(k.deltaClosedForm)}, {"sigma2", s(k.sigma2ClosedForm)}};
  j["residuals"] = {{"defining_equation", decimal(k.residual, 6)},
                    {"mu", decimal(abs(k.mu - k.muClosedForm), 6)},
                    {"delta", decimal(abs(k.delta - k.deltaClosedForm), 6)},
                    {"sigma2", decimal(abs(k.sigma2 - k.sigma2ClosedForm), 6)},
                    {"c01_identity", decimal(abs(k.c01 - (k.x0 - 1)), 6)}};
  if (schema) {
    auto checks = nlohmann::json::array();
    for (const auto& c : schema->checks)
      checks.push_back({{"name", c.name}, {"value", decimal(c.value, 12)}, {"ok", c.ok}, {"detail", c.detail}});
    j["schema"] = {{"ok", schema->ok()}, {"checks", checks}};
  }
  return j;
}

inline void write_clt_csv(std::ostream& os, const std::vector<CltDiagnostics>& rows) {
  os << "n,mean,variance,argmax,ks\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.mean.str(15, std::ios_base::fixed) << ',' << r.variance.str(15, std::ios_base::fixed)
       << ',' << r.argmax << ',' << r.ks.str(12, std::ios_base::scientific) << '\n';
}

}  // namespace lintree::report
