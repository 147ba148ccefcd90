#pragma once

// Singularity analysis of the linear-tree generating function in
// arbitrary precision: the dominant pole x0 of 1/(1 - xP(x)), the growth
// law of the totals, the moving-pole expansion rho(y) behind the central
// limit theorem for the HDV count, and empirical checks against exact counts.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "lintree/counts.hpp"
#include "lintree/series.hpp"

namespace lintree {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecision = 50;
inline constexpr unsigned kMinPrecision = 15;
/// Extra decimal digits carried internally beyond the requested precision.
inline constexpr unsigned kGuardDigits = 10;

/// Sets the default MPFR precision (decimal digits) for new BigFloats and
/// restores the previous value on destruction. The setting is process-wide.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits);
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline BigFloat pow10(long e) { return boost::multiprecision::pow(BigFloat(10), e); }

/// Truncation order N for sum_n n^(d) p(n) x^(n-d): uses p(n) < exp(pi sqrt(2n/3))
/// and bounds the tail past N by a geometric series, targeting 10^-(digits+10).
inline std::size_t partition_truncation(double x, int derivOrder, unsigned digits) {
  if (x <= 0.0) return static_cast<std::size_t>(derivOrder);
  const double target = -(static_cast<double>(digits) + 10.0) * std::log(10.0);
  const double c = M_PI * std::sqrt(2.0 / 3.0);
  for (std::size_t n = 16;; ++n) {
    const double m = static_cast<double>(n + 1);
    const double logTerm = derivOrder * std::log(m) + c * std::sqrt(m) + (m - derivOrder) * std::log(x);
    const double ratio = x * std::exp(M_PI / std::sqrt(6.0 * m)) * std::pow(1.0 + 1.0 / m, derivOrder);
    if (ratio < 1.0 && logTerm - std::log1p(-ratio) < target) return n;
  }
}

struct PartitionValues {
  BigFloat value;       // P(x)
  BigFloat first;       // P'(x)
  BigFloat second;      // P''(x)
  std::size_t truncation = 0;
};

/// P, P', P'' at x from the truncated series, differentiated term by term.
/// `truncationScale` stretches the truncation order (stability checks).
inline PartitionValues eval_P_all(const BigFloat& x, unsigned digits, double truncationScale = 1.0) {
  if (!(x >= 0) || x > BigFloat("0.9"))
    throw std::domain_error("eval_P: x must lie in [0, 0.9], got " + x.str(10));
  const auto base = partition_truncation(x.convert_to<double>(), 2, digits);
  const auto order = static_cast<std::size_t>(std::ceil(static_cast<double>(base) * truncationScale));
  const auto p = partition_gf(order);
  PartitionValues out;
  out.truncation = order;
  out.value = 0;
  out.first = 0;
  out.second = 0;
  // Horner on the three series simultaneously.
  for (std::size_t i = order + 1; i-- > 0;) {
    const BigFloat c(p[i]);
    out.second = out.second * x + c * (static_cast<double>(i) * (static_cast<double>(i) - 1));
    out.first = out.first * x + c * static_cast<double>(i);
    out.value = out.value * x + c;
  }
  // Horner above accumulated sum c_i i x^i and sum c_i i(i-1) x^i; rescale.
  if (x != 0) {
    out.first /= x;
    out.second /= (x * x);
  } else {
    out.first = p.order() >= 1 ? BigFloat(p[1]) : BigFloat(0);
    out.second = p.order() >= 2 ? BigFloat(2 * p[2]) : BigFloat(0);
  }
  return out;
}

/// d-th derivative (d = 0, 1, 2) of P at x.
inline BigFloat eval_P(const BigFloat& x, int derivOrder, unsigned digits, double truncationScale = 1.0) {
  if (derivOrder < 0 || derivOrder > 2) throw std::invalid_argument("eval_P: derivOrder must be 0, 1 or 2");
  auto v = eval_P_all(x, digits, truncationScale);
  return derivOrder == 0 ? v.value : derivOrder == 1 ? v.first : v.second;
}

/// Root of x P(x) = 1 in (0, 1): bisection on [0.1, 0.9] down to 1e-10,
/// then Newton steps on x P(x) - 1 with derivative P + x P'.
/// Works at digits + kGuardDigits.
inline BigFloat find_x0(unsigned digits, double truncationScale = 1.0) {
  if (digits < kMinPrecision) throw std::invalid_argument("find_x0: precision must be >= 15 digits");
  PrecisionScope scope(digits + kGuardDigits);
  auto f = [&](const BigFloat& x) { return x * eval_P_all(x, digits, truncationScale).value - 1; };
  BigFloat lo("0.1"), hi("0.9");
  while (hi - lo > BigFloat("1e-10")) {
    BigFloat mid = (lo + hi) / 2;
    if (f(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  BigFloat x = (lo + hi) / 2;
  const BigFloat tol = pow10(-static_cast<long>(digits + kGuardDigits / 2));
  for (int iter = 0; iter < 100; ++iter) {
    const auto v = eval_P_all(x, digits, truncationScale);
    const BigFloat step = (x * v.value - 1) / (v.value + x * v.first);
    x -= step;
    if (abs(step) < tol) break;
  }
  return x;
}

struct GrowthConstants {
  BigFloat prefactor;   // a_n ~ prefactor * growthRate^n
  BigFloat growthRate;  // 1 / x0
};

inline GrowthConstants growth_constants(const BigFloat& x0, const PartitionValues& p) {
  GrowthConstants g;
  const BigFloat gap = p.value - 1 / (1 - x0);
  g.prefactor = gap * gap * x0 / (p.value + x0 * p.first) / 2;
  g.growthRate = 1 / x0;
  return g;
}

class DegenerateSchema : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AsymptoticConstants {
  unsigned precision = kDefaultPrecision;
  std::size_t truncation = 0;

  BigFloat x0;
  BigFloat growthRate;
  BigFloat prefactor;
  BigFloat P0, P1, P2;
  /// Partial derivatives of C(x,y) = 1 - x + xy - xyP(x) at (x0, 1).
  BigFloat c10, c01, c11, c20, c02;
  /// rho(y)/rho = 1 - gamma (y-1) - delta (y-1)^2 + O((y-1)^3).
  BigFloat gamma, delta;
  BigFloat mu, sigma2;

  // Same quantities through the explicit closed forms in x0, P0, P1, P2.
  BigFloat muClosedForm, deltaClosedForm, sigma2ClosedForm;
  /// |x0 P(x0) - 1|.
  BigFloat residual;
};

/// Full constant chain at `digits` significant digits (computed with
/// kGuardDigits extra). Throws DegenerateSchema if c10 vanishes and
/// std::logic_error if the two routes to mu, delta or sigma^2 disagree
/// beyond 10^-(digits-5).
inline AsymptoticConstants clt_constants(unsigned digits = kDefaultPrecision, double truncationScale = 1.0) {
  if (digits < kMinPrecision) throw std::invalid_argument("clt_constants: precision must be >= 15 digits");
  PrecisionScope scope(digits + kGuardDigits);
  AsymptoticConstants k;
  k.precision = digits;
  k.x0 = find_x0(digits, truncationScale);
  const auto pv = eval_P_all(k.x0, digits, truncationScale);
  k.truncation = pv.truncation;
  const BigFloat& x = k.x0;
  k.P0 = pv.value;
  k.P1 = pv.first;
  k.P2 = pv.second;
  k.residual = abs(x * k.P0 - 1);

  const auto g = growth_constants(x, pv);
  k.prefactor = g.prefactor;
  k.growthRate = g.growthRate;

  k.c10 = -k.P0 - x * k.P1;
  k.c01 = x - x * k.P0;
  k.c11 = 1 - k.P0 - x * k.P1;
  k.c20 = -2 * k.P1 - x * k.P2;
  k.c02 = 0;
  if (k.c10 == 0) throw DegenerateSchema("clt_constants: c10 vanishes at x0");

  // C(rho(y), y) = 0 reverted to second order:
  //   rho(y) = rho + a (y-1) + b (y-1)^2,  a = -c01/c10,
  //   b = -(c10^2 c02 - 2 c10 c11 c01 + c20 c01^2) / (2 c10^3).
  const BigFloat a = -k.c01 / k.c10;
  const BigFloat b = -(k.c10 * k.c10 * k.c02 - 2 * k.c10 * k.c11 * k.c01 + k.c20 * k.c01 * k.c01) /
                     (2 * k.c10 * k.c10 * k.c10);
  k.gamma = -a / x;
  k.delta = -b / x;
  // m and v of rho/rho(y) = 1 + gamma t + (gamma^2 + delta) t^2 + ...
  k.mu = k.gamma;
  k.sigma2 = 2 * k.delta + k.gamma + k.gamma * k.gamma;

  const BigFloat G1 = k.P0 + x * k.P1;
  k.muClosedForm = (k.P0 - 1) / G1;
  k.deltaClosedForm = (x - 1) *
                      (2 * k.P0 * k.P0 + 2 * k.P1 - k.P2 * x + k.P2 * x * x + 2 * k.P1 * k.P1 * x * x - 2 * k.P0) /
                      (2 * x * G1 * G1 * G1);
  k.sigma2ClosedForm = (x - 1) *
                       (-1 - k.P1 * x + k.P1 * x * x + k.P1 * k.P1 * x * x * x - k.P2 * x * x + k.P2 * x * x * x) /
                       (x * x * G1 * G1 * G1);

  const BigFloat tol = pow10(-static_cast<long>(digits) + 5);
  auto agree = [&](const BigFloat& u, const BigFloat& v, const char* what) {
    if (abs(u - v) > tol)
      throw std::logic_error(std::string("clt_constants: closed form disagrees for ") + what);
  };
  agree(k.mu, k.muClosedForm, "mu");
  agree(k.delta, k.deltaClosedForm, "delta");
  agree(k.sigma2, k.sigma2ClosedForm, "sigma2");
  return k;
}

/// Pieces of F(x,y) = A + B / C where F = sum_{n, k>=2} a_{n,k} x^n y^k and
/// C = 1 - x + xy - xyP(x) carries the moving pole.
struct SchemaParts {
  BigFloat A, B, C;
  BigFloat value() const { return A + B / C; }
};

inline SchemaParts schema_parts(const BigFloat& x, const BigFloat& y, unsigned digits) {
  const BigFloat P = eval_P(x, 0, digits);
  const BigFloat Psq = eval_P(x * x, 0, digits);
  const BigFloat x2 = x * x;
  const BigFloat sym = Psq - 1 / (1 - x2);
  const BigFloat D = 1 - (Psq - 1) * x2 * y * y / (1 - x2);
  SchemaParts s;
  s.A = (sym * x2 * y * y / ((1 - x) * D) + sym * ((P - 1) / (1 - x2)) * x2 * x * y * y * y / D) / 2;
  const BigFloat ext = P - 1 / (1 - x);
  s.B = ext * ext * x2 * y * y / 2;
  s.C = 1 - x + x * y - x * y * P;
  return s;
}

struct SchemaCheck {
  std::string name;
  BigFloat value;
  bool ok = false;
  std::string detail;
};

struct SchemaReport {
  std::vector<SchemaCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const SchemaCheck& c) { return c.ok; });
  }
};

/// Conditions of the meromorphic moving-pole schema:
///   decomposition  F = A + B/C against the exact series at sample points,
///   simple root    C(x0,1) = 0 with c10 != 0 and B(x0,1) != 0,
///   A analytic     1 - x0^2 P(x0^2) != 0 (secondary pole beyond x0),
///   non-degeneracy c01 c10 != 0,
///   variability    v(rho/rho(y)) = sigma^2 != 0.
/// The table must reach n >= 80 for the decomposition check.
inline SchemaReport verify_schema(const AsymptoticConstants& k, const KLinearTable& table) {
  if (table.max_n() < 80) throw std::invalid_argument("verify_schema: counts table must reach n >= 80");
  const unsigned digits = k.precision;
  PrecisionScope scope(digits + kGuardDigits);
  SchemaReport report;

  const BigFloat seriesTol("1e-12");
  BigFloat worst = 0;
  const char* points[][2] = {{"0.2", "1"}, {"0.2", "0.9"}, {"0.2", "1.1"}, {"0.25", "1"}};
  for (const auto& pt : points) {
    const BigFloat x(pt[0]), y(pt[1]);
    BigFloat direct = 0;
    BigFloat xn = 1;
    for (std::size_t n = 1; n <= table.max_n(); ++n) {
      xn *= x;
      BigFloat yk = y * y;
      BigFloat rowSum = 0;
      for (std::size_t k2 = 2; k2 <= n; ++k2) {
        const BigInt& c = table.count(n, k2);
        if (c != 0) rowSum += BigFloat(c) * yk;
        yk *= y;
      }
      direct += rowSum * xn;
    }
    const BigFloat diff = abs(schema_parts(x, y, digits).value() - direct);
    if (diff > worst) worst = diff;
  }
  report.checks.push_back({"decomposition", worst, worst < seriesTol,
                           "max |A + B/C - sum a_{n,k} x^n y^k| over sample points"});

  const BigFloat tiny = pow10(-static_cast<long>(digits));
  const auto at = schema_parts(k.x0, BigFloat(1), digits);
  report.checks.push_back({"simple_root", abs(at.C), abs(at.C) < tiny && k.c10 != 0, "|C(x0,1)|, c10 != 0"});
  report.checks.push_back({"B_nonzero", at.B, at.B != 0, "B(x0,1)"});

  const BigFloat secondary = 1 - k.x0 * k.x0 * eval_P(k.x0 * k.x0, 0, digits);
  report.checks.push_back({"A_analytic", secondary, secondary > 0, "1 - x0^2 P(x0^2)"});

  const BigFloat nondeg = k.c01 * k.c10;
  report.checks.push_back({"non_degeneracy", nondeg, nondeg != 0, "c01 * c10"});
  report.checks.push_back({"variability", k.sigma2, k.sigma2 > tiny, "v(rho/rho(y)) = sigma^2"});
  return report;
}

struct CltDiagnostics {
  std::size_t n = 0;
  BigFloat mean;
  BigFloat variance;
  std::size_t argmax = 0;
  /// sup_k |F_n(k + 1/2) - Phi((k + 1/2 - mu n) / (sigma sqrt n))|.
  BigFloat ks;
};

/// Standard normal CDF.
inline BigFloat normal_cdf(const BigFloat& z) {
  return (1 + boost::multiprecision::erf(z / boost::multiprecision::sqrt(BigFloat(2)))) / 2;
}

/// Treats a_{n,k} / a_n, k = 0..maxK, as a distribution on k and compares it
/// with the Gaussian of mean mu n and variance sigma^2 n. maxK = 0 means n.
inline CltDiagnostics empirical_clt(const KLinearTable& table, std::size_t n, const AsymptoticConstants& k,
                                    std::size_t maxK = 0) {
  if (n == 0 || n > table.max_n())
    throw std::out_of_range("empirical_clt: n=" + std::to_string(n) + " beyond counts table (max " +
                            std::to_string(table.max_n()) + ")");
  if (maxK == 0 || maxK > n) maxK = n;
  PrecisionScope scope(k.precision + kGuardDigits);

  BigInt s0 = 0, s1 = 0, s2 = 0;
  CltDiagnostics d;
  d.n = n;
  for (std::size_t j = 0; j <= maxK; ++j) {
    const BigInt& c = table.count(n, j);
    s0 += c;
    s1 += c * j;
    s2 += c * j * j;
    if (c > table.count(n, d.argmax)) d.argmax = j;
  }
  const BigFloat total(s0);
  d.mean = BigFloat(s1) / total;
  d.variance = BigFloat(s2) / total - d.mean * d.mean;

  const BigFloat nn(static_cast<unsigned long>(n));
  const BigFloat center = k.mu * nn;
  const BigFloat scale = boost::multiprecision::sqrt(k.sigma2 * nn);
  BigInt cum = 0;
  d.ks = 0;
  for (long j = -1; j <= static_cast<long>(maxK); ++j) {
    if (j >= 0) cum += table.count(n, static_cast<std::size_t>(j));
    const BigFloat cut = BigFloat(j) + BigFloat("0.5");
    const BigFloat gap = abs(BigFloat(cum) / total - normal_cdf((cut - center) / scale));
    if (gap > d.ks) d.ks = gap;
  }
  return d;
}

}  // namespace lintree
