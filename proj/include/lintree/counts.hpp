#pragma once

// Exact counts of k-linear trees extracted from the bivariate generating
// function, plus free-tree totals and the linear/nonlinear census.
//
// A k-linear tree with k >= 2 is read off its spine as
//   exterior star, (path, interior star)^(k-2), path, exterior star
// so every tree is produced twice by the reflection series r, except the
// reflection-symmetric ones, which the symmetric series s counts once more.
// Hence 2 a_{n,k} = r_{n,k} + s_{n,k}.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lintree/series.hpp"

namespace lintree {

namespace detail {

inline UniSeries<> minus_one(UniSeries<> s) {
  s[0] -= 1;
  return s;
}

}  // namespace detail

/// Sum_{n,k} r_{n,k} x^n y^k where r_{n,k} counts k-linear trees on n vertices
/// with an orientation of their spine (k >= 2 only):
///   (P(x) - 1/(1-x))^2 x^2 y^2 / (1 - x + xy - xyP(x)).
/// The denominator is split as (1-x)(1 - y x(P(x)-1)/(1-x)) so the geometric
/// expansion acts on a y-homogeneous term.
inline BiSeries<> reflection_gf(std::size_t orderX, std::size_t orderY) {
  if (orderX < 2) throw std::invalid_argument("reflection_gf: orderX must be >= 2");
  const auto p = partition_gf(orderX);
  const auto geo = geometric_gf(orderX);
  const auto exterior = p - geo;

  const auto numerator = scale_by_monomial(exterior * exterior * geo, 2);
  const auto step = scale_by_monomial(detail::minus_one(p) * geo, 1);

  const auto u = scale_by_monomial(BiSeries<>::lift(step, orderY), 0, 1);
  const auto num = scale_by_monomial(BiSeries<>::lift(numerator, orderY), 0, 2);
  return num * geometric_inverse(u);
}

/// Even-k part of the symmetric series: a free central path flanked by a
/// mirrored half, (1/(1-x)) (P(x^2) - 1/(1-x^2)) x^2 y^2 / D(x,y).
inline BiSeries<> symmetric_even_gf(std::size_t orderX, std::size_t orderY) {
  const auto p = partition_gf(orderX);
  const auto p2 = substitute_x_squared(p);
  const auto geo = geometric_gf(orderX);
  const auto geo2 = substitute_x_squared(geo);

  const auto step = scale_by_monomial(detail::minus_one(p2) * geo2, 2);
  const auto u = scale_by_monomial(BiSeries<>::lift(step, orderY), 0, 2);
  const auto inv = geometric_inverse(u);

  const auto even = scale_by_monomial(geo * (p2 - geo2), 2);
  return scale_by_monomial(BiSeries<>::lift(even, orderY), 0, 2) * inv;
}

/// Odd-k part: the central component is a generalized star,
/// (P(x^2) - 1/(1-x^2)) ((P(x)-1)/(1-x^2)) x^3 y^3 / D(x,y).
inline BiSeries<> symmetric_odd_gf(std::size_t orderX, std::size_t orderY) {
  const auto p = partition_gf(orderX);
  const auto p2 = substitute_x_squared(p);
  const auto geo2 = substitute_x_squared(geometric_gf(orderX));

  const auto step = scale_by_monomial(detail::minus_one(p2) * geo2, 2);
  const auto u = scale_by_monomial(BiSeries<>::lift(step, orderY), 0, 2);
  const auto inv = geometric_inverse(u);

  const auto odd = scale_by_monomial((p2 - geo2) * detail::minus_one(p) * geo2, 3);
  return scale_by_monomial(BiSeries<>::lift(odd, orderY), 0, 3) * inv;
}

/// Sum_{n,k} s_{n,k} x^n y^k, s_{n,k} = number of reflection-symmetric
/// k-linear trees on n vertices (k >= 2).
inline BiSeries<> symmetric_gf(std::size_t orderX, std::size_t orderY) {
  if (orderX < 2) throw std::invalid_argument("symmetric_gf: orderX must be >= 2");
  return symmetric_even_gf(orderX, orderY) + symmetric_odd_gf(orderX, orderY);
}

/// Number of partitions of m into at least three parts.
inline BigInt partitions_with_three_or_more_parts(std::size_t m, const UniSeries<>& p) {
  if (m == 0) return 0;
  return p[m] - 1 - BigInt(m / 2);
}

/// (r + s) / 2, throwing std::logic_error when r + s is odd.
inline BigInt klinear_count(const BigInt& r, const BigInt& s) {
  BigInt sum = r + s;
  if (boost::multiprecision::bit_test(sum, 0))
    throw std::logic_error("klinear_count: r + s = " + sum.str() + " is odd");
  return sum / 2;
}

/// Triangular table of exact counts a_{n,k}, 1 <= n <= maxN, 0 <= k <= n.
class KLinearTable {
 public:
  KLinearTable() = default;
  explicit KLinearTable(std::size_t maxN) : maxN_(maxN), a_(maxN + 1), r_(maxN + 1), s_(maxN + 1) {
    for (std::size_t n = 0; n <= maxN; ++n) {
      a_[n].resize(n + 1);
      r_[n].resize(n + 1);
      s_[n].resize(n + 1);
    }
  }

  std::size_t max_n() const noexcept { return maxN_; }

  /// a_{n,k}; zero for k > n.
  const BigInt& count(std::size_t n, std::size_t k) const {
    check_row(n);
    return k <= n ? a_[n][k] : zero();
  }
  const BigInt& reflections(std::size_t n, std::size_t k) const {
    check_row(n);
    return k <= n ? r_[n][k] : zero();
  }
  const BigInt& symmetric(std::size_t n, std::size_t k) const {
    check_row(n);
    return k <= n ? s_[n][k] : zero();
  }
  const std::vector<BigInt>& row(std::size_t n) const {
    check_row(n);
    return a_[n];
  }

  /// Largest k with a_{n,k} != 0.
  std::size_t max_k(std::size_t n) const {
    const auto& r = row(n);
    std::size_t k = r.size() - 1;
    while (k > 0 && r[k] == 0) --k;
    return k;
  }

  BigInt& mutable_count(std::size_t n, std::size_t k) { return a_.at(n).at(k); }
  BigInt& mutable_reflections(std::size_t n, std::size_t k) { return r_.at(n).at(k); }
  BigInt& mutable_symmetric(std::size_t n, std::size_t k) { return s_.at(n).at(k); }

 private:
  void check_row(std::size_t n) const {
    if (n == 0 || n > maxN_)
      throw std::out_of_range("KLinearTable: row " + std::to_string(n) + " outside 1.." +
                              std::to_string(maxN_));
  }
  static const BigInt& zero() {
    static const BigInt z = 0;
    return z;
  }

  std::size_t maxN_ = 0;
  std::vector<std::vector<BigInt>> a_;
  std::vector<std::vector<BigInt>> r_;
  std::vector<std::vector<BigInt>> s_;
};

/// Build a_{n,k} for 1 <= n <= maxN.
///   k = 0: the path, a_{n,0} = 1.
///   k = 1: generalized stars whose center has degree >= 3, i.e. partitions
///          of n-1 into at least three parts.
///   k >= 2: (r_{n,k} + s_{n,k}) / 2; an odd sum throws std::logic_error.
inline KLinearTable klinear_table(std::size_t maxN) {
  if (maxN < 1) throw std::invalid_argument("klinear_table: maxN must be >= 1");
  KLinearTable table(maxN);
  const auto p = partition_gf(maxN);
  for (std::size_t n = 1; n <= maxN; ++n) {
    table.mutable_count(n, 0) = 1;
    if (n >= 2) table.mutable_count(n, 1) = partitions_with_three_or_more_parts(n - 1, p);
  }
  if (maxN < 2) return table;

  const auto r = reflection_gf(maxN, maxN);
  const auto s = symmetric_gf(maxN, maxN);
  for (std::size_t n = 1; n <= maxN; ++n) {
    for (std::size_t k = 0; k <= maxN; ++k) {
      const BigInt& rv = r.at(n, k);
      const BigInt& sv = s.at(n, k);
      if (k > n || k < 2) {
        if (rv != 0 || sv != 0)
          throw std::logic_error("klinear_table: nonzero coefficient outside 2 <= k <= n at n=" +
                                 std::to_string(n) + ", k=" + std::to_string(k));
        continue;
      }
      table.mutable_reflections(n, k) = rv;
      table.mutable_symmetric(n, k) = sv;
      table.mutable_count(n, k) = klinear_count(rv, sv);
    }
  }
  return table;
}

/// Sum over k >= 0 of a_{n,k}, path included.
inline BigInt linear_total(const KLinearTable& table, std::size_t n) {
  BigInt total = 0;
  for (const auto& v : table.row(n)) total += v;
  return total;
}

/// Unrooted unlabeled trees on n vertices, index 0..maxN (entry 0 is 0).
/// Rooted counts t(n) come from the Euler transform
///   t(n+1) = (1/n) sum_{k=1}^{n} (sum_{d|k} d t(d)) t(n-k+1),
/// free counts from Otter's formula f(x) = T(x) - (T(x)^2 - T(x^2)) / 2.
inline std::vector<BigInt> free_tree_counts(std::size_t maxN) {
  if (maxN < 1) throw std::invalid_argument("free_tree_counts: maxN must be >= 1");
  std::vector<BigInt> t(maxN + 1);
  t[1] = 1;
  std::vector<BigInt> divisorSum(maxN + 1);
  for (std::size_t n = 1; n < maxN; ++n) {
    divisorSum[n] = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) divisorSum[n] += BigInt(d) * t[d];
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += divisorSum[k] * t[n - k + 1];
    if (acc % n != 0) throw std::logic_error("free_tree_counts: non-integral rooted count");
    t[n + 1] = acc / n;
  }

  std::vector<BigInt> f(maxN + 1);
  for (std::size_t n = 1; n <= maxN; ++n) {
    BigInt square = 0;
    for (std::size_t i = 1; i < n; ++i) square += t[i] * t[n - i];
    if (n % 2 == 0) square -= t[n / 2];
    if (boost::multiprecision::bit_test(square, 0))
      throw std::logic_error("free_tree_counts: odd dissimilarity term");
    f[n] = t[n] - square / 2;
  }
  return f;
}

struct TreeCensus {
  std::size_t n = 0;
  BigInt totalTrees;
  BigInt linearTotal;
  BigInt nonlinear;
  /// Nonlinear share in tenths of a percent, rounded half up.
  long percentTenths = 0;

  std::string percent_string() const {
    return std::to_string(percentTenths / 10) + "." + std::to_string(percentTenths % 10);
  }
};

inline TreeCensus census(const KLinearTable& table, const std::vector<BigInt>& freeCounts,
                         std::size_t n) {
  if (n >= freeCounts.size() || n == 0)
    throw std::out_of_range("census: no free-tree total for n=" + std::to_string(n));
  TreeCensus c;
  c.n = n;
  c.totalTrees = freeCounts[n];
  c.linearTotal = linear_total(table, n);
  c.nonlinear = c.totalTrees - c.linearTotal;
  if (c.nonlinear < 0) throw std::logic_error("census: more linear trees than trees");
  const BigInt tenths = (BigInt(2000) * c.nonlinear + c.totalTrees) / (BigInt(2) * c.totalTrees);
  c.percentTenths = tenths.convert_to<long>();
  return c;
}

}  // namespace lintree
