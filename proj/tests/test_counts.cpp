#include <gtest/gtest.h>

#include "fixtures/reference_tables.hpp"
#include "lintree/counts.hpp"
#include "lintree/oracle.hpp"

using lintree::BigInt;

namespace {

const lintree::KLinearTable& table25() {
  static const auto t = lintree::klinear_table(25);
  return t;
}

// Partitions of m into at least three parts, by counting partitions with
// exactly j parts (parts bounded below by 1) recursively.
std::uint64_t partitions_exact_parts(int m, int parts, int minPart) {
  if (parts == 0) return m == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (int first = minPart; first * parts <= m; ++first) total += partitions_exact_parts(m - first, parts - 1, first);
  return total;
}

}  // namespace

TEST(KLinearTable, SpotValues) {
  const auto& t = table25();
  EXPECT_EQ(t.count(4, 1), 1);
  EXPECT_EQ(t.count(10, 1), 25);
  EXPECT_EQ(t.count(10, 2), 56);
  EXPECT_EQ(t.count(13, 3), 576);
  EXPECT_EQ(t.count(12, 5), 1);
  EXPECT_EQ(t.count(25, 11), 17);
  EXPECT_EQ(t.max_k(25), 11u);
}

TEST(KLinearTable, Totals) {
  const auto& t = table25();
  EXPECT_EQ(lintree::linear_total(t, 1), 1);
  EXPECT_EQ(lintree::linear_total(t, 3), 1);
  EXPECT_EQ(lintree::linear_total(t, 10), 105);
  EXPECT_EQ(lintree::linear_total(t, 25), BigInt("38955354"));
  for (std::size_t n = 4; n <= 25; ++n)
    EXPECT_GT(lintree::linear_total(t, n), lintree::linear_total(t, n - 1)) << "n=" << n;
}

TEST(KLinearTable, ReferenceRowsAgreeOutsideRow13) {
  const auto& t = table25();
  for (const auto& row : lintree::fixtures::kPrintedTable1) {
    for (std::size_t k = 1; k <= 11; ++k) {
      if (row.n == 13 && k == 2) continue;
      EXPECT_EQ(t.count(row.n, k), BigInt(row.k[k - 1])) << "n=" << row.n << " k=" << k;
    }
    if (row.n != 13) EXPECT_EQ(lintree::linear_total(t, row.n), BigInt(row.total)) << "n=" << row.n;
  }
  // These two agree with exhaustive enumeration, not with the printed row.
  EXPECT_EQ(t.count(13, 2), 411);
  EXPECT_EQ(lintree::linear_total(t, 13), 1224);
}

TEST(KLinearTable, StructuralInvariants) {
  const auto& t = table25();
  for (std::size_t n = 1; n <= 25; ++n) {
    EXPECT_EQ(t.count(n, 0), 1);
    EXPECT_EQ(t.row(n).size(), n + 1);
    EXPECT_EQ(t.count(n, n + 3), 0);
    for (std::size_t k = 2; k <= n; ++k) {
      EXPECT_EQ(t.count(n, k) * 2, t.reflections(n, k) + t.symmetric(n, k));
      EXPECT_GE(t.reflections(n, k), t.symmetric(n, k));
      // A k-linear tree needs at least 2k + 2 vertices.
      if (n < 2 * k + 2) EXPECT_EQ(t.count(n, k), 0) << "n=" << n << " k=" << k;
    }
  }
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(t.count(n, k), 0);
}

TEST(KLinearTable, SymmetricSeriesContributesAtOddN) {
  const auto& t = table25();
  bool seen = false;
  for (std::size_t n = 7; n <= 25; n += 2)
    if (t.symmetric(n, 2) > 0) seen = true;
  EXPECT_TRUE(seen);
  EXPECT_GT(t.symmetric(8, 2), 0);
}

TEST(KLinearTable, StarsMatchPartitionsIntoThreeOrMoreParts) {
  const auto& t = table25();
  for (int n = 2; n <= 25; ++n) {
    const int m = n - 1;
    std::uint64_t expected = 0;
    for (int parts = 3; parts <= m; ++parts) expected += partitions_exact_parts(m, parts, 1);
    EXPECT_EQ(t.count(n, 1), BigInt(expected)) << "n=" << n;
  }
}

TEST(KLinearTable, MatchesEnumerationUpTo12) {
  const auto& t = table25();
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto oc = lintree::oracle_census(n);
    for (std::size_t k = 0; k <= n; ++k)
      EXPECT_EQ(t.count(n, k), BigInt(oc.linearByK[k])) << "n=" << n << " k=" << k;
  }
}

TEST(KLinearTable, RowAccessErrors) {
  const auto& t = table25();
  EXPECT_THROW(t.count(0, 0), std::out_of_range);
  EXPECT_THROW(t.count(26, 0), std::out_of_range);
  EXPECT_THROW(lintree::klinear_table(0), std::invalid_argument);
  EXPECT_NO_THROW(lintree::klinear_table(1));
}

TEST(KLinearCount, RejectsOddSums) {
  EXPECT_EQ(lintree::klinear_count(5, 3), 4);
  EXPECT_THROW(lintree::klinear_count(5, 2), std::logic_error);
}

TEST(GeneratingFunctions, SupportStartsAtTwoHdvs) {
  const auto r = lintree::reflection_gf(20, 20);
  const auto s = lintree::symmetric_gf(20, 20);
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_EQ(r.coeff(n, 0), 0);
    EXPECT_EQ(r.coeff(n, 1), 0);
    EXPECT_EQ(s.coeff(n, 0), 0);
    EXPECT_EQ(s.coeff(n, 1), 0);
  }
  // Smallest 2-linear tree: two degree-3 vertices joined by an edge.
  for (std::size_t n = 0; n < 6; ++n) EXPECT_EQ(r.coeff(n, 2), 0);
  EXPECT_EQ(r.coeff(6, 2), 1);
  EXPECT_EQ(s.coeff(6, 2), 1);
  EXPECT_THROW(lintree::reflection_gf(1, 4), std::invalid_argument);
  EXPECT_THROW(lintree::symmetric_gf(1, 4), std::invalid_argument);
}

TEST(FreeTrees, KnownCounts) {
  const auto f = lintree::free_tree_counts(25);
  const int small[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(f[n], small[n]) << "n=" << n;
  EXPECT_EQ(f[10], 106);
  EXPECT_EQ(f[20], 823065);
  EXPECT_EQ(f[25], BigInt("104636890"));
  EXPECT_THROW(lintree::free_tree_counts(0), std::invalid_argument);
}

TEST(Census, Rows) {
  const auto& t = table25();
  const auto f = lintree::free_tree_counts(25);
  const auto c10 = lintree::census(t, f, 10);
  EXPECT_EQ(c10.nonlinear, 1);
  EXPECT_EQ(c10.percent_string(), "0.9");
  const auto c20 = lintree::census(t, f, 20);
  EXPECT_EQ(c20.nonlinear, 315116);
  EXPECT_EQ(c20.totalTrees, 823065);
  EXPECT_EQ(c20.percent_string(), "38.3");
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(lintree::census(t, f, n).nonlinear, 0) << "n=" << n;
  const auto c13 = lintree::census(t, f, 13);
  EXPECT_EQ(c13.nonlinear, 77);
  EXPECT_EQ(c13.percent_string(), "5.9");
  EXPECT_THROW(lintree::census(t, f, 26), std::out_of_range);
}
