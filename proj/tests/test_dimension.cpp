#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "younggraph/dimension.hpp"
#include "younggraph/symfunc.hpp"

using namespace younggraph;

namespace {

// Paths μ → λ by peeling corners off λ until μ is reached.
BigInt count_paths(const Partition& lambda, const Partition& mu) {
  std::map<Partition, BigInt> memo;
  std::function<BigInt(const Partition&)> rec = [&](const Partition& p) -> BigInt {
    if (p == mu) return 1;
    if (p.size() <= mu.size() || !p.contains(mu)) return 0;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    BigInt total = 0;
    for (Cell c : removable_corners(p)) total += rec(remove_box(p, c));
    memo[p] = total;
    return total;
  };
  return rec(lambda);
}

// Leading coefficient of the degree-d polynomial through (x_k, y_k), by
// divided differences: Σ_k y_k / Π_{m≠k} (x_k − x_m).
BigRat leading_coefficient(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys) {
  BigRat out = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    BigRat denom = 1;
    for (std::size_t m = 0; m < xs.size(); ++m)
      if (m != k) denom *= xs[k] - xs[m];
    out += ys[k] / denom;
  }
  return out;
}

}  // namespace

TEST(Dimension, HookExamples) {
  EXPECT_EQ(dim_hook(Partition{1}), 1);
  EXPECT_EQ(dim_hook(Partition{2, 1}), 2);
  EXPECT_EQ(dim_hook(Partition{3, 1, 1}), 6);
  EXPECT_EQ(dim_hook(Partition()), 1);
}

TEST(Dimension, PathExamples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(dim_paths(Partition{n}), 1);
  EXPECT_EQ(dim_paths(Partition{2, 2}), 2);
  EXPECT_EQ(dim_paths(Partition{2, 1}), 2);
  EXPECT_THROW(dim_paths(Partition{13}), LimitError);
  EXPECT_NO_THROW(dim_paths(Partition{13}, 13));
}

TEST(Dimension, HookAgreesWithPathsUpToTen) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(dim_hook(p), dim_paths(p)) << p.str();
}

TEST(Dimension, SumOfSquaresIsFactorial) {
  for (int n = 0; n <= 10; ++n) {
    BigInt total = 0;
    for (const auto& p : enumerate_partitions(n)) total += dim_hook(p) * dim_hook(p);
    EXPECT_EQ(total, factorial(static_cast<unsigned long>(n))) << n;
  }
}

TEST(Dimension, BranchingRecursion) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      BigInt total = 0;
      for (Cell c : removable_corners(p)) total += dim_hook(remove_box(p, c));
      EXPECT_EQ(total, dim_hook(p));
    }
}

TEST(Dimension, IsLeadingCoefficientOfSchurAtOnes) {
  // s_λ(1^N) is a polynomial of degree |λ| in N with leading coefficient dim(λ)/|λ|!.
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      std::vector<BigRat> xs, ys;
      for (int N = p.length(); N <= p.length() + n; ++N) {
        xs.push_back(N);
        ys.push_back(schur_ones(p, N));
      }
      BigRat expected(dim_hook(p), factorial(static_cast<unsigned long>(n)));
      expected.canonicalize();
      EXPECT_EQ(leading_coefficient(xs, ys), expected) << p.str();
    }
}

TEST(SkewDimension, Examples) {
  EXPECT_EQ(skew_dim(Partition{2, 1}, Partition{1}), 2);
  EXPECT_EQ(skew_dim(Partition{3, 2}, Partition{2}), 3);
  for (const auto& p : enumerate_partitions(7)) EXPECT_EQ(skew_dim(p, Partition()), dim_hook(p));
  EXPECT_EQ(skew_dim(Partition{3, 1}, Partition{3, 1}), 1);
}

TEST(SkewDimension, MatchesPathCountUpToEight) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : enumerate_partitions(m)) {
          if (!lambda.contains(mu)) continue;
          EXPECT_EQ(skew_dim(lambda, mu), count_paths(lambda, mu)) << lambda.str() << " / " << mu.str();
        }
}

TEST(SkewDimension, LargeShapeAgreesWithProjectionIdentity) {
  // Σ_{μ ⊢ r, μ ⊆ λ} skew_dim(λ,μ)·dim(μ) = dim(λ).
  Partition lambda{40, 22, 9, 9, 3, 1, 1, 1, 1, 1};
  for (int r : {1, 2, 5}) {
    BigInt total = 0;
    for (const auto& mu : enumerate_partitions(r))
      if (lambda.contains(mu)) total += skew_dim(lambda, mu) * dim_hook(mu);
    EXPECT_EQ(total, dim_hook(lambda)) << r;
  }
}

TEST(SkewDimension, NonContainmentNamesRow) {
  try {
    skew_dim(Partition{3, 1}, Partition{2, 2});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(DimensionRatios, ReferenceQuadruple) {
  for (const auto& q : enumerate_move_quadruples(5)) {
    if (q.lambda != Partition{3, 1, 1} || q.lambda_hat != Partition{2, 2, 1}) continue;
    auto check = check_cor23(q);
    EXPECT_EQ(check.lhs, BigRat(2, 5));
    EXPECT_EQ(check.rhs, BigRat(1, 2));
    EXPECT_EQ(check.verdict, Verdict::holds);
  }
}

TEST(DimensionRatios, HoldEverywhereUpToEight) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& q : enumerate_move_quadruples(n)) {
      auto check = check_cor23(q);
      if (q.tag == CaseTag::between) EXPECT_EQ(check.verdict, Verdict::not_applicable);
      else EXPECT_EQ(check.verdict, Verdict::holds) << q.lambda.str() << " " << q.lambda_hat.str();
    }
}
