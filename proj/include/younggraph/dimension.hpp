#pragma once

// Dimensions in the Young graph: dim(λ) (number of paths ∅ → λ), skew
// dimensions, and the dimension-ratio form of the elementary monotonicity
// inequality.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "younggraph/errors.hpp"
#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"
#include "younggraph/verdict.hpp"

namespace younggraph {

/// Hook-length formula: |λ|! / Π hooks.
inline BigInt dim_hook(const Partition& lambda) {
  BigInt hooks = 1;
  for (int a = 1; a <= lambda.length(); ++a)
    for (int b = 1; b <= lambda[a]; ++b)
      hooks *= (lambda[a] - b) + (lambda.column(b) - a) + 1;
  BigInt result = factorial(static_cast<unsigned long>(lambda.size()));
  mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), hooks.get_mpz_t());
  return result;
}

inline constexpr int kDefaultPathLimit = 12;

/// Direct path count via dim(λ) = Σ_{μ↗λ} dim(μ), memoized. Independent of
/// the hook-length formula; used as its oracle.
inline BigInt dim_paths(const Partition& lambda, int limit = kDefaultPathLimit) {
  if (lambda.size() > limit)
    throw LimitError("dim_paths: |lambda| = " + std::to_string(lambda.size()) +
                     " exceeds the limit " + std::to_string(limit));
  std::map<Partition, BigInt> memo;
  auto rec = [&](auto&& self, const Partition& p) -> BigInt {
    if (p.empty()) return 1;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    BigInt total = 0;
    for (Cell c : removable_corners(p)) total += self(self, remove_box(p, c));
    memo.emplace(p, total);
    return total;
  };
  return rec(rec, lambda);
}

namespace detail {

/// Fraction-free (Bareiss) determinant of an integer matrix.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  return sign < 0 ? BigInt(-det) : det;
}

/// Π_{t=0}^{count-1} (top - t).
inline BigInt falling_factorial(long top, long count) {
  BigInt out = 1;
  for (long t = 0; t < count; ++t) out *= top - t;
  return out;
}

}  // namespace detail

/// Number of standard fillings of λ/μ, from the Aitken determinant
/// |λ/μ|! · det[1/(λ_a − μ_b − a + b)!]. Each row a is scaled by
/// (λ_a − a + ℓ)! so the matrix is integral; the smaller of λ and λ' is used.
inline BigInt skew_dim(const Partition& lambda, const Partition& mu) {
  for (int a = 1; a <= std::max(lambda.length(), mu.length()); ++a)
    if (mu[a] > lambda[a])
      throw std::invalid_argument("skew_dim: (" + mu.str() + ") is not contained in (" +
                                  lambda.str() + "), first violating row " + std::to_string(a));
  if (lambda.length() > lambda[1]) return skew_dim(conjugate(lambda), conjugate(mu));
  const int rows = lambda.length();
  if (rows == 0) return 1;
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(rows),
                                     std::vector<BigInt>(static_cast<std::size_t>(rows)));
  BigInt scale = 1;
  for (int a = 1; a <= rows; ++a) {
    long top = lambda[a] - a + rows;
    scale *= factorial(static_cast<unsigned long>(top));
    for (int b = 1; b <= rows; ++b) {
      long k = static_cast<long>(lambda[a]) - mu[b] - a + b;
      // top! / k! as a falling factorial of length top - k.
      m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
          k < 0 ? BigInt(0) : detail::falling_factorial(top, top - k);
    }
  }
  BigInt result = detail::bareiss_determinant(std::move(m)) *
                  factorial(static_cast<unsigned long>(lambda.size() - mu.size()));
  mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), scale.get_mpz_t());
  return result;
}

/// dim(μ̂)/dim(λ̂) against dim(μ)/dim(λ), oriented by the case tag.
inline InequalityCheck check_cor23(const MoveQuadruple& q) {
  BigRat hat_side(dim_hook(q.mu_hat), dim_hook(q.lambda_hat));
  BigRat plain_side(dim_hook(q.mu), dim_hook(q.lambda));
  hat_side.canonicalize();
  plain_side.canonicalize();
  return judge(q.tag, std::move(hat_side), std::move(plain_side));
}

}  // namespace younggraph
