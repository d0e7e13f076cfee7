#pragma once

// Hall–Littlewood polynomials P_λ and Q_λ = b_λ(t)·P_λ in finitely many
// variables, evaluated exactly. The primary route is the branching rule over
// horizontal strips; the permutation-sum definition is kept as an oracle.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "younggraph/partition.hpp"
#include "younggraph/poly.hpp"
#include "younggraph/rational.hpp"
#include "younggraph/verdict.hpp"

namespace younggraph {

/// μ with λ/μ a horizontal strip: λ_{a+1} ≤ μ_a ≤ λ_a.
inline std::vector<Partition> interlacing_below(const Partition& lambda) {
  std::vector<Partition> out;
  const int rows = lambda.length();
  std::vector<int> mu(static_cast<std::size_t>(rows), 0);
  std::function<void(int)> rec = [&](int row) {
    if (row > rows) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda[row]; v >= lambda[row + 1]; --v) {
      mu[static_cast<std::size_t>(row - 1)] = v;
      rec(row + 1);
    }
  };
  rec(1);
  return out;
}

/// ψ_{λ/μ}(t) = Π_{j∈J} (1 − t^{m_j(μ)}), J = { j ≥ 1 : θ'_j = 0, θ'_{j+1} = 1 },
/// θ' the column counts of the strip λ/μ.
inline RationalPoly1 hl_psi(const Partition& lambda, const Partition& mu) {
  RationalPoly1 out = 1;
  for (int j = 1; j <= lambda[1]; ++j) {
    int theta_j = lambda.column(j) - mu.column(j);
    int theta_next = lambda.column(j + 1) - mu.column(j + 1);
    if (theta_j == 0 && theta_next == 1) out *= RationalPoly1::one_minus_t_pow(static_cast<unsigned>(mu.multiplicity(j)));
  }
  return out;
}

/// b_λ(t) = Π_{i≥1} Π_{j=1}^{m_i(λ)} (1 − t^j).
inline RationalPoly1 hl_b(const Partition& lambda) {
  RationalPoly1 out = 1;
  std::set<int> distinct(lambda.parts().begin(), lambda.parts().end());
  for (int part : distinct)
    for (int j = 1; j <= lambda.multiplicity(part); ++j) out *= RationalPoly1::one_minus_t_pow(static_cast<unsigned>(j));
  return out;
}

/// Memoizing evaluator for P_λ(1^N; t) as a polynomial in t.
class HallLittlewoodOnes {
 public:
  RationalPoly1 P(const Partition& lambda, int vars) {
    if (vars < 0) throw std::invalid_argument("Hall-Littlewood: negative number of variables");
    if (lambda.length() > vars) return {};
    if (vars == 0) return 1;
    auto key = std::make_pair(lambda, vars);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RationalPoly1 total;
    for (const Partition& mu : interlacing_below(lambda)) {
      if (mu.length() > vars - 1) continue;
      total += hl_psi(lambda, mu) * P(mu, vars - 1);
    }
    memo_.emplace(key, total);
    return total;
  }

  RationalPoly1 Q(const Partition& lambda, int vars) { return hl_b(lambda) * P(lambda, vars); }

 private:
  std::map<std::pair<Partition, int>, RationalPoly1> memo_;
};

inline BigRat hl_P(const Partition& lambda, int vars, const BigRat& t) {
  if (vars < lambda.length())
    throw std::invalid_argument("hl_P: N = " + std::to_string(vars) + " is smaller than the length of (" +
                                lambda.str() + ")");
  return HallLittlewoodOnes().P(lambda, vars)(t);
}

inline BigRat hl_Q(const Partition& lambda, int vars, const BigRat& t) {
  if (vars < lambda.length())
    throw std::invalid_argument("hl_Q: N = " + std::to_string(vars) + " is smaller than the length of (" +
                                lambda.str() + ")");
  return HallLittlewoodOnes().Q(lambda, vars)(t);
}

/// P_λ(x_1, …, x_N; t) at arbitrary points, by the same branching rule.
inline BigRat hl_P_at(const Partition& lambda, const std::vector<BigRat>& xs, const BigRat& t) {
  std::map<std::pair<Partition, int>, BigRat> memo;
  std::function<BigRat(const Partition&, int)> rec = [&](const Partition& p, int vars) -> BigRat {
    if (p.length() > vars) return 0;
    if (vars == 0) return 1;
    auto key = std::make_pair(p, vars);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigRat total = 0;
    const BigRat& x = xs[static_cast<std::size_t>(vars - 1)];
    for (const Partition& mu : interlacing_below(p)) {
      if (mu.length() > vars - 1) continue;
      total += hl_psi(p, mu)(t) * pow(x, static_cast<unsigned>(p.size() - mu.size())) * rec(mu, vars - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(lambda, static_cast<int>(xs.size()));
}

inline BigRat hl_Q_at(const Partition& lambda, const std::vector<BigRat>& xs, const BigRat& t) {
  return hl_b(lambda)(t) * hl_P_at(lambda, xs, t);
}

inline constexpr int kMaxSymmetrizationVars = 8;

/// Literal permutation-sum formula
///   Q_λ = (1−t)^N Π_{i=1}^{N−ℓ} 1/(1−t^i) · Σ_{σ∈S_N} x_σ^λ Π_{i<j} (x_σ(i) − t x_σ(j))/(x_σ(i) − x_σ(j)).
/// The sum runs over the symmetric group on the N variables. The prefactor is
/// evaluated as (1−t)^ℓ / Π_{i=1}^{N−ℓ} [i]_t, which equals it for t ≠ 1 and
/// extends it continuously to t = 1.
inline BigRat hl_Q_symmetrization(const Partition& lambda, const std::vector<BigRat>& xs, const BigRat& t) {
  const int n = static_cast<int>(xs.size());
  if (n > kMaxSymmetrizationVars)
    throw std::invalid_argument("hl_Q_symmetrization: at most " + std::to_string(kMaxSymmetrizationVars) +
                                " variables (the sum has N! terms)");
  if (lambda.length() > n)
    throw std::invalid_argument("hl_Q_symmetrization: more parts than variables");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (xs[static_cast<std::size_t>(a)] == xs[static_cast<std::size_t>(b)])
        throw std::invalid_argument(
            "hl_Q_symmetrization: variables must be pairwise distinct; each term divides by x_i − x_j, "
            "so repeated values are a removable singularity the literal formula cannot evaluate");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigRat sum = 0;
  do {
    BigRat term = 1;
    for (int a = 0; a < n; ++a) term *= pow(xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])],
                                            static_cast<unsigned>(lambda[a + 1]));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const BigRat& xa = xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])];
        const BigRat& xb = xs[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])];
        term *= (xa - t * xb) / (xa - xb);
      }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  BigRat prefactor = pow(BigRat(1 - t), static_cast<unsigned>(lambda.length()));
  for (int i = 1; i <= n - lambda.length(); ++i) prefactor /= RationalPoly1::q_integer(static_cast<unsigned>(i))(t);
  return prefactor * sum;
}

struct Conj24Check {
  InequalityCheck check;        // lhs = (1 − t^{λ̂'_c − λ̂'_{c+1}}) Q_μ̂/Q_λ̂, rhs = the same for λ, μ
  bool prefactor_vanishes = false;
  bool limit_taken = false;     // a side was 0/0 at t and was evaluated as a limit
};

/// Hall–Littlewood form of the elementary inequality at Q(1^N; t). Both sides
/// are rational functions of t; a vanishing denominator at t is resolved by
/// cancelling the common factor before substituting.
inline Conj24Check check_conj24(const MoveQuadruple& q, int vars, const BigRat& t, HallLittlewoodOnes& hl) {
  if (vars < q.lambda_hat.length())
    throw std::invalid_argument("check_conj24: N must be at least the length of lambda_hat");
  const int c = q.removed.col;
  const int a_hat = q.lambda_hat.column(c) - q.lambda_hat.column(c + 1);
  const int a = q.lambda.column(c) - q.lambda.column(c + 1);
  Conj24Check out;
  out.prefactor_vanishes = a_hat == 0 || a == 0;
  bool lim1 = false, lim2 = false;
  BigRat hat_side = evaluate_ratio(RationalPoly1::one_minus_t_pow(static_cast<unsigned>(a_hat)) * hl.Q(q.mu_hat, vars),
                                   hl.Q(q.lambda_hat, vars), t, &lim1);
  BigRat plain_side = evaluate_ratio(RationalPoly1::one_minus_t_pow(static_cast<unsigned>(a)) * hl.Q(q.mu, vars),
                                     hl.Q(q.lambda, vars), t, &lim2);
  out.limit_taken = lim1 || lim2;
  out.check = judge(q.tag, std::move(hat_side), std::move(plain_side));
  return out;
}

inline Conj24Check check_conj24(const MoveQuadruple& q, int vars, const BigRat& t) {
  HallLittlewoodOnes hl;
  return check_conj24(q, vars, t, hl);
}

}  // namespace younggraph
