#pragma once

// Schur-side computations: principal specializations s_λ(1^N), Kostka
// numbers, Littlewood–Richardson products, and the Schur-function forms of the
// elementary monotonicity inequality.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"
#include "younggraph/verdict.hpp"

namespace younggraph {

/// Weyl dimension formula s_λ(1^N) = Π_{a<b≤N} (λ_a − a − λ_b + b)/(b − a).
inline BigRat schur_ones(const Partition& lambda, int vars) {
  if (vars < lambda.length())
    throw std::invalid_argument("schur_ones: N = " + std::to_string(vars) + " is smaller than the length of (" +
                                lambda.str() + ")");
  BigInt num = 1, den = 1;
  for (int a = 1; a <= vars; ++a)
    for (int b = a + 1; b <= vars; ++b) {
      num *= (lambda[a] - a) - (lambda[b] - b);
      den *= b - a;
    }
  BigRat out(num, den);
  out.canonicalize();
  return out;
}

struct Prop22Check {
  InequalityCheck direct;  // lhs = s_λ s_μ̂, rhs = s_λ̂ s_μ at 1^N
  long x = 0;              // λ_r − r − λ_i + i
  long y = 0;              // λ_r − r − λ_î + î − 1
  Verdict reduced = Verdict::not_applicable;
  bool agrees = true;      // sign of the direct difference equals sign of x²(y²−1) − (x²−1)y²
};

inline Prop22Check check_prop22(const MoveQuadruple& q, int vars) {
  if (vars < q.lambda_hat.length())
    throw std::invalid_argument("check_prop22: N must be at least the length of lambda_hat");
  Prop22Check out;
  out.direct = judge(q.tag, schur_ones(q.lambda, vars) * schur_ones(q.mu_hat, vars),
                     schur_ones(q.lambda_hat, vars) * schur_ones(q.mu, vars));
  const int r = q.removed.row, i = q.move.from.row, ih = q.move.to.row;
  out.x = static_cast<long>(q.lambda[r]) - r - q.lambda[i] + i;
  out.y = static_cast<long>(q.lambda[r]) - r - q.lambda[ih] + ih - 1;
  BigInt x = out.x, y = out.y;
  BigInt reduced_diff = x * x * (y * y - 1) - (x * x - 1) * y * y;
  int reduced_sign = sgn(reduced_diff);
  switch (q.tag) {
    case CaseTag::above: out.reduced = reduced_sign >= 0 ? Verdict::holds : Verdict::fails; break;
    case CaseTag::below: out.reduced = reduced_sign <= 0 ? Verdict::holds : Verdict::fails; break;
    case CaseTag::between: out.reduced = Verdict::not_applicable; break;
  }
  if (q.tag != CaseTag::between)
    out.agrees = sgn(BigRat(out.direct.lhs - out.direct.rhs)) == reduced_sign;
  return out;
}

/// Partitions τ ⊇ σ with τ/σ a horizontal strip of the given size. When
/// `outer` is given, τ must also fit inside it.
inline std::vector<Partition> add_horizontal_strips(const Partition& sigma, int size,
                                                    const Partition* outer = nullptr) {
  std::vector<Partition> out;
  const int rows = sigma.length() + 1;
  std::vector<int> tau(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row > rows) {
      if (remaining == 0) out.emplace_back(tau);
      return;
    }
    int lo = sigma[row];
    int hi = row == 1 ? sigma[row] + remaining : std::min(sigma[row - 1], sigma[row] + remaining);
    if (outer) hi = std::min(hi, (*outer)[row]);
    for (int v = hi; v >= lo; --v) {
      tau[static_cast<std::size_t>(row - 1)] = v;
      rec(row + 1, remaining - (v - lo));
    }
  };
  rec(1, size);
  return out;
}

/// Number of semistandard tableaux of the given shape whose content is the
/// (not necessarily sorted) composition `content`.
inline BigInt kostka(const Partition& shape, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: negative content entry");
    total += c;
  }
  if (total != shape.size())
    throw std::invalid_argument("kostka: |shape| = " + std::to_string(shape.size()) +
                                " differs from the content size " + std::to_string(total));
  std::map<Partition, BigInt> layer{{Partition(), BigInt(1)}};
  for (int c : content) {
    std::map<Partition, BigInt> next;
    for (const auto& [sigma, count] : layer)
      for (auto& tau : add_horizontal_strips(sigma, c, &shape)) next[tau] += count;
    layer = std::move(next);
  }
  auto it = layer.find(shape);
  return it == layer.end() ? BigInt(0) : it->second;
}

inline BigInt kostka(const Partition& shape, const Partition& content) {
  return kostka(shape, content.parts());
}

/// K_{κν} for all κ, ν ⊢ degree. Row ν of the DP yields every κ at once.
class KostkaTable {
 public:
  explicit KostkaTable(int degree) : degree_(degree), level_(enumerate_partitions(degree)) {
    for (const Partition& nu : level_) {
      std::map<Partition, BigInt> layer{{Partition(), BigInt(1)}};
      for (int c : nu.parts()) {
        std::map<Partition, BigInt> next;
        for (const auto& [sigma, count] : layer)
          for (auto& tau : add_horizontal_strips(sigma, c)) next[tau] += count;
        layer = std::move(next);
      }
      for (auto& [kappa, count] : layer) table_[{kappa, nu}] = count;
    }
  }

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return level_; }

  BigInt operator()(const Partition& kappa, const Partition& nu) const {
    auto it = table_.find({kappa, nu});
    return it == table_.end() ? BigInt(0) : it->second;
  }

 private:
  int degree_;
  std::vector<Partition> level_;
  std::map<std::pair<Partition, Partition>, BigInt> table_;
};

/// Σ c_κ s_κ with all κ of the same size.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, BigInt, LexDecreasing> coeffs;

  void add(const Partition& kappa, const BigInt& c) {
    if (kappa.size() != degree)
      throw std::invalid_argument("SchurExpansion: (" + kappa.str() + ") has the wrong degree");
    BigInt& slot = coeffs[kappa];
    slot += c;
    if (slot == 0) coeffs.erase(kappa);
  }

  friend SchurExpansion operator-(const SchurExpansion& a, const SchurExpansion& b) {
    if (a.degree != b.degree) throw std::invalid_argument("SchurExpansion: degree mismatch");
    SchurExpansion out = a;
    for (const auto& [k, c] : b.coeffs) out.add(k, -c);
    return out;
  }
  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
};

/// s_λ·s_μ by Littlewood–Richardson tableaux: fill κ/λ with μ_k entries k as
/// successive horizontal strips and keep the fillings whose reverse reading
/// word is a lattice word.
inline SchurExpansion schur_product(const Partition& lambda, const Partition& mu) {
  SchurExpansion out;
  out.degree = lambda.size() + mu.size();
  const int labels = mu.length();
  // counts[row][label] for the current filling; rows and labels 1-based.
  std::vector<std::vector<int>> counts;
  auto lattice_ok = [&](const Partition& shape) {
    std::vector<int> seen(static_cast<std::size_t>(labels + 2), 0);
    for (int row = 1; row <= shape.length(); ++row)
      for (int k = labels; k >= 1; --k) {
        int c = counts[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (k > 1 && seen[static_cast<std::size_t>(k)] + c > seen[static_cast<std::size_t>(k - 1)]) return false;
        seen[static_cast<std::size_t>(k)] += c;
      }
    return true;
  };
  const int max_rows = lambda.length() + labels + 1;
  counts.assign(static_cast<std::size_t>(max_rows + 2), std::vector<int>(static_cast<std::size_t>(labels + 2), 0));
  std::function<void(int, const Partition&)> rec = [&](int label, const Partition& shape) {
    if (label > labels) {
      if (lattice_ok(shape)) out.add(shape, 1);
      return;
    }
    for (const Partition& next : add_horizontal_strips(shape, mu[label])) {
      for (int row = 1; row <= next.length(); ++row)
        counts[static_cast<std::size_t>(row)][static_cast<std::size_t>(label)] = next[row] - shape[row];
      rec(label + 1, next);
      for (int row = 1; row <= next.length(); ++row)
        counts[static_cast<std::size_t>(row)][static_cast<std::size_t>(label)] = 0;
    }
  };
  rec(1, lambda);
  return out;
}

/// Coefficients on m_ν, ℓ(ν) ≤ max_vars, of a Schur expansion.
inline std::map<Partition, BigInt, LexDecreasing> monomial_expansion(const SchurExpansion& f,
                                                                     const KostkaTable& kostka_table,
                                                                     int max_vars) {
  if (kostka_table.degree() != f.degree) throw std::invalid_argument("monomial_expansion: degree mismatch");
  std::map<Partition, BigInt, LexDecreasing> out;
  for (const Partition& nu : kostka_table.partitions()) {
    if (nu.length() > max_vars) continue;
    BigInt c = 0;
    for (const auto& [kappa, coeff] : f.coeffs) c += coeff * kostka_table(kappa, nu);
    out[nu] = c;
  }
  return out;
}

struct Conj22Check {
  Verdict verdict = Verdict::not_applicable;
  std::optional<Partition> first_failing;  // first ν (decreasing lex) with a negative coefficient
  BigInt failing_coefficient = 0;
  BigInt min_coefficient = 0;
  SchurExpansion difference;               // oriented so the conjecture claims monomial positivity
};

/// For r<i: s_λ s_μ̂ − s_λ̂ s_μ; for r>î: the reverse difference. Monomial
/// positivity is decided on m_ν for all ν ⊢ 2n−1, i.e. in 2n−1 variables.
inline Conj22Check check_conj22(const MoveQuadruple& q, const KostkaTable& kostka_table) {
  Conj22Check out;
  if (q.tag == CaseTag::between) return out;
  SchurExpansion a = schur_product(q.lambda, q.mu_hat);
  SchurExpansion b = schur_product(q.lambda_hat, q.mu);
  out.difference = q.tag == CaseTag::above ? a - b : b - a;
  const int degree = out.difference.degree;
  out.verdict = Verdict::holds;
  bool first = true;
  for (const auto& [nu, c] : monomial_expansion(out.difference, kostka_table, degree)) {
    if (first || c < out.min_coefficient) out.min_coefficient = c;
    first = false;
    if (c < 0 && !out.first_failing) {
      out.verdict = Verdict::fails;
      out.first_failing = nu;
      out.failing_coefficient = c;
    }
  }
  return out;
}

inline Conj22Check check_conj22(const MoveQuadruple& q) {
  return check_conj22(q, KostkaTable(2 * q.lambda.size() - 1));
}

}  // namespace younggraph
