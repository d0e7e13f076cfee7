#pragma once

// Points of the Thoma simplex, the specializations s_λ(α,β), the extreme
// coherent measures M_n(λ) = dim(λ)·s_λ(α,β), a Markov growth sampler for
// them, and the metric/approximation machinery used to recover an extreme
// system from a sequence of delta measures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "younggraph/dimension.hpp"
#include "younggraph/measure.hpp"
#include "younggraph/parallel.hpp"
#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"

namespace younggraph {

/// (α, β) with α, β weakly decreasing, nonnegative, Σα + Σβ ≤ 1. Trailing
/// zeros are dropped, so stored entries are positive. γ = 1 − Σα − Σβ.
class ThomaParams {
 public:
  ThomaParams() = default;
  ThomaParams(std::vector<BigRat> alpha, std::vector<BigRat> beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    normalize(alpha_, "alpha");
    normalize(beta_, "beta");
    if (gamma() < 0)
      throw std::invalid_argument("ThomaParams: sum of alpha and beta exceeds 1 (" + to_string(1 - gamma()) + ")");
  }

  static ThomaParams parse(std::string_view alpha, std::string_view beta) {
    return ThomaParams(parse_rational_list(alpha), parse_rational_list(beta));
  }

  static ThomaParams plancherel() { return {}; }

  const std::vector<BigRat>& alpha() const { return alpha_; }
  const std::vector<BigRat>& beta() const { return beta_; }

  /// 1-based, zero past the stored entries.
  BigRat alpha(std::size_t i) const { return i >= 1 && i <= alpha_.size() ? alpha_[i - 1] : BigRat(0); }
  BigRat beta(std::size_t j) const { return j >= 1 && j <= beta_.size() ? beta_[j - 1] : BigRat(0); }

  BigRat gamma() const {
    BigRat g = 1;
    for (const auto& a : alpha_) g -= a;
    for (const auto& b : beta_) g -= b;
    return g;
  }

  ThomaParams dual() const { return ThomaParams(beta_, alpha_); }

  /// Finite, strictly decreasing, positive and summing to exactly 1.
  bool satisfies_lln_hypotheses() const {
    auto strict = [](const std::vector<BigRat>& v) {
      for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (!(v[k] > v[k + 1])) return false;
      return true;
    };
    return strict(alpha_) && strict(beta_) && gamma() == 0;
  }

  std::string str() const {
    auto join = [](const std::vector<BigRat>& v) {
      std::string s;
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + to_string(v[k]);
      return s;
    };
    return "alpha=(" + join(alpha_) + ") beta=(" + join(beta_) + ")";
  }

  friend bool operator==(const ThomaParams&, const ThomaParams&) = default;

 private:
  static void normalize(std::vector<BigRat>& v, const char* name) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 0) throw std::invalid_argument(std::string("ThomaParams: negative ") + name + " entry");
      if (k + 1 < v.size() && v[k] < v[k + 1])
        throw std::invalid_argument(std::string("ThomaParams: ") + name + " is not weakly decreasing");
    }
  }

  std::vector<BigRat> alpha_, beta_;
};

/// p_1 = 1; p_k = Σ α_i^k + (−1)^{k−1} Σ β_i^k for k ≥ 2.
inline BigRat power_sum(const ThomaParams& params, int k) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be >= 1");
  if (k == 1) return 1;
  BigRat s = 0;
  for (const auto& a : params.alpha()) s += pow(a, static_cast<unsigned>(k));
  BigRat b = 0;
  for (const auto& x : params.beta()) b += pow(x, static_cast<unsigned>(k));
  return k % 2 == 1 ? BigRat(s + b) : BigRat(s - b);
}

/// Lazily extended table of p_k(α,β).
class PowerSumValues {
 public:
  explicit PowerSumValues(ThomaParams params) : params_(std::move(params)) {}
  const BigRat& operator()(int k) {
    if (k < 1) throw std::invalid_argument("PowerSumValues: k must be >= 1");
    while (static_cast<int>(values_.size()) < k) values_.push_back(power_sum(params_, static_cast<int>(values_.size()) + 1));
    return values_[static_cast<std::size_t>(k - 1)];
  }
  const ThomaParams& params() const { return params_; }

 private:
  ThomaParams params_;
  std::vector<BigRat> values_;
};

namespace detail {

inline BigRat rational_determinant(std::vector<std::vector<BigRat>> m) {
  const std::size_t n = m.size();
  BigRat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      BigRat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

/// Sign and log-magnitude of a determinant.
struct LogDet {
  int sign = 0;
  long double log_abs = 0;
};

/// Rows are scaled to unit max-norm before partial-pivot elimination so that
/// entries spanning many orders of magnitude stay representable.
inline LogDet scaled_determinant(std::vector<std::vector<long double>> m) {
  const std::size_t n = m.size();
  LogDet out{1, 0};
  for (auto& row : m) {
    long double scale = 0;
    for (auto v : row) scale = std::max(scale, std::fabs(v));
    if (scale == 0) return {0, 0};
    for (auto& v : row) v /= scale;
    out.log_abs += std::log(scale);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[pivot][k])) pivot = i;
    if (m[pivot][k] == 0) return {0, 0};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      out.sign = -out.sign;
    }
    if (m[k][k] < 0) out.sign = -out.sign;
    out.log_abs += std::log(std::fabs(m[k][k]));
    for (std::size_t i = k + 1; i < n; ++i) {
      long double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return out;
}

}  // namespace detail

/// Exact specialization s_λ(α,β). h_k and e_k are obtained from the p_k by
/// Newton's identities; s_λ is the Jacobi–Trudi determinant det[h_{λ_a−a+b}]
/// or its dual det[e_{λ'_a−a+b}], whichever is smaller.
class Specialization {
 public:
  explicit Specialization(ThomaParams params) : power_(std::move(params)) {}

  const ThomaParams& params() const { return power_.params(); }
  BigRat p(int k) { return power_(k); }

  const BigRat& h(int k) {
    static const BigRat zero = 0;
    if (k < 0) return zero;
    while (static_cast<int>(h_.size()) <= k) {
      int m = static_cast<int>(h_.size());
      if (m == 0) {
        h_.push_back(1);
        continue;
      }
      BigRat acc = 0;
      for (int i = 1; i <= m; ++i) acc += power_(i) * h_[static_cast<std::size_t>(m - i)];
      h_.push_back(acc / m);
    }
    return h_[static_cast<std::size_t>(k)];
  }

  const BigRat& e(int k) {
    static const BigRat zero = 0;
    if (k < 0) return zero;
    while (static_cast<int>(e_.size()) <= k) {
      int m = static_cast<int>(e_.size());
      if (m == 0) {
        e_.push_back(1);
        continue;
      }
      BigRat acc = 0;
      for (int i = 1; i <= m; ++i) {
        BigRat term = power_(i) * e_[static_cast<std::size_t>(m - i)];
        if (i % 2 == 0) acc -= term;
        else acc += term;
      }
      e_.push_back(acc / m);
    }
    return e_[static_cast<std::size_t>(k)];
  }

  BigRat schur(const Partition& lambda) {
    const bool use_dual = lambda[1] < lambda.length();
    const Partition shape = use_dual ? conjugate(lambda) : lambda;
    const int size = shape.length();
    std::vector<std::vector<BigRat>> m(static_cast<std::size_t>(size), std::vector<BigRat>(static_cast<std::size_t>(size)));
    for (int a = 1; a <= size; ++a)
      for (int b = 1; b <= size; ++b) {
        int k = shape[a] - a + b;
        m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = use_dual ? e(k) : h(k);
      }
    BigRat value = detail::rational_determinant(std::move(m));
    if (value < 0)
      throw std::logic_error("s_(" + lambda.str() + ") is negative at " + params().str() +
                             "; specializations at Thoma points are nonnegative");
    return value;
  }

 private:
  PowerSumValues power_;
  std::vector<BigRat> h_, e_;
};

inline BigRat super_schur(const Partition& lambda, const ThomaParams& params) {
  return Specialization(params).schur(lambda);
}

/// M_n(λ) = dim(λ)·s_λ(α,β) on all of Y_n.
inline Measure extreme_measure(int n, Specialization& spec) {
  if (n < 0) throw std::invalid_argument("extreme_measure: negative level");
  Measure out(n);
  for (const Partition& lambda : enumerate_partitions(n)) out.add(lambda, BigRat(dim_hook(lambda)) * spec.schur(lambda));
  return out;
}

inline Measure extreme_measure(int n, const ThomaParams& params) {
  Specialization spec(params);
  return extreme_measure(n, spec);
}

/// s_λ(α,β) vanishes exactly when λ leaves the (a,b)-hook, provided γ = 0
/// and α, β have a and b nonzero entries.
inline bool in_support(const Partition& lambda, const ThomaParams& params) {
  if (params.gamma() > 0) return true;
  const int a = static_cast<int>(params.alpha().size());
  const int b = static_cast<int>(params.beta().size());
  return lambda[a + 1] <= b;
}

/// Exact transition law of the growth chain from λ: Λ = λ + □ with probability
/// s_Λ(α,β)/s_λ(α,β). The probabilities sum to 1 because p_1 = 1.
inline std::vector<std::pair<Partition, BigRat>> growth_transitions(const Partition& lambda, Specialization& spec) {
  BigRat base = spec.schur(lambda);
  if (base == 0)
    throw std::domain_error("growth_transitions: (" + lambda.str() + ") has zero probability at " + spec.params().str());
  std::vector<std::pair<Partition, BigRat>> out;
  BigRat total = 0;
  for (Cell c : addable_cells(lambda)) {
    Partition next = add_box(lambda, c);
    BigRat prob = spec.schur(next) / base;
    if (prob == 0) continue;
    total += prob;
    out.emplace_back(std::move(next), std::move(prob));
  }
  if (total != 1) throw std::logic_error("growth_transitions: probabilities from (" + lambda.str() + ") do not sum to 1");
  return out;
}

enum class Arithmetic { exact, floating };

/// Floating-point values of s_λ(α,β) in log space for long chains; ratios
/// w(Λ)/w(λ) are the transition probabilities.
///
/// When γ = 0 and α, β are strictly decreasing, s_λ(α,β) is the hook Schur
/// polynomial in a = |α| even and b = |β| odd variables. For λ containing the
/// a × b rectangle it factors as
///   Π (α_i + β_j) · s_{(λ_1−b, …, λ_a−b)}(α) · s_{ν'}(β),   ν = (λ_{a+1}, λ_{a+2}, …),
/// and each ordinary Schur factor is the alternant det[x_i^{μ_j+k−j}] over the
/// Vandermonde product, evaluated in log space. Otherwise the Jacobi–Trudi
/// determinant is used, with h_k, e_k taken from the product form of the generating functions
///   Σ h_k z^k = e^{γz} Π 1/(1−α_i z) Π (1+β_j z),   Σ e_k z^k = e^{γz} Π (1+α_i z) Π 1/(1−β_j z).
class FloatSpecialization {
 public:
  explicit FloatSpecialization(const ThomaParams& params) : params_(params) {
    for (const auto& a : params.alpha()) alpha_.push_back(static_cast<long double>(a.get_d()));
    for (const auto& b : params.beta()) beta_.push_back(static_cast<long double>(b.get_d()));
    gamma_ = static_cast<long double>(params.gamma().get_d());
    finite_ = params.satisfies_lln_hypotheses();
  }

  const ThomaParams& params() const { return params_; }

  /// Whether w(λ) uses the factorized finite-variable form.
  bool factorizes(const Partition& lambda) const {
    const int a = static_cast<int>(alpha_.size()), b = static_cast<int>(beta_.size());
    return finite_ && (a == 0 || lambda[a] >= b) && (b == 0 || lambda.column(b) >= a);
  }

  long double h(int k) {
    ensure(k);
    return k < 0 ? 0.0L : h_[static_cast<std::size_t>(k)];
  }
  long double e(int k) {
    ensure(k);
    return k < 0 ? 0.0L : e_[static_cast<std::size_t>(k)];
  }

  detail::LogDet log_weight(const Partition& lambda) {
    if (!in_support(lambda, params_)) return {0, 0};
    if (factorizes(lambda)) return log_factorized(lambda);
    return log_jacobi_trudi(lambda);
  }

  detail::LogDet log_jacobi_trudi(const Partition& lambda) {
    const bool use_dual = lambda[1] < lambda.length();
    const Partition shape = use_dual ? conjugate(lambda) : lambda;
    const int size = shape.length();
    std::vector<std::vector<long double>> m(static_cast<std::size_t>(size), std::vector<long double>(static_cast<std::size_t>(size)));
    for (int a = 1; a <= size; ++a)
      for (int b = 1; b <= size; ++b) {
        int k = shape[a] - a + b;
        m[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = use_dual ? e(k) : h(k);
      }
    return detail::scaled_determinant(std::move(m));
  }

 private:
  /// log of det[x_i^{μ_j+k−j}], k = |xs|; each row is divided by its largest entry.
  static detail::LogDet log_alternant(const std::vector<int>& mu, const std::vector<long double>& xs) {
    const std::size_t k = xs.size();
    std::vector<std::vector<long double>> m(k, std::vector<long double>(k));
    long double shift = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const long double lx = std::log(xs[i]);
      std::vector<long double> logs(k);
      long double top = -INFINITY;
      for (std::size_t j = 0; j < k; ++j) {
        long double exponent = (j < mu.size() ? mu[j] : 0) + static_cast<long double>(k - 1 - j);
        logs[j] = exponent * lx;
        top = std::max(top, logs[j]);
      }
      for (std::size_t j = 0; j < k; ++j) m[i][j] = std::exp(logs[j] - top);
      shift += top;
    }
    auto det = detail::scaled_determinant(std::move(m));
    det.log_abs += shift;
    return det;
  }

  detail::LogDet log_factorized(const Partition& lambda) {
    const int a = static_cast<int>(alpha_.size()), b = static_cast<int>(beta_.size());
    std::vector<int> arm, leg;
    for (int i = 1; i <= a; ++i) arm.push_back(lambda[i] - b);
    for (int j = 1; j <= b; ++j) leg.push_back(lambda.column(j) - a);
    detail::LogDet out{1, 0};
    for (long double x : alpha_)
      for (long double y : beta_) out.log_abs += std::log(x + y);
    for (const auto& part : {log_alternant(arm, alpha_), log_alternant(leg, beta_)}) {
      out.sign *= part.sign;
      out.log_abs += part.log_abs;
    }
    for (const auto* xs : {&alpha_, &beta_})
      for (std::size_t i = 0; i < xs->size(); ++i)
        for (std::size_t j = i + 1; j < xs->size(); ++j) out.log_abs -= std::log((*xs)[i] - (*xs)[j]);
    return out;
  }

  static std::vector<long double> series(int len, const std::vector<long double>& geometric,
                                         const std::vector<long double>& linear, long double gamma) {
    std::vector<long double> c(static_cast<std::size_t>(len), 0.0L);
    long double term = 1;
    for (int k = 0; k < len; ++k) {
      c[static_cast<std::size_t>(k)] = term;
      term *= gamma / (k + 1);
    }
    for (long double x : geometric)
      for (int k = 1; k < len; ++k) c[static_cast<std::size_t>(k)] += x * c[static_cast<std::size_t>(k - 1)];
    for (long double x : linear)
      for (int k = len - 1; k >= 1; --k) c[static_cast<std::size_t>(k)] += x * c[static_cast<std::size_t>(k - 1)];
    return c;
  }

  void ensure(int k) {
    if (k < static_cast<int>(h_.size())) return;
    int len = std::max(2 * k + 2, 64);
    h_ = series(len, alpha_, beta_, gamma_);
    e_ = series(len, beta_, alpha_, gamma_);
  }

  ThomaParams params_;
  std::vector<long double> alpha_, beta_;
  long double gamma_ = 0;
  bool finite_ = false;
  std::vector<long double> h_, e_;
};

namespace detail {
/// 53 random bits; u = bits / 2^53 is uniform on [0,1) on every platform.
inline std::uint64_t draw_bits(std::mt19937_64& rng) { return rng() >> 11; }
}  // namespace detail

/// Markov growth chain ∅ → (1) → … whose law at step n is M_n^{(α,β)}.
/// In floating mode, states outside the region where the factorized form
/// applies are stepped with exact probabilities rounded to double.
class GrowthSampler {
 public:
  GrowthSampler(const ThomaParams& params, Arithmetic mode, std::uint64_t seed)
      : mode_(mode), rng_(seed), exact_(params), floating_(params) {}

  const Partition& current() const { return current_; }
  Arithmetic mode() const { return mode_; }

  const Partition& step() {
    const std::uint64_t bits = detail::draw_bits(rng_);
    if (mode_ == Arithmetic::exact) {
      BigRat u(BigInt(static_cast<unsigned long>(bits)), BigInt(1) << 53);
      u.canonicalize();
      auto options = growth_transitions(current_, exact_);
      BigRat cumulative = 0;
      for (auto& [next, prob] : options) {
        cumulative += prob;
        if (u < cumulative) return current_ = next;
      }
      return current_ = options.back().first;
    }

    std::vector<Partition> candidates;
    std::vector<long double> probs;
    if (params_finite() && !floating_.factorizes(current_)) {
      for (auto& [next, prob] : growth_transitions(current_, exact_)) {
        candidates.push_back(next);
        probs.push_back(static_cast<long double>(prob.get_d()));
      }
    } else {
      std::vector<long double> logs;
      long double top = -INFINITY;
      for (Cell c : addable_cells(current_)) {
        Partition next = add_box(current_, c);
        auto w = floating_.log_weight(next);
        if (w.sign <= 0) continue;
        top = std::max(top, w.log_abs);
        candidates.push_back(std::move(next));
        logs.push_back(w.log_abs);
      }
      for (long double l : logs) probs.push_back(std::exp(l - top));
    }
    if (candidates.empty())
      throw std::domain_error("GrowthSampler: no reachable successor of (" + current_.str() + ")");
    long double total = 0;
    for (long double p : probs) total += p;
    const long double u = static_cast<long double>(bits) / 9007199254740992.0L;
    long double cumulative = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      cumulative += probs[k] / total;
      if (u < cumulative) return current_ = candidates[k];
    }
    return current_ = candidates.back();
  }

 private:
  bool params_finite() const { return exact_.params().satisfies_lln_hypotheses(); }

  Arithmetic mode_;
  std::mt19937_64 rng_;
  Specialization exact_;
  FloatSpecialization floating_;
  Partition current_;
};

inline Partition sample_diagram(int n, const ThomaParams& params, std::uint64_t seed,
                                Arithmetic mode = Arithmetic::exact) {
  if (n < 0) throw std::invalid_argument("sample_diagram: negative n");
  GrowthSampler sampler(params, mode, seed);
  for (int k = 0; k < n; ++k) sampler.step();
  return sampler.current();
}

struct LlnRow {
  int trial = 0;
  int n = 0;
  std::string kind;  // "row" or "col"
  int index = 0;
  double value = 0;
};

/// λ_i(n)/n for i ≤ |α| and λ'_j(n)/n for j ≤ |β| over independent trials;
/// trial t uses seed + t. Output order is (trial, rows, columns) regardless of
/// the number of worker threads.
inline std::vector<LlnRow> lln_experiment(const ThomaParams& params, int n, int trials, std::uint64_t seed,
                                          Arithmetic mode, unsigned threads = 1) {
  if (!params.satisfies_lln_hypotheses())
    throw std::invalid_argument(
        "lln_experiment: the law of large numbers needs strictly decreasing finite alpha and beta with "
        "sum exactly 1; got " + params.str());
  if (n < 1 || trials < 1) throw std::invalid_argument("lln_experiment: n and trials must be positive");
  std::vector<int> indices(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) indices[static_cast<std::size_t>(t)] = t;
  auto results = parallel_map(
      indices, [&](int t) { return sample_diagram(n, params, seed + static_cast<std::uint64_t>(t), mode); }, threads);
  std::vector<LlnRow> rows;
  for (int t = 0; t < trials; ++t) {
    const Partition& lambda = results[static_cast<std::size_t>(t)];
    for (std::size_t i = 1; i <= params.alpha().size(); ++i)
      rows.push_back({t, n, "row", static_cast<int>(i), static_cast<double>(lambda[static_cast<int>(i)]) / n});
    for (std::size_t j = 1; j <= params.beta().size(); ++j)
      rows.push_back({t, n, "col", static_cast<int>(j), static_cast<double>(lambda.column(static_cast<int>(j))) / n});
  }
  return rows;
}

/// max( sup_i |α_i − α̂_i|, sup_j |β_j − β̂_j| ), sequences padded with zeros.
inline BigRat d_inf(const ThomaParams& x, const ThomaParams& y) {
  BigRat best = 0;
  for (std::size_t i = 1; i <= std::max(x.alpha().size(), y.alpha().size()); ++i)
    best = std::max(best, abs(BigRat(x.alpha(i) - y.alpha(i))));
  for (std::size_t j = 1; j <= std::max(x.beta().size(), y.beta().size()); ++j)
    best = std::max(best, abs(BigRat(x.beta(j) - y.beta(j))));
  return best;
}

struct LipschitzCheck {
  BigRat lhs;  // |p_k(x) − p_k(y)|
  BigRat rhs;  // 4k · d_∞(x, y)
  bool holds = false;
};

inline LipschitzCheck lipschitz_check(const ThomaParams& x, const ThomaParams& y, int k) {
  LipschitzCheck out;
  out.lhs = abs(BigRat(power_sum(x, k) - power_sum(y, k)));
  out.rhs = 4 * k * d_inf(x, y);
  out.holds = out.lhs <= out.rhs;
  return out;
}

struct ClutchResult {
  ThomaParams minus;
  ThomaParams plus;
  BigRat slack;  // the constant V > 2 of the construction
};

namespace detail {

/// Upper bracket: raises the large α's by ε/(V·2^i), lowers the large β's by
/// ε/(V·2^{L_β+1−j}) and drops the small β's, replaces the small α's by filler
/// entries ε/2 − ε/V + ε/(V·2^i) until the total reaches 1, and gives the
/// remainder to α_1.
///
/// The printed index ranges do not produce a decreasing sequence when
/// α_{L_α} or β_{L_β} is small, so they are resolved as follows (the stated
/// properties are what the bracket must satisfy):
///  - α_i is shifted for 1 ≤ i < L_α and β_j for 1 ≤ j < L_β; β_j = 0 for
///    j ≥ L_β, and fillers start at index L_α.
///  - if the shifted entries already exceed total mass 1 (possible when
///    Σα + Σβ = 1), the excess (< ε/V) is taken off the last shifted α entry
///    and no fillers are added.
///  - if L_α = 1 there is no large α_1 to absorb the remainder; it becomes
///    one more, smaller, trailing entry instead.
inline std::pair<std::vector<BigRat>, std::vector<BigRat>> clutch_upper(const std::vector<BigRat>& alpha,
                                                                        const std::vector<BigRat>& beta,
                                                                        const BigRat& eps, BigRat& slack) {
  auto at = [](const std::vector<BigRat>& v, std::size_t i) { return i <= v.size() ? v[i - 1] : BigRat(0); };
  const BigRat half = eps / 2;
  std::size_t l_alpha = 1, l_beta = 1;
  while (!(at(alpha, l_alpha) < half)) ++l_alpha;
  while (!(at(beta, l_beta) < half)) ++l_beta;

  // V > 2 with α_{L_α}, β_{L_β} < ε/2 − ε/V.
  BigRat gap = half - std::max(at(alpha, l_alpha), at(beta, l_beta));
  BigRat ratio = eps / gap;
  BigInt v = ratio.get_num() / ratio.get_den() + 1;
  if (v < 3) v = 3;
  slack = BigRat(v);
  const BigRat delta = eps / slack;

  auto power_of_two = [](std::size_t k) { return BigRat(BigInt(1) << static_cast<mp_bitcnt_t>(k)); };

  std::vector<BigRat> a, b;
  for (std::size_t i = 1; i < l_alpha; ++i) a.push_back(at(alpha, i) + delta / power_of_two(i));
  for (std::size_t j = 1; j < l_beta; ++j) b.push_back(at(beta, j) - delta / power_of_two(l_beta + 1 - j));

  BigRat total = 0;
  for (const auto& x : a) total += x;
  for (const auto& x : b) total += x;

  if (total > 1) {
    a.back() -= total - 1;
    return {a, b};
  }
  for (std::size_t i = l_alpha;; ++i) {
    BigRat filler = half - delta + delta / power_of_two(i);
    if (filler > 1 - total) break;
    a.push_back(filler);
    total += filler;
  }
  BigRat remainder = 1 - total;
  if (remainder > 0) {
    if (l_alpha >= 2) a.front() += remainder;
    else a.push_back(remainder);
  }
  return {a, b};
}

}  // namespace detail

/// Brackets (α, β) between two nearby Thoma points whose sequences are finite,
/// strictly decreasing, positive and sum to 1, each within ε/2 of (α, β) in d_∞.
inline ClutchResult clutch_params(const ThomaParams& params, const BigRat& eps) {
  if (eps <= 0) throw std::invalid_argument("clutch_params: epsilon must be positive");
  ClutchResult out;
  BigRat slack_minus;
  auto [a_plus, b_plus] = detail::clutch_upper(params.alpha(), params.beta(), eps, out.slack);
  auto [b_minus, a_minus] = detail::clutch_upper(params.beta(), params.alpha(), eps, slack_minus);
  out.plus = ThomaParams(std::move(a_plus), std::move(b_plus));
  out.minus = ThomaParams(std::move(a_minus), std::move(b_minus));
  return out;
}

/// ρ⁺(μ) = M(μ) for μ strictly above λ, the rest of the unit mass on λ.
inline Measure clutch_measure_upper(const Partition& lambda, const Measure& extreme) {
  Measure out(lambda.size());
  BigRat used = 0;
  for (const auto& [mu, m] : extreme.masses())
    if (mu != lambda && dominance_geq(mu, lambda)) {
      out.add(mu, m);
      used += m;
    }
  out.add(lambda, 1 - used);
  return out;
}

/// ρ⁻(μ) = M(μ) for μ strictly below λ, the rest of the unit mass on λ.
inline Measure clutch_measure_lower(const Partition& lambda, const Measure& extreme) {
  Measure out(lambda.size());
  BigRat used = 0;
  for (const auto& [mu, m] : extreme.masses())
    if (mu != lambda && dominance_geq(lambda, mu)) {
      out.add(mu, m);
      used += m;
    }
  out.add(lambda, 1 - used);
  return out;
}

/// Deterministic λ(k) ∈ Y_k with λ_i(k)/k → α_i and λ'_j(k)/k → β_j: rows
/// ⌊α_i k⌋, then columns ⌊β_j k⌋ hung below the α rows, leftover boxes on row 1.
inline Partition staircase_sequence(const ThomaParams& params, int k) {
  if (params.gamma() != 0)
    throw std::invalid_argument("staircase_sequence: alpha and beta must sum to 1, got " + params.str());
  if (k < 0) throw std::invalid_argument("staircase_sequence: negative k");
  auto floor_times = [k](const BigRat& x) {
    BigRat y = x * k;
    BigInt f = y.get_num() / y.get_den();
    return static_cast<int>(f.get_si());
  };
  const int a = static_cast<int>(params.alpha().size());
  const int b = static_cast<int>(params.beta().size());
  std::vector<int> rows;
  for (const auto& x : params.alpha()) rows.push_back(floor_times(x));
  std::vector<int> cols;
  for (const auto& x : params.beta()) cols.push_back(floor_times(x));
  if (a > 0 && b > 0 && rows.back() < b) {
    // ⌊α_a k⌋ ≥ b holds as soon as k ≥ (b + 1)/α_a.
    BigRat bound = BigRat(b + 1) / params.alpha().back();
    BigInt ceil_bound = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
    throw std::domain_error("staircase_sequence: k = " + std::to_string(k) +
                            " is too small to hang the beta columns under the alpha rows; need k >= " +
                            ceil_bound.get_str());
  }
  const int depth = cols.empty() ? 0 : cols.front();
  for (int t = 1; t <= depth; ++t) {
    int width = 0;
    for (int c : cols) width += c >= t ? 1 : 0;
    rows.push_back(width);
  }
  int used = 0;
  for (int r : rows) used += r;
  if (rows.empty()) rows.push_back(0);
  rows.front() += k - used;
  return Partition(std::move(rows));
}

struct ConvergenceRow {
  int k = 0;
  int r = 0;
  BigRat tv;
};

/// d_var(π^k_r δ_{λ(k)}, M_r^{(α,β)}) along the staircase sequence.
inline std::vector<ConvergenceRow> convergence_experiment(const ThomaParams& params, int r, const std::vector<int>& ks) {
  for (int k : ks)
    if (k < r) throw std::invalid_argument("convergence_experiment: every k must be at least r");
  Measure target = extreme_measure(r, params);
  std::vector<ConvergenceRow> out;
  for (int k : ks) out.push_back({k, r, tv_distance(project_atom_direct(staircase_sequence(params, k), r), target)});
  return out;
}

}  // namespace younggraph
