#pragma once

// Jordan types of uni-uppertriangular matrices over F_p, and the counts
// dim_t(λ) and dim_t(μ↗λ) obtained by enumerating the whole group U_n.

#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "younggraph/errors.hpp"
#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"
#include "younggraph/verdict.hpp"

namespace younggraph {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Unit upper-triangular n×n matrix over F_p; the n(n-1)/2 entries above the
/// diagonal are stored row-major.
class UnipotentMatrix {
 public:
  UnipotentMatrix(int n, int p, std::vector<int> upper) : n_(n), p_(p), upper_(std::move(upper)) {
    if (n < 0) throw std::invalid_argument("UnipotentMatrix: negative size");
    if (!is_prime(p)) throw std::invalid_argument("UnipotentMatrix: p = " + std::to_string(p) + " is not prime");
    if (upper_.size() != free_entries(n))
      throw std::invalid_argument("UnipotentMatrix: expected " + std::to_string(free_entries(n)) +
                                  " entries above the diagonal");
    for (int v : upper_)
      if (v < 0 || v >= p) throw std::invalid_argument("UnipotentMatrix: entry out of range [0,p)");
  }

  static UnipotentMatrix identity(int n, int p) {
    return UnipotentMatrix(n, p, std::vector<int>(free_entries(n), 0));
  }

  static std::size_t free_entries(int n) {
    return n <= 0 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }

  int size() const { return n_; }
  int prime() const { return p_; }

  /// 0-based entry.
  int at(int row, int col) const {
    if (row == col) return 1;
    if (row > col) return 0;
    return upper_[index(row, col, n_)];
  }

  /// Top-left (n-1)×(n-1) corner.
  UnipotentMatrix corner() const {
    std::vector<int> up;
    for (int r = 0; r + 1 < n_; ++r)
      for (int c = r + 1; c + 1 < n_; ++c) up.push_back(at(r, c));
    return UnipotentMatrix(n_ - 1, p_, std::move(up));
  }

  static std::size_t index(int row, int col, int n) {
    // Row r starts after Σ_{s<r} (n-1-s) entries.
    auto r = static_cast<std::size_t>(row);
    auto nn = static_cast<std::size_t>(n);
    return r * (nn - 1) - r * (r - 1) / 2 + static_cast<std::size_t>(col - row - 1);
  }

 private:
  int n_;
  int p_;
  std::vector<int> upper_;
};

namespace detail {

using ModMatrix = std::vector<std::vector<int>>;

inline int rank_mod_p(ModMatrix m, int p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  auto inverse = [p](int a) {
    int result = 1, e = p - 2;
    long long b = a;
    while (e) {
      if (e & 1) result = static_cast<int>(result * b % p);
      b = b * b % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    int inv = inverse(m[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      int f = static_cast<int>(static_cast<long long>(m[r][c]) * inv % p);
      for (int k = c; k < cols; ++k)
        m[r][k] = static_cast<int>(((m[r][k] - static_cast<long long>(f) * m[rank][k]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

/// Jordan type from the nilpotent part N (strictly upper triangular, dense).
inline Partition jordan_type_of_nilpotent(const ModMatrix& nil, int p) {
  const int n = static_cast<int>(nil.size());
  std::vector<int> ranks{n};
  ModMatrix power = nil;
  while (ranks.back() > 0) {
    ranks.push_back(rank_mod_p(power, p));
    ModMatrix next(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k) {
        if (power[i][k] == 0) continue;
        for (int j = k + 1; j < n; ++j)
          next[i][j] = static_cast<int>((next[i][j] + static_cast<long long>(power[i][k]) * nil[k][j]) % p);
      }
    power = std::move(next);
  }
  // λ'_k = rank(N^{k-1}) − rank(N^k)
  std::vector<int> columns;
  for (std::size_t k = 1; k < ranks.size(); ++k) columns.push_back(ranks[k - 1] - ranks[k]);
  return conjugate(Partition(std::move(columns)));
}

}  // namespace detail

inline Partition jordan_type(const UnipotentMatrix& u) {
  const int n = u.size();
  detail::ModMatrix nil(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) nil[r][c] = u.at(r, c);
  return detail::jordan_type_of_nilpotent(nil, u.prime());
}

struct JordanLimits {
  int max_n = 6;
  int max_p = 3;
};

/// Exact counts over all of U_n(F_p): dim_t(λ) and dim_t(μ↗λ), where μ is the
/// Jordan type of the top-left corner.
struct JordanCounts {
  int n = 0;
  int p = 0;
  std::map<Partition, BigInt, LexDecreasing> by_type;
  std::map<std::pair<Partition, Partition>, BigInt> by_edge;  // (μ, λ)

  BigInt dim_t(const Partition& lambda) const {
    auto it = by_type.find(lambda);
    return it == by_type.end() ? BigInt(0) : it->second;
  }
  BigInt dim_t_edge(const Partition& mu, const Partition& lambda) const {
    auto it = by_edge.find({mu, lambda});
    return it == by_edge.end() ? BigInt(0) : it->second;
  }
};

/// Enumerates the p^{n(n-1)/2} matrices in row-major odometer order. The
/// leading free entry is sharded across `threads` workers; shard results are
/// merged by exact addition so the outcome does not depend on the thread count.
inline JordanCounts enumerate_jordan_counts(int n, int p, JordanLimits limits = {},
                                            unsigned threads = 1) {
  if (n < 1) throw std::invalid_argument("enumerate_jordan_counts: n must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("enumerate_jordan_counts: p = " + std::to_string(p) + " is not prime");
  const std::size_t free = UnipotentMatrix::free_entries(n);
  if (n > limits.max_n || p > limits.max_p) {
    BigInt cost;
    mpz_ui_pow_ui(cost.get_mpz_t(), static_cast<unsigned long>(p), free);
    throw LimitError("dim_t enumeration at n = " + std::to_string(n) + ", p = " + std::to_string(p) +
                     " would visit p^{n(n-1)/2} = " + cost.get_str() +
                     " matrices; limits are n <= " + std::to_string(limits.max_n) +
                     ", p <= " + std::to_string(limits.max_p));
  }

  using Local = std::map<std::pair<Partition, Partition>, std::uint64_t>;
  auto run_shard = [&](int lead_begin, int lead_end, Local& local) {
    std::vector<int> entries(free, 0);
    detail::ModMatrix nil(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    detail::ModMatrix sub(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(n - 1), 0));
    for (int lead = lead_begin; lead < lead_end; ++lead) {
      std::fill(entries.begin(), entries.end(), 0);
      if (free > 0) entries[0] = lead;
      while (true) {
        for (int r = 0; r < n; ++r)
          for (int c = r + 1; c < n; ++c) nil[r][c] = entries[UnipotentMatrix::index(r, c, n)];
        for (int r = 0; r + 1 < n; ++r)
          for (int c = r + 1; c + 1 < n; ++c) sub[r][c] = nil[r][c];
        ++local[{detail::jordan_type_of_nilpotent(sub, p), detail::jordan_type_of_nilpotent(nil, p)}];
        // Odometer over entries 1..free-1 (entry 0 is the shard key).
        bool wrapped = true;
        for (std::size_t k = free; k > 1;) {
          --k;
          if (++entries[k] < p) {
            wrapped = false;
            break;
          }
          entries[k] = 0;
        }
        if (wrapped) break;
      }
    }
  };

  const int leads = free > 0 ? p : 1;
  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(leads)));
  std::vector<Local> shards(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      int begin = static_cast<int>(w) * leads / static_cast<int>(workers);
      int end = static_cast<int>(w + 1) * leads / static_cast<int>(workers);
      pool.emplace_back([&, begin, end, w] { run_shard(begin, end, shards[w]); });
    }
  }
  JordanCounts out;
  out.n = n;
  out.p = p;
  for (const auto& shard : shards)
    for (const auto& [key, count] : shard) {
      out.by_edge[key] += BigInt(static_cast<unsigned long>(count));
      out.by_type[key.second] += BigInt(static_cast<unsigned long>(count));
    }
  return out;
}

inline BigInt dim_t_enum(const Partition& lambda, int p, JordanLimits limits = {}) {
  return enumerate_jordan_counts(lambda.size(), p, limits).dim_t(lambda);
}

inline BigInt dim_t_edge_enum(const Partition& mu, const Partition& lambda, int p,
                              JordanLimits limits = {}) {
  return enumerate_jordan_counts(lambda.size(), p, limits).dim_t_edge(mu, lambda);
}

/// dim_t(μ̂↗λ̂)/dim_t(λ̂) against dim_t(μ↗λ)/dim_t(λ), oriented by the case tag.
inline InequalityCheck check_conj14(const MoveQuadruple& q, const JordanCounts& counts) {
  BigRat hat_side(counts.dim_t_edge(q.mu_hat, q.lambda_hat), counts.dim_t(q.lambda_hat));
  BigRat plain_side(counts.dim_t_edge(q.mu, q.lambda), counts.dim_t(q.lambda));
  hat_side.canonicalize();
  plain_side.canonicalize();
  return judge(q.tag, std::move(hat_side), std::move(plain_side));
}

}  // namespace younggraph
