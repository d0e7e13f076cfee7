#pragma once

// Partitions (Young diagrams), the levels Y_n of the Young graph, dominance
// order, corner calculus, single-box moves and the move configurations that
// the monotonicity inequalities are stated over.
//
// Cells are 1-based (row, column) with rows increasing downward.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "younggraph/errors.hpp"

namespace younggraph {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

class Partition {
 public:
  Partition() = default;

  /// Validates weak decrease and non-negativity; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0) throw std::invalid_argument("negative part in partition " + str());
      if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
        throw std::invalid_argument("parts are not weakly decreasing in " + str());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "a,b,c" with decreasing parts; the empty string is the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    auto blank = text.find_first_not_of(" \t");
    if (blank == std::string_view::npos) return Partition();
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto tok = text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                                     : comma - start);
      auto b = tok.find_first_not_of(" \t");
      auto e = tok.find_last_not_of(" \t");
      if (b == std::string_view::npos)
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      tok = tok.substr(b, e - b + 1);
      int value = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9')
          throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000)
          throw std::invalid_argument("part too large in '" + std::string(text) + "'");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Partition(std::move(parts));
  }

  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }

  /// Row length, 1-based; zero past the last row.
  int operator[](int row) const {
    return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }

  /// Column length λ'_j.
  int column(int col) const {
    if (col < 1) return 0;
    int count = 0;
    for (int p : parts_) {
      if (p >= col) ++count;
      else break;
    }
    return count;
  }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  bool contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= (*this)[c.row]; }

  /// Diagram containment μ ⊆ λ.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int a = 1; a <= inner.length(); ++a)
      if (inner[a] > (*this)[a]) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(parts_[k]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::string to_string(const Partition& p) { return p.str(); }

/// Orders partitions decreasingly in lexicographic order; used as the map
/// comparator wherever output order matters.
struct LexDecreasing {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  if (!lambda.empty()) {
    cols.reserve(static_cast<std::size_t>(lambda[1]));
    for (int j = 1; j <= lambda[1]; ++j) cols.push_back(lambda.column(j));
  }
  return Partition(std::move(cols));
}

/// All partitions of n, each once, in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// λ ≥ μ in dominance order: every prefix sum of λ weakly exceeds μ's.
inline bool dominance_geq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance_geq: sizes differ (" + lambda.str() + " vs " +
                                mu.str() + ")");
  int a = 0, b = 0;
  int rows = std::max(lambda.length(), mu.length());
  for (int k = 1; k <= rows; ++k) {
    a += lambda[k];
    b += mu[k];
    if (a < b) return false;
  }
  return true;
}

/// Corners that can be removed, ordered top to bottom.
inline std::vector<Cell> removable_corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int a = 1; a <= lambda.length(); ++a)
    if (lambda[a] > lambda[a + 1]) out.push_back({a, lambda[a]});
  return out;
}

/// Cells whose addition keeps a partition, ordered top to bottom.
inline std::vector<Cell> addable_cells(const Partition& lambda) {
  std::vector<Cell> out;
  for (int a = 1; a <= lambda.length() + 1; ++a)
    if (a == 1 || lambda[a - 1] > lambda[a]) out.push_back({a, lambda[a] + 1});
  return out;
}

inline Partition remove_box(const Partition& lambda, Cell c) {
  if (!(c.row >= 1 && c.col == lambda[c.row] && c.col >= 1 && lambda[c.row + 1] < c.col))
    throw std::invalid_argument("cell " + to_string(c) + " is not a removable corner of (" +
                                lambda.str() + ")");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  --parts[static_cast<std::size_t>(c.row - 1)];
  return Partition(std::move(parts));
}

inline Partition add_box(const Partition& lambda, Cell c) {
  bool ok = c.row >= 1 && c.col == lambda[c.row] + 1 && (c.row == 1 || lambda[c.row - 1] >= c.col);
  if (!ok)
    throw std::invalid_argument("cell " + to_string(c) + " cannot be added to (" + lambda.str() +
                                ")");
  std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
  if (c.row > lambda.length()) parts.push_back(1);
  else ++parts[static_cast<std::size_t>(c.row - 1)];
  return Partition(std::move(parts));
}

/// Move of the box `from` into the position `to`; the rows must differ.
struct BoxMove {
  Cell from;
  Cell to;

  BoxMove() = default;
  BoxMove(Cell f, Cell t) : from(f), to(t) {
    if (f.row == t.row)
      throw std::invalid_argument("box move " + to_string(f) + "->" + to_string(t) +
                                  " keeps the row; rows must differ");
  }
  auto operator<=>(const BoxMove&) const = default;
};

inline std::string to_string(const BoxMove& m) {
  return to_string(m.from) + "->" + to_string(m.to);
}

inline Partition apply_move(const Partition& lambda, const BoxMove& move) {
  return add_box(remove_box(lambda, move.from), move.to);
}

/// All λ̂ covered by λ, each with its witnessing move. λ covers λ̂ when the
/// box goes down exactly one row or left exactly one column.
inline std::vector<std::pair<Partition, BoxMove>> covers(const Partition& lambda) {
  std::vector<std::pair<Partition, BoxMove>> out;
  for (Cell from : removable_corners(lambda)) {
    Partition base = remove_box(lambda, from);
    for (Cell to : addable_cells(base)) {
      if (to.row <= from.row) continue;
      if (to.row - from.row == 1 || to.col - from.col == -1)
        out.emplace_back(add_box(base, to), BoxMove(from, to));
    }
  }
  return out;
}

enum class CaseTag { above, below, between };

inline std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::above: return "r<i";
    case CaseTag::below: return "r>i_hat";
    case CaseTag::between: return "between";
  }
  return "?";
}

/// λ, λ̂ ∈ Y_n and μ, μ̂ ∈ Y_{n-1} where both pairs differ by the same move
/// (i,j)→(î,ĵ), î > i, and λ∖μ = λ̂∖μ̂ = (r,c).
struct MoveQuadruple {
  Partition lambda, lambda_hat, mu, mu_hat;
  BoxMove move;
  Cell removed;
  CaseTag tag = CaseTag::between;
  friend bool operator==(const MoveQuadruple&, const MoveQuadruple&) = default;
};

inline CaseTag classify_row(int r, int i, int i_hat) {
  if (r < i) return CaseTag::above;
  if (r > i_hat) return CaseTag::below;
  return CaseTag::between;
}

/// Every quadruple at level n, ordered by λ (decreasing lex), then the moved
/// box, then its destination, then the removed corner.
inline std::vector<MoveQuadruple> enumerate_move_quadruples(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_move_quadruples: n must be >= 1");
  std::vector<MoveQuadruple> out;
  for (const Partition& lambda : enumerate_partitions(n)) {
    auto lambda_corners = removable_corners(lambda);
    for (Cell from : lambda_corners) {
      Partition base = remove_box(lambda, from);
      for (Cell to : addable_cells(base)) {
        if (to.row <= from.row) continue;
        Partition lambda_hat = add_box(base, to);
        auto hat_corners = removable_corners(lambda_hat);
        for (Cell rc : lambda_corners) {
          if (rc == from) continue;
          if (std::find(hat_corners.begin(), hat_corners.end(), rc) == hat_corners.end()) continue;
          Partition mu = remove_box(lambda, rc);
          Partition mu_hat = remove_box(lambda_hat, rc);
          // μ and μ̂ must differ by the same move.
          if (!mu.contains(from) || mu_hat.contains(from) || !mu_hat.contains(to)) continue;
          auto mc = removable_corners(mu);
          auto hc = removable_corners(mu_hat);
          if (std::find(mc.begin(), mc.end(), from) == mc.end()) continue;
          if (std::find(hc.begin(), hc.end(), to) == hc.end()) continue;
          if (remove_box(mu, from) != remove_box(mu_hat, to)) continue;
          out.push_back({lambda, lambda_hat, mu, mu_hat, BoxMove(from, to), rc,
                         classify_row(rc.row, from.row, to.row)});
        }
      }
    }
  }
  return out;
}

inline constexpr int kDefaultUpperSetLimit = 8;

/// Upper sets of (Y_n, dominance) as bitmasks over enumerate_partitions(n).
inline std::vector<std::uint64_t> upper_set_masks(int n, int limit = kDefaultUpperSetLimit) {
  if (n > limit)
    throw LimitError("upper_sets: n = " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(limit) +
                     "; use the flow-based dominance checker for larger levels");
  auto level = enumerate_partitions(n);
  const std::size_t m = level.size();
  if (m > 64) throw LimitError("upper_sets: level too large for bitmask representation");
  // above[x] = elements strictly dominating x; all precede x in decreasing lex order.
  std::vector<std::uint64_t> above(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (dominance_geq(level[y], level[x])) above[x] |= std::uint64_t{1} << y;
  std::vector<std::uint64_t> out;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t x, std::uint64_t set) {
    if (x == m) {
      out.push_back(set);
      return;
    }
    rec(x + 1, set);
    if ((above[x] & set) == above[x]) rec(x + 1, set | (std::uint64_t{1} << x));
  };
  rec(0, 0);
  return out;
}

inline std::vector<std::vector<Partition>> upper_sets(int n, int limit = kDefaultUpperSetLimit) {
  auto level = enumerate_partitions(n);
  std::vector<std::vector<Partition>> out;
  for (auto mask : upper_set_masks(n, limit)) {
    std::vector<Partition> set;
    for (std::size_t k = 0; k < level.size(); ++k)
      if (mask >> k & 1u) set.push_back(level[k]);
    out.push_back(std::move(set));
  }
  return out;
}

struct Corner {
  Cell cell;
  Partition mu;
};

struct CornerClasses {
  std::vector<Corner> up;     // removed row r < i
  std::vector<Corner> equal;  // i <= r <= î
  std::vector<Corner> down;   // r > î
};

/// Splits the μ ↗ λ by the row of the removed box relative to the move rows.
inline CornerClasses classify_corners(const Partition& lambda, int i, int i_hat) {
  if (!(i < i_hat)) throw std::invalid_argument("classify_corners: requires i < i_hat");
  CornerClasses out;
  for (Cell c : removable_corners(lambda)) {
    Corner corner{c, remove_box(lambda, c)};
    switch (classify_row(c.row, i, i_hat)) {
      case CaseTag::above: out.up.push_back(std::move(corner)); break;
      case CaseTag::below: out.down.push_back(std::move(corner)); break;
      case CaseTag::between: out.equal.push_back(std::move(corner)); break;
    }
  }
  return out;
}

}  // namespace younggraph
