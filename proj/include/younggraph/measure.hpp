#pragma once

// Exact finite measures on a level Y_n, the projections π^n_k, total
// variation, and stochastic dominance with two independent deciders:
// a max-flow coupling search and an upper-set mass comparison.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "younggraph/dimension.hpp"
#include "younggraph/errors.hpp"
#include "younggraph/maxflow.hpp"
#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"

namespace younggraph {

/// Nonnegative rational masses on Y_n. Only positive masses are stored, keyed
/// in decreasing lexicographic order. Total mass is arbitrary.
class Measure {
 public:
  using Map = std::map<Partition, BigRat, LexDecreasing>;

  explicit Measure(int level = 0) : level_(level) {
    if (level < 0) throw std::invalid_argument("Measure: negative level");
  }

  static Measure atom(const Partition& lambda, const BigRat& mass = 1) {
    Measure m(lambda.size());
    m.add(lambda, mass);
    return m;
  }

  /// Adds mass to λ. Zero is a no-op; negative masses are rejected.
  void add(const Partition& lambda, BigRat mass) {
    mass.canonicalize();
    if (lambda.size() != level_)
      throw std::invalid_argument("Measure: (" + lambda.str() + ") is not in Y_" + std::to_string(level_));
    if (mass < 0) throw std::invalid_argument("Measure: negative mass at (" + lambda.str() + ")");
    if (mass == 0) return;
    masses_[lambda] += mass;
  }

  int level() const { return level_; }
  const Map& masses() const { return masses_; }
  bool empty() const { return masses_.empty(); }

  BigRat operator[](const Partition& lambda) const {
    auto it = masses_.find(lambda);
    return it == masses_.end() ? BigRat(0) : it->second;
  }

  BigRat total_mass() const {
    BigRat total = 0;
    for (const auto& [_, m] : masses_) total += m;
    return total;
  }

  friend bool operator==(const Measure&, const Measure&) = default;

 private:
  int level_;
  Map masses_;
};

/// (π^n_{n-1} M)(μ) = Σ_{μ↗λ} dim(μ)/dim(λ) · M(λ).
inline Measure project_one(const Measure& measure) {
  if (measure.level() == 0) throw std::invalid_argument("project_one: level 0 has no projection");
  Measure out(measure.level() - 1);
  for (const auto& [lambda, mass] : measure.masses()) {
    BigInt dim_lambda = dim_hook(lambda);
    for (Cell c : removable_corners(lambda)) {
      Partition mu = remove_box(lambda, c);
      BigRat ratio(dim_hook(mu), dim_lambda);
      ratio.canonicalize();
      out.add(mu, mass * ratio);
    }
  }
  return out;
}

inline Measure project_to(const Measure& measure, int k) {
  if (k < 0 || k > measure.level())
    throw std::invalid_argument("project_to: target level " + std::to_string(k) +
                                " not in [0, " + std::to_string(measure.level()) + "]");
  Measure out = measure;
  while (out.level() > k) out = project_one(out);
  return out;
}

/// π^{|λ|}_r δ_λ in one shot: μ ↦ skew_dim(λ,μ)·dim(μ)/dim(λ).
inline Measure project_atom_direct(const Partition& lambda, int r) {
  if (r < 0 || r > lambda.size())
    throw std::invalid_argument("project_atom_direct: level " + std::to_string(r) +
                                " not in [0, " + std::to_string(lambda.size()) + "]");
  Measure out(r);
  BigInt dim_lambda = dim_hook(lambda);
  for (const Partition& mu : enumerate_partitions(r)) {
    if (!lambda.contains(mu)) continue;
    BigRat mass(skew_dim(lambda, mu) * dim_hook(mu), dim_lambda);
    mass.canonicalize();
    out.add(mu, mass);
  }
  return out;
}

inline BigRat tv_distance(const Measure& rho, const Measure& rho_hat) {
  if (rho.level() != rho_hat.level())
    throw std::invalid_argument("tv_distance: levels differ (" + std::to_string(rho.level()) +
                                " vs " + std::to_string(rho_hat.level()) + ")");
  BigRat sum = 0;
  for (const auto& [lambda, m] : rho.masses()) sum += abs(BigRat(m - rho_hat[lambda]));
  for (const auto& [lambda, m] : rho_hat.masses())
    if (rho[lambda] == 0) sum += m;
  return sum / 2;
}

struct CouplingEdge {
  Partition source;
  Partition target;
  BigRat mass;
  friend bool operator==(const CouplingEdge&, const CouplingEdge&) = default;
};

/// Pairs of atoms of equal mass moving mass from ρ̂'s support up to ρ's.
using Coupling = std::vector<CouplingEdge>;

struct DominanceResult {
  bool dominates = false;
  std::optional<Coupling> coupling;  // present iff dominates
};

namespace detail {
inline void require_comparable(const Measure& rho, const Measure& rho_hat, const char* who) {
  if (rho.level() != rho_hat.level())
    throw std::invalid_argument(std::string(who) + ": levels differ");
  if (rho.total_mass() != rho_hat.total_mass())
    throw std::invalid_argument(std::string(who) + ": total masses differ (" +
                                to_string(rho.total_mass()) + " vs " +
                                to_string(rho_hat.total_mass()) + ")");
}
}  // namespace detail

/// ρ ≥ ρ̂ iff the bipartite network support(ρ) → support(ρ̂), with an edge
/// wherever the source dominates the target, saturates. Masses are scaled by
/// the lcm of denominators and the flow is run on integers.
inline DominanceResult dominates_flow(const Measure& rho, const Measure& rho_hat) {
  detail::require_comparable(rho, rho_hat, "dominates_flow");
  if (rho.empty()) return {true, Coupling{}};

  BigInt scale = 1;
  for (const auto* m : {&rho, &rho_hat})
    for (const auto& [_, mass] : m->masses()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), mass.get_den_mpz_t());
  auto scaled = [&](const BigRat& q) -> BigInt {
    BigRat s = q * scale;
    return s.get_num();
  };

  std::vector<const Partition*> sources, targets;
  for (const auto& [p, _] : rho.masses()) sources.push_back(&p);
  for (const auto& [p, _] : rho_hat.masses()) targets.push_back(&p);
  const std::size_t src = 0, sink = 1 + sources.size() + targets.size();
  MaxFlow<BigInt> flow(sink + 1);
  BigInt total = 0;
  for (std::size_t a = 0; a < sources.size(); ++a) {
    BigInt cap = scaled(rho[*sources[a]]);
    total += cap;
    flow.add_edge(src, 1 + a, cap);
  }
  for (std::size_t b = 0; b < targets.size(); ++b)
    flow.add_edge(1 + sources.size() + b, sink, scaled(rho_hat[*targets[b]]));
  struct Handle {
    std::size_t a, b;
    std::pair<std::size_t, std::size_t> edge;
  };
  std::vector<Handle> handles;
  for (std::size_t a = 0; a < sources.size(); ++a)
    for (std::size_t b = 0; b < targets.size(); ++b)
      if (dominance_geq(*sources[a], *targets[b]))
        handles.push_back({a, b, flow.add_edge(1 + a, 1 + sources.size() + b, total)});

  if (flow.run(src, sink) != total) return {false, std::nullopt};
  Coupling coupling;
  for (const auto& h : handles) {
    BigInt f = flow.flow_on(h.edge);
    if (f == 0) continue;
    BigRat mass(f, scale);
    mass.canonicalize();
    coupling.push_back({*sources[h.a], *targets[h.b], mass});
  }
  return {true, std::move(coupling)};
}

/// ρ ≥ ρ̂ iff ρ(U) ≥ ρ̂(U) for every upper set U of (Y_n, dominance).
inline bool dominates_upperset(const Measure& rho, const Measure& rho_hat,
                               int limit = kDefaultUpperSetLimit) {
  detail::require_comparable(rho, rho_hat, "dominates_upperset");
  const int n = rho.level();
  auto masks = upper_set_masks(n, limit);
  auto level = enumerate_partitions(n);
  std::vector<BigRat> a, b;
  for (const auto& p : level) {
    a.push_back(rho[p]);
    b.push_back(rho_hat[p]);
  }
  for (auto mask : masks) {
    BigRat ma = 0, mb = 0;
    for (std::size_t k = 0; k < level.size(); ++k)
      if (mask >> k & 1u) {
        ma += a[k];
        mb += b[k];
      }
    if (ma < mb) return false;
  }
  return true;
}

/// Marginals reproduce both measures exactly and each edge goes downward.
inline bool is_valid_coupling(const Coupling& coupling, const Measure& rho, const Measure& rho_hat) {
  Measure from(rho.level()), to(rho_hat.level());
  for (const auto& e : coupling) {
    if (e.mass <= 0 || e.source.size() != rho.level() || e.target.size() != rho.level()) return false;
    if (!dominance_geq(e.source, e.target)) return false;
    from.add(e.source, e.mass);
    to.add(e.target, e.mass);
  }
  return from == rho && to == rho_hat;
}

struct Thm12Result {
  bool holds = false;
  Measure projected;
  Measure projected_hat;
  std::optional<Coupling> coupling;
};

/// Given ρ ≥ ρ̂ on Y_n, checks π^n_k ρ ≥ π^n_k ρ̂ and returns the witness.
inline Thm12Result check_thm12(const Measure& rho, const Measure& rho_hat, int k) {
  if (!dominates_flow(rho, rho_hat).dominates)
    throw PreconditionError("check_thm12: the input measures are not in stochastic dominance");
  Thm12Result out;
  out.projected = project_to(rho, k);
  out.projected_hat = project_to(rho_hat, k);
  auto result = dominates_flow(out.projected, out.projected_hat);
  out.holds = result.dominates;
  out.coupling = std::move(result.coupling);
  return out;
}

}  // namespace younggraph
