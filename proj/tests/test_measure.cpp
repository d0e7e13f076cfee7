#include <gtest/gtest.h>

#include <random>

#include "younggraph/measure.hpp"

using namespace younggraph;

namespace {

Measure random_measure(int n, std::mt19937_64& rng, int support_percent = 60) {
  Measure m(n);
  auto level = enumerate_partitions(n);
  std::uniform_int_distribution<int> num(1, 9), den(1, 6), pct(0, 99);
  for (const auto& p : level)
    if (pct(rng) < support_percent) m.add(p, BigRat(num(rng), den(rng)));
  if (m.empty()) m.add(level.front(), 1);
  return m;
}

Measure normalized(const Measure& m) {
  Measure out(m.level());
  BigRat total = m.total_mass();
  for (const auto& [p, mass] : m.masses()) out.add(p, mass / total);
  return out;
}

Measure from_list(int n, std::vector<std::pair<Partition, BigRat>> entries) {
  Measure m(n);
  for (auto& [p, q] : entries) m.add(p, q);
  return m;
}

}  // namespace

TEST(Projection, Examples) {
  auto m = Measure::atom(Partition{3, 1});
  EXPECT_EQ(project_to(m, 4), m);
  EXPECT_EQ(project_to(Measure::atom(Partition{2, 1}), 1), Measure::atom(Partition{1}));
  auto half = from_list(2, {{Partition{2}, BigRat(1, 2)}, {Partition{1, 1}, BigRat(1, 2)}});
  EXPECT_EQ(project_one(Measure::atom(Partition{2, 1})), half);
  EXPECT_EQ(project_atom_direct(Partition{2, 1}, 2), half);
  EXPECT_EQ(project_atom_direct(Partition{4, 2, 1}, 7), Measure::atom(Partition{4, 2, 1}));
  EXPECT_EQ(project_to(Measure::atom(Partition{3}), 2), Measure::atom(Partition{2}));
}

TEST(Projection, Errors) {
  EXPECT_THROW(project_one(Measure(0)), std::invalid_argument);
  EXPECT_THROW(project_to(Measure::atom(Partition{2}), 3), std::invalid_argument);
  EXPECT_THROW(project_atom_direct(Partition{2}, 3), std::invalid_argument);
  Measure m(3);
  EXPECT_THROW(m.add(Partition{2}, 1), std::invalid_argument);
  EXPECT_THROW(m.add(Partition{3}, -1), std::invalid_argument);
  EXPECT_THROW(Measure(-1), std::invalid_argument);
}

TEST(Projection, ConservesMassAndComposes) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n) {
    Measure m = random_measure(n, rng);
    EXPECT_EQ(project_one(m).total_mass(), m.total_mass());
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) EXPECT_EQ(project_to(project_to(m, k), j), project_to(m, j));
  }
}

TEST(Projection, DirectAgreesWithIteratedUpToEight) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int r = 0; r <= n; ++r)
        EXPECT_EQ(project_atom_direct(lambda, r), project_to(Measure::atom(lambda), r)) << lambda.str() << " " << r;
}

TEST(TotalVariation, Examples) {
  auto m = Measure::atom(Partition{2, 2});
  EXPECT_EQ(tv_distance(m, m), 0);
  EXPECT_EQ(tv_distance(Measure::atom(Partition{2}), Measure::atom(Partition{1, 1})), 1);
  auto plancherel = from_list(2, {{Partition{2}, BigRat(1, 2)}, {Partition{1, 1}, BigRat(1, 2)}});
  EXPECT_EQ(tv_distance(plancherel, Measure::atom(Partition{2})), BigRat(1, 2));
  EXPECT_THROW(tv_distance(Measure(2), Measure(3)), std::invalid_argument);
}

TEST(TotalVariation, ProjectionIsContraction) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Measure a = normalized(random_measure(n, rng)), b = normalized(random_measure(n, rng));
      BigRat d = tv_distance(a, b);
      for (int k = 0; k < n; ++k) EXPECT_LE(tv_distance(project_to(a, k), project_to(b, k)), d);
    }
}

TEST(Dominance, Examples) {
  auto a = Measure::atom(Partition{3, 1}), b = Measure::atom(Partition{2, 2});
  auto result = dominates_flow(a, b);
  ASSERT_TRUE(result.dominates);
  ASSERT_EQ(result.coupling->size(), 1u);
  EXPECT_EQ(result.coupling->front(), (CouplingEdge{Partition{3, 1}, Partition{2, 2}, 1}));
  EXPECT_TRUE(dominates_upperset(a, b));

  EXPECT_TRUE(dominates_flow(a, a).dominates);
  EXPECT_TRUE(dominates_upperset(a, a));

  auto split = from_list(3, {{Partition{3}, BigRat(1, 2)}, {Partition{1, 1, 1}, BigRat(1, 2)}});
  auto middle = Measure::atom(Partition{2, 1});
  EXPECT_FALSE(dominates_flow(split, middle).dominates);
  EXPECT_FALSE(dominates_flow(split, middle).coupling.has_value());
  EXPECT_FALSE(dominates_upperset(split, middle));

  EXPECT_TRUE(dominates_flow(Measure(4), Measure(4)).dominates);
  EXPECT_FALSE(dominates_flow(b, a).dominates);
}

TEST(Dominance, Errors) {
  auto a = Measure::atom(Partition{2});
  EXPECT_THROW(dominates_flow(a, Measure::atom(Partition{1, 1}, 2)), std::invalid_argument);
  EXPECT_THROW(dominates_flow(a, Measure::atom(Partition{1})), std::invalid_argument);
  EXPECT_THROW(dominates_upperset(a, Measure::atom(Partition{1, 1}, 2)), std::invalid_argument);
  EXPECT_THROW(dominates_upperset(Measure::atom(Partition{12}), Measure::atom(Partition{12})), LimitError);
  EXPECT_THROW(check_thm12(Measure::atom(Partition{2, 2}), Measure::atom(Partition{3, 1}), 2), PreconditionError);
}

TEST(Dominance, AtomsMatchPartitionOrder) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n)) {
        auto ma = Measure::atom(a), mb = Measure::atom(b);
        bool flow = dominates_flow(ma, mb).dominates;
        EXPECT_EQ(flow, dominance_geq(a, b));
        EXPECT_EQ(flow, dominates_upperset(ma, mb));
        if (flow && dominance_geq(b, a)) EXPECT_EQ(a, b);
      }
}

TEST(Dominance, FlowAgreesWithUpperSetsOnRandomMeasures) {
  std::mt19937_64 rng(3);
  int agree_true = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    Measure a = normalized(random_measure(n, rng, 40)), b = normalized(random_measure(n, rng, 40));
    auto result = dominates_flow(a, b);
    EXPECT_EQ(result.dominates, dominates_upperset(a, b));
    if (result.dominates) {
      ++agree_true;
      EXPECT_TRUE(is_valid_coupling(*result.coupling, a, b));
    }
  }
  EXPECT_GT(agree_true, 0);
}

TEST(Dominance, PartialOrderOnMeasures) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    auto level = enumerate_partitions(n);
    for (int trial = 0; trial < 20; ++trial) {
      Measure a = normalized(random_measure(n, rng));
      auto self = dominates_flow(a, a);
      ASSERT_TRUE(self.dominates);
      EXPECT_TRUE(is_valid_coupling(*self.coupling, a, a));
      // Pushing all mass of a down to the bottom row, then further moves, gives a chain a ≥ b ≥ c.
      Measure b(n), c(n);
      for (const auto& [p, mass] : a.masses()) {
        Partition q = p;
        for (const auto& r : level)
          if (dominance_geq(p, r) && r != p) {
            q = r;
            break;
          }
        b.add(q, mass);
        c.add(level.back(), mass);
      }
      ASSERT_TRUE(dominates_flow(a, b).dominates);
      ASSERT_TRUE(dominates_flow(b, c).dominates);
      EXPECT_TRUE(dominates_flow(a, c).dominates);
    }
  }
}

TEST(Dominance, CouplingValidator) {
  auto a = Measure::atom(Partition{3, 1}), b = Measure::atom(Partition{2, 2});
  EXPECT_TRUE(is_valid_coupling({{Partition{3, 1}, Partition{2, 2}, 1}}, a, b));
  EXPECT_FALSE(is_valid_coupling({{Partition{2, 2}, Partition{3, 1}, 1}}, b, a));
  EXPECT_FALSE(is_valid_coupling({{Partition{3, 1}, Partition{2, 2}, BigRat(1, 2)}}, a, b));
}

TEST(Thm12, Example) {
  auto result = check_thm12(Measure::atom(Partition{3}), Measure::atom(Partition{2, 1}), 2);
  EXPECT_TRUE(result.holds);
  EXPECT_EQ(result.projected, Measure::atom(Partition{2}));
  EXPECT_EQ(result.projected_hat,
            from_list(2, {{Partition{2}, BigRat(1, 2)}, {Partition{1, 1}, BigRat(1, 2)}}));
  ASSERT_TRUE(result.coupling.has_value());
  EXPECT_TRUE(is_valid_coupling(*result.coupling, result.projected, result.projected_hat));
}

TEST(Thm12, AtomPairsUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n)) {
        if (!dominance_geq(a, b)) continue;
        for (int k = 0; k < n; ++k) {
          auto result = check_thm12(Measure::atom(a), Measure::atom(b), k);
          EXPECT_TRUE(result.holds) << a.str() << " " << b.str() << " " << k;
          EXPECT_EQ(result.holds, dominates_upperset(result.projected, result.projected_hat));
        }
      }
}
