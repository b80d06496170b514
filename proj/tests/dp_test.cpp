#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "riesz/dp.hpp"
#include "riesz/fronts.hpp"
#include "riesz/oracle.hpp"
#include "test_support.hpp"

namespace {

using riesz::DpOptions;
using riesz::EnergyParams;
using riesz::ParetoFront2D;
using riesz::Point2;
using riesz::PointSet1D;
using testing::ElementsAre;

const EnergyParams kS1(1.0);

ParetoFront2D front6() { return std::get<ParetoFront2D>(riesz::fixture("front6")); }
ParetoFront2D front7() { return std::get<ParetoFront2D>(riesz::fixture("front7")); }

TEST(DpSelect, ExampleOne) {
  const auto r = riesz::dp_select(PointSet1D({0, 1, 3, 6}), 3, kS1);
  EXPECT_THAT(r.indices, ElementsAre(0, 2, 3));
  EXPECT_NEAR(r.energy, 0.8333, 1e-4);
  EXPECT_EQ(r.method, riesz::Method::kDp);
}

TEST(DpSelect, ExampleTwo) {
  const PointSet1D x({0, 2, 4, 7});
  const auto r = riesz::dp_select(x, 3, kS1);
  EXPECT_THAT(r.indices, ElementsAre(0, 2, 3));
  EXPECT_EQ(x[r.indices[1]], 4.0);
  EXPECT_NEAR(r.energy, 0.7262, 1e-4);
}

TEST(DpSelect, SixPointFrontThreePoints) {
  const auto r = riesz::dp_select(front6(), 3, kS1);
  EXPECT_THAT(r.indices, ElementsAre(0, 2, 5));
  EXPECT_NEAR(r.energy, 0.229, 5e-4);
}

TEST(DpSelect, SevenPointFrontFivePointsIsSuboptimal) {
  const auto r = riesz::dp_select(front7(), 5, kS1);
  EXPECT_THAT(r.indices, ElementsAre(0, 2, 3, 4, 6));
  EXPECT_NEAR(r.energy, 1.181, 5e-4);
}

TEST(DpSelect, SinglePointPicksFirstIndex) {
  const auto r = riesz::dp_select(front7(), 1, kS1);
  EXPECT_THAT(r.indices, ElementsAre(0));
  EXPECT_EQ(r.energy, 0.0);
}

TEST(DpSelect, FullSetIsForced) {
  const ParetoFront2D f = front6();
  const auto r = riesz::dp_select(f, f.size(), kS1);
  EXPECT_THAT(r.indices, ElementsAre(0, 1, 2, 3, 4, 5));
  EXPECT_DOUBLE_EQ(r.energy, riesz::riesz_energy(f.points(), kS1));
}

TEST(DpSelect, RejectsSubsetSizeOutOfRange) {
  EXPECT_THROW(riesz::dp_select(front6(), 0, kS1), riesz::InvalidArgument);
  EXPECT_THROW(riesz::dp_select(front6(), 7, kS1), riesz::InvalidArgument);
}

TEST(DpTrace, ExampleOneCells) {
  const auto t = riesz::dp_trace(PointSet1D({0, 1, 3, 6}), 3, kS1);
  EXPECT_NEAR(*t.energy(1, 2), 1.0, 1e-12);
  EXPECT_NEAR(*t.energy(2, 2), 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(*t.energy(2, 2), 0.3333, 1e-4);
  EXPECT_NEAR(*t.energy(3, 2), 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(*t.energy(2, 3), 1.8333, 1e-4);
  EXPECT_NEAR(*t.energy(3, 3), 0.8333, 1e-4);
  EXPECT_EQ(t.predecessor(3, 3), 2u);
}

TEST(DpTrace, ExampleTwoCells) {
  const auto t = riesz::dp_trace(PointSet1D({0, 2, 4, 7}), 3, kS1);
  EXPECT_NEAR(*t.energy(1, 2), 0.5, 1e-4);
  EXPECT_NEAR(*t.energy(2, 2), 0.25, 1e-4);
  EXPECT_NEAR(*t.energy(3, 2), 0.1429, 1e-4);
  EXPECT_NEAR(*t.energy(2, 3), 1.25, 1e-4);
  EXPECT_NEAR(*t.energy(3, 3), 0.7262, 1e-4);
}

TEST(DpTrace, TableShapeInvariants) {
  std::mt19937_64 rng(21);
  const PointSet1D x(riesz::testing::random_sorted_coords(rng, 12));
  const std::size_t k = 6;
  const auto t = riesz::dp_trace(x, k, EnergyParams(2.0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_EQ(t.energy(i, 1), 0.0);
    EXPECT_FALSE(t.predecessor(i, 1).has_value());
    for (std::size_t r = 1; r <= k; ++r) {
      EXPECT_EQ(t.reachable(i, r), i + 1 >= r) << i << "," << r;
      if (!t.reachable(i, r)) {
        EXPECT_FALSE(t.energy(i, r).has_value());
        continue;
      }
      const auto members = t.subset(i, r);
      ASSERT_EQ(members.size(), r);
      EXPECT_EQ(members.back(), i);
      EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
      EXPECT_EQ(std::adjacent_find(members.begin(), members.end()), members.end());
      // The stored energy is the exact energy of the stored subset.
      EXPECT_EQ(*t.energy(i, r), riesz::subset_energy(x, members, EnergyParams(2.0)));
    }
  }
  EXPECT_THROW(t.energy(0, k + 1), std::out_of_range);
  EXPECT_THROW(t.subset(0, 3), std::out_of_range);
}

TEST(DpTrace, SelectIsDerivableFromTrace) {
  const ParetoFront2D f = front7();
  const auto t = riesz::dp_trace(f, 5, kS1);
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto from_table = riesz::dp_result_from_table(t, f, k, kS1);
    const auto direct = riesz::dp_select(f, k, kS1);
    EXPECT_EQ(from_table.indices, direct.indices);
    EXPECT_EQ(from_table.energy, direct.energy);
  }
}

TEST(DpProperty, NeverBeatsOracleAndExactAtTwo) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const PointSet1D x(riesz::testing::random_sorted_coords(rng, n));
    const ParetoFront2D f(riesz::testing::random_front(rng, n));
    for (std::size_t k = 1; k <= n; ++k) {
      const auto d1 = riesz::dp_select(x, k, kS1);
      const auto b1 = riesz::brute_force_select(x, k, kS1);
      EXPECT_GE(d1.energy, b1.energy);
      const auto d2 = riesz::dp_select(f, k, kS1);
      const auto b2 = riesz::brute_force_select(f, k, kS1);
      EXPECT_GE(d2.energy, b2.energy);
      if (k <= 2 || k == n) {
        EXPECT_EQ(d1.indices, b1.indices);
        EXPECT_EQ(d1.energy, b1.energy);
        EXPECT_EQ(d2.indices, b2.indices);
      }
    }
    // k = 2: the widest pair, 1/max distance^s.
    EXPECT_EQ(riesz::dp_select(x, 2, kS1).energy, 1.0 / (x[n - 1] - x[0]));
  }
}

TEST(DpProperty, DeterministicAcrossThreadsAndPrecompute) {
  const ParetoFront2D f = riesz::gen_power_front(300, 0.3);
  const auto ref = riesz::dp_trace(f, 12, kS1);
  for (const unsigned threads : {1u, 2u, 3u, 8u}) {
    for (const bool pre : {true, false}) {
      DpOptions opt;
      opt.threads = threads;
      opt.precompute_interactions = pre;
      const auto t = riesz::dp_trace(f, 12, kS1, opt);
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t r = 1; r <= 12; ++r) {
          ASSERT_EQ(t.energy(i, r), ref.energy(i, r));
          ASSERT_EQ(t.predecessor(i, r), ref.predecessor(i, r));
        }
      }
    }
  }
}

TEST(DpProperty, ArgminInvariantUnderTranslationAndScaling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = riesz::testing::random_front(rng, 10);
    const auto ref = riesz::dp_select(ParetoFront2D(pts), 4, EnergyParams(2.0)).indices;
    for (const double c : {0.5, 3.0, 10.0}) {
      std::vector<Point2> moved;
      for (const auto& p : pts) moved.push_back({c * p.f1 + 7.0, c * p.f2 - 3.0});
      EXPECT_EQ(riesz::dp_select(ParetoFront2D(moved), 4, EnergyParams(2.0)).indices, ref);
    }
  }
}

TEST(DpProperty, CollinearFrontMatchesArclengthRun) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = riesz::testing::random_sorted_coords(rng, 11, 0.0, 1.0);
    const double slope = -0.4 - trial * 0.1;
    const double norm = std::hypot(1.0, slope);
    std::vector<Point2> line;
    std::vector<double> arclength;
    for (const double u : t) {
      line.push_back({u, 2.0 + slope * u});
      arclength.push_back(u * norm);
    }
    for (const std::size_t k : {3u, 5u, 7u}) {
      EXPECT_EQ(riesz::dp_select(ParetoFront2D(line), k, kS1).indices,
                riesz::dp_select(PointSet1D(arclength), k, kS1).indices);
    }
  }
}

TEST(DpProperty, SolutionsAreNotNestedOnSevenPointFront) {
  const auto k3 = riesz::dp_select(front7(), 3, kS1).indices;
  const auto k4 = riesz::dp_select(front7(), 4, kS1).indices;
  EXPECT_THAT(k3, ElementsAre(0, 3, 6));
  EXPECT_THAT(k4, ElementsAre(0, 2, 4, 6));
  EXPECT_FALSE(std::includes(k4.begin(), k4.end(), k3.begin(), k3.end()));
}

TEST(DpProperty, SixPointFrontSolutionsHappenToNest) {
  // Here k=3 is contained in k=4; non-nesting shows on the seven-point front.
  const auto k3 = riesz::dp_select(front6(), 3, kS1).indices;
  const auto k4 = riesz::dp_select(front6(), 4, kS1).indices;
  EXPECT_THAT(k4, ElementsAre(0, 1, 2, 5));
  EXPECT_TRUE(std::includes(k4.begin(), k4.end(), k3.begin(), k3.end()));
}

/// Any ordered set with a metric can drive the engine.
struct Ring {
  std::vector<double> angles;
  std::size_t size() const { return angles.size(); }
  double distance(std::size_t i, std::size_t j) const {
    return 2.0 * std::sin(std::fabs(angles[i] - angles[j]) / 2.0);
  }
};

TEST(DpEngine, AcceptsCustomMetric) {
  Ring ring{{0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0}};
  const auto r = riesz::dp_select(ring, 3, kS1);
  EXPECT_EQ(r.indices.size(), 3u);
  EXPECT_GE(r.energy, riesz::brute_force_select(ring, 3, kS1).energy);

  Ring degenerate{{0.0, 1.0, 1.0}};
  EXPECT_THROW(riesz::dp_select(degenerate, 3, kS1), riesz::DegenerateInputError);
}

}  // namespace
