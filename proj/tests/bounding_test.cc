// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msk/bounding.h"

#include <cmath>
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "msk/error.h"
#include "msk/exact.h"
#include "test_support.h"

namespace msk {
namespace {

using testing::ModularInstance;

constexpr double kInf = std::numeric_limits<double>::infinity();

// D_j recomputed from the block data, independently of Build().
std::vector<double> ReferenceBreakpoints(const Instance& inst,
                                         const Partition& p) {
  std::vector<double> rate, weight;
  ElementSet prefix;
  double prev = inst.f().Evaluate(prefix);
  for (const ElementSet& block : p.blocks) {
    prefix = SetUnion(prefix, block);
    const double value = inst.f().Evaluate(prefix);
    weight.push_back(inst.Weight(block));
    rate.push_back((value - prev) / weight.back());
    prev = value;
  }
  std::vector<double> d = {0.0};
  for (std::size_t j = 1; j < rate.size(); ++j) {
    if (rate[j] <= 0) {
      d.push_back(kInf);
      continue;
    }
    double sum = 0;
    for (std::size_t i = 0; i < j; ++i) sum += weight[i] * std::log(rate[i] / rate[j]);
    d.push_back(sum);
  }
  d.push_back(kInf);
  return d;
}

TEST(PartitionTest, AutoSingleElement) {
  const Instance inst = ModularInstance({3, 1}, {2, 1}, 5);
  const Partition p = BuildPartitionAuto(inst, ElementSet{0});
  ASSERT_EQ(p.blocks.size(), 1u);
  const BoundingFunction h = BoundingFunction::Build(inst, p);
  EXPECT_DOUBLE_EQ(h.segments()[0].rate, 1.5);
}

TEST(PartitionTest, AutoModularSortsByDensity) {
  const Instance inst = ModularInstance({1, 6, 2, 3}, {1, 2, 1, 3}, 10);
  const Partition p = BuildPartitionAuto(inst, ElementSet{0, 1, 2, 3});
  ASSERT_EQ(p.blocks.size(), 4u);
  EXPECT_EQ(p.blocks[0], ElementSet{1});  // density 3
  EXPECT_EQ(p.blocks[1], ElementSet{2});  // 2
  EXPECT_EQ(p.blocks[2], ElementSet{0});  // 1, smaller id than 3
  EXPECT_EQ(p.blocks[3], ElementSet{3});
}

TEST(PartitionTest, AutoRatesNonIncreasingOnCoverage) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::Coverage(10, seed);
    const ElementSet x = BruteForceOpt(inst).solution;
    if (x.empty()) continue;
    const BoundingFunction h =
        BoundingFunction::Build(inst, BuildPartitionAuto(inst, x));
    for (std::size_t j = 1; j < h.segments().size(); ++j) {
      EXPECT_LE(h.segments()[j].rate, h.segments()[j - 1].rate + 1e-9);
    }
  }
}

TEST(PartitionTest, AutoRejectsEmptyAndInfeasible) {
  const Instance inst = ModularInstance({1, 1}, {1, 1}, 1);
  EXPECT_THROW(BuildPartitionAuto(inst, ElementSet{}), Error);
  EXPECT_THROW(BuildPartitionAuto(inst, ElementSet{0, 1}), Error);
}

TEST(PartitionTest, TwoBlockHeavyFirstWhenDenser) {
  const Instance inst = ModularInstance({9, 1}, {3, 1}, 10);
  const Partition p = BuildPartitionTwoBlock(inst, ElementSet{}, ElementSet{0, 1});
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0], ElementSet{0});
  EXPECT_EQ(p.blocks[1], ElementSet{1});
}

TEST(PartitionTest, TwoBlockRestFirstWhenDenser) {
  const Instance inst = ModularInstance({3, 4, 1}, {3, 1, 1}, 10);
  const Partition p =
      BuildPartitionTwoBlock(inst, ElementSet{}, ElementSet{0, 1, 2});
  ASSERT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.blocks[0], (ElementSet{1, 2}));
  EXPECT_EQ(p.blocks[1], ElementSet{0});
}

TEST(PartitionTest, TwoBlockSingleRemainingElement) {
  const Instance inst = ModularInstance({3, 4}, {3, 1}, 10);
  const Partition p = BuildPartitionTwoBlock(inst, ElementSet{1}, ElementSet{0, 1});
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0], ElementSet{0});
  EXPECT_THROW(BuildPartitionTwoBlock(inst, ElementSet{0, 1}, ElementSet{0}),
               Error);
}

TEST(PartitionTest, TwoBlockOrderOnCoverage) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::Coverage(10, seed);
    const ElementSet y = BruteForceOpt(inst).solution;
    if (y.size() < 2) continue;
    const Partition p = BuildPartitionTwoBlock(inst, ElementSet{}, y);
    ASSERT_EQ(p.blocks.size(), 2u);
    const double r1 = inst.f().Evaluate(p.blocks[0]) / inst.Weight(p.blocks[0]);
    const double r2 = inst.f().Evaluate(p.blocks[1]) / inst.Weight(p.blocks[1]);
    EXPECT_GE(r1, r2);
  }
}

TEST(BoundingTest, SingleBlockClosedForm) {
  const Instance inst = testing::Coverage(8, 21);
  const ElementSet x = BruteForceOpt(inst).solution;
  ASSERT_FALSE(x.empty());
  const BoundingFunction h = BoundingFunction::Build(inst, Partition{{x}});
  const double fx = inst.f().Evaluate(x);
  const double wx = inst.Weight(x);
  for (int i = 0; i < 100; ++i) {
    const double u = 0.05 * i;
    EXPECT_NEAR(h(u), fx * (1.0 - std::exp(-u / wx)), 1e-12);
  }
  EXPECT_DOUBLE_EQ(h(0), 0.0);
}

TEST(BoundingTest, UnitBlockAtOne) {
  auto f = std::make_shared<CoverageOracle>(
      std::vector<IntervalSet>{IntervalSet::FromIntervals({{0, 1}})});
  const Instance inst = MakeInstance({1.0}, 1.0, f);
  const BoundingFunction h = BoundingFunction::Build(inst, Partition{{{0}}});
  EXPECT_NEAR(h(1.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_LT(h(20.0), 1.0);
  EXPECT_GT(h(20.0), 1.0 - 1e-8);
  EXPECT_LE(h(50.0), 1.0);
}

TEST(BoundingTest, NonZeroEmptyValue) {
  // f(S) = 0.5 + |S| on one element, via a table.
  auto f = std::make_shared<TableOracle>(1, std::vector<double>{0.5, 1.5});
  const Instance inst = MakeInstance({2.0}, 2.0, f);
  const BoundingFunction h = BoundingFunction::Build(inst, Partition{{{0}}});
  EXPECT_DOUBLE_EQ(h(0), 0.5);
  for (double u : {0.3, 1.0, 4.0}) {
    EXPECT_NEAR(h(u), 1.5 * (1 - std::exp(-u / 2)) + 0.5 * std::exp(-u / 2),
                1e-12);
  }
}

TEST(BoundingTest, EqualRatesGiveZeroLengthSegment) {
  const Instance inst = ModularInstance({2, 4}, {1, 2}, 10);
  const BoundingFunction h =
      BoundingFunction::Build(inst, Partition{{{0}, {1}}});
  EXPECT_EQ(h.segments()[0].d_end, 0.0);
  // Only the segment over S_2 is in force.
  for (double u : {0.0, 0.7, 3.0}) {
    EXPECT_NEAR(h(u), 6.0 * (1 - std::exp(-u / 3)), 1e-12);
  }
}

TEST(BoundingTest, ZeroRateGivesInfiniteBreakpoint) {
  auto f = std::make_shared<CoverageOracle>(std::vector<IntervalSet>{
      IntervalSet::FromIntervals({{0, 1}}),
      IntervalSet::FromIntervals({{0.2, 0.5}})});
  const Instance inst = MakeInstance({1.0, 1.0}, 3.0, f);
  const BoundingFunction h =
      BoundingFunction::Build(inst, Partition{{{0}, {1}}});
  EXPECT_EQ(h.segments()[0].d_end, kInf);
  EXPECT_NEAR(h(2.0), 1 - std::exp(-2.0), 1e-12);
}

TEST(BoundingTest, IncreasingRatesRejected) {
  const Instance inst = ModularInstance({1, 4}, {1, 1}, 10);
  try {
    BoundingFunction::Build(inst, Partition{{{0}, {1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidPartition);
  }
}

TEST(BoundingTest, MalformedPartitionsRejected) {
  const Instance inst = ModularInstance({1, 1, 1}, {1, 1, 1}, 2);
  EXPECT_THROW(BoundingFunction::Build(inst, Partition{{{0}, {0, 1}}}), Error);
  EXPECT_THROW(BoundingFunction::Build(inst, Partition{{{0}, {}}}), Error);
  EXPECT_THROW(BoundingFunction::Build(inst, Partition{{{0, 1, 2}}}), Error);
}

TEST(BoundingTest, StructureOnRandomPartitions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::Coverage(10, seed);
    const ElementSet x = BruteForceOpt(inst).solution;
    if (x.empty()) continue;
    const Partition p = BuildPartitionAuto(inst, x);
    const BoundingFunction h = BoundingFunction::Build(inst, p);
    const std::vector<double> d = h.Breakpoints();
    const std::vector<double> ref = ReferenceBreakpoints(inst, p);
    ASSERT_EQ(d.size(), ref.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (std::isinf(ref[j])) {
        EXPECT_TRUE(std::isinf(d[j]));
      } else {
        EXPECT_NEAR(d[j], ref[j], 1e-9 * std::max(1.0, ref[j]));
      }
      if (j > 0) EXPECT_GE(d[j], d[j - 1]);
    }
    EXPECT_LE(h.ContinuityDefect(), 1e-9);
    // Non-decreasing on a dense sample.
    double last = h(0);
    for (int i = 1; i <= 400; ++i) {
      const double now = h(0.01 * i);
      EXPECT_GE(now, last - 1e-9);
      last = now;
    }
  }
}

TEST(DominanceTest, OwnSelectionBoundsItself) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = testing::Coverage(12, seed);
    const GreedyTrace t = Greedy(inst);
    if (t.selected.empty()) continue;
    Partition p;
    for (const SelectedPrefix& s : t.selected) p.blocks.push_back({s.id});
    const DominanceReport r = VerifyDominance(inst, t, p, 1000);
    EXPECT_TRUE(r.ok || r.degenerate) << "seed " << seed << " " << r.min_slack;
  }
}

TEST(DominanceTest, OptimumWithAutoPartition) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::Coverage(10, seed);
    const ElementSet x = BruteForceOpt(inst).solution;
    if (x.empty()) continue;
    const DominanceReport r =
        VerifyDominance(inst, Greedy(inst), BuildPartitionAuto(inst, x), 1000);
    EXPECT_TRUE(r.ok) << "seed " << seed << " slack " << r.min_slack;
    EXPECT_GE(r.samples, 1000u);
  }
}

TEST(DominanceTest, HeaviestElementFillsCapacity) {
  // X = {0} with w(0) = W leaves W_max = 0: only u = 0 is checked.
  const Instance inst = ModularInstance({3, 1}, {2, 1}, 2);
  const DominanceReport r =
      VerifyDominance(inst, Greedy(inst), Partition{{{0}}}, 10);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.w_max, 0.0);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.min_slack, 0.0);
}

}  // namespace
}  // namespace msk
