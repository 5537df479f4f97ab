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

#include "msk/greedy.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "msk/error.h"
#include "test_support.h"

namespace msk {
namespace {

using testing::ModularInstance;

std::vector<ElementId> ConsideredIds(const GreedyTrace& t) {
  std::vector<ElementId> ids;
  for (const ConsideredStep& s : t.considered) ids.push_back(s.id);
  return ids;
}

std::vector<ElementId> SelectedIds(const GreedyTrace& t) {
  std::vector<ElementId> ids;
  for (const SelectedPrefix& s : t.selected) ids.push_back(s.id);
  return ids;
}

TEST(GreedyTest, HeavyPairInstance) {
  const Instance inst = ModularInstance({8, 8, 2}, {8, 8, 1}, 16);
  const GreedyTrace t = Greedy(inst);
  EXPECT_EQ(ConsideredIds(t), (std::vector<ElementId>{2, 0, 1}));
  EXPECT_EQ(SelectedIds(t), (std::vector<ElementId>{2, 0}));
  EXPECT_FALSE(t.considered[2].selected);
  EXPECT_EQ(t.final_set, (ElementSet{0, 2}));
  EXPECT_EQ(t.final_value(), 10.0);
  EXPECT_EQ(t.final_weight(), 9.0);
}

TEST(GreedyTest, RoomyCapacityTakesEverything) {
  const Instance inst = testing::Coverage(12, 8);
  Instance roomy = inst;
  roomy.capacity = 100.0;
  const GreedyTrace t = Greedy(roomy);
  EXPECT_EQ(t.final_set.size(), 12u);
  ElementSet all;
  for (ElementId e = 0; e < 12; ++e) all.push_back(e);
  EXPECT_NEAR(t.final_value(), roomy.f().Evaluate(all), 1e-12);
}

TEST(GreedyTest, EqualDensitiesFollowIdOrder) {
  const Instance inst = ModularInstance({1, 2, 3, 4}, {1, 2, 3, 4}, 5);
  EXPECT_EQ(ConsideredIds(Greedy(inst)), (std::vector<ElementId>{0, 1, 2, 3}));
  EXPECT_EQ(ConsideredIds(LazyGreedy(inst)),
            (std::vector<ElementId>{0, 1, 2, 3}));
}

TEST(GreedyTest, EmptyGroundSet) {
  const Instance inst = ModularInstance({}, {}, 1);
  const GreedyTrace t = Greedy(inst);
  EXPECT_TRUE(t.considered.empty());
  EXPECT_TRUE(t.final_set.empty());
  EXPECT_EQ(t, LazyGreedy(inst));
}

TEST(GreedyTest, MatchesReferenceImplementation) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = seed % 2 ? testing::Coverage(9, seed)
                                   : testing::Modular(9, seed);
    const GreedyTrace t = Greedy(inst);
    const testing::ReferenceRun ref = testing::ReferenceGreedy(inst);
    EXPECT_EQ(ConsideredIds(t), ref.considered) << "seed " << seed;
    EXPECT_EQ(SelectedIds(t), ref.selected) << "seed " << seed;
  }
}

TEST(GreedyTest, TraceInvariants) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = testing::Coverage(15, seed);
    const GreedyTrace t = Greedy(inst);
    ASSERT_EQ(t.considered.size(), inst.size());
    std::vector<bool> seen(inst.size(), false);
    for (const ConsideredStep& s : t.considered) {
      EXPECT_FALSE(seen[s.id]);
      seen[s.id] = true;
    }
    EXPECT_TRUE(inst.Feasible(t.final_set));
    EXPECT_NEAR(t.final_value(), inst.f().Evaluate(t.final_set), 1e-12);
    double last_density = std::numeric_limits<double>::infinity();
    double last_value = t.empty_value;
    for (const ConsideredStep& s : t.considered) {
      if (!s.selected) continue;
      EXPECT_LE(s.density, last_density + 1e-9);
      last_density = s.density;
    }
    for (const SelectedPrefix& p : t.selected) {
      EXPECT_GE(p.prefix_value, last_value - 1e-12);
      last_value = p.prefix_value;
    }
  }
}

TEST(GreedyTest, PlainCallCount) {
  const Instance inst = testing::Coverage(20, 4);
  const std::uint64_t before = inst.f().calls();
  Greedy(inst);
  // f(empty) once, then one marginal per remaining element per iteration.
  EXPECT_EQ(inst.f().calls() - before, 1u + 20u * 21u);
}

TEST(LazyGreedyTest, SameTraceOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 5 + seed % 46;
    const Instance inst = seed % 4 == 3 ? testing::Modular(n, seed)
                                        : testing::Coverage(n, seed);
    EXPECT_EQ(Greedy(inst), LazyGreedy(inst)) << "seed " << seed;
  }
}

TEST(LazyGreedyTest, UsesFewerCalls) {
  const Instance inst = testing::Coverage(50, 1);
  const std::uint64_t c0 = inst.f().calls();
  Greedy(inst);
  const std::uint64_t c1 = inst.f().calls();
  LazyGreedy(inst);
  const std::uint64_t c2 = inst.f().calls();
  EXPECT_LT(c2 - c1, c1 - c0);
}

TEST(DensityLemmaTest, SelectedElementItself) {
  const Instance inst = testing::Coverage(10, 2);
  const GreedyTrace t = Greedy(inst);
  for (std::size_t i = 1; i <= t.selected.size(); ++i) {
    EXPECT_TRUE(CheckDensityLemma(inst, t, ElementSet{t.selected[i - 1].id}, i));
  }
}

TEST(DensityLemmaTest, PrefixSubsets) {
  const Instance inst = testing::Coverage(10, 3);
  const GreedyTrace t = Greedy(inst);
  ASSERT_GE(t.selected.size(), 2u);
  const std::size_t i = t.selected.size();
  ElementSet prefix;
  for (std::size_t j = 0; j + 1 < i; ++j) prefix.push_back(t.selected[j].id);
  EXPECT_TRUE(CheckDensityLemma(inst, t, MakeElementSet(prefix), i));
}

TEST(DensityLemmaTest, ExhaustiveSmallInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = testing::Coverage(8, seed);
    const GreedyTrace t = Greedy(inst);
    for (std::size_t i = 1; i <= t.selected.size(); ++i) {
      const ElementSet domain = DensityLemmaDomain(t, i);
      for (std::uint64_t mask = 1; mask < (1u << domain.size()); ++mask) {
        ElementSet y;
        for (std::size_t b = 0; b < domain.size(); ++b) {
          if (mask >> b & 1) y.push_back(domain[b]);
        }
        EXPECT_TRUE(CheckDensityLemma(inst, t, y, i))
            << "seed " << seed << " i " << i;
      }
    }
  }
}

TEST(DensityLemmaTest, SampledLargerInstances) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = testing::Coverage(40, seed);
    const GreedyTrace t = Greedy(inst);
    for (int sample = 0; sample < 1000; ++sample) {
      const std::size_t i = 1 + rng() % t.selected.size();
      const ElementSet domain = DensityLemmaDomain(t, i);
      ElementSet y;
      for (ElementId e : domain) {
        if (rng() % 3 == 0) y.push_back(e);
      }
      if (y.empty()) y.push_back(domain.front());
      EXPECT_TRUE(CheckDensityLemma(inst, t, y, i));
    }
  }
}

TEST(DensityLemmaTest, PreconditionsThrow) {
  const Instance inst = ModularInstance({8, 8, 2}, {8, 8, 1}, 16);
  const GreedyTrace t = Greedy(inst);
  EXPECT_THROW(CheckDensityLemma(inst, t, ElementSet{}, 1), Error);
  EXPECT_THROW(CheckDensityLemma(inst, t, ElementSet{0}, 3), Error);
  EXPECT_THROW(CheckDensityLemma(inst, t, ElementSet{7}, 1), Error);
}

}  // namespace
}  // namespace msk
