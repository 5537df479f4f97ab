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

// Reference implementations used as test oracles. They are deliberately
// naive and share no code paths with the library beyond SetFunction
// evaluation.

#ifndef MSK_TESTS_TEST_SUPPORT_H_
#define MSK_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "msk/families.h"
#include "msk/instance.h"
#include "msk/interval_set.h"
#include "msk/oracle.h"

namespace msk::testing {

inline Instance Coverage(std::size_t n, std::uint64_t seed) {
  return MakeFamilyInstance(Family::kCoverage, n, seed, 0);
}

inline Instance Modular(std::size_t n, std::uint64_t seed) {
  return MakeFamilyInstance(Family::kModular, n, seed, 0);
}

inline Instance ModularInstance(std::vector<double> values,
                                std::vector<double> weights, double capacity) {
  return MakeInstance(std::move(weights), capacity,
                      std::make_shared<ModularOracle>(std::move(values)));
}

// Measure of a union by checking every elementary cell between consecutive
// endpoints against every interval. Quadratic, but obviously right.
inline double NaiveMeasure(const std::vector<Interval>& intervals) {
  std::vector<double> points;
  for (const Interval& iv : intervals) {
    points.push_back(iv.lo);
    points.push_back(iv.hi);
  }
  std::sort(points.begin(), points.end());
  double total = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double mid = 0.5 * (points[i - 1] + points[i]);
    for (const Interval& iv : intervals) {
      if (iv.lo <= mid && mid < iv.hi) {
        total += points[i] - points[i - 1];
        break;
      }
    }
  }
  return total;
}

struct ReferenceOpt {
  double value = -std::numeric_limits<double>::infinity();
  ElementSet solution;
};

// Depth-first include/exclude search over all subsets.
inline ReferenceOpt RecursiveOpt(const Instance& instance) {
  ReferenceOpt best;
  ElementSet current;
  std::function<void(ElementId, double)> dfs = [&](ElementId e, double w) {
    if (e == instance.size()) {
      const double value = instance.f().Evaluate(current);
      if (value > best.value ||
          (value == best.value && current < best.solution)) {
        best.value = value;
        best.solution = current;
      }
      return;
    }
    if (FitsCapacity(w + instance.weights[e], instance.capacity)) {
      current.push_back(e);
      dfs(e + 1, w + instance.weights[e]);
      current.pop_back();
    }
    dfs(e + 1, w);
  };
  dfs(0, 0.0);
  return best;
}

// Algorithm 1 straight from its definition: every marginal is two full
// evaluations, the feasibility test recomputes w(A + e) from scratch.
struct ReferenceRun {
  std::vector<ElementId> considered;
  std::vector<ElementId> selected;
};

inline ReferenceRun ReferenceGreedy(const Instance& instance) {
  const SetFunction& f = instance.f();
  std::set<ElementId> remaining;
  for (ElementId e = 0; e < instance.size(); ++e) remaining.insert(e);
  ElementSet a;
  ReferenceRun run;
  while (!remaining.empty()) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<std::pair<ElementId, double>> densities;
    for (ElementId e : remaining) {
      ElementSet with = a;
      with.push_back(e);
      std::sort(with.begin(), with.end());
      const double d = (f.Evaluate(with) - f.Evaluate(a)) / instance.weights[e];
      densities.push_back({e, d});
      best = std::max(best, d);
    }
    const double slack = 1e-12 * std::max(1.0, std::abs(best));
    ElementId pick = 0;
    for (const auto& [e, d] : densities) {
      if (d >= best - slack) {
        pick = e;
        break;
      }
    }
    remaining.erase(pick);
    run.considered.push_back(pick);
    ElementSet with = a;
    with.push_back(pick);
    std::sort(with.begin(), with.end());
    if (instance.Feasible(with)) {
      a = with;
      run.selected.push_back(pick);
    }
  }
  return run;
}

}  // namespace msk::testing

#endif  // MSK_TESTS_TEST_SUPPORT_H_
