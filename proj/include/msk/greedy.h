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

// The density greedy for knapsack-constrained set function maximization.
//
// Each iteration considers the not-yet-considered element with the largest
// density f_A(e) / w(e), removes it from the candidate pool, and adds it to A
// if it still fits. Every element is considered exactly once.
//
// Ties: densities within kDensityTieTolerance (relative to the maximum) are
// treated as equal and the smallest element id wins. Exact ties in exact
// arithmetic show up as last-bit differences in floating point, and
// worst-case constructions depend on them resolving by id.

#ifndef MSK_GREEDY_H_
#define MSK_GREEDY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "msk/instance.h"
#include "msk/oracle.h"

namespace msk {

inline constexpr double kDensityTieTolerance = 1e-12;

struct ConsideredStep {
  ElementId id = 0;
  double marginal = 0.0;
  double density = 0.0;
  bool selected = false;

  friend bool operator==(const ConsideredStep&, const ConsideredStep&) = default;
};

// One entry per selected element a_i: w(A_i) and f(A_i).
struct SelectedPrefix {
  ElementId id = 0;
  double prefix_weight = 0.0;
  double prefix_value = 0.0;

  friend bool operator==(const SelectedPrefix&, const SelectedPrefix&) = default;
};

struct GreedyTrace {
  double empty_value = 0.0;  // f(empty set)
  std::vector<ConsideredStep> considered;
  std::vector<SelectedPrefix> selected;
  ElementSet final_set;

  double final_weight() const {
    return selected.empty() ? 0.0 : selected.back().prefix_weight;
  }
  double final_value() const {
    return selected.empty() ? empty_value : selected.back().prefix_value;
  }

  friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

enum class GreedyMode { kPlain, kLazy };

// Rescans every remaining element each iteration: n(n+1)/2 marginals, two
// oracle calls each, plus one call for f(empty set).
GreedyTrace Greedy(const SetFunction& f, std::span<const double> weights,
                   double capacity);
GreedyTrace Greedy(const Instance& instance);

// Same trace as Greedy() when f is monotone submodular, using a max-heap of
// stale densities that are refreshed only when they reach the top.
GreedyTrace LazyGreedy(const SetFunction& f, std::span<const double> weights,
                       double capacity);
GreedyTrace LazyGreedy(const Instance& instance);

GreedyTrace RunGreedy(const Instance& instance, GreedyMode mode);
GreedyTrace RunGreedy(const SetFunction& f, std::span<const double> weights,
                      double capacity, GreedyMode mode);

// Checks f_{A_{i-1}}(a_i) / w(a_i) >= (f(Y) - f(A_{i-1})) / w(Y) - 1e-9 for
// the i-th selected element (1-based). Y must be non-empty and contained in
// A_{i-1} plus the elements not yet considered when a_i was picked;
// otherwise throws kInvalidArgument. One oracle call.
bool CheckDensityLemma(const Instance& instance, const GreedyTrace& trace,
                       std::span<const ElementId> y, std::size_t i);

// A_{i-1} + E'(i) for the i-th selected element (1-based).
ElementSet DensityLemmaDomain(const GreedyTrace& trace, std::size_t i);

}  // namespace msk

#endif  // MSK_GREEDY_H_
