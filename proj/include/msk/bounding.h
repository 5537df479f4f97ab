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

// Piecewise-exponential lower bounds on the greedy value function.
//
// Given a feasible X split into blocks X_1..X_k with non-increasing rates
// r_j = f_{S_{j-1}}(X_j) / w(X_j), where S_j = X_1 + ... + X_j, the bounding
// function is
//
//   h(u) = f(S_j) - r_j w(S_j) exp(-(u - D_{j-1}) / w(S_j))
//
// on [D_{j-1}, D_j), with D_0 = 0, D_j = sum_{i<=j} w(X_i) ln(r_i / r_{j+1})
// and D_k = +inf. When r_{j+1} = 0, D_j = +inf. The greedy value function
// dominates h on [0, W_max], W_max = min(W - max_{e in X} w(e), w(A)).

#ifndef MSK_BOUNDING_H_
#define MSK_BOUNDING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "msk/greedy.h"
#include "msk/instance.h"
#include "msk/value_function.h"

namespace msk {

// Rates may increase by at most this much from one block to the next.
inline constexpr double kRateTolerance = 1e-9;
inline constexpr double kContinuityTolerance = 1e-9;
inline constexpr double kDominanceTolerance = 1e-9;

struct Partition {
  std::vector<ElementSet> blocks;

  ElementSet Union() const;
};

// Singleton blocks, each the element of largest marginal density over the
// blocks already taken (ties to the smallest id). Throws kInvalidArgument if
// X is empty or heavier than the capacity.
Partition BuildPartitionAuto(const Instance& instance,
                             std::span<const ElementId> x);

// Blocks {e*} and R = Y \ G \ {e*}, where e* is the heaviest element of
// Y \ G, in the order whose first block has the larger density under the
// instance's oracle. The caller supplies an instance whose oracle is already
// contracted by G. A single block when R is empty.
Partition BuildPartitionTwoBlock(const Instance& instance,
                                 std::span<const ElementId> g,
                                 std::span<const ElementId> y);

struct BoundingSegment {
  double d_begin = 0.0;  // D_{j-1}
  double d_end = 0.0;    // D_j, +inf for the last segment or when r_{j+1} = 0
  double value = 0.0;    // f(S_j)
  double rate = 0.0;     // r_j
  double weight = 0.0;   // w(S_j)

  double At(double u) const;
};

class BoundingFunction {
 public:
  // Computes r_j, D_j and f(S_j) (k + 1 oracle calls) and checks that D is
  // non-decreasing and h is continuous. Throws kInvalidPartition for bad
  // blocks or increasing rates, kInvariantViolation if a check fails.
  static BoundingFunction Build(const Instance& instance,
                                const Partition& partition);

  std::span<const BoundingSegment> segments() const { return segments_; }

  // D_0..D_k; D_k is +inf.
  std::vector<double> Breakpoints() const;

  // Defined for all u >= 0; segment j covers [D_{j-1}, D_j) and zero-length
  // segments are never selected.
  double operator()(double u) const;

  // Largest |lim_{u -> D_j-} h(u) - h(D_j)| over finite D_j > 0.
  double ContinuityDefect() const;

 private:
  std::vector<BoundingSegment> segments_;
};

struct DominanceReport {
  bool ok = true;
  bool degenerate = false;  // W_max < 0: nothing to check
  double w_max = 0.0;
  double min_slack = 0.0;
  double argmin_u = 0.0;
  std::size_t grid_points = 0;
  std::size_t samples = 0;
};

// Samples V(u) - h(u) at all breakpoints of V and h inside [0, W_max], the
// midpoints between consecutive structural points, and a uniform grid of
// `grid_points` samples, and reports the smallest difference.
DominanceReport VerifyDominance(const Instance& instance,
                                const GreedyTrace& trace,
                                const Partition& partition,
                                std::size_t grid_points);

}  // namespace msk

#endif  // MSK_BOUNDING_H_
