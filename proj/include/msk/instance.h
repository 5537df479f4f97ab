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

#ifndef MSK_INSTANCE_H_
#define MSK_INSTANCE_H_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "msk/oracle.h"

namespace msk {

// Weights are real; a set is feasible when its weight is at most
// capacity * (1 + kFeasibilityTolerance).
inline constexpr double kFeasibilityTolerance = 1e-12;

inline bool FitsCapacity(double weight, double capacity) {
  return weight <= capacity * (1.0 + kFeasibilityTolerance);
}

// A knapsack instance (E, f, w, W) with E = {0, ..., n-1}.
struct Instance {
  std::vector<double> weights;
  double capacity = 0.0;
  std::shared_ptr<const SetFunction> oracle;

  std::size_t size() const { return weights.size(); }
  const SetFunction& f() const { return *oracle; }
  double Weight(std::span<const ElementId> s) const;
  bool Feasible(std::span<const ElementId> s) const {
    return FitsCapacity(Weight(s), capacity);
  }
};

// Throws kInvariantViolation unless weights are positive and finite, the
// capacity is positive and the oracle covers exactly the weighted elements.
void ValidateInstance(const Instance& instance);

Instance MakeInstance(std::vector<double> weights, double capacity,
                      std::shared_ptr<const SetFunction> oracle);

}  // namespace msk

#endif  // MSK_INSTANCE_H_
