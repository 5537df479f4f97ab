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

#include "msk/instance.h"

#include <cmath>
#include <string>
#include <utility>

#include "msk/error.h"

namespace msk {

double Instance::Weight(std::span<const ElementId> s) const {
  double total = 0.0;
  for (ElementId e : s) total += weights.at(e);
  return total;
}

void ValidateInstance(const Instance& instance) {
  if (instance.oracle == nullptr) {
    throw Error(ErrorCode::kInvariantViolation, "instance has no oracle");
  }
  if (instance.oracle->ground_size() != instance.weights.size()) {
    throw Error(ErrorCode::kInvariantViolation,
                "oracle ground set has " +
                    std::to_string(instance.oracle->ground_size()) +
                    " elements but " + std::to_string(instance.weights.size()) +
                    " weights were given");
  }
  for (std::size_t e = 0; e < instance.weights.size(); ++e) {
    const double w = instance.weights[e];
    if (!std::isfinite(w) || w <= 0.0) {
      throw Error(ErrorCode::kInvariantViolation,
                  "weight of element " + std::to_string(e) +
                      " must be positive and finite");
    }
  }
  if (!std::isfinite(instance.capacity) || instance.capacity <= 0.0) {
    throw Error(ErrorCode::kInvariantViolation,
                "capacity must be positive and finite");
  }
}

Instance MakeInstance(std::vector<double> weights, double capacity,
                      std::shared_ptr<const SetFunction> oracle) {
  Instance instance{std::move(weights), capacity, std::move(oracle)};
  ValidateInstance(instance);
  return instance;
}

}  // namespace msk
