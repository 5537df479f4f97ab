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

#include "msk/value_function.h"

#include <algorithm>
#include <string>
#include <utility>

#include "msk/error.h"

namespace msk {

ValueFunction::ValueFunction(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty() || breakpoints_.front().u != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "value function must start at u = 0");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i].u > breakpoints_[i - 1].u)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "breakpoints must have increasing u");
    }
  }
}

double ValueFunction::operator()(double u) const {
  if (!(u >= 0.0 && u <= domain_end())) {
    throw Error(ErrorCode::kDomain,
                "u = " + std::to_string(u) + " outside [0, " +
                    std::to_string(domain_end()) + "]");
  }
  // First breakpoint strictly right of u; u lies in [prev.u, next.u).
  auto next = std::upper_bound(
      breakpoints_.begin(), breakpoints_.end(), u,
      [](double x, const Breakpoint& b) { return x < b.u; });
  const Breakpoint& left = *std::prev(next);
  if (u == left.u || next == breakpoints_.end()) return left.value;
  const double slope = (next->value - left.value) / (next->u - left.u);
  return left.value + (u - left.u) * slope;
}

std::vector<double> ValueFunction::Slopes() const {
  std::vector<double> slopes;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    slopes.push_back((breakpoints_[i].value - breakpoints_[i - 1].value) /
                     (breakpoints_[i].u - breakpoints_[i - 1].u));
  }
  return slopes;
}

ValueFunction BuildValueFunction(const GreedyTrace& trace, double f_empty) {
  std::vector<Breakpoint> points;
  points.reserve(trace.selected.size() + 1);
  points.push_back({0.0, f_empty});
  for (const SelectedPrefix& p : trace.selected) {
    points.push_back({p.prefix_weight, p.prefix_value});
  }
  return ValueFunction(std::move(points));
}

}  // namespace msk
