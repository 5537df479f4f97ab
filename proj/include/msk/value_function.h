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

#ifndef MSK_VALUE_FUNCTION_H_
#define MSK_VALUE_FUNCTION_H_

#include <span>
#include <vector>

#include "msk/greedy.h"

namespace msk {

struct Breakpoint {
  double u = 0.0;      // cumulative selected weight
  double value = 0.0;  // value reached at that weight

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Value reached by the greedy as a function of the capacity it has used:
// linear between (w(A_{i-1}), f(A_{i-1})) and (w(A_i), f(A_i)). The slope of
// segment i is the density of a_i, so slopes never increase.
class ValueFunction {
 public:
  explicit ValueFunction(std::vector<Breakpoint> breakpoints);

  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  double domain_end() const { return breakpoints_.back().u; }

  // Throws kDomain outside [0, domain_end()].
  double operator()(double u) const;

  std::vector<double> Slopes() const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

ValueFunction BuildValueFunction(const GreedyTrace& trace, double f_empty);

}  // namespace msk

#endif  // MSK_VALUE_FUNCTION_H_
