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

#ifndef MSK_ALGORITHMS_H_
#define MSK_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msk/greedy.h"
#include "msk/instance.h"

namespace msk {

// Where the returned solution came from.
struct BestSeed {
  enum class Kind { kEnumeration, kGreedy, kSingleton };

  Kind kind = Kind::kGreedy;
  ElementSet seed;                // kEnumeration: the enumerated set G
  ElementId singleton = 0;        // kSingleton: the element returned

  friend bool operator==(const BestSeed&, const BestSeed&) = default;
};

struct AlgorithmResult {
  ElementSet solution;
  double value = 0.0;  // one final evaluation of f(solution)
  std::uint64_t oracle_calls = 0;
  BestSeed best_seed;
};

inline constexpr int kMaxEnumerationSize = 3;

// For every G with |G| <= kappa and w(G) <= W, in lexicographic order of the
// sorted id tuples, runs the greedy on f_G with capacity W - w(G) and keeps
// the best A + G (first maximizer wins). kappa must be in 0..3.
AlgorithmResult EnumGreedy(const Instance& instance, int kappa,
                           GreedyMode mode = GreedyMode::kPlain);

// The better of the greedy set and the best feasible singleton; the greedy
// set wins ties.
AlgorithmResult GreedyPlusSingleton(const Instance& instance,
                                    GreedyMode mode = GreedyMode::kPlain);

AlgorithmResult GreedyOnly(const Instance& instance,
                           GreedyMode mode = GreedyMode::kPlain);

// Names accepted: greedy, enum0, enum1, enum2, enum3, gps.
bool IsAlgorithmName(std::string_view name);
AlgorithmResult RunAlgorithm(const Instance& instance, std::string_view name,
                             GreedyMode mode = GreedyMode::kPlain);

struct ComplexityPoint {
  std::size_t n = 0;
  std::uint64_t oracle_calls = 0;
};

// Oracle calls of EnumGreedy(kappa) on family(n) for each n.
std::vector<ComplexityPoint> CountComplexity(
    const std::function<Instance(std::size_t)>& family,
    std::span<const std::size_t> sizes, int kappa);

// Least-squares slope of log(calls) against log(n).
double LogLogSlope(std::span<const ComplexityPoint> points);

}  // namespace msk

#endif  // MSK_ALGORITHMS_H_
