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

#include "msk/families.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "msk/error.h"
#include "msk/interval_set.h"
#include "msk/oracle.h"

namespace msk {
namespace {

// Uniform in (0, 1].
double PositiveUnit(std::mt19937_64& rng) {
  return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::vector<double> RandomWeights(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> weights(n);
  for (double& w : weights) w = PositiveUnit(rng);
  return weights;
}

double RandomCapacity(const std::vector<double>& weights, std::mt19937_64& rng) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  return total * std::uniform_real_distribution<double>(0.3, 0.9)(rng);
}

}  // namespace

Family ParseFamily(std::string_view name) {
  if (name == "coverage") return Family::kCoverage;
  if (name == "modular") return Family::kModular;
  if (name == "bad" || name == "bad-example") return Family::kBadExample;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(name) +
                  "' (expected coverage, modular or bad)");
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kCoverage:
      return "coverage";
    case Family::kModular:
      return "modular";
    case Family::kBadExample:
      return "bad";
  }
  return "unknown";
}

std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

Instance RandomCoverageInstance(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> piece_count(1, 3);
  std::uniform_real_distribution<double> start(0.0, 1.0);
  std::uniform_real_distribution<double> length(0.02, 0.35);
  std::vector<IntervalSet> sets;
  sets.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<Interval> pieces;
    const int count = piece_count(rng);
    for (int i = 0; i < count; ++i) {
      const double lo = start(rng);
      pieces.push_back({lo, std::min(1.0, lo + length(rng))});
    }
    sets.push_back(IntervalSet::FromIntervals(std::move(pieces)));
  }
  std::vector<double> weights = RandomWeights(n, rng);
  const double capacity = RandomCapacity(weights, rng);
  return MakeInstance(std::move(weights), capacity,
                      std::make_shared<CoverageOracle>(std::move(sets)));
}

Instance RandomModularInstance(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(n);
  for (double& v : values) v = unit(rng);
  std::vector<double> weights = RandomWeights(n, rng);
  const double capacity = RandomCapacity(weights, rng);
  return MakeInstance(std::move(weights), capacity,
                      std::make_shared<ModularOracle>(std::move(values)));
}

Instance BadExampleInstance(double big_n) {
  if (!(big_n > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "N must be positive");
  }
  return MakeInstance({big_n, big_n, 1.0}, 2.0 * big_n,
                      std::make_shared<ModularOracle>(
                          std::vector<double>{big_n, big_n, 2.0}));
}

Instance MakeFamilyInstance(Family family, std::size_t n, std::uint64_t seed,
                            std::uint64_t trial) {
  std::mt19937_64 rng = TrialRng(seed, trial);
  switch (family) {
    case Family::kCoverage:
      return RandomCoverageInstance(n, rng);
    case Family::kModular:
      return RandomModularInstance(n, rng);
    case Family::kBadExample:
      return BadExampleInstance(2.0 + static_cast<double>(trial));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace msk
