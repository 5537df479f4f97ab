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

// Seeded instance generators used by sweeps, tests and the CLI.

#ifndef MSK_FAMILIES_H_
#define MSK_FAMILIES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "msk/instance.h"

namespace msk {

enum class Family { kCoverage, kModular, kBadExample };

Family ParseFamily(std::string_view name);
std::string_view FamilyName(Family family);

// Independent stream per (seed, trial).
std::mt19937_64 TrialRng(std::uint64_t seed, std::uint64_t trial);

// Each element covers 1-3 random subintervals of [0, 1); weights uniform in
// (0, 1]; capacity uniform in (0.3 w(E), 0.9 w(E)).
Instance RandomCoverageInstance(std::size_t n, std::mt19937_64& rng);

// Values uniform in [0, 1), weights and capacity as for coverage.
Instance RandomModularInstance(std::size_t n, std::mt19937_64& rng);

// E = {0, 1, 2}, w = (N, N, 1), W = 2N, f(S) = N |S & {0,1}| + 2 |S & {2}|.
// Enumerating single elements reaches only (N + 2) / 2N of the optimum,
// below 1 - 1/e once N >= 8.
Instance BadExampleInstance(double big_n);

// Trial `trial` of a family. The bad-example family ignores `n` and uses
// N = 2 + trial.
Instance MakeFamilyInstance(Family family, std::size_t n, std::uint64_t seed,
                            std::uint64_t trial);

}  // namespace msk

#endif  // MSK_FAMILIES_H_
