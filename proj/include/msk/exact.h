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

#ifndef MSK_EXACT_H_
#define MSK_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "msk/families.h"
#include "msk/instance.h"

namespace msk {

inline constexpr std::size_t kMaxBruteForceElements = 22;

struct OptResult {
  double value = 0.0;
  ElementSet solution;
};

// Evaluates every feasible subset. Ties go to the lexicographically smallest
// id tuple. Throws kSizeLimit for more than 22 elements.
OptResult BruteForceOpt(const Instance& instance);

struct RatioRecord {
  std::uint64_t trial = 0;
  std::size_t n = 0;
  std::string algorithm;
  double alg_value = 0.0;
  double opt_value = 0.0;
  double ratio = 1.0;  // alg / opt, or 1 when opt is 0
  std::uint64_t oracle_calls = 0;
};

struct SweepConfig {
  Family family = Family::kCoverage;
  std::size_t n = 12;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> algorithms;
  unsigned threads = 1;
};

// One record per (trial, algorithm), ordered by trial then by the order of
// `config.algorithms`. Output depends only on the config, not on `threads`.
std::vector<RatioRecord> RatioSweep(const SweepConfig& config);

// Header: trial,n,alg,alg_value,opt_value,ratio,oracle_calls
void WriteRatioCsv(std::ostream& out, std::span<const RatioRecord> records);

// MSK_THREADS if set to a positive integer, otherwise the hardware count.
unsigned DefaultWorkerCount();

}  // namespace msk

#endif  // MSK_EXACT_H_
