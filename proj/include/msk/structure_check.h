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

// Exhaustive monotonicity and submodularity checks for small ground sets.

#ifndef MSK_STRUCTURE_CHECK_H_
#define MSK_STRUCTURE_CHECK_H_

#include <cstddef>
#include <optional>
#include <span>

#include "msk/oracle.h"

namespace msk {

inline constexpr std::size_t kMaxStructureCheckElements = 16;

// Violations smaller than this pass.
inline constexpr double kStructureTolerance = 1e-9;

// Monotone violation: a subset of b with f(a) > f(b).
// Submodular violation: a subset of b, e outside b, with
// f(a + e) - f(a) < f(b + e) - f(b).
struct StructureWitness {
  ElementSet a;
  ElementSet b;
  std::optional<ElementId> e;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct StructureReport {
  bool monotone = true;
  bool submodular = true;
  std::optional<StructureWitness> monotone_witness;
  std::optional<StructureWitness> submodular_witness;
};

// Checks f restricted to `ground` (sorted ids). Costs 2^|ground| oracle
// calls and O(|ground| 3^|ground|) time. Throws kSizeLimit beyond 16 ids.
StructureReport CheckMonotoneSubmodular(const SetFunction& f,
                                        std::span<const ElementId> ground);

// Checks f on the elements 0..n-1.
StructureReport CheckMonotoneSubmodular(const SetFunction& f, std::size_t n);

}  // namespace msk

#endif  // MSK_STRUCTURE_CHECK_H_
