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

#include "msk/structure_check.h"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "msk/error.h"

namespace msk {
namespace {

ElementSet MaskToSet(std::uint32_t mask, std::span<const ElementId> ground) {
  ElementSet out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) out.push_back(ground[i]);
  }
  return out;
}

}  // namespace

StructureReport CheckMonotoneSubmodular(const SetFunction& f,
                                        std::span<const ElementId> ground) {
  const std::size_t n = ground.size();
  if (n > kMaxStructureCheckElements) {
    throw Error(ErrorCode::kSizeLimit,
                "exhaustive structure check supports at most " +
                    std::to_string(kMaxStructureCheckElements) +
                    " elements, got " + std::to_string(n));
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (ground[i] <= ground[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ground ids must be sorted and distinct");
    }
  }

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<double> value(std::size_t{full} + 1);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    value[mask] = f.Evaluate(MaskToSet(mask, ground));
  }

  StructureReport report;
  // Monotone: every S subset of T.
  for (std::uint32_t t = 0; t <= full && report.monotone; ++t) {
    for (std::uint32_t s = 0;; s = (s - t) & t) {
      if (value[s] > value[t] + kStructureTolerance) {
        report.monotone = false;
        report.monotone_witness = StructureWitness{
            MaskToSet(s, ground), MaskToSet(t, ground), std::nullopt,
            value[s], value[t]};
        break;
      }
      if (s == t) break;
    }
  }

  // Diminishing returns: e outer, B over sets avoiding e, A over subsets of B.
  for (std::size_t i = 0; i < n && report.submodular; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    const std::uint32_t rest = full & ~bit;
    for (std::uint32_t b = 0; b <= rest && report.submodular; ++b) {
      if (b & bit) continue;
      const double gain_b = value[b | bit] - value[b];
      for (std::uint32_t a = 0;; a = (a - b) & b) {
        const double gain_a = value[a | bit] - value[a];
        if (gain_a < gain_b - kStructureTolerance) {
          report.submodular = false;
          report.submodular_witness =
              StructureWitness{MaskToSet(a, ground), MaskToSet(b, ground),
                               ground[i], gain_a, gain_b};
          break;
        }
        if (a == b) break;
      }
    }
  }
  return report;
}

StructureReport CheckMonotoneSubmodular(const SetFunction& f, std::size_t n) {
  if (n > kMaxStructureCheckElements) {
    throw Error(ErrorCode::kSizeLimit,
                "exhaustive structure check supports at most " +
                    std::to_string(kMaxStructureCheckElements) +
                    " elements, got " + std::to_string(n));
  }
  std::vector<ElementId> ground(n);
  std::iota(ground.begin(), ground.end(), ElementId{0});
  return CheckMonotoneSubmodular(f, ground);
}

}  // namespace msk
