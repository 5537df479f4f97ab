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

// JSON encoding of instances and of every report the CLI prints.
//
// Instance files look like
//
//   {"format": "msk-instance", "version": 1, "n": 3,
//    "weights": [8, 8, 1], "capacity": 16,
//    "oracle": {"kind": "modular", "values": [8, 8, 2]}}
//
// with oracle kinds "modular" (values), "table" (an object mapping
// comma-joined sorted ids, "" for the empty set, to values) and "coverage"
// (intervals: one list of [lo, hi] pairs per element). Adversarial instances
// carry an extra "adversarial" object with their construction parameters.
// Doubles are written in shortest round-trip form.

#ifndef MSK_JSON_IO_H_
#define MSK_JSON_IO_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "msk/adversarial.h"
#include "msk/algorithms.h"
#include "msk/bounding.h"
#include "msk/greedy.h"
#include "msk/instance.h"
#include "msk/structure_check.h"

namespace msk {

using Json = nlohmann::json;

inline constexpr int kInstanceFormatVersion = 1;

// Throws kInvalidArgument for contracted oracles.
Json InstanceToJson(const Instance& instance,
                    const AdversarialParams* adversarial = nullptr);

// Schema problems throw kParse; a well-formed file describing an invalid
// instance (non-positive weights, ...) throws kInvariantViolation.
Instance InstanceFromJson(const Json& json);
std::optional<AdversarialParams> AdversarialParamsFromJson(const Json& json);

Json ReadJsonFile(const std::string& path);  // kParse on any failure
void WriteJsonFile(const std::string& path, const Json& json);

Json TraceToJson(const GreedyTrace& trace);
Json ResultToJson(const AlgorithmResult& result);
Json PartitionToJson(const Partition& partition);
Json DominanceToJson(const DominanceReport& report);
Json BoundingToJson(const BoundingFunction& h);
Json StructureToJson(const StructureReport& report);
Json AdversarialChecksToJson(const AdversarialChecks& checks);
Json AdversarialReportToJson(const AdversarialReport& report);

}  // namespace msk

#endif  // MSK_JSON_IO_H_
