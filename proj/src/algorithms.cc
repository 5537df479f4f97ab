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

#include "msk/algorithms.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "msk/error.h"

namespace msk {
namespace {

// Visits every G with |G| <= max_size in lexicographic order of sorted id
// tuples. Supersets of an infeasible G are skipped (weights are positive).
template <typename Visit>
void EnumerateSeeds(const Instance& instance, int max_size, ElementSet& current,
                    double current_weight, ElementId start, Visit& visit) {
  if (static_cast<int>(current.size()) == max_size) return;
  for (ElementId e = start; e < instance.size(); ++e) {
    const double weight = current_weight + instance.weights[e];
    if (!FitsCapacity(weight, instance.capacity)) continue;
    current.push_back(e);
    visit(current, weight);
    EnumerateSeeds(instance, max_size, current, weight, e + 1, visit);
    current.pop_back();
  }
}

}  // namespace

AlgorithmResult EnumGreedy(const Instance& instance, int kappa,
                           GreedyMode mode) {
  if (kappa < 0 || kappa > kMaxEnumerationSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "enumeration size must be in 0..3, got " +
                    std::to_string(kappa));
  }
  const SetFunction& f = instance.f();
  const std::uint64_t calls_before = f.calls();

  std::optional<double> best_value;
  AlgorithmResult result;
  auto visit = [&](const ElementSet& g, double g_weight) {
    const auto contracted = Contract(instance.oracle, g);
    const double residual = std::max(0.0, instance.capacity - g_weight);
    const GreedyTrace trace =
        RunGreedy(*contracted, instance.weights, residual, mode);
    ElementSet candidate = SetUnion(trace.final_set, g);
    const double value = f.Evaluate(candidate);
    if (!best_value.has_value() || value > *best_value) {
      best_value = value;
      result.solution = std::move(candidate);
      result.best_seed = {BestSeed::Kind::kEnumeration, g, 0};
    }
  };
  ElementSet current;
  visit(current, 0.0);
  EnumerateSeeds(instance, kappa, current, 0.0, 0, visit);

  result.value = f.Evaluate(result.solution);
  result.oracle_calls = f.calls() - calls_before;
  return result;
}

AlgorithmResult GreedyOnly(const Instance& instance, GreedyMode mode) {
  const SetFunction& f = instance.f();
  const std::uint64_t calls_before = f.calls();
  const GreedyTrace trace = RunGreedy(instance, mode);
  AlgorithmResult result;
  result.solution = trace.final_set;
  result.value = f.Evaluate(result.solution);
  result.oracle_calls = f.calls() - calls_before;
  result.best_seed = {BestSeed::Kind::kGreedy, {}, 0};
  return result;
}

AlgorithmResult GreedyPlusSingleton(const Instance& instance, GreedyMode mode) {
  const SetFunction& f = instance.f();
  const std::uint64_t calls_before = f.calls();
  const GreedyTrace trace = RunGreedy(instance, mode);
  const double greedy_value = f.Evaluate(trace.final_set);

  std::optional<ElementId> best_single;
  double best_single_value = 0.0;
  for (ElementId e = 0; e < instance.size(); ++e) {
    if (!FitsCapacity(instance.weights[e], instance.capacity)) continue;
    const double value = f.Evaluate({e});
    if (!best_single.has_value() || value > best_single_value) {
      best_single = e;
      best_single_value = value;
    }
  }

  AlgorithmResult result;
  if (!best_single.has_value() || greedy_value >= best_single_value) {
    result.solution = trace.final_set;
    result.best_seed = {BestSeed::Kind::kGreedy, {}, 0};
  } else {
    result.solution = {*best_single};
    result.best_seed = {BestSeed::Kind::kSingleton, {}, *best_single};
  }
  result.value = f.Evaluate(result.solution);
  result.oracle_calls = f.calls() - calls_before;
  return result;
}

bool IsAlgorithmName(std::string_view name) {
  return name == "greedy" || name == "gps" || name == "enum0" ||
         name == "enum1" || name == "enum2" || name == "enum3";
}

AlgorithmResult RunAlgorithm(const Instance& instance, std::string_view name,
                             GreedyMode mode) {
  if (name == "greedy") return GreedyOnly(instance, mode);
  if (name == "gps") return GreedyPlusSingleton(instance, mode);
  if (name.size() == 5 && name.substr(0, 4) == "enum" && name[4] >= '0' &&
      name[4] <= '3') {
    return EnumGreedy(instance, name[4] - '0', mode);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown algorithm '" + std::string(name) +
                  "' (expected greedy, enum0..enum3 or gps)");
}

std::vector<ComplexityPoint> CountComplexity(
    const std::function<Instance(std::size_t)>& family,
    std::span<const std::size_t> sizes, int kappa) {
  std::vector<ComplexityPoint> points;
  for (std::size_t n : sizes) {
    const Instance instance = family(n);
    points.push_back({n, EnumGreedy(instance, kappa).oracle_calls});
  }
  return points;
}

double LogLogSlope(std::span<const ComplexityPoint> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const ComplexityPoint& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(static_cast<double>(p.oracle_calls));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace msk
