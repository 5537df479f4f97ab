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

#include "msk/bounding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "msk/error.h"

namespace msk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireValidIds(const Instance& instance, std::span<const ElementId> s,
                     const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= instance.size() || (i > 0 && s[i] <= s[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " must be a sorted set of valid ids");
    }
  }
}

}  // namespace

ElementSet Partition::Union() const {
  ElementSet all;
  for (const ElementSet& block : blocks) all = SetUnion(all, block);
  return all;
}

Partition BuildPartitionAuto(const Instance& instance,
                             std::span<const ElementId> x) {
  RequireValidIds(instance, x, "X");
  if (x.empty()) throw Error(ErrorCode::kInvalidArgument, "X is empty");
  if (!instance.Feasible(x)) {
    throw Error(ErrorCode::kInvalidArgument, "X exceeds the capacity");
  }
  auto session = instance.f().StartSession({});
  std::vector<ElementId> remaining(x.begin(), x.end());
  Partition partition;
  while (!remaining.empty()) {
    std::vector<double> density(remaining.size());
    double best = -kInf;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      density[i] = session->Gain(remaining[i]) / instance.weights[remaining[i]];
      best = std::max(best, density[i]);
    }
    const double threshold =
        best - kDensityTieTolerance * std::max(1.0, std::abs(best));
    std::size_t pick = 0;
    while (density[pick] < threshold) ++pick;
    const ElementId e = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    session->Add(e);
    partition.blocks.push_back({e});
  }
  return partition;
}

Partition BuildPartitionTwoBlock(const Instance& instance,
                                 std::span<const ElementId> g,
                                 std::span<const ElementId> y) {
  RequireValidIds(instance, g, "G");
  RequireValidIds(instance, y, "Y");
  const ElementSet rest = SetDifference(y, g);
  if (rest.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Y \\ G is empty");
  }
  ElementId heaviest = rest.front();
  for (ElementId e : rest) {
    if (instance.weights[e] > instance.weights[heaviest]) heaviest = e;
  }
  ElementSet single = {heaviest};
  ElementSet others = SetDifference(rest, single);
  if (others.empty()) return Partition{{single}};

  const SetFunction& f = instance.f();
  const double base = f.Evaluate({});
  const double single_density =
      (f.Evaluate(single) - base) / instance.weights[heaviest];
  const double others_density =
      (f.Evaluate(others) - base) / instance.Weight(others);
  if (single_density >= others_density) {
    return Partition{{std::move(single), std::move(others)}};
  }
  return Partition{{std::move(others), std::move(single)}};
}

double BoundingSegment::At(double u) const {
  return value - rate * weight * std::exp(-(u - d_begin) / weight);
}

BoundingFunction BoundingFunction::Build(const Instance& instance,
                                         const Partition& partition) {
  const std::size_t k = partition.blocks.size();
  if (k == 0) throw Error(ErrorCode::kInvalidPartition, "no blocks");
  ElementSet seen;
  for (const ElementSet& block : partition.blocks) {
    if (block.empty()) {
      throw Error(ErrorCode::kInvalidPartition, "empty block");
    }
    RequireValidIds(instance, block, "block");
    if (SetDifference(block, seen).size() != block.size()) {
      throw Error(ErrorCode::kInvalidPartition, "blocks overlap");
    }
    seen = SetUnion(seen, block);
  }
  if (!instance.Feasible(seen)) {
    throw Error(ErrorCode::kInvalidPartition,
                "partitioned set exceeds the capacity");
  }

  const SetFunction& f = instance.f();
  std::vector<double> prefix_value(k + 1);
  std::vector<double> prefix_weight(k + 1, 0.0);
  std::vector<double> block_weight(k);
  std::vector<double> rate(k);
  ElementSet prefix;
  prefix_value[0] = f.Evaluate(prefix);
  for (std::size_t j = 0; j < k; ++j) {
    prefix = SetUnion(prefix, partition.blocks[j]);
    prefix_value[j + 1] = f.Evaluate(prefix);
    block_weight[j] = instance.Weight(partition.blocks[j]);
    prefix_weight[j + 1] = prefix_weight[j] + block_weight[j];
    rate[j] = std::max(0.0, (prefix_value[j + 1] - prefix_value[j]) /
                                block_weight[j]);
    if (j > 0 && rate[j] > rate[j - 1] + kRateTolerance) {
      throw Error(ErrorCode::kInvalidPartition,
                  "rates must not increase: r_" + std::to_string(j) + " = " +
                      std::to_string(rate[j - 1]) + " < r_" +
                      std::to_string(j + 1) + " = " + std::to_string(rate[j]));
    }
  }

  // d[j] = D_j for j = 0..k.
  std::vector<double> d(k + 1, 0.0);
  for (std::size_t j = 1; j < k; ++j) {
    const double next_rate = rate[j];  // r_{j+1}
    if (next_rate <= 0.0) {
      d[j] = kInf;
      continue;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
      // Within the rate tolerance an increase contributes no length.
      sum += block_weight[i] * std::log(std::max(1.0, rate[i] / next_rate));
    }
    d[j] = sum;
  }
  d[k] = kInf;

  BoundingFunction h;
  for (std::size_t j = 0; j < k; ++j) {
    h.segments_.push_back(
        {d[j], d[j + 1], prefix_value[j + 1], rate[j], prefix_weight[j + 1]});
  }

  for (std::size_t j = 1; j < k; ++j) {
    if (d[j] < d[j - 1] - kContinuityTolerance * std::max(1.0, d[j - 1])) {
      throw Error(ErrorCode::kInvariantViolation,
                  "breakpoints decrease at D_" + std::to_string(j));
    }
  }
  const double defect = h.ContinuityDefect();
  if (!(defect <= kContinuityTolerance)) {
    throw Error(ErrorCode::kInvariantViolation,
                "bounding function discontinuous by " + std::to_string(defect));
  }
  return h;
}

std::vector<double> BoundingFunction::Breakpoints() const {
  std::vector<double> d;
  d.push_back(segments_.front().d_begin);
  for (const BoundingSegment& s : segments_) d.push_back(s.d_end);
  return d;
}

double BoundingFunction::operator()(double u) const {
  for (const BoundingSegment& s : segments_) {
    if (u < s.d_end) return s.At(u);
  }
  return segments_.back().At(u);
}

double BoundingFunction::ContinuityDefect() const {
  double defect = 0.0;
  for (std::size_t j = 0; j + 1 < segments_.size(); ++j) {
    const double dj = segments_[j].d_end;
    if (!std::isfinite(dj) || dj <= 0.0) continue;
    // The segment in force just left of dj is the first one ending at or
    // after it.
    std::size_t left = 0;
    while (segments_[left].d_end < dj) ++left;
    const double limit = segments_[left].At(dj);
    defect = std::max(defect, std::abs(limit - (*this)(dj)));
  }
  return defect;
}

DominanceReport VerifyDominance(const Instance& instance,
                                const GreedyTrace& trace,
                                const Partition& partition,
                                std::size_t grid_points) {
  const ElementSet x = partition.Union();
  double heaviest = 0.0;
  for (ElementId e : x) heaviest = std::max(heaviest, instance.weights.at(e));

  DominanceReport report;
  report.grid_points = grid_points;
  report.w_max = std::min(instance.capacity - heaviest, trace.final_weight());
  if (report.w_max < 0.0) {
    report.degenerate = true;
    return report;
  }

  const ValueFunction v = BuildValueFunction(trace, trace.empty_value);
  const BoundingFunction h = BoundingFunction::Build(instance, partition);
  const double w_max = report.w_max;

  std::vector<double> structural = {0.0, w_max};
  for (const Breakpoint& b : v.breakpoints()) {
    if (b.u <= w_max) structural.push_back(b.u);
  }
  for (double dj : h.Breakpoints()) {
    if (std::isfinite(dj) && dj >= 0.0 && dj <= w_max) structural.push_back(dj);
  }
  std::sort(structural.begin(), structural.end());
  structural.erase(std::unique(structural.begin(), structural.end()),
                   structural.end());

  std::vector<double> samples = structural;
  for (std::size_t i = 1; i < structural.size(); ++i) {
    samples.push_back(0.5 * (structural[i - 1] + structural[i]));
  }
  if (grid_points == 1) {
    samples.push_back(0.0);
  } else {
    for (std::size_t i = 0; i < grid_points; ++i) {
      const double u = w_max * static_cast<double>(i) /
                       static_cast<double>(grid_points - 1);
      samples.push_back(std::min(u, w_max));
    }
  }

  report.min_slack = kInf;
  for (double u : samples) {
    const double slack = v(u) - h(u);
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.argmin_u = u;
    }
  }
  report.samples = samples.size();
  report.ok = report.min_slack >= -kDominanceTolerance;
  return report;
}

}  // namespace msk
