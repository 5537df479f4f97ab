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

#include "msk/greedy.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <string>

#include "msk/error.h"

namespace msk {
namespace {

double TieSlack(double best) {
  return kDensityTieTolerance * std::max(1.0, std::abs(best));
}

void CheckWeights(const SetFunction& f, std::span<const double> weights) {
  if (weights.size() != f.ground_size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "got " + std::to_string(weights.size()) +
                    " weights for a ground set of " +
                    std::to_string(f.ground_size()));
  }
}

// Bookkeeping shared by the plain and lazy scans once an element has been
// chosen for consideration.
class TraceBuilder {
 public:
  TraceBuilder(const SetFunction& f, std::span<const double> weights,
               double capacity)
      : weights_(weights),
        capacity_(capacity),
        session_(f.StartSession({})) {
    trace_.empty_value = f.Evaluate({});
    value_ = trace_.empty_value;
    trace_.considered.reserve(weights.size());
  }

  GainSession& session() { return *session_; }
  std::size_t selected_count() const { return trace_.selected.size(); }

  void Consider(ElementId e, double gain) {
    const double density = gain / weights_[e];
    const bool fits = FitsCapacity(weight_ + weights_[e], capacity_);
    trace_.considered.push_back({e, gain, density, fits});
    if (!fits) return;
    session_->Add(e);
    weight_ += weights_[e];
    value_ += gain;
    trace_.selected.push_back({e, weight_, value_});
    trace_.final_set.push_back(e);
  }

  GreedyTrace Finish() {
    std::sort(trace_.final_set.begin(), trace_.final_set.end());
    return std::move(trace_);
  }

 private:
  std::span<const double> weights_;
  double capacity_;
  std::unique_ptr<GainSession> session_;
  GreedyTrace trace_;
  double weight_ = 0.0;
  double value_ = 0.0;
};

struct HeapEntry {
  double density;
  ElementId id;
  std::size_t version;  // number of selections when `density` was computed
};

// Max-heap order: larger density first, then smaller id.
struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.density != b.density) return a.density < b.density;
    return a.id > b.id;
  }
};

}  // namespace

GreedyTrace Greedy(const SetFunction& f, std::span<const double> weights,
                   double capacity) {
  CheckWeights(f, weights);
  TraceBuilder builder(f, weights, capacity);
  std::vector<ElementId> remaining(weights.size());
  std::iota(remaining.begin(), remaining.end(), ElementId{0});
  std::vector<double> gain(weights.size());
  std::vector<double> density(weights.size());

  while (!remaining.empty()) {
    double best = -std::numeric_limits<double>::infinity();
    for (ElementId e : remaining) {
      gain[e] = builder.session().Gain(e);
      density[e] = gain[e] / weights[e];
      best = std::max(best, density[e]);
    }
    const double threshold = best - TieSlack(best);
    auto pick = std::find_if(remaining.begin(), remaining.end(),
                             [&](ElementId e) { return density[e] >= threshold; });
    const ElementId e = *pick;
    remaining.erase(pick);
    builder.Consider(e, gain[e]);
  }
  return builder.Finish();
}

GreedyTrace LazyGreedy(const SetFunction& f, std::span<const double> weights,
                       double capacity) {
  CheckWeights(f, weights);
  TraceBuilder builder(f, weights, capacity);
  std::vector<double> gain(weights.size());
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap;
  for (ElementId e = 0; e < weights.size(); ++e) {
    gain[e] = builder.session().Gain(e);
    heap.push({gain[e] / weights[e], e, 0});
  }

  std::vector<HeapEntry> refreshed;
  while (!heap.empty()) {
    // Refresh heads until no stale bound can reach the tie band of the best
    // fresh density. Stale densities upper-bound fresh ones for submodular f;
    // the extra slack absorbs last-bit violations of that.
    const std::size_t version = builder.selected_count();
    refreshed.clear();
    double best = -std::numeric_limits<double>::infinity();
    while (!heap.empty()) {
      HeapEntry top = heap.top();
      if (!refreshed.empty() && top.density < best - 2.0 * TieSlack(best)) {
        break;
      }
      heap.pop();
      if (top.version != version) {
        gain[top.id] = builder.session().Gain(top.id);
        top.density = gain[top.id] / weights[top.id];
        top.version = version;
      }
      refreshed.push_back(top);
      best = std::max(best, top.density);
    }

    const double threshold = best - TieSlack(best);
    std::size_t pick = refreshed.size();
    for (std::size_t i = 0; i < refreshed.size(); ++i) {
      if (refreshed[i].density >= threshold &&
          (pick == refreshed.size() || refreshed[i].id < refreshed[pick].id)) {
        pick = i;
      }
    }
    for (std::size_t i = 0; i < refreshed.size(); ++i) {
      if (i != pick) heap.push(refreshed[i]);
    }
    builder.Consider(refreshed[pick].id, gain[refreshed[pick].id]);
  }
  return builder.Finish();
}

GreedyTrace Greedy(const Instance& instance) {
  return Greedy(instance.f(), instance.weights, instance.capacity);
}

GreedyTrace LazyGreedy(const Instance& instance) {
  return LazyGreedy(instance.f(), instance.weights, instance.capacity);
}

GreedyTrace RunGreedy(const SetFunction& f, std::span<const double> weights,
                      double capacity, GreedyMode mode) {
  return mode == GreedyMode::kLazy ? LazyGreedy(f, weights, capacity)
                                   : Greedy(f, weights, capacity);
}

GreedyTrace RunGreedy(const Instance& instance, GreedyMode mode) {
  return RunGreedy(instance.f(), instance.weights, instance.capacity, mode);
}

ElementSet DensityLemmaDomain(const GreedyTrace& trace, std::size_t i) {
  if (i == 0 || i > trace.selected.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "selection index " + std::to_string(i) + " out of range 1.." +
                    std::to_string(trace.selected.size()));
  }
  const ElementId a_i = trace.selected[i - 1].id;
  std::vector<ElementId> domain;
  for (std::size_t j = 0; j + 1 < i; ++j) domain.push_back(trace.selected[j].id);
  auto it = std::find_if(trace.considered.begin(), trace.considered.end(),
                         [&](const ConsideredStep& s) { return s.id == a_i; });
  for (; it != trace.considered.end(); ++it) domain.push_back(it->id);
  return MakeElementSet(std::move(domain));
}

bool CheckDensityLemma(const Instance& instance, const GreedyTrace& trace,
                       std::span<const ElementId> y, std::size_t i) {
  const ElementSet domain = DensityLemmaDomain(trace, i);
  if (y.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Y must be non-empty");
  }
  const ElementSet y_set = MakeElementSet(std::vector<ElementId>(y.begin(), y.end()));
  if (!IsSubset(y_set, domain)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Y must lie in A_{i-1} plus the elements not yet considered");
  }
  const ElementId a_i = trace.selected[i - 1].id;
  const auto step =
      std::find_if(trace.considered.begin(), trace.considered.end(),
                   [&](const ConsideredStep& s) { return s.id == a_i; });
  const double prefix_value =
      i == 1 ? trace.empty_value : trace.selected[i - 2].prefix_value;
  const double rhs =
      (instance.f().Evaluate(y_set) - prefix_value) / instance.Weight(y_set);
  return step->density >= rhs - 1e-9;
}

}  // namespace msk
