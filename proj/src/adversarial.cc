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

#include "msk/adversarial.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <string>

#include "msk/algorithms.h"
#include "msk/error.h"
#include "msk/greedy.h"
#include "msk/interval_set.h"
#include "msk/oracle.h"

namespace msk {
namespace {

// Keeps generated instances within what fits comfortably in memory.
constexpr double kMaxPhase2Steps = 5e7;

std::string Describe(const AdversarialParams& p, ElementId id) {
  if (id < p.k2) return "I_" + std::to_string(id + 1);
  if (id == p.z_id()) return "Z";
  if (id == p.x_id()) return "X";
  if (id == p.y_id()) return "Y";
  return "#" + std::to_string(id);
}

// Left end of phase-1 piece j (0-based), i.e. 2 + eps' j, with the final
// boundary pinned to 2 + fZ - (fX / wX) wZ.
double Phase1Boundary(const AdversarialParams& p, std::size_t j) {
  if (j >= p.k1) return 2.0 + p.phase1_length();
  return 2.0 + p.epsilon_adjusted * static_cast<double>(j);
}

Instance BuildInstance(const AdversarialParams& p) {
  const double z_end = 2.0 + p.f_z;
  std::vector<IntervalSet> sets;
  std::vector<double> weights;
  sets.reserve(p.size());
  weights.reserve(p.size());

  for (std::size_t j = 0; j < p.k1; ++j) {
    const double lo = Phase1Boundary(p, j);
    const double hi = Phase1Boundary(p, j + 1);
    if (!(hi > lo)) {
      throw Error(ErrorCode::kConstructionInfeasible,
                  "ragged interval collapsed to zero length; change epsilon");
    }
    sets.push_back(IntervalSet::FromIntervals({{lo, hi}}));
    // Same density as Z at the moment I_{j+1} is considered.
    weights.push_back((hi - lo) * p.w_z / (z_end - lo));
  }

  const double z_start = Phase1Boundary(p, p.k1);
  const std::size_t steps = p.k2 - p.k1;
  for (std::size_t t = 0; t < steps; ++t) {
    const double a = p.epsilon_adjusted * static_cast<double>(t);
    const double b = p.epsilon_adjusted * static_cast<double>(t + 1);
    const Interval x{a * p.w_x, b * p.w_x};
    const Interval y{1.0 + a * p.w_y, 1.0 + b * p.w_y};
    const Interval z{z_start + a * p.w_z, z_start + b * p.w_z};
    // Summed in the order an interval-union sweep sees the pieces.
    const double length = (x.length() + y.length()) + z.length();
    sets.push_back(IntervalSet::FromIntervals({x, y, z}));
    weights.push_back(length * p.w_x / (p.f_x - x.lo));
  }

  sets.push_back(IntervalSet::FromIntervals({{2.0, z_end}}));
  weights.push_back(p.w_z);
  sets.push_back(IntervalSet::FromIntervals({{0.0, p.f_x}}));
  weights.push_back(p.w_x);
  sets.push_back(IntervalSet::FromIntervals({{1.0, 1.0 + p.f_y}}));
  weights.push_back(p.w_y);

  return MakeInstance(std::move(weights), p.capacity,
                      std::make_shared<CoverageOracle>(std::move(sets)));
}

// Density of I_{i+1} (phase 1) or of the phase-2 element / X / Y / Z
// after i selections.
double PhaseOneDensity(const AdversarialParams& p, std::size_t i) {
  return (p.f_z - p.epsilon_adjusted * static_cast<double>(i)) / p.w_z;
}
double PhaseTwoDensity(const AdversarialParams& p, std::size_t t) {
  return p.x_density() - p.epsilon_adjusted * static_cast<double>(t);
}

void Predict(AdversarialInstance& adv) {
  const AdversarialParams& p = adv.params;
  adv.expected_selection.clear();
  adv.expected_density.clear();
  for (std::size_t j = 0; j < p.k1; ++j) {
    adv.expected_selection.push_back(j);
    adv.expected_density.push_back(PhaseOneDensity(p, j));
  }
  for (std::size_t t = 0; t < p.k2 - p.k1; ++t) {
    adv.expected_selection.push_back(p.k1 + t);
    adv.expected_density.push_back(PhaseTwoDensity(p, t));
  }
  adv.expected_selection.push_back(p.z_id());
  adv.expected_density.push_back(PhaseTwoDensity(p, p.k2 - p.k1));
}

AdversarialChecks RunChecks(const AdversarialInstance& adv) {
  const AdversarialParams& p = adv.params;
  const std::vector<double>& w = adv.instance.weights;
  AdversarialChecks checks;
  double total = 0.0;
  for (std::size_t j = 0; j < p.k2; ++j) {
    total += w[j];
    (j < p.k1 ? checks.phase1_weight : checks.phase2_weight) += w[j];
  }
  checks.fits_ok = FitsCapacity(total + w[p.z_id()], p.capacity);
  total += w[p.z_id()];
  checks.total_weight = total;
  checks.margin_fits = p.capacity - total;
  checks.margin_blocks = total + p.w_x - p.capacity;
  checks.blocks_ok = !FitsCapacity(total + w[p.x_id()], p.capacity) &&
                     !FitsCapacity(total + w[p.y_id()], p.capacity);

  // Phase-1 densities strictly above fX / wX and decreasing, phase-2 ones
  // decreasing from fX / wX, and everything ends at rho > 0.
  const std::vector<double>& d = adv.expected_density;
  bool ok = p.rho > 0.0 && d.back() > 0.0;
  for (std::size_t i = 0; i < p.k1; ++i) ok = ok && d[i] > p.x_density();
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (i == p.k1) continue;  // phase boundary: d[k1] == fX / wX
    ok = ok && d[i] < d[i - 1];
  }
  for (double weight : w) ok = ok && weight > 0.0;
  checks.densities_ok = ok;
  return checks;
}

}  // namespace

AdversarialParams ResolveAdversarialParams(double epsilon,
                                           bool structure_only) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  AdversarialParams p;
  p.epsilon = epsilon;
  p.structure_only = structure_only;
  const double span = p.x_density() - p.rho;
  const double steps = std::round(span / epsilon);
  if (steps < 1.0) {
    throw Error(ErrorCode::kConstructionInfeasible,
                "epsilon too large: (fX/wX - rho)/epsilon rounds to 0 steps");
  }
  if (steps > kMaxPhase2Steps) {
    throw Error(ErrorCode::kSizeLimit, "epsilon too small for this build");
  }
  p.epsilon_adjusted = span / steps;
  // The factor keeps an exact multiple from producing an empty last piece.
  p.k1 = static_cast<std::size_t>(
      std::ceil(p.phase1_length() / p.epsilon_adjusted * (1.0 - 1e-12)));
  p.k1 = std::max<std::size_t>(p.k1, 1);
  p.k2 = p.k1 + static_cast<std::size_t>(steps);
  return p;
}

AdversarialInstance GenerateAdversarial(double epsilon, bool structure_only) {
  AdversarialInstance adv;
  adv.params = ResolveAdversarialParams(epsilon, structure_only);
  adv.instance = BuildInstance(adv.params);
  Predict(adv);
  adv.checks = RunChecks(adv);

  const AdversarialChecks& c = adv.checks;
  std::ostringstream why;
  why.precision(17);
  if (!c.fits_ok) {
    why << "inequality (a) w(I_1..I_k2) + w(Z) <= W fails: total "
        << c.total_weight << ", margin " << c.margin_fits;
  } else if (!c.blocks_ok && !structure_only) {
    why << "inequality (b) w(I_1..I_k2) + w(Z) > W - w(X) fails: total "
        << c.total_weight << ", margin " << c.margin_blocks
        << "; use a smaller epsilon or --structure-only";
  } else if (!c.densities_ok) {
    why << "density ordering of the predicted run fails";
  }
  if (!why.str().empty()) {
    throw Error(ErrorCode::kConstructionInfeasible,
                why.str() + " (epsilon " + std::to_string(epsilon) + ")");
  }
  return adv;
}

AdversarialInstance AttachAdversarialPredictions(const AdversarialParams& params,
                                                 Instance instance) {
  if (params.k2 <= params.k1 || params.k1 == 0 ||
      instance.size() != params.size() ||
      instance.f().kind() != OracleKind::kCoverage ||
      instance.capacity != params.capacity) {
    throw Error(ErrorCode::kInvariantViolation,
                "instance does not match its adversarial parameters");
  }
  AdversarialInstance adv;
  adv.params = params;
  adv.instance = std::move(instance);
  Predict(adv);
  adv.checks = RunChecks(adv);
  return adv;
}

AdversarialReport VerifyAdversarial(const AdversarialInstance& adv) {
  const AdversarialParams& p = adv.params;
  const Instance& inst = adv.instance;
  const SetFunction& f = inst.f();
  AdversarialReport report;
  report.target_value = p.target_value();

  const GreedyTrace trace = LazyGreedy(inst);
  report.selected_count = trace.selected.size();
  report.final_weight = trace.final_weight();
  report.greedy_value = trace.final_value();

  const std::size_t expected = adv.expected_selection.size();
  std::size_t matched = 0;
  for (; matched < expected; ++matched) {
    if (matched >= trace.selected.size()) {
      report.first_divergence =
          "selection " + std::to_string(matched + 1) + ": expected " +
          Describe(p, adv.expected_selection[matched]) +
          ", but the run stopped";
      break;
    }
    const ElementId got = trace.selected[matched].id;
    if (got != adv.expected_selection[matched]) {
      report.first_divergence =
          "selection " + std::to_string(matched + 1) + ": expected " +
          Describe(p, adv.expected_selection[matched]) + ", got " +
          Describe(p, got);
      break;
    }
  }
  for (const ConsideredStep& step : trace.considered) {
    if (step.id == p.x_id()) report.x_rejected = !step.selected;
    if (step.id == p.y_id()) report.y_rejected = !step.selected;
  }
  const bool prefix_ok = matched == expected;
  if (prefix_ok && !p.structure_only) {
    if (trace.selected.size() != expected) {
      report.first_divergence =
          "selection " + std::to_string(expected + 1) + ": expected none, got " +
          Describe(p, trace.selected[expected].id);
    }
  }
  report.trace_match =
      prefix_ok && (p.structure_only ||
                    (trace.selected.size() == expected && report.x_rejected &&
                     report.y_rejected));

  // Densities of the selected elements, then a replay of the X, Y and Z
  // marginals along the matched prefix.
  auto track = [&report](double actual, double predicted) {
    report.max_density_error =
        std::max(report.max_density_error, std::abs(actual - predicted));
  };
  for (std::size_t i = 0; i < matched; ++i) {
    track(trace.considered[i].density, adv.expected_density[i]);
  }
  const auto* coverage = dynamic_cast<const CoverageOracle*>(&f);
  if (coverage != nullptr) {
    const auto sets = coverage->sets();
    IntervalUnion covered;
    for (std::size_t i = 0; i <= matched && i <= expected; ++i) {
      const double predicted_xy =
          i <= p.k1 ? p.x_density() : PhaseTwoDensity(p, std::min(i, p.k2) - p.k1);
      track(covered.Uncovered(sets[p.x_id()]) / p.w_x, predicted_xy);
      track(covered.Uncovered(sets[p.y_id()]) / p.w_y, predicted_xy);
      if (i < expected) {
        const double predicted_z = i < p.k1 ? PhaseOneDensity(p, i)
                                            : PhaseTwoDensity(p, i - p.k1);
        track(covered.Uncovered(sets[p.z_id()]) / p.w_z, predicted_z);
      }
      if (i < matched) covered.Add(sets[adv.expected_selection[i]]);
    }
  }

  report.gps_value = GreedyPlusSingleton(inst, GreedyMode::kLazy).value;
  for (ElementId e = 0; e < inst.size(); ++e) {
    report.max_singleton_value =
        std::max(report.max_singleton_value, f.Evaluate({e}));
  }
  report.opt_value = f.Evaluate({p.z_id(), p.x_id(), p.y_id()});
  report.ratio = report.gps_value / report.opt_value;
  return report;
}

}  // namespace msk
