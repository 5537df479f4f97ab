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

// A coverage instance on which the greedy-plus-best-singleton heuristic
// returns about 0.4294 of the optimum.
//
// Three big sets X = [0, fX), Y = [1, 1 + fY), Z = [2, 2 + fZ) form the
// optimum (weight exactly 1 = W, value 1). Small "bait" elements I_1..I_k2
// are packed in front of them so that the greedy, breaking ties towards
// smaller ids, takes all of them and then Z, after which neither X nor Y
// fits any more:
//
//   * phase 1, I_1..I_k1: consecutive pieces of Z of length eps (the last
//     one shorter, "ragged", so that exactly fX / wX * wZ of Z is left);
//   * phase 2, I_{k1+1}..I_k2: each takes a slice eps * w of X, Y and Z.
//
// Element ids: I_j is j - 1, then Z = k2, X = k2 + 1, Y = k2 + 2.

#ifndef MSK_ADVERSARIAL_H_
#define MSK_ADVERSARIAL_H_

#include <cstddef>
#include <string>
#include <vector>

#include "msk/instance.h"

namespace msk {

struct AdversarialParams {
  double f_x = 0.42943;
  double f_y = 0.42943;
  double f_z = 1.0 - 2 * 0.42943;
  double w_x = 0.4584;
  double w_y = 0.4584;
  double w_z = 1.0 - 2 * 0.4584;
  double capacity = 1.0;
  double rho = 0.62233;

  double epsilon = 0.0;           // requested step
  double epsilon_adjusted = 0.0;  // (fX / wX - rho) / (k2 - k1)
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  bool structure_only = false;

  // fX / wX, the density of X, Y and of the first phase-2 element.
  double x_density() const { return f_x / w_x; }
  // Length of Z covered in phase 1: fZ - (fX / wX) wZ.
  double phase1_length() const { return f_z - x_density() * w_z; }
  // The greedy's value: 1 - 2 rho wX.
  double target_value() const { return 1.0 - 2.0 * rho * w_x; }

  std::size_t z_id() const { return k2; }
  std::size_t x_id() const { return k2 + 1; }
  std::size_t y_id() const { return k2 + 2; }
  std::size_t size() const { return k2 + 3; }
};

// Derives eps', k1 and k2 from `params.epsilon`. Throws
// kConstructionInfeasible if eps is too large for a single phase-2 step.
AdversarialParams ResolveAdversarialParams(double epsilon,
                                           bool structure_only = false);

struct AdversarialChecks {
  double phase1_weight = 0.0;   // w(I_1) + ... + w(I_k1)
  double phase2_weight = 0.0;   // w(I_{k1+1}) + ... + w(I_k2)
  double total_weight = 0.0;    // all I_j and Z, summed in selection order
  double margin_fits = 0.0;     // W - total_weight; Z must fit
  double margin_blocks = 0.0;   // total_weight + wX - W; X must not fit
  bool fits_ok = false;
  bool blocks_ok = false;
  bool densities_ok = false;
};

struct AdversarialInstance {
  AdversarialParams params;
  Instance instance;
  std::vector<ElementId> expected_selection;  // I_1, ..., I_k2, Z
  std::vector<double> expected_density;       // density at each selection
  AdversarialChecks checks;
};

// Builds and validates the instance. Without `structure_only`, failing any
// check throws kConstructionInfeasible naming the inequality; with it, the
// "X no longer fits" check is reported but not enforced.
AdversarialInstance GenerateAdversarial(double epsilon,
                                        bool structure_only = false);

// Rebuilds predictions for an instance read back from disk. Throws
// kInvariantViolation if the instance does not have the expected shape.
AdversarialInstance AttachAdversarialPredictions(const AdversarialParams& params,
                                                 Instance instance);

inline constexpr double kAdversarialDensityTolerance = 1e-9;

struct AdversarialReport {
  bool trace_match = false;
  std::string first_divergence;  // empty when the selections match
  std::size_t selected_count = 0;
  bool x_rejected = false;
  bool y_rejected = false;
  double final_weight = 0.0;
  double max_density_error = 0.0;  // over all selections and X/Y/Z replays
  double greedy_value = 0.0;
  double gps_value = 0.0;
  double max_singleton_value = 0.0;
  double opt_value = 0.0;  // f({X, Y, Z})
  double ratio = 0.0;
  double target_value = 0.0;
};

// Runs the lazy greedy and greedy-plus-singleton and compares against the
// predictions. In structure-only mode only the first k2 + 1 selections are
// compared; otherwise the run must stop there with X and Y rejected.
AdversarialReport VerifyAdversarial(const AdversarialInstance& adv);

}  // namespace msk

#endif  // MSK_ADVERSARIAL_H_
