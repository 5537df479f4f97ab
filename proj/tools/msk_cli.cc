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

// msk: command-line front end.
//
//   msk run --instance inst.json --alg enum2 [--lazy] [--out result.json]
//   msk gen-adversarial --epsilon 8e-6 [--structure-only] --out inst.json
//   msk verify-adversarial --instance inst.json
//   msk verify-bound --instance inst.json [--X 0,3] [--G 1]
//                    [--partition auto|two-block] [--grid 1000]
//   msk sweep --family coverage --n 12 --trials 500 --seed 7
//             --algs enum2,gps [--csv out.csv]
//   msk bad-example --N 8
//   msk check-oracle --instance inst.json
//
// Exit codes: 0 ok, 2 input error, 3 invariant violation,
// 4 adversarial construction infeasible.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msk/adversarial.h"
#include "msk/algorithms.h"
#include "msk/bounding.h"
#include "msk/error.h"
#include "msk/exact.h"
#include "msk/families.h"
#include "msk/greedy.h"
#include "msk/json_io.h"
#include "msk/structure_check.h"

namespace msk {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitInfeasible = 4;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConstructionInfeasible:
      return kExitInfeasible;
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kMalformedOracle:
    case ErrorCode::kInvalidPartition:
      return kExitInvariant;
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kSizeLimit:
    case ErrorCode::kDomain:
    case ErrorCode::kParse:
      return kExitInput;
  }
  return kExitInput;
}

void Emit(const Json& json, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << json.dump(1) << '\n';
  } else {
    WriteJsonFile(out_path, json);
  }
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

ElementSet ParseIds(const std::string& text, std::size_t n) {
  std::vector<ElementId> ids;
  for (const std::string& part : SplitCommas(text)) {
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size() || id >= n) {
      throw Error(ErrorCode::kInvalidArgument, "bad element id '" + part + "'");
    }
    ids.push_back(id);
  }
  return MakeElementSet(std::move(ids));
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadJsonFile(path));
}

struct RunArgs {
  std::string instance;
  std::string alg = "greedy";
  std::string out;
  bool lazy = false;
};

int CmdRun(const RunArgs& args) {
  const Instance instance = LoadInstance(args.instance);
  const GreedyMode mode = args.lazy ? GreedyMode::kLazy : GreedyMode::kPlain;
  if (!IsAlgorithmName(args.alg)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + args.alg + "'");
  }
  Json out = ResultToJson(RunAlgorithm(instance, args.alg, mode));
  out["algorithm"] = args.alg;
  if (args.alg == "greedy") out["trace"] = TraceToJson(RunGreedy(instance, mode));
  Emit(out, args.out);
  return kExitOk;
}

struct GenArgs {
  double epsilon = 8e-6;
  bool structure_only = false;
  std::string out;
};

int CmdGenAdversarial(const GenArgs& args) {
  const AdversarialInstance adv =
      GenerateAdversarial(args.epsilon, args.structure_only);
  const Json instance_json = InstanceToJson(adv.instance, &adv.params);
  if (!args.out.empty()) WriteJsonFile(args.out, instance_json);
  Json summary = {{"n", adv.instance.size()},
                  {"k1", adv.params.k1},
                  {"k2", adv.params.k2},
                  {"epsilon", adv.params.epsilon},
                  {"epsilon_adjusted", adv.params.epsilon_adjusted},
                  {"structure_only", adv.params.structure_only},
                  {"checks", AdversarialChecksToJson(adv.checks)}};
  if (args.out.empty()) summary["instance"] = instance_json;
  std::cout << summary.dump(1) << '\n';
  return kExitOk;
}

int CmdVerifyAdversarial(const std::string& path) {
  const Json json = ReadJsonFile(path);
  const std::optional<AdversarialParams> params = AdversarialParamsFromJson(json);
  if (!params.has_value()) {
    throw Error(ErrorCode::kParse, "instance has no adversarial parameters");
  }
  const AdversarialInstance adv =
      AttachAdversarialPredictions(*params, InstanceFromJson(json));
  const AdversarialReport report = VerifyAdversarial(adv);
  std::cout << AdversarialReportToJson(report).dump(1) << '\n';
  if (!report.trace_match) {
    std::cerr << "trace mismatch: " << report.first_divergence << '\n';
    return kExitInvariant;
  }
  return kExitOk;
}

struct BoundArgs {
  std::string instance;
  std::string x;  // empty: brute-force optimum
  std::string g;
  std::string partition = "auto";
  std::size_t grid = 1000;
};

int CmdVerifyBound(const BoundArgs& args) {
  const Instance instance = LoadInstance(args.instance);
  const ElementSet x = args.x.empty() ? BruteForceOpt(instance).solution
                                      : ParseIds(args.x, instance.size());
  const ElementSet g = ParseIds(args.g, instance.size());

  // Everything below runs on f_G with capacity W - w(G).
  Instance work = instance;
  if (!g.empty()) {
    if (!instance.Feasible(g)) {
      throw Error(ErrorCode::kInvalidArgument, "G exceeds the capacity");
    }
    work.capacity = instance.capacity - instance.Weight(g);
    work.oracle = Contract(instance.oracle, g);
  }
  Partition partition;
  if (args.partition == "auto") {
    partition = BuildPartitionAuto(work, SetDifference(x, g));
  } else if (args.partition == "two-block") {
    partition = BuildPartitionTwoBlock(work, g, x);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "partition must be 'auto' or 'two-block'");
  }
  const GreedyTrace trace = Greedy(work);
  const BoundingFunction h = BoundingFunction::Build(work, partition);
  const DominanceReport report = VerifyDominance(work, trace, partition, args.grid);
  Json out = DominanceToJson(report);
  out["X"] = x;
  out["G"] = g;
  out["partition"] = PartitionToJson(partition);
  out["bounding"] = BoundingToJson(h);
  std::cout << out.dump(1) << '\n';
  return report.ok ? kExitOk : kExitInvariant;
}

struct SweepArgs {
  std::string family = "coverage";
  std::size_t n = 12;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string algs = "enum2,gps";
  std::string csv;
};

int CmdSweep(const SweepArgs& args) {
  SweepConfig config;
  config.family = ParseFamily(args.family);
  config.n = args.n;
  config.trials = args.trials;
  config.seed = args.seed;
  config.algorithms = SplitCommas(args.algs);
  config.threads = DefaultWorkerCount();
  const std::vector<RatioRecord> records = RatioSweep(config);
  if (args.csv.empty()) {
    WriteRatioCsv(std::cout, records);
  } else {
    std::ofstream out(args.csv);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + args.csv);
    WriteRatioCsv(out, records);
  }
  return kExitOk;
}

int CmdBadExample(double big_n) {
  if (!(big_n >= 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "N must be at least 2");
  }
  const Instance instance = BadExampleInstance(big_n);
  const OptResult opt = BruteForceOpt(instance);
  const double threshold = 1.0 - std::exp(-1.0);
  Json out = {{"N", big_n},
              {"opt_value", opt.value},
              {"opt_solution", opt.solution},
              {"threshold", threshold}};
  for (int kappa : {1, 2}) {
    const AlgorithmResult r = EnumGreedy(instance, kappa);
    const double ratio = r.value / opt.value;
    out["enum" + std::to_string(kappa)] = {{"value", r.value},
                                           {"solution", r.solution},
                                           {"ratio", ratio},
                                           {"below_threshold", ratio < threshold}};
  }
  std::cout << out.dump(1) << '\n';
  return kExitOk;
}

int CmdCheckOracle(const std::string& path) {
  const Instance instance = LoadInstance(path);
  const StructureReport report =
      CheckMonotoneSubmodular(instance.f(), instance.size());
  std::cout << StructureToJson(report).dump(1) << '\n';
  return report.monotone && report.submodular ? kExitOk : kExitInvariant;
}

int Main(int argc, char** argv) {
  CLI::App app{"Knapsack-constrained submodular maximization toolkit"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on an instance");
  run_cmd->add_option("--instance", run.instance, "Instance JSON")->required();
  run_cmd->add_option("--alg", run.alg, "greedy, gps or enum0..enum3");
  run_cmd->add_option("--out", run.out, "Result JSON (default: stdout)");
  run_cmd->add_flag("--lazy", run.lazy, "Use the lazy greedy");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-adversarial",
                                     "Write the worst-case instance");
  gen_cmd->add_option("--epsilon", gen.epsilon, "Step size")->required();
  gen_cmd->add_flag("--structure-only", gen.structure_only,
                    "Do not require that X and Y are blocked");
  gen_cmd->add_option("--out", gen.out, "Instance JSON");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify-adversarial",
                                        "Check the greedy run on it");
  verify_cmd->add_option("--instance", verify_path, "Instance JSON")->required();

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("verify-bound",
                                       "Check V >= h on a sampled grid");
  bound_cmd->add_option("--instance", bound.instance, "Instance JSON")->required();
  bound_cmd->add_option("--X", bound.x, "Comparison set (default: optimum)");
  bound_cmd->add_option("--G", bound.g, "Contracted set");
  bound_cmd->add_option("--partition", bound.partition, "auto or two-block");
  bound_cmd->add_option("--grid", bound.grid, "Uniform grid points");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Ratios against brute force");
  sweep_cmd->add_option("--family", sweep.family, "coverage, modular or bad");
  sweep_cmd->add_option("--n", sweep.n, "Ground set size");
  sweep_cmd->add_option("--trials", sweep.trials, "Number of instances");
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed");
  sweep_cmd->add_option("--algs", sweep.algs, "Comma-separated algorithms");
  sweep_cmd->add_option("--csv", sweep.csv, "CSV output (default: stdout)");

  double big_n = 8.0;
  auto* bad_cmd = app.add_subcommand("bad-example",
                                     "Single-element enumeration counterexample");
  bad_cmd->add_option("--N", big_n, "Weight of the two heavy elements");

  std::string check_path;
  auto* check_cmd = app.add_subcommand("check-oracle",
                                       "Exhaustive monotone/submodular check");
  check_cmd->add_option("--instance", check_path, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*run_cmd) return CmdRun(run);
    if (*gen_cmd) return CmdGenAdversarial(gen);
    if (*verify_cmd) return CmdVerifyAdversarial(verify_path);
    if (*bound_cmd) return CmdVerifyBound(bound);
    if (*sweep_cmd) return CmdSweep(sweep);
    if (*bad_cmd) return CmdBadExample(big_n);
    if (*check_cmd) return CmdCheckOracle(check_path);
  } catch (const Error& e) {
    std::cerr << "msk: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
  return kExitInput;
}

}  // namespace
}  // namespace msk

int main(int argc, char** argv) { return msk::Main(argc, argv); }
