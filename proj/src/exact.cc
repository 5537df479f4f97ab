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

#include "msk/exact.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "msk/algorithms.h"
#include "msk/error.h"

namespace msk {

OptResult BruteForceOpt(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kMaxBruteForceElements) {
    throw Error(ErrorCode::kSizeLimit,
                "brute force supports at most 22 elements, got " +
                    std::to_string(n));
  }
  const SetFunction& f = instance.f();
  std::optional<OptResult> best;
  ElementSet set;
  set.reserve(n);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    set.clear();
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) set.push_back(e);
    }
    if (!instance.Feasible(set)) continue;
    const double value = f.Evaluate(set);
    if (!best.has_value() || value > best->value ||
        (value == best->value && set < best->solution)) {
      best = OptResult{value, set};
    }
  }
  // The empty set is always feasible, so `best` is set.
  return *best;
}

namespace {

std::vector<RatioRecord> RunTrial(const SweepConfig& config, std::uint64_t trial) {
  const Instance instance =
      MakeFamilyInstance(config.family, config.n, config.seed, trial);
  const double opt = BruteForceOpt(instance).value;
  std::vector<RatioRecord> records;
  for (const std::string& name : config.algorithms) {
    const AlgorithmResult result = RunAlgorithm(instance, name);
    RatioRecord record;
    record.trial = trial;
    record.n = instance.size();
    record.algorithm = name;
    record.alg_value = result.value;
    record.opt_value = opt;
    record.ratio = opt > 0.0 ? result.value / opt : 1.0;
    record.oracle_calls = result.oracle_calls;
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace

std::vector<RatioRecord> RatioSweep(const SweepConfig& config) {
  for (const std::string& name : config.algorithms) {
    if (!IsAlgorithmName(name)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown algorithm '" + name + "'");
    }
  }
  if (config.family != Family::kBadExample && config.n > kMaxBruteForceElements) {
    throw Error(ErrorCode::kSizeLimit, "sweep instances must have n <= 22");
  }

  std::vector<std::vector<RatioRecord>> per_trial(config.trials);
  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(std::max(1u, config.threads), config.trials)));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::uint64_t t = next++; t < config.trials; t = next++) {
      try {
        per_trial[t] = RunTrial(config, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<RatioRecord> records;
  for (auto& chunk : per_trial) {
    for (auto& r : chunk) records.push_back(std::move(r));
  }
  return records;
}

void WriteRatioCsv(std::ostream& out, std::span<const RatioRecord> records) {
  out << "trial,n,alg,alg_value,opt_value,ratio,oracle_calls\n";
  char buf[64];
  auto number = [&buf](double x) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  for (const RatioRecord& r : records) {
    out << r.trial << ',' << r.n << ',' << r.algorithm << ','
        << number(r.alg_value) << ',' << number(r.opt_value) << ','
        << number(r.ratio) << ',' << r.oracle_calls << '\n';
  }
}

unsigned DefaultWorkerCount() {
  if (const char* env = std::getenv("MSK_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<unsigned>(value);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace msk
