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

#include "msk/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <string>
#include <utility>

#include "msk/error.h"

namespace msk {

ElementSet MakeElementSet(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ElementSet MakeElementSet(std::initializer_list<ElementId> ids) {
  return MakeElementSet(std::vector<ElementId>(ids));
}

ElementSet SetUnion(std::span<const ElementId> a, std::span<const ElementId> b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet SetDifference(std::span<const ElementId> a,
                         std::span<const ElementId> b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool IsSubset(std::span<const ElementId> a, std::span<const ElementId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool Contains(std::span<const ElementId> set, ElementId e) {
  return std::binary_search(set.begin(), set.end(), e);
}

std::string_view OracleKindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kModular:
      return "modular";
    case OracleKind::kTable:
      return "table";
    case OracleKind::kCoverage:
      return "coverage";
    case OracleKind::kContracted:
      return "contracted";
  }
  return "unknown";
}

namespace {

void ValidateSet(std::span<const ElementId> s, std::size_t n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown element id " + std::to_string(s[i]) +
                      " (ground set has " + std::to_string(n) + " elements)");
    }
    if (i > 0 && s[i] <= s[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "element ids must be sorted and distinct");
    }
  }
}

// Works for any oracle: two evaluations per gain.
class EvaluatingSession final : public GainSession {
 public:
  EvaluatingSession(const SetFunction& f, std::span<const ElementId> base)
      : f_(f), base_(base.begin(), base.end()) {}

  double Gain(ElementId e) override {
    const ElementId single[] = {e};
    return Marginal(f_, base_, single);
  }

  void Add(ElementId e) override {
    auto it = std::lower_bound(base_.begin(), base_.end(), e);
    if (it == base_.end() || *it != e) base_.insert(it, e);
  }

 private:
  const SetFunction& f_;
  ElementSet base_;
};

class ModularSession final : public GainSession {
 public:
  ModularSession(std::span<const double> values, std::span<const ElementId> base,
                 std::function<void()> charge)
      : values_(values), in_base_(values.size(), false),
        charge_(std::move(charge)) {
    for (ElementId e : base) in_base_[e] = true;
  }

  double Gain(ElementId e) override {
    charge_();
    return in_base_.at(e) ? 0.0 : values_[e];
  }

  void Add(ElementId e) override { in_base_.at(e) = true; }

 private:
  std::span<const double> values_;
  std::vector<bool> in_base_;
  std::function<void()> charge_;
};

class CoverageSession final : public GainSession {
 public:
  CoverageSession(std::span<const IntervalSet> sets,
                  std::span<const ElementId> base, std::function<void()> charge)
      : sets_(sets), in_base_(sets.size(), false), charge_(std::move(charge)) {
    for (ElementId e : base) Add(e);
  }

  double Gain(ElementId e) override {
    charge_();
    if (in_base_.at(e)) return 0.0;
    return covered_.Uncovered(sets_[e]);
  }

  void Add(ElementId e) override {
    if (in_base_.at(e)) return;
    in_base_[e] = true;
    covered_.Add(sets_[e]);
  }

 private:
  std::span<const IntervalSet> sets_;
  std::vector<bool> in_base_;
  IntervalUnion covered_;
  std::function<void()> charge_;
};

}  // namespace

SetFunction::SetFunction(std::size_t ground_size)
    : ground_size_(ground_size),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

double SetFunction::Evaluate(std::span<const ElementId> s) const {
  ValidateSet(s, ground_size_);
  return EvaluateValidated(s);
}

std::unique_ptr<GainSession> SetFunction::StartSession(
    std::span<const ElementId> base) const {
  ValidateSet(base, ground_size_);
  return std::make_unique<EvaluatingSession>(*this, base);
}

ModularOracle::ModularOracle(std::vector<double> values)
    : SetFunction(values.size()), values_(std::move(values)) {
  for (std::size_t e = 0; e < values_.size(); ++e) {
    if (!std::isfinite(values_[e]) || values_[e] < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "modular value of element " + std::to_string(e) +
                      " must be finite and non-negative");
    }
  }
}

double ModularOracle::EvaluateValidated(std::span<const ElementId> s) const {
  Charge(1);
  double total = 0.0;
  for (ElementId e : s) total += values_[e];
  return total;
}

std::unique_ptr<GainSession> ModularOracle::StartSession(
    std::span<const ElementId> base) const {
  ValidateSet(base, ground_size());
  return std::make_unique<ModularSession>(values_, base,
                                          [this] { Charge(2); });
}

TableOracle::TableOracle(std::size_t n, std::vector<double> values_by_mask)
    : SetFunction(n), values_(std::move(values_by_mask)) {
  if (n > kMaxElements) {
    throw Error(ErrorCode::kSizeLimit,
                "table oracles support at most " +
                    std::to_string(kMaxElements) + " elements, got " +
                    std::to_string(n));
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kMalformedOracle,
                "table must have 2^n entries (missing ones as NaN)");
  }
}

double TableOracle::EvaluateValidated(std::span<const ElementId> s) const {
  Charge(1);
  std::size_t mask = 0;
  for (ElementId e : s) mask |= std::size_t{1} << e;
  const double v = values_[mask];
  if (std::isnan(v)) {
    std::string key;
    for (ElementId e : s) {
      if (!key.empty()) key += ",";
      key += std::to_string(e);
    }
    throw Error(ErrorCode::kMalformedOracle,
                "table has no value for subset {" + key + "}");
  }
  return v;
}

CoverageOracle::CoverageOracle(std::vector<IntervalSet> sets)
    : SetFunction(sets.size()), sets_(std::move(sets)) {}

double CoverageOracle::EvaluateValidated(std::span<const ElementId> s) const {
  Charge(1);
  std::vector<const IntervalSet*> chosen;
  chosen.reserve(s.size());
  for (ElementId e : s) chosen.push_back(&sets_[e]);
  return MeasureUnion(std::span<const IntervalSet* const>(chosen));
}

std::unique_ptr<GainSession> CoverageOracle::StartSession(
    std::span<const ElementId> base) const {
  ValidateSet(base, ground_size());
  return std::make_unique<CoverageSession>(sets_, base, [this] { Charge(2); });
}

ContractedOracle::ContractedOracle(std::shared_ptr<const SetFunction> parent,
                                   ElementSet g)
    : SetFunction(parent->ground_size()),
      parent_(std::move(parent)),
      g_(std::move(g)),
      g_value_(parent_->Evaluate(g_)) {}

double ContractedOracle::EvaluateValidated(std::span<const ElementId> s) const {
  return parent_->Evaluate(SetUnion(g_, s)) - g_value_;
}

std::unique_ptr<GainSession> ContractedOracle::StartSession(
    std::span<const ElementId> base) const {
  ValidateSet(base, ground_size());
  return parent_->StartSession(SetUnion(g_, base));
}

double Marginal(const SetFunction& f, std::span<const ElementId> a,
                std::span<const ElementId> s) {
  const double with = f.Evaluate(SetUnion(a, s));
  return with - f.Evaluate(a);
}

std::shared_ptr<const SetFunction> Contract(
    std::shared_ptr<const SetFunction> f, ElementSet g) {
  return std::make_shared<ContractedOracle>(std::move(f), MakeElementSet(g));
}

}  // namespace msk
