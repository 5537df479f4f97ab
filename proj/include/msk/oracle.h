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

// Value oracles for set functions f: 2^E -> R.
//
// Every oracle counts its evaluations. The count is the cost currency of the
// algorithms in this library: one unit per Evaluate() call, two units per
// marginal value f(A + S) - f(A). Contracted oracles charge their parent.
//
// Oracles are immutable after construction apart from the counter, which is
// atomic, so concurrent evaluation from several threads is safe.

#ifndef MSK_ORACLE_H_
#define MSK_ORACLE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "msk/interval_set.h"

namespace msk {

// Dense index into the ground set 0..n-1. Smaller ids win greedy ties.
using ElementId = std::size_t;

// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

ElementSet MakeElementSet(std::vector<ElementId> ids);
ElementSet MakeElementSet(std::initializer_list<ElementId> ids);
ElementSet SetUnion(std::span<const ElementId> a, std::span<const ElementId> b);
ElementSet SetDifference(std::span<const ElementId> a,
                         std::span<const ElementId> b);
bool IsSubset(std::span<const ElementId> a, std::span<const ElementId> b);
bool Contains(std::span<const ElementId> set, ElementId e);

enum class OracleKind { kModular, kTable, kCoverage, kContracted };

std::string_view OracleKindName(OracleKind kind);

// Incremental view of f_B(e) = f(B + e) - f(B) for a growing base set B.
// Each Gain() is charged as two oracle calls, exactly like Marginal().
class GainSession {
 public:
  virtual ~GainSession() = default;

  virtual double Gain(ElementId e) = 0;
  virtual void Add(ElementId e) = 0;
};

class SetFunction {
 public:
  virtual ~SetFunction() = default;

  std::size_t ground_size() const { return ground_size_; }
  virtual OracleKind kind() const = 0;

  // f(S). `s` must be sorted and duplicate-free with ids < ground_size();
  // otherwise throws kInvalidArgument.
  double Evaluate(std::span<const ElementId> s) const;
  double Evaluate(std::initializer_list<ElementId> s) const {
    return Evaluate(std::span<const ElementId>(s.begin(), s.size()));
  }

  virtual std::uint64_t calls() const { return counter_->load(); }

  // Base set must satisfy the same preconditions as Evaluate().
  virtual std::unique_ptr<GainSession> StartSession(
      std::span<const ElementId> base) const;

 protected:
  explicit SetFunction(std::size_t ground_size);

  // Called with a validated set. Implementations charge their own calls.
  virtual double EvaluateValidated(std::span<const ElementId> s) const = 0;

  void Charge(std::uint64_t units) const {
    counter_->fetch_add(units, std::memory_order_relaxed);
  }

 private:
  std::size_t ground_size_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

// f(S) = sum of v(e) over S, v >= 0.
class ModularOracle final : public SetFunction {
 public:
  explicit ModularOracle(std::vector<double> values);

  OracleKind kind() const override { return OracleKind::kModular; }
  std::span<const double> values() const { return values_; }
  std::unique_ptr<GainSession> StartSession(
      std::span<const ElementId> base) const override;

 protected:
  double EvaluateValidated(std::span<const ElementId> s) const override;

 private:
  std::vector<double> values_;
};

// Explicit value per subset, indexed by bitmask (bit e set iff e in S).
// Entries may be missing (NaN); evaluating a missing subset throws
// kMalformedOracle. No structural guarantee is assumed.
class TableOracle final : public SetFunction {
 public:
  static constexpr std::size_t kMaxElements = 24;

  TableOracle(std::size_t n, std::vector<double> values_by_mask);

  OracleKind kind() const override { return OracleKind::kTable; }
  std::span<const double> values_by_mask() const { return values_; }

 protected:
  double EvaluateValidated(std::span<const ElementId> s) const override;

 private:
  std::vector<double> values_;
};

// f(S) = Lebesgue measure of the union of the interval sets of S.
class CoverageOracle final : public SetFunction {
 public:
  explicit CoverageOracle(std::vector<IntervalSet> sets);

  OracleKind kind() const override { return OracleKind::kCoverage; }
  std::span<const IntervalSet> sets() const { return sets_; }
  std::unique_ptr<GainSession> StartSession(
      std::span<const ElementId> base) const override;

 protected:
  double EvaluateValidated(std::span<const ElementId> s) const override;

 private:
  std::vector<IntervalSet> sets_;
};

// f_G(S) = f(G + S) - f(G). f(G) is computed once, at construction; every
// later evaluation is one call on the parent.
class ContractedOracle final : public SetFunction {
 public:
  ContractedOracle(std::shared_ptr<const SetFunction> parent, ElementSet g);

  OracleKind kind() const override { return OracleKind::kContracted; }
  std::uint64_t calls() const override { return parent_->calls(); }
  const ElementSet& contracted_set() const { return g_; }
  double contracted_value() const { return g_value_; }
  std::unique_ptr<GainSession> StartSession(
      std::span<const ElementId> base) const override;

 protected:
  double EvaluateValidated(std::span<const ElementId> s) const override;

 private:
  std::shared_ptr<const SetFunction> parent_;
  ElementSet g_;
  double g_value_;
};

// f(A + S) - f(A); exactly two oracle calls.
double Marginal(const SetFunction& f, std::span<const ElementId> a,
                std::span<const ElementId> s);

std::shared_ptr<const SetFunction> Contract(
    std::shared_ptr<const SetFunction> f, ElementSet g);

}  // namespace msk

#endif  // MSK_ORACLE_H_
