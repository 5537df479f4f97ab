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

#ifndef MSK_INTERVAL_SET_H_
#define MSK_INTERVAL_SET_H_

#include <map>
#include <span>
#include <vector>

namespace msk {

// Half-open interval [lo, hi) on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of half-open intervals, kept sorted and pairwise disjoint.
// Touching pieces ([a, b) and [b, c)) are merged.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Throws kInvalidArgument if some interval has hi <= lo or a non-finite
  // endpoint. Input order and overlaps are irrelevant.
  static IntervalSet FromIntervals(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  double Measure() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

// Lebesgue measure of the union, by sorting all endpoints and sweeping.
// The result does not depend on the order of `sets`.
double MeasureUnion(std::span<const IntervalSet> sets);
double MeasureUnion(std::span<const IntervalSet* const> sets);

// Union that grows one set at a time and answers "how much of this set is
// not yet covered" in O(k log m) for a set of k pieces against m stored ones.
class IntervalUnion {
 public:
  void Add(const IntervalSet& set);
  double Uncovered(const IntervalSet& set) const;
  double Measure() const;
  std::size_t piece_count() const { return pieces_.size(); }

 private:
  void AddInterval(Interval interval);

  // lo -> hi, disjoint and non-touching.
  std::map<double, double> pieces_;
};

}  // namespace msk

#endif  // MSK_INTERVAL_SET_H_
