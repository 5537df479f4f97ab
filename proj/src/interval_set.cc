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

#include "msk/interval_set.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "msk/error.h"

namespace msk {
namespace {

bool LessByEndpoints(const Interval& a, const Interval& b) {
  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
}

// Sum of the lengths of the merged components of `sorted`.
double SweepSorted(const std::vector<Interval>& sorted) {
  double total = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    double lo = sorted[i].lo;
    double hi = sorted[i].hi;
    ++i;
    while (i < sorted.size() && sorted[i].lo <= hi) {
      hi = std::max(hi, sorted[i].hi);
      ++i;
    }
    total += hi - lo;
  }
  return total;
}

}  // namespace

IntervalSet IntervalSet::FromIntervals(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed interval [" + std::to_string(iv.lo) + ", " +
                      std::to_string(iv.hi) + ")");
    }
  }
  std::sort(intervals.begin(), intervals.end(), LessByEndpoints);
  IntervalSet result;
  for (const Interval& iv : intervals) {
    if (!result.intervals_.empty() && iv.lo <= result.intervals_.back().hi) {
      result.intervals_.back().hi = std::max(result.intervals_.back().hi, iv.hi);
    } else {
      result.intervals_.push_back(iv);
    }
  }
  return result;
}

double IntervalSet::Measure() const {
  double total = 0.0;
  for (const Interval& iv : intervals_) total += iv.length();
  return total;
}

double MeasureUnion(std::span<const IntervalSet> sets) {
  std::vector<const IntervalSet*> ptrs;
  ptrs.reserve(sets.size());
  for (const IntervalSet& s : sets) ptrs.push_back(&s);
  return MeasureUnion(std::span<const IntervalSet* const>(ptrs));
}

double MeasureUnion(std::span<const IntervalSet* const> sets) {
  std::vector<Interval> all;
  for (const IntervalSet* s : sets) {
    all.insert(all.end(), s->intervals().begin(), s->intervals().end());
  }
  std::sort(all.begin(), all.end(), LessByEndpoints);
  return SweepSorted(all);
}

void IntervalUnion::Add(const IntervalSet& set) {
  for (const Interval& iv : set.intervals()) AddInterval(iv);
}

void IntervalUnion::AddInterval(Interval interval) {
  double lo = interval.lo;
  double hi = interval.hi;
  auto it = pieces_.upper_bound(lo);
  if (it != pieces_.begin()) {
    auto prev = std::prev(it);
    if (prev->second >= lo) it = prev;
  }
  while (it != pieces_.end() && it->first <= hi) {
    lo = std::min(lo, it->first);
    hi = std::max(hi, it->second);
    it = pieces_.erase(it);
  }
  pieces_.emplace(lo, hi);
}

double IntervalUnion::Uncovered(const IntervalSet& set) const {
  double total = 0.0;
  for (const Interval& iv : set.intervals()) {
    double cursor = iv.lo;
    double gap = 0.0;
    auto it = pieces_.upper_bound(iv.lo);
    if (it != pieces_.begin()) {
      auto prev = std::prev(it);
      if (prev->second > iv.lo) it = prev;
    }
    for (; it != pieces_.end() && it->first < iv.hi; ++it) {
      if (it->first > cursor) gap += it->first - cursor;
      cursor = std::max(cursor, it->second);
      if (cursor >= iv.hi) break;
    }
    if (cursor < iv.hi) gap += iv.hi - cursor;
    total += gap;
  }
  return total;
}

double IntervalUnion::Measure() const {
  double total = 0.0;
  for (const auto& [lo, hi] : pieces_) total += hi - lo;
  return total;
}

}  // namespace msk
