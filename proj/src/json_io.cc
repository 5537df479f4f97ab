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

#include "msk/json_io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <vector>

#include "msk/error.h"

namespace msk {
namespace {

[[noreturn]] void ParseError(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    ParseError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

double Number(const Json& j, const char* what) {
  if (!j.is_number()) ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t Count(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<double> NumberArray(const Json& j, const char* what) {
  if (!j.is_array()) ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(Number(x, what));
  return out;
}

// Infinity has no JSON spelling; write it as null.
Json Real(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string MaskKey(std::size_t n, std::size_t mask) {
  std::string key;
  for (std::size_t e = 0; e < n; ++e) {
    if (!(mask >> e & 1)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(e);
  }
  return key;
}

std::size_t KeyMask(const std::string& key, std::size_t n) {
  std::size_t mask = 0;
  if (key.empty()) return 0;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t pos = 0;
    unsigned long id = 0;
    try {
      id = std::stoul(part, &pos);
    } catch (const std::exception&) {
      ParseError("bad table key '" + key + "'");
    }
    if (pos != part.size() || id >= n || (mask >> id & 1)) {
      ParseError("bad table key '" + key + "'");
    }
    mask |= std::size_t{1} << id;
  }
  return mask;
}

Json OracleToJson(const SetFunction& f) {
  Json out;
  switch (f.kind()) {
    case OracleKind::kModular: {
      const auto& m = dynamic_cast<const ModularOracle&>(f);
      out["kind"] = "modular";
      out["values"] = std::vector<double>(m.values().begin(), m.values().end());
      break;
    }
    case OracleKind::kTable: {
      const auto& t = dynamic_cast<const TableOracle&>(f);
      out["kind"] = "table";
      Json table = Json::object();
      const auto values = t.values_by_mask();
      for (std::size_t mask = 0; mask < values.size(); ++mask) {
        if (std::isnan(values[mask])) continue;
        table[MaskKey(f.ground_size(), mask)] = values[mask];
      }
      out["table"] = std::move(table);
      break;
    }
    case OracleKind::kCoverage: {
      const auto& c = dynamic_cast<const CoverageOracle&>(f);
      out["kind"] = "coverage";
      Json sets = Json::array();
      for (const IntervalSet& s : c.sets()) {
        Json pieces = Json::array();
        for (const Interval& iv : s.intervals()) {
          pieces.push_back({iv.lo, iv.hi});
        }
        sets.push_back(std::move(pieces));
      }
      out["intervals"] = std::move(sets);
      break;
    }
    case OracleKind::kContracted:
      throw Error(ErrorCode::kInvalidArgument,
                  "contracted oracles cannot be serialized");
  }
  return out;
}

std::shared_ptr<const SetFunction> OracleFromJson(const Json& j,
                                                  std::size_t n) {
  const Json& kind_json = Field(j, "kind");
  if (!kind_json.is_string()) ParseError("oracle kind must be a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "modular") {
    std::vector<double> values = NumberArray(Field(j, "values"), "values");
    if (values.size() != n) ParseError("modular oracle needs n values");
    for (double v : values) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::kInvariantViolation,
                    "modular values must be finite and non-negative");
      }
    }
    return std::make_shared<ModularOracle>(std::move(values));
  }
  if (kind == "table") {
    if (n > TableOracle::kMaxElements) {
      throw Error(ErrorCode::kSizeLimit, "table oracles support n <= 24");
    }
    const Json& table = Field(j, "table");
    if (!table.is_object()) ParseError("table must be an object");
    std::vector<double> values(std::size_t{1} << n,
                               std::numeric_limits<double>::quiet_NaN());
    for (const auto& [key, value] : table.items()) {
      values[KeyMask(key, n)] = Number(value, "table value");
    }
    return std::make_shared<TableOracle>(n, std::move(values));
  }
  if (kind == "coverage") {
    const Json& sets_json = Field(j, "intervals");
    if (!sets_json.is_array() || sets_json.size() != n) {
      ParseError("coverage oracle needs one interval list per element");
    }
    std::vector<IntervalSet> sets;
    sets.reserve(n);
    for (const Json& pieces : sets_json) {
      if (!pieces.is_array()) ParseError("interval list must be an array");
      std::vector<Interval> intervals;
      for (const Json& piece : pieces) {
        if (!piece.is_array() || piece.size() != 2) {
          ParseError("interval must be a [lo, hi] pair");
        }
        intervals.push_back({Number(piece[0], "lo"), Number(piece[1], "hi")});
      }
      try {
        sets.push_back(IntervalSet::FromIntervals(std::move(intervals)));
      } catch (const Error& e) {
        throw Error(ErrorCode::kInvariantViolation, e.what());
      }
    }
    return std::make_shared<CoverageOracle>(std::move(sets));
  }
  ParseError("unknown oracle kind '" + kind + "'");
}

Json ElementsToJson(const ElementSet& s) { return Json(s); }

}  // namespace

Json InstanceToJson(const Instance& instance,
                    const AdversarialParams* adversarial) {
  Json out;
  out["format"] = "msk-instance";
  out["version"] = kInstanceFormatVersion;
  out["n"] = instance.size();
  out["weights"] = instance.weights;
  out["capacity"] = instance.capacity;
  out["oracle"] = OracleToJson(instance.f());
  if (adversarial != nullptr) {
    const AdversarialParams& p = *adversarial;
    out["adversarial"] = {
        {"f_x", p.f_x},         {"f_y", p.f_y},
        {"f_z", p.f_z},         {"w_x", p.w_x},
        {"w_y", p.w_y},         {"w_z", p.w_z},
        {"rho", p.rho},         {"epsilon", p.epsilon},
        {"epsilon_adjusted", p.epsilon_adjusted},
        {"k1", p.k1},           {"k2", p.k2},
        {"structure_only", p.structure_only},
    };
  }
  return out;
}

Instance InstanceFromJson(const Json& json) {
  try {
    const Json& format = Field(json, "format");
    if (format != "msk-instance") ParseError("format must be 'msk-instance'");
    if (Field(json, "version") != kInstanceFormatVersion) {
      ParseError("unsupported instance version");
    }
    const std::size_t n = Count(Field(json, "n"), "n");
    std::vector<double> weights = NumberArray(Field(json, "weights"), "weights");
    if (weights.size() != n) ParseError("weights must have n entries");
    const double capacity = Number(Field(json, "capacity"), "capacity");
    auto oracle = OracleFromJson(Field(json, "oracle"), n);
    return MakeInstance(std::move(weights), capacity, std::move(oracle));
  } catch (const Json::exception& e) {
    ParseError(e.what());
  } catch (const Error& e) {
    // Constructors report bad arguments; on input files these are invariant
    // violations unless they are schema errors already.
    if (e.code() == ErrorCode::kInvalidArgument ||
        e.code() == ErrorCode::kMalformedOracle) {
      throw Error(ErrorCode::kInvariantViolation, e.what());
    }
    throw;
  }
}

std::optional<AdversarialParams> AdversarialParamsFromJson(const Json& json) {
  if (!json.is_object() || !json.contains("adversarial")) return std::nullopt;
  const Json& a = json.at("adversarial");
  try {
    AdversarialParams p;
    p.f_x = Number(Field(a, "f_x"), "f_x");
    p.f_y = Number(Field(a, "f_y"), "f_y");
    p.f_z = Number(Field(a, "f_z"), "f_z");
    p.w_x = Number(Field(a, "w_x"), "w_x");
    p.w_y = Number(Field(a, "w_y"), "w_y");
    p.w_z = Number(Field(a, "w_z"), "w_z");
    p.rho = Number(Field(a, "rho"), "rho");
    p.epsilon = Number(Field(a, "epsilon"), "epsilon");
    p.epsilon_adjusted = Number(Field(a, "epsilon_adjusted"), "epsilon_adjusted");
    p.k1 = Count(Field(a, "k1"), "k1");
    p.k2 = Count(Field(a, "k2"), "k2");
    const Json& so = Field(a, "structure_only");
    if (!so.is_boolean()) ParseError("structure_only must be a boolean");
    p.structure_only = so.get<bool>();
    p.capacity = Number(Field(json, "capacity"), "capacity");
    return p;
  } catch (const Json::exception& e) {
    ParseError(e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    ParseError("'" + path + "': " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& json) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
  out << json.dump(1) << '\n';
}

Json TraceToJson(const GreedyTrace& trace) {
  Json considered = Json::array();
  for (const ConsideredStep& s : trace.considered) {
    considered.push_back({{"id", s.id},
                          {"marginal", s.marginal},
                          {"density", s.density},
                          {"selected", s.selected}});
  }
  Json selected = Json::array();
  Json breakpoints = Json::array({{0.0, trace.empty_value}});
  for (const SelectedPrefix& p : trace.selected) {
    selected.push_back({{"id", p.id},
                        {"prefix_weight", p.prefix_weight},
                        {"prefix_value", p.prefix_value}});
    breakpoints.push_back({p.prefix_weight, p.prefix_value});
  }
  return {{"empty_value", trace.empty_value},
          {"considered", std::move(considered)},
          {"selected", std::move(selected)},
          {"breakpoints", std::move(breakpoints)},
          {"final_set", ElementsToJson(trace.final_set)}};
}

Json ResultToJson(const AlgorithmResult& result) {
  Json seed;
  switch (result.best_seed.kind) {
    case BestSeed::Kind::kEnumeration:
      seed = {{"kind", "enumeration"},
              {"seed", ElementsToJson(result.best_seed.seed)}};
      break;
    case BestSeed::Kind::kGreedy:
      seed = {{"kind", "greedy"}};
      break;
    case BestSeed::Kind::kSingleton:
      seed = {{"kind", "singleton"}, {"element", result.best_seed.singleton}};
      break;
  }
  return {{"solution", ElementsToJson(result.solution)},
          {"value", result.value},
          {"oracle_calls", result.oracle_calls},
          {"best_seed", std::move(seed)}};
}

Json PartitionToJson(const Partition& partition) {
  Json blocks = Json::array();
  for (const ElementSet& b : partition.blocks) blocks.push_back(ElementsToJson(b));
  return blocks;
}

Json DominanceToJson(const DominanceReport& report) {
  return {{"ok", report.ok},
          {"degenerate", report.degenerate},
          {"w_max", Real(report.w_max)},
          {"min_slack", Real(report.min_slack)},
          {"argmin_u", Real(report.argmin_u)},
          {"grid_points", report.grid_points},
          {"samples", report.samples}};
}

Json BoundingToJson(const BoundingFunction& h) {
  Json segments = Json::array();
  for (const BoundingSegment& s : h.segments()) {
    segments.push_back({{"d_begin", Real(s.d_begin)},
                        {"d_end", Real(s.d_end)},
                        {"value", s.value},
                        {"rate", s.rate},
                        {"weight", s.weight}});
  }
  return {{"segments", std::move(segments)},
          {"continuity_defect", h.ContinuityDefect()}};
}

Json StructureToJson(const StructureReport& report) {
  auto witness = [](const std::optional<StructureWitness>& w) -> Json {
    if (!w.has_value()) return nullptr;
    Json out = {{"a", ElementsToJson(w->a)},
                {"b", ElementsToJson(w->b)},
                {"lhs", w->lhs},
                {"rhs", w->rhs}};
    out["e"] = w->e.has_value() ? Json(*w->e) : Json(nullptr);
    return out;
  };
  return {{"monotone", report.monotone},
          {"submodular", report.submodular},
          {"monotone_witness", witness(report.monotone_witness)},
          {"submodular_witness", witness(report.submodular_witness)}};
}

Json AdversarialChecksToJson(const AdversarialChecks& c) {
  return {{"phase1_weight", c.phase1_weight},
          {"phase2_weight", c.phase2_weight},
          {"total_weight", c.total_weight},
          {"margin_fits", c.margin_fits},
          {"margin_blocks", c.margin_blocks},
          {"fits_ok", c.fits_ok},
          {"blocks_ok", c.blocks_ok},
          {"densities_ok", c.densities_ok}};
}

Json AdversarialReportToJson(const AdversarialReport& r) {
  return {{"trace_match", r.trace_match},
          {"first_divergence", r.first_divergence},
          {"selected_count", r.selected_count},
          {"x_rejected", r.x_rejected},
          {"y_rejected", r.y_rejected},
          {"final_weight", r.final_weight},
          {"max_density_error", r.max_density_error},
          {"greedy_value", r.greedy_value},
          {"gps_value", r.gps_value},
          {"max_singleton_value", r.max_singleton_value},
          {"opt_value", r.opt_value},
          {"ratio", r.ratio},
          {"target_value", r.target_value}};
}

}  // namespace msk
