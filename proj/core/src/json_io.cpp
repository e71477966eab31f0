// Copyright 2026 The fractal-sft Authors
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

#include "fractal_sft/json_io.hpp"

#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

Json Rows(const BinaryMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

Json Elements(const std::vector<FieldElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(ToJson(x));
  return out;
}

Json Rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(ToJson(x));
  return out;
}

Json Words(const std::vector<PeriodicWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.ToString());
  return out;
}

Rational ParseCoefficient(const Json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) return ParseRational(c.get<std::string>());
  Fail(ErrorCode::kMalformedInput, "coefficient must be an integer or a \"p/q\" string");
}

}  // namespace

Json ToJson(const Rational& r) { return ToString(r); }

Json ToJson(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      out.push_back(c.get_num().get_si());
    } else {
      out.push_back(ToString(c));
    }
  }
  return out;
}

Json ToJson(const FieldElement& x) {
  if (!x.field()) return nullptr;
  if (x.field()->is_rational()) return ToString(x.coeffs().front());
  return x.CoeffStrings();
}

Json ToJson(const IsolatedRoot& root) {
  return {{"interval", {ToString(root.lo), ToString(root.hi)}}, {"float", root.value}};
}

Json ToJson(const PeriodicWord& w) { return {{"preperiod", w.preperiod()}, {"period", w.period()}}; }

Json ToJson(const Ifs& ifs) {
  Json j;
  if (ifs.field->is_rational()) {
    j["field"] = "rational";
  } else {
    j["min_poly"] = ToJson(ifs.field->min_poly());
    j["root_hint"] = {ToString(ifs.field->lo()), ToString(ifs.field->hi())};
  }
  Json maps = Json::array();
  for (int k = 0; k < ifs.size(); ++k) {
    maps.push_back({{"name", ifs.names[k]}, {"ratio", ToJson(ifs.maps[k].ratio)}, {"offset", ToJson(ifs.maps[k].offset)}});
  }
  j["maps"] = maps;
  j["hull"] = {ToJson(ifs.hull.lo), ToJson(ifs.hull.hi)};
  return j;
}

Json ToJson(const AdjacencyMatrix& s) {
  Json labels = Json::object();
  for (const auto& [edge, map] : s.labels) {
    labels[std::to_string(edge.first) + "," + std::to_string(edge.second)] = map;
  }
  return {{"rows", Rows(s.entries)}, {"labels", labels}, {"names", s.names}, {"blocks", s.blocks}};
}

Json ToJson(const MarkovPartition& p) {
  Json blocks = Json::array();
  for (size_t r = 0; r < p.blocks.size(); ++r) {
    Json b = {{"lo", ToJson(p.blocks[r].lo)}, {"hi", ToJson(p.blocks[r].hi)}};
    if (p.chosen_map[r]) b["map"] = *p.chosen_map[r];
    blocks.push_back(b);
  }
  return {{"breakpoints", Elements(p.breakpoints)},
          {"blocks", blocks},
          {"retained", p.retained},
          {"names", p.names},
          {"switch_blocks", p.switch_blocks},
          {"warnings", p.warnings}};
}

Json ToJson(const SwitchPruned& s) { return {{"deleted", ToJson(s.deleted)}, {"pruned", ToJson(s.pruned)}}; }

Json ToJson(const SpectralResult& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["char_poly"] = r.char_poly ? ToJson(*r.char_poly) : Json(nullptr);
  j["perron_factor"] = r.perron_factor ? ToJson(*r.perron_factor) : Json(nullptr);
  j["perron"] = r.perron ? ToJson(*r.perron) : Json(nullptr);
  j["log_base"] = r.log_base ? ToJson(*r.log_base) : Json(nullptr);
  j["exact_form"] = r.exact_form;
  j["measure"] = MeasureFlagName(r.measure);
  j["phi_residual"] = r.phi_residual;
  j["components"] = r.components;
  j["dominant_component"] = r.dominant_component;
  j["warnings"] = r.warnings;
  return j;
}

Json ToJson(const GreedyExpansion& e) {
  Json j = {{"digits", e.digits}, {"orbit", Elements(e.orbit)}};
  if (e.periodic()) {
    j["cycle"] = {*e.cycle_start, e.cycle_end};
    j["word"] = e.Word().ToString();
  }
  return j;
}

Json ToJson(const ExpansionOfOne& one) {
  Json j = {{"resolved", one.resolved}, {"bound", one.bound}};
  if (one.resolved) {
    j["greedy"] = one.greedy.ToString();
    j["greedy_finite"] = one.greedy_finite;
    j["quasi_greedy"] = ToJson(one.quasi_greedy);
  } else {
    j["greedy_prefix"] = one.greedy_prefix;
  }
  return j;
}

std::string ClassificationLabel(SftKind kind) {
  switch (kind) {
    case SftKind::kInteriorHit:
      return "sft_interior";
    case SftKind::kRightEndpointHit:
      return "sft_right_endpoint";
    case SftKind::kLeftEndpointHit:
      return "not_sft_left_endpoint";
    case SftKind::kNeverHits:
      return "not_sft_never_hits";
    case SftKind::kUnresolved:
      return "unresolved";
  }
  return "unresolved";
}

Json ToJson(const SftClassification& c) {
  return {{"classification", ClassificationLabel(c.kind)}, {"is_sft", c.is_sft()}, {"step", c.step}, {"name", c.Name()}};
}

Json ToJson(const UnivoqueAnalysis& a) {
  return {{"expansion_of_one", ToJson(a.one)},
          {"classification", ToJson(a.classification)},
          {"orbit_one", ToJson(a.orbit_one)},
          {"orbit_one_bar", ToJson(a.orbit_one_bar)},
          {"partition", ToJson(a.partition)},
          {"s", ToJson(a.s)},
          {"s_prime", ToJson(a.s_prime)},
          {"unit_partition", ToJson(a.unit_partition)},
          {"unit_s", ToJson(a.unit_s)},
          {"unit_s_prime", ToJson(a.unit_s_prime)},
          {"dim_univoque", ToJson(a.dim)},
          {"dim_univoque_full_domain", ToJson(a.full_dim)},
          {"interior_hit", a.interior_hit},
          {"warnings", a.warnings}};
}

Json ToJson(const HoleAnalysis& a) {
  return {{"hole", {ToString(a.hole.a), ToString(a.hole.b)}},
          {"hole_words", {BinaryExpansion(a.hole.a).ToString(), BinaryExpansion(a.hole.b).ToString()}},
          {"orbit_a", Rationals(a.orbit_a)},
          {"orbit_b", Rationals(a.orbit_b)},
          {"partition_points", Rationals(a.partition_points)},
          {"s", ToJson(a.s)},
          {"hole_blocks", a.hole_blocks},
          {"s_prime", ToJson(a.s_prime)},
          {"s_pruned", ToJson(a.s_pruned)},
          {"irreducible", a.irreducible},
          {"warnings", a.warnings}};
}

Json ToJson(const ParryChain& c) {
  return {{"states", c.states},
          {"transition", c.transition},
          {"stationary", c.stationary},
          {"entropy", c.entropy},
          {"perron", c.perron}};
}

Json ToJson(const MultiplicityReport& m) {
  Json verdict;
  switch (m.verdict) {
    case Multiplicity::kExactly:
      verdict = {{"exactly", m.count}};
      break;
    case Multiplicity::kCountablyInfinite:
      verdict = {{"countably_infinite", true}};
      break;
    case Multiplicity::kUncountable:
      verdict = {{"uncountable", true}};
      break;
    case Multiplicity::kAtLeast:
      verdict = {{"at_least", m.count}, {"depth", m.depth}};
      break;
  }
  Json j = {{"point", m.point.ToString()}, {"point_coeffs", ToJson(m.point)}, {"verdict", verdict}};
  if (!m.codings.empty()) j["codings"] = Words(m.codings);
  return j;
}

Json ToJson(const UkFamilyReport& r) {
  return {{"lambda", r.lambda.ToString()},
          {"partition", ToJson(r.partition)},
          {"s", ToJson(r.s)},
          {"s_prime", ToJson(r.s_prime)},
          {"dim_univoque", ToJson(r.univoque)},
          {"perron_is_two_plus_sqrt2", r.perron_is_two_plus_sqrt2},
          {"closed_form", r.closed_form},
          {"left_switch_point", ToJson(r.left_switch_point)},
          {"right_switch_point", ToJson(r.right_switch_point)},
          {"sampled", r.sampled},
          {"odd_above_one", r.odd_above_one},
          {"countably_infinite", r.countably_infinite},
          {"warnings", r.warnings}};
}

Json ToJson(const GrowthEstimate& g) {
  Json counts = Json::array();
  for (const auto& [n, c] : g.counts) counts.push_back({n, c.get_str()});
  return {{"counts", counts}, {"slope", g.slope}, {"dimension", g.estimated_dimension}, {"note", g.note}};
}

Polynomial PolynomialFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) Fail(ErrorCode::kMalformedInput, "polynomial must be a nonempty coefficient list");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(ParseCoefficient(c));
  return Polynomial(std::move(coeffs));
}

BinaryMatrix MatrixFromJson(const Json& j) {
  if (!j.is_array()) Fail(ErrorCode::kMalformedInput, "matrix must be an array of rows");
  BinaryMatrix m;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) Fail(ErrorCode::kMalformedInput, "matrix must be square");
    std::vector<int> r;
    for (const auto& v : row) {
      int x = v.get<int>();
      if (x != 0 && x != 1) Fail(ErrorCode::kMalformedInput, "matrix entries must be 0 or 1");
      r.push_back(x);
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace fractal_sft
