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

#include "fractal_sft/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

AffineMap AffineMap::Inverse() const {
  FieldElement inv = ratio.Inverse();
  return AffineMap{inv, -offset * inv};
}

AffineMap AffineMap::Compose(const AffineMap& g) const {
  return AffineMap{ratio * g.ratio, ratio * g.offset + offset};
}

std::optional<Interval> Interval::Intersect(const Interval& o) const {
  FieldElement a = lo < o.lo ? o.lo : lo;
  FieldElement b = hi < o.hi ? hi : o.hi;
  if (b < a) return std::nullopt;
  return Interval{a, b};
}

Interval ImageOf(const AffineMap& f, const Interval& i) {
  FieldElement a = f.Apply(i.lo), b = f.Apply(i.hi);
  if (b < a) std::swap(a, b);
  return Interval{a, b};
}

std::string Ifs::WordName(const std::vector<int>& word) const {
  bool single = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (!single && i > 0) out += ",";
    out += names[word[i]];
  }
  return out;
}

Ifs MakeIfs(FieldPtr field, std::vector<AffineMap> maps, std::vector<std::string> names) {
  if (maps.size() < 2) Fail(ErrorCode::kEmptySpec, "an IFS needs at least two maps");
  if (names.empty()) {
    for (size_t k = 0; k < maps.size(); ++k) names.push_back(std::to_string(k + 1));
  }
  if (names.size() != maps.size()) Fail(ErrorCode::kMalformedInput, "map names do not match map count");
  FieldElement one(field, 1);
  std::vector<FieldElement> fixed;
  for (size_t k = 0; k < maps.size(); ++k) {
    int s = maps[k].ratio.Sign();
    if (s == 0) Fail(ErrorCode::kNotContraction, "map " + names[k] + " has zero ratio");
    if (maps[k].ratio.Abs() >= one) Fail(ErrorCode::kNotContraction, "map " + names[k] + " is not a contraction");
    if (s < 0) Fail(ErrorCode::kNotSupported, "map " + names[k] + " reverses orientation");
    fixed.push_back(maps[k].offset / (one - maps[k].ratio));
  }
  Ifs ifs;
  ifs.field = field;
  ifs.hull = Interval{*std::min_element(fixed.begin(), fixed.end()), *std::max_element(fixed.begin(), fixed.end())};
  std::vector<size_t> order(maps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<FieldElement> left;
  for (const auto& m : maps) left.push_back(ImageOf(m, ifs.hull).lo);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return left[a] < left[b]; });
  for (size_t k : order) {
    ifs.maps.push_back(maps[k]);
    ifs.names.push_back(names[k]);
  }
  std::set<FieldElement, FieldLess> ends;
  for (int k = 0; k < ifs.size(); ++k) {
    Interval img = ifs.Image(k);
    ends.insert(img.lo);
    ends.insert(img.hi);
  }
  ifs.endpoints.assign(ends.begin(), ends.end());
  for (size_t j = 0; j + 1 < ifs.endpoints.size(); ++j) {
    std::optional<int> alpha;
    for (int k = 0; k < ifs.size() && !alpha; ++k) {
      Interval img = ifs.Image(k);
      if (img.Contains(ifs.endpoints[j]) && img.Contains(ifs.endpoints[j + 1])) alpha = k;
    }
    ifs.pair_map.push_back(alpha);
  }
  return ifs;
}

FieldPtr ParseField(const nlohmann::json& spec) {
  if (spec.contains("field")) {
    if (spec["field"] == "rational") return NumberField::Rationals();
    Fail(ErrorCode::kMalformedInput, "unknown field kind");
  }
  if (!spec.contains("min_poly") || !spec.contains("root_hint")) {
    Fail(ErrorCode::kMalformedInput, "field needs min_poly and root_hint");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : spec["min_poly"]) {
    coeffs.push_back(c.is_string() ? ParseRational(c.get<std::string>()) : Rational(c.get<long>()));
  }
  const auto& hint = spec["root_hint"];
  if (!hint.is_array() || hint.size() != 2) Fail(ErrorCode::kMalformedInput, "root_hint must have two entries");
  auto parse = [](const nlohmann::json& v) {
    return v.is_string() ? ParseRational(v.get<std::string>()) : ParseRational(v.dump());
  };
  try {
    return NumberField::Make(Polynomial(coeffs), parse(hint[0]), parse(hint[1]));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInput) throw;
    Fail(ErrorCode::kFieldConstructionFailure, e.what());
  }
}

FieldElement ParseFieldElement(const FieldPtr& field, const nlohmann::json& value) {
  auto scalar = [](const nlohmann::json& v) {
    if (v.is_string()) return ParseRational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number()) return ParseRational(v.dump());
    Fail(ErrorCode::kMalformedInput, "bad field coefficient " + v.dump());
  };
  if (value.is_array()) {
    std::vector<Rational> coeffs;
    for (const auto& c : value) coeffs.push_back(scalar(c));
    return FieldElement::FromCoeffs(field, coeffs);
  }
  return FieldElement(field, scalar(value));
}

Ifs LoadIfs(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("maps") || !spec["maps"].is_array()) {
    Fail(ErrorCode::kEmptySpec, "spec lists no maps");
  }
  FieldPtr field = ParseField(spec);
  std::vector<AffineMap> maps;
  std::vector<std::string> names;
  for (const auto& m : spec["maps"]) {
    if (!m.contains("ratio") || !m.contains("offset")) Fail(ErrorCode::kMalformedInput, "map needs ratio and offset");
    maps.push_back(AffineMap{ParseFieldElement(field, m["ratio"]), ParseFieldElement(field, m["offset"])});
    names.push_back(m.contains("name") ? m["name"].get<std::string>() : std::to_string(maps.size()));
  }
  return MakeIfs(field, std::move(maps), std::move(names));
}

AffineMap ComposeWord(const Ifs& ifs, const std::vector<int>& word) {
  AffineMap f{FieldElement(ifs.field, 1), FieldElement(ifs.field, 0)};
  for (int k : word) f = f.Compose(ifs.maps[k]);
  return f;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> ExpandDecompositions(const OverlapCertificate& cert,
                                                                                 int alphabet) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& [w, v] : cert.decompositions) {
    for (int k = 0; k < alphabet; ++k) {
      auto w2 = w, v2 = v;
      w2.push_back(k);
      v2.push_back(k);
      out.emplace_back(std::move(w2), std::move(v2));
    }
  }
  return out;
}

namespace {

struct Cylinder {
  std::vector<int> word;
  AffineMap f;
  Interval image;
  double ratio_approx;
  double offset_approx;
  bool matched = false;
  long parent = -1;
};

Cylinder MakeCylinder(const Ifs& ifs, std::vector<int> word, const AffineMap& f) {
  Interval img = ImageOf(f, ifs.hull);
  return Cylinder{std::move(word), f, img, f.ratio.ToDouble(), f.offset.ToDouble(), false};
}

bool SameMap(const Cylinder& a, const Cylinder& b) {
  double scale = std::max({1.0, std::abs(a.offset_approx), std::abs(b.offset_approx)});
  if (std::abs(a.ratio_approx - b.ratio_approx) > 1e-9 * std::max(1.0, std::abs(a.ratio_approx))) return false;
  if (std::abs(a.offset_approx - b.offset_approx) > 1e-9 * scale) return false;
  return a.f == b.f;
}

bool CoveredBy(const Interval& target, std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  FieldElement reach = target.lo;
  bool started = false;
  for (const auto& p : pieces) {
    if (p.hi < reach) continue;
    if (reach < p.lo) break;
    started = true;
    if (reach < p.hi) reach = p.hi;
    if (target.hi <= reach) return true;
  }
  return started && target.hi <= reach;
}

constexpr size_t kMaxCylinders = 2000000;

}  // namespace

std::vector<OverlapCertificate> DetectExactOverlaps(const Ifs& ifs, int depth) {
  if (depth < 1) Fail(ErrorCode::kMalformedInput, "overlap depth must be >= 1");
  std::vector<OverlapCertificate> certs;
  for (int i = 0; i < ifs.size(); ++i) {
    for (int j = i + 1; j < ifs.size(); ++j) {
      auto meet = ifs.Image(i).Intersect(ifs.Image(j));
      if (!meet) continue;
      const Interval& target = *meet;
      std::vector<Cylinder> side_i{MakeCylinder(ifs, {i}, ifs.maps[i])};
      std::vector<Cylinder> side_j{MakeCylinder(ifs, {j}, ifs.maps[j])};
      std::vector<size_t> frontier_i{0}, frontier_j{0};
      std::vector<std::pair<std::vector<int>, std::vector<int>>> matches;
      bool certified = false, disjoint = false;
      int level = 1;
      for (; level <= depth; ++level) {
        auto grow = [&](std::vector<Cylinder>& side, std::vector<size_t>& frontier) {
          std::vector<size_t> next;
          for (size_t idx : frontier) {
            if (side[idx].matched) continue;
            for (int k = 0; k < ifs.size(); ++k) {
              AffineMap f = side[idx].f.Compose(ifs.maps[k]);
              auto word = side[idx].word;
              word.push_back(k);
              Cylinder c = MakeCylinder(ifs, std::move(word), f);
              if (!c.image.Intersect(target)) continue;
              c.parent = static_cast<long>(idx);
              side.push_back(std::move(c));
              next.push_back(side.size() - 1);
            }
          }
          if (side.size() > kMaxCylinders) Fail(ErrorCode::kExplosionGuard, "overlap search exceeded cylinder budget");
          frontier = std::move(next);
        };
        size_t old_i = side_i.size(), old_j = side_j.size();
        if (level > 1) {
          grow(side_i, frontier_i);
          grow(side_j, frontier_j);
        }
        size_t from_i = level > 1 ? old_i : 0, from_j = level > 1 ? old_j : 0;
        for (size_t a = 0; a < side_i.size(); ++a) {
          for (size_t b = 0; b < side_j.size(); ++b) {
            if (a < from_i && b < from_j) continue;
            if (SameMap(side_i[a], side_j[b])) {
              if (!side_i[a].matched || !side_j[b].matched) matches.emplace_back(side_i[a].word, side_j[b].word);
              side_i[a].matched = side_j[b].matched = true;
            }
          }
        }
        for (auto* side : {&side_i, &side_j}) {
          for (auto& c : *side) {
            if (c.parent >= 0 && (*side)[c.parent].matched) c.matched = true;
          }
        }
        std::vector<Interval> covered;
        for (const auto& c : side_i) {
          if (c.matched) covered.push_back(c.image);
        }
        bool ok = true;
        bool any_meet = false;
        for (size_t a : frontier_i) {
          if (side_i[a].matched) continue;
          for (size_t b : frontier_j) {
            if (side_j[b].matched) continue;
            auto m = side_i[a].image.Intersect(side_j[b].image);
            if (!m) continue;
            any_meet = true;
            if (covered.empty() || !CoveredBy(*m, covered)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (ok) {
          certified = !matches.empty();
          disjoint = matches.empty() && !any_meet;
          break;
        }
      }
      if (disjoint) continue;
      if (!certified) {
        Fail(ErrorCode::kUnresolvedOverlap, "intersection of maps " + ifs.names[i] + " and " + ifs.names[j] +
                                                " not certified within depth " + std::to_string(depth));
      }
      certs.push_back(OverlapCertificate{i, j, target, std::move(matches), level});
    }
  }
  return certs;
}

std::vector<int> LazyBranches(const Ifs& ifs, const FieldElement& x) {
  std::vector<int> out;
  const auto& e = ifs.endpoints;
  if (x < e.front() || e.back() < x) return out;
  auto it = std::lower_bound(e.begin(), e.end(), x, FieldLess{});
  size_t idx = static_cast<size_t>(it - e.begin());
  auto add = [&](size_t pair) {
    if (pair < ifs.pair_map.size() && ifs.pair_map[pair]) {
      int k = *ifs.pair_map[pair];
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
  };
  if (it != e.end() && *it == x) {
    add(idx);
    if (idx > 0) add(idx - 1);
  } else {
    add(idx - 1);
  }
  return out;
}

std::pair<int, FieldElement> LazyStep(const Ifs& ifs, const FieldElement& x) {
  auto branches = LazyBranches(ifs, x);
  if (branches.empty()) Fail(ErrorCode::kNoAdmissibleMap, "no admissible map at " + x.ToString());
  int k = branches.front();
  return {k, ifs.maps[k].ApplyInverse(x)};
}

EndpointOrbits ComputeEndpointOrbits(const Ifs& ifs, int max_steps) {
  if (max_steps < 1) Fail(ErrorCode::kMalformedInput, "max_steps must be >= 1");
  EndpointOrbits out;
  std::set<FieldElement, FieldLess> all(ifs.endpoints.begin(), ifs.endpoints.end());
  all.insert(ifs.hull.lo);
  all.insert(ifs.hull.hi);
  for (const auto& start : ifs.endpoints) {
    std::set<FieldElement, FieldLess> seen{start};
    std::vector<FieldElement> layer{start};
    int steps = 0;
    while (!layer.empty()) {
      std::vector<FieldElement> next;
      for (const auto& x : layer) {
        for (int k : LazyBranches(ifs, x)) {
          FieldElement y = ifs.maps[k].ApplyInverse(x);
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      if (!next.empty()) ++steps;
      if (static_cast<int>(seen.size()) > max_steps || steps > max_steps) {
        Fail(ErrorCode::kOrbitNotPeriodic,
             "orbit of endpoint " + start.ToString() + " not closed within " + std::to_string(max_steps) + " steps");
      }
      layer = std::move(next);
    }
    all.insert(seen.begin(), seen.end());
    out.records.push_back(OrbitRecord{start, std::vector<FieldElement>(seen.begin(), seen.end()), true, steps});
  }
  out.breakpoints.assign(all.begin(), all.end());
  return out;
}

}  // namespace fractal_sft
