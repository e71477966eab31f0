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

#ifndef FRACTAL_SFT_IFS_HPP_
#define FRACTAL_SFT_IFS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fractal_sft/number_field.hpp"

namespace fractal_sft {

// Similitude f(x) = ratio * x + offset.
struct AffineMap {
  FieldElement ratio;
  FieldElement offset;

  FieldElement Apply(const FieldElement& x) const { return ratio * x + offset; }
  // The expanding branch T(x) = (x - offset) / ratio.
  FieldElement ApplyInverse(const FieldElement& x) const { return (x - offset) / ratio; }
  AffineMap Inverse() const;
  // (*this)(g(x)).
  AffineMap Compose(const AffineMap& g) const;
  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.ratio == b.ratio && a.offset == b.offset;
  }
};

struct Interval {
  FieldElement lo;
  FieldElement hi;

  bool Contains(const FieldElement& x) const { return lo <= x && x <= hi; }
  bool Contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  std::optional<Interval> Intersect(const Interval& o) const;
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval ImageOf(const AffineMap& f, const Interval& i);

struct Ifs {
  FieldPtr field;
  // Sorted by the left endpoint of f_k(hull); names keep the user's labels.
  std::vector<AffineMap> maps;
  std::vector<std::string> names;
  Interval hull;
  // Endpoints of the first-level images, ascending and distinct.
  std::vector<FieldElement> endpoints;
  // For consecutive endpoints (a_j, a_{j+1}): smallest k whose image contains both.
  std::vector<std::optional<int>> pair_map;

  int size() const { return static_cast<int>(maps.size()); }
  Interval Image(int k) const { return ImageOf(maps[k], hull); }
  std::string WordName(const std::vector<int>& word) const;
};

// Builds an IFS from maps with positive ratios below one.
Ifs MakeIfs(FieldPtr field, std::vector<AffineMap> maps, std::vector<std::string> names = {});

// Parses a field description: {"field": "rational"} or
// {"min_poly": [...], "root_hint": ["p/q", "p/q"]}.
FieldPtr ParseField(const nlohmann::json& spec);
FieldElement ParseFieldElement(const FieldPtr& field, const nlohmann::json& value);
Ifs LoadIfs(const nlohmann::json& spec);

struct OverlapCertificate {
  int i = 0;
  int j = 0;
  Interval intersection;
  // Word pairs (w, v), w starting with i and v with j, with f_w == f_v.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> decompositions;
  int depth = 0;
};

// Each decomposition (w, v) refined by one more letter on both sides.
std::vector<std::pair<std::vector<int>, std::vector<int>>> ExpandDecompositions(
    const OverlapCertificate& cert, int alphabet);

std::vector<OverlapCertificate> DetectExactOverlaps(const Ifs& ifs, int depth = 8);

AffineMap ComposeWord(const Ifs& ifs, const std::vector<int>& word);

// Returns (alpha, T_alpha(x)) following the smallest-index rule.
std::pair<int, FieldElement> LazyStep(const Ifs& ifs, const FieldElement& x);

// Maps the lazy algorithm may apply at x: one inside an admissible pair,
// up to two at a shared endpoint.
std::vector<int> LazyBranches(const Ifs& ifs, const FieldElement& x);

struct OrbitRecord {
  FieldElement start;
  std::vector<FieldElement> visited;  // ascending
  bool periodic = false;
  int steps_to_cycle = 0;
};

struct EndpointOrbits {
  std::vector<FieldElement> breakpoints;
  std::vector<OrbitRecord> records;
};

EndpointOrbits ComputeEndpointOrbits(const Ifs& ifs, int max_steps = 10000);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_IFS_HPP_
