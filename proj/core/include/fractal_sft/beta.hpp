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

#ifndef FRACTAL_SFT_BETA_HPP_
#define FRACTAL_SFT_BETA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fractal_sft/dimension.hpp"
#include "fractal_sft/ifs.hpp"
#include "fractal_sft/markov.hpp"
#include "fractal_sft/number_field.hpp"
#include "fractal_sft/words.hpp"

namespace fractal_sft {

inline constexpr int kDefaultBetaBound = 50000;

// Base beta in (1, 2) with maps f_0 = x / beta, f_1 = (x + 1) / beta on
// [0, 1 / (beta - 1)].
struct BetaSystem {
  FieldPtr field;
  FieldElement beta;
  FieldElement switch_lo;  // 1 / beta
  FieldElement switch_hi;  // 1 / (beta (beta - 1))
  FieldElement domain_hi;  // 1 / (beta - 1)
  FieldElement one;
  FieldElement one_bar;  // (2 - beta) / (beta - 1)

  Interval Switch() const { return Interval{switch_lo, switch_hi}; }
  Ifs AsIfs() const;
};

// The field generator is beta.
BetaSystem MakeBetaSystem(FieldPtr field);
// Largest real root of poly, or the root in [lo, hi] when a hint is given.
BetaSystem MakeBetaSystem(const Polynomial& poly, std::optional<std::pair<Rational, Rational>> hint = std::nullopt);

// beta^2 > beta + 1.
bool AboveGoldenMean(const BetaSystem& sys);

int GreedyDigit(const BetaSystem& sys, const FieldElement& x);
FieldElement GreedyMap(const BetaSystem& sys, const FieldElement& x);

struct GreedyExpansion {
  std::string digits;
  // orbit[i] = G^i(x); one entry more than digits, except that the value
  // closing a cycle is not stored twice.
  std::vector<FieldElement> orbit;
  // Set when orbit[cycle_end] == orbit[cycle_start].
  std::optional<int> cycle_start;
  int cycle_end = 0;

  bool periodic() const { return cycle_start.has_value(); }
  // Requires periodic().
  PeriodicWord Word() const;
};

// First n greedy digits of x, stopping early once the orbit revisits a value.
GreedyExpansion GreedyExpand(const BetaSystem& sys, const FieldElement& x, int n);

// Exact value of sum w_k beta^-k.
FieldElement WordValue(const BetaSystem& sys, const PeriodicWord& word);

struct ExpansionOfOne {
  bool resolved = false;
  int bound = 0;
  bool greedy_finite = false;
  PeriodicWord greedy;
  PeriodicWord quasi_greedy;
  // Q^1(1), Q^2(1), ... up to the first repeat when resolved, else the
  // greedy orbit up to bound.
  std::vector<FieldElement> orbit_values;
  // Digits resolved so far when unresolved.
  std::string greedy_prefix;
};

ExpansionOfOne QuasiGreedyOne(const BetaSystem& sys, int bound = kDefaultBetaBound);

enum class SftKind { kInteriorHit, kRightEndpointHit, kLeftEndpointHit, kNeverHits, kUnresolved };

struct SftClassification {
  SftKind kind = SftKind::kUnresolved;
  // Index k of the first Q^k(1) in the closed switch region, or the bound.
  int step = 0;

  bool is_sft() const { return kind == SftKind::kInteriorHit || kind == SftKind::kRightEndpointHit; }
  std::string Name() const;
};

SftClassification ClassifySft(const BetaSystem& sys, int bound = kDefaultBetaBound);
SftClassification ClassifySft(const BetaSystem& sys, const ExpansionOfOne& one);

struct UnivoqueAnalysis {
  ExpansionOfOne one;
  SftClassification classification;
  // Orbits of 1 and its reflection, cut at the first point strictly inside
  // the switch region.
  GreedyExpansion orbit_one;
  GreedyExpansion orbit_one_bar;
  MarkovPartition partition;
  AdjacencyMatrix s;
  SwitchPruned s_prime;
  // The same restricted to blocks inside [0, 1].
  MarkovPartition unit_partition;
  AdjacencyMatrix unit_s;
  SwitchPruned unit_s_prime;
  SpectralResult dim;
  SpectralResult full_dim;
  // True when the orbit of 1 enters the open switch region and the partition
  // is cut there instead of closing up.
  bool interior_hit = false;
  std::vector<std::string> warnings;
};

UnivoqueAnalysis UnivoqueDimension(const BetaSystem& sys, int bound = kDefaultBetaBound);

// Lexicographic test: sigma^k(w) < eta after a 0 and its reflection < eta after a 1.
bool IsUniqueCoding(const PeriodicWord& word, const ExpansionOfOne& one);
bool IsUniqueCoding(const PeriodicWord& word, const BetaSystem& sys, int bound = kDefaultBetaBound);

std::string SftKindName(SftKind kind);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_BETA_HPP_
