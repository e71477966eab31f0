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

#ifndef FRACTAL_SFT_ORACLE_HPP_
#define FRACTAL_SFT_ORACLE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fractal_sft/beta.hpp"
#include "fractal_sft/ifs.hpp"
#include "fractal_sft/markov.hpp"
#include "fractal_sft/open_map.hpp"
#include "fractal_sft/rational.hpp"

namespace fractal_sft {

// Brute-force growth rates, independent of the spectral pipelines.
inline constexpr double kOracleGuard = 1e8;
// WeightedCoverCount stops after the first level with more paths than this.
inline constexpr double kCoverStop = 1e6;

struct GrowthEstimate {
  // (n, count) for n = 1..n_max.
  std::vector<std::pair<int, BigInt>> counts;
  // Least-squares slope of log(count) against the scale variable, fitted on
  // the second half of the range.
  double slope = 0.0;
  double estimated_dimension = 0.0;
  std::string note;
};

// Least-squares slope of y against x over the second half of the points.
double TailSlope(const std::vector<double>& x, const std::vector<double>& y);

// Words of length n admissible in s; log_base > 0 turns the slope into a dimension.
GrowthEstimate CountSftWords(const BinaryMatrix& s, int n_max, double log_base = 0.0);

// Binary n-cylinders none of whose shifted cylinders lies inside [a, b).
GrowthEstimate SurvivorCylinderCount(const Hole& hole, int n_max);

// Words satisfying the unique-expansion inequalities against eta truncated
// to the available length. Over-counts; the slope converges from above.
GrowthEstimate UniqueWordCount(const BetaSystem& sys, int n_max, int bound = kDefaultBetaBound);

// The two counts above with n raised while the final count stays near the
// budget; slowly growing counts then reach long words.
GrowthEstimate SurvivorCylinderCountAdaptive(const Hole& hole, double budget = 2e6);
GrowthEstimate UniqueWordCountAdaptive(const BetaSystem& sys, double budget = 2e6, int bound = kDefaultBetaBound);

// Grid boxes of width r_max^n meeting the union of level-n cylinders.
GrowthEstimate BoxCountIfs(const Ifs& ifs, int level);

// Paths of the weighted graph stopped once their weight product drops below
// rho^k, for k = 1..levels; rho is the largest weight. Stops early past
// kCoverStop paths.
GrowthEstimate WeightedCoverCount(const WeightedGraph& graph, int levels);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_ORACLE_HPP_
