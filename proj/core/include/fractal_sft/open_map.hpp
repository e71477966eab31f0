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

#ifndef FRACTAL_SFT_OPEN_MAP_HPP_
#define FRACTAL_SFT_OPEN_MAP_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fractal_sft/dimension.hpp"
#include "fractal_sft/markov.hpp"
#include "fractal_sft/rational.hpp"
#include "fractal_sft/words.hpp"

namespace fractal_sft {

// Value of an eventually periodic binary word "pre(period)".
Rational ParseBinary(std::string_view word);
// Binary expansion produced by the doubling map; never ends in 1^infinity.
PeriodicWord BinaryExpansion(const Rational& x);
// Accepts "p/q", a decimal, or a binary word "pre(period)".
Rational ParseHoleEndpoint(std::string_view text);

// Half-open hole [a, b) for T(x) = 2x mod 1.
struct Hole {
  Rational a;
  Rational b;
};

Hole MakeHole(const Rational& a, const Rational& b);

struct ParryChain {
  // Rows of the matrix the chain lives on.
  std::vector<std::string> states;
  std::vector<std::vector<double>> transition;
  std::vector<double> stationary;
  double entropy = 0.0;
  double perron = 0.0;
};

struct HoleAnalysis {
  Hole hole;
  std::vector<Rational> orbit_a;
  std::vector<Rational> orbit_b;
  // d_1 = 0 < ... < d_p = 1; blocks are [d_i, d_{i+1}).
  std::vector<Rational> partition_points;
  AdjacencyMatrix s;
  // Raw block indices inside the hole.
  std::vector<int> hole_blocks;
  // Hole rows and columns deleted, in the usual form.
  AdjacencyMatrix s_prime;
  // s_prime after iterated removal of empty rows.
  AdjacencyMatrix s_pruned;
  bool irreducible = false;
  std::vector<std::string> warnings;

  Rational BlockLo(int raw) const { return partition_points[raw]; }
  Rational BlockHi(int raw) const { return partition_points[raw + 1]; }
};

HoleAnalysis HolePartition(const Hole& hole);

// log of the largest component Perron root of the pruned S' over log 2.
SpectralResult SurvivorDimension(const HoleAnalysis& analysis);

// Parry measure of an irreducible 0-1 matrix.
ParryChain ParryMeasure(const AdjacencyMatrix& s);

// Restriction of s to its strongly connected component of largest Perron root.
AdjacencyMatrix DominantComponent(const AdjacencyMatrix& s);

// Binary digits of a block path admissible in S: 0 on blocks left of 1/2.
std::string ConjugacyDigits(const HoleAnalysis& analysis, const std::vector<int>& block_path);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_OPEN_MAP_HPP_
