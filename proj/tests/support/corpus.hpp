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

#ifndef FRACTAL_SFT_TESTS_CORPUS_HPP_
#define FRACTAL_SFT_TESTS_CORPUS_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "fractal_sft/beta.hpp"
#include "fractal_sft/ifs.hpp"
#include "fractal_sft/matrix.hpp"
#include "fractal_sft/open_map.hpp"

namespace fractal_sft {

// Readable gtest failure messages.
inline void PrintTo(const FieldElement& x, std::ostream* os) { *os << x.ToString(); }

}  // namespace fractal_sft

namespace fractal_sft::testing {

// Reference values from tests/oracle/derive_constants.py (sympy + mpmath).
namespace derived {
inline constexpr double kInhomogeneousAttractor = 0.73691776834774563;
inline constexpr double kInhomogeneousUnivoque = 0.66264024812809357;
inline constexpr double kThreeMapsQuarterAttractor = 0.6942419136306173;
inline constexpr double kThreeMapsQuarterUnivoque = 0.60852784706373682;
inline constexpr double kThreeMapsSqrt3Attractor = 0.95758541272228862;
inline constexpr double kThreeMapsSqrt3Univoque = 0.83935783498888316;
inline constexpr double kTribonacciUnivoque = 0.78967723301642031;
inline constexpr double kPisotQuarticUnivoque = 0.77092012051334539;
inline constexpr double kUniqueOneQuarticUnivoque = 0.88521083307087326;
inline constexpr double kMultinacci4Univoque = 0.92856733152286943;
inline constexpr double kMultinacci5Univoque = 0.97082921432296834;
inline constexpr double kThirtyFirstSurvivor = 0.94677724679891553;
inline constexpr double kHoleEighthQuarter = 0.6942419136306173;
inline constexpr double kFourMapTenthUnivoque = 0.53329068316985368;
inline constexpr double kFourMapTenthAttractor = 0.5719475475333594;
inline constexpr double kCantor = 0.63092975357145744;
}  // namespace derived

std::string DataPath(const std::string& name);
Ifs LoadFixture(const std::string& name);

struct IfsCase {
  std::string file;
  double attractor;
  double univoque;
};
const std::vector<IfsCase>& IfsCorpus();

struct BetaCase {
  std::string name;
  std::vector<long> poly;
  double univoque;
  SftKind kind;
};
const std::vector<BetaCase>& BetaCorpus();
BetaSystem MakeBeta(const BetaCase& c);

struct HoleCase {
  std::string name;
  std::string a;
  std::string b;
  double survivor;
};
const std::vector<HoleCase>& HoleCorpus();
Hole MakeCaseHole(const HoleCase& c);

// Reference matrices, rows top to bottom.
namespace reference {
extern const BinaryMatrix kThreeMapsS;
extern const BinaryMatrix kThreeMapsSPrime;
extern const BinaryMatrix kFourMapS;
extern const BinaryMatrix kFourMapSPrime;
extern const BinaryMatrix kTribonacciS;
extern const BinaryMatrix kTribonacciSPrime;
extern const BinaryMatrix kTribonacciUnitSPrime;
extern const BinaryMatrix kPisotQuarticUnitSPrime;
extern const BinaryMatrix kUniqueOneQuarticUnitSPrime;
extern const BinaryMatrix kPeriodicWordHoleS;
extern const BinaryMatrix kPeriodicWordHoleSPrime;
extern const BinaryMatrix kThirtyFirstSPrime;
}  // namespace reference

}  // namespace fractal_sft::testing

#endif  // FRACTAL_SFT_TESTS_CORPUS_HPP_
