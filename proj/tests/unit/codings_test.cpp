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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "fractal_sft/codings.hpp"
#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

FieldElement Q(long p, long q = 1) { return FieldElement(NumberField::Rationals(), MakeRational(p, q)); }

std::vector<int> Digits(const std::string& s) {
  std::vector<int> w;
  for (char c : s) w.push_back(c - '1');
  return w;
}

// The point coded by pre(period) in a four-map system.
FieldElement PointOf(const Ifs& ifs, const std::string& pre, const std::string& period) {
  AffineMap g = ComposeWord(ifs, Digits(period));
  FieldElement fixed = g.offset / (FieldElement(ifs.field, 1L) - g.ratio);
  return ComposeWord(ifs, Digits(pre)).Apply(fixed);
}

std::string RandomWord(std::mt19937_64& rng, size_t min_len, size_t max_len) {
  size_t n = min_len + rng() % (max_len - min_len + 1);
  std::string w;
  for (size_t i = 0; i < n; ++i) w += static_cast<char>('1' + rng() % 4);
  return w;
}

std::vector<std::string> CodingStrings(const MultiplicityReport& m) {
  std::vector<std::string> out;
  for (const auto& w : m.codings) out.push_back(w.Canonical().ToString());
  std::sort(out.begin(), out.end());
  return out;
}

class FourMapTenth : public ::testing::Test {
 protected:
  Ifs ifs = FourMapFamily(Q(1, 10));
};

TEST_F(FourMapTenth, MapsAndHull) {
  ASSERT_EQ(ifs.size(), 4);
  EXPECT_EQ(ifs.maps[1].offset, Q(2, 10));
  EXPECT_EQ(ifs.maps[2].offset, Q(29, 100));
  EXPECT_EQ(ifs.maps[3].offset, Q(9, 10));
  EXPECT_EQ(ifs.hull.lo, Q(0));
  EXPECT_EQ(ifs.hull.hi, Q(1));
  // f_2 f_4 = f_3 f_1.
  EXPECT_EQ(ComposeWord(ifs, Digits("24")), ComposeWord(ifs, Digits("31")));
}

TEST_F(FourMapTenth, LeftSwitchPointHasTwoCodings) {
  MultiplicityReport m = CountCodings(ifs, Q(29, 100));
  EXPECT_EQ(m.verdict, Multiplicity::kExactly);
  EXPECT_EQ(m.count, 2);
  EXPECT_EQ(CodingStrings(m), (std::vector<std::string>{"24(1)", "3(1)"}));
}

TEST_F(FourMapTenth, RightSwitchPointHasTwoCodings) {
  MultiplicityReport m = CountCodings(ifs, Q(3, 10));
  EXPECT_EQ(m.verdict, Multiplicity::kExactly);
  EXPECT_EQ(m.count, 2);
  EXPECT_EQ(CodingStrings(m), (std::vector<std::string>{"2(4)", "31(4)"}));
}

TEST_F(FourMapTenth, ZeroHasOneCoding) {
  MultiplicityReport m = CountCodings(ifs, Q(0));
  EXPECT_EQ(m.verdict, Multiplicity::kExactly);
  EXPECT_EQ(m.count, 1);
  EXPECT_EQ(CodingStrings(m), std::vector<std::string>{"(1)"});
}

TEST_F(FourMapTenth, RecurringSwitchIsUncountable) {
  // Fixed point of f_2 f_4; every 24 block can be swapped for 31.
  FieldElement x = PointOf(ifs, "", "24");
  EXPECT_EQ(x, Q(29, 99));
  EXPECT_EQ(CountCodings(ifs, x).verdict, Multiplicity::kUncountable);
}

TEST_F(FourMapTenth, CodingGraphIsClosedForPeriodicPoints) {
  CodingGraph g = EnumerateCodings(ifs, Q(29, 100), 20);
  EXPECT_TRUE(g.closed());
  EXPECT_EQ(g.values[0], Q(29, 100));
}

TEST_F(FourMapTenth, ReflectionPreservesMultiplicity) {
  std::mt19937_64 rng(2025);
  int certified = 0;
  for (int i = 0; i < 50; ++i) {
    FieldElement x = PointOf(ifs, "1" + RandomWord(rng, 0, 4), RandomWord(rng, 1, 3));
    FieldElement y = x + Q(9, 10);
    MultiplicityReport mx = CountCodings(ifs, x, 30);
    MultiplicityReport my = CountCodings(ifs, y, 30);
    if (mx.verdict == Multiplicity::kAtLeast) continue;
    ++certified;
    EXPECT_EQ(mx.verdict, my.verdict) << x.ToString();
    EXPECT_EQ(mx.count, my.count) << x.ToString();
  }
  EXPECT_GE(certified, 40);
}

TEST_F(FourMapTenth, SwitchCompositionDoublesCount) {
  std::mt19937_64 rng(4242);
  AffineMap f24 = ComposeWord(ifs, Digits("24"));
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    FieldElement x = PointOf(ifs, RandomWord(rng, 0, 4), RandomWord(rng, 1, 3));
    MultiplicityReport mx = CountCodings(ifs, x, 30);
    if (mx.verdict != Multiplicity::kExactly) continue;
    MultiplicityReport my = CountCodings(ifs, f24.Apply(x), 30);
    EXPECT_EQ(my.verdict, Multiplicity::kExactly);
    EXPECT_EQ(my.count, 2 * mx.count) << x.ToString();
    ++checked;
  }
  EXPECT_GE(checked, 10);
  // Iterating from a unique point reaches 2, 4, 8 codings.
  FieldElement x = Q(0);
  for (long k = 1; k <= 8; k *= 2) {
    x = f24.Apply(x);
    MultiplicityReport m = CountCodings(ifs, x, 30);
    EXPECT_EQ(m.count, 2 * k);
  }
}

TEST_F(FourMapTenth, NoOddMultiplicityAboveOne) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    FieldElement x = PointOf(ifs, RandomWord(rng, 0, 6), RandomWord(rng, 1, 4));
    MultiplicityReport m = CountCodings(ifs, x, 30);
    if (m.verdict != Multiplicity::kExactly) continue;
    EXPECT_TRUE(m.count == 1 || m.count % 2 == 0) << x.ToString() << " " << m.ToString();
    EXPECT_NE(m.verdict, Multiplicity::kCountablyInfinite);
  }
}

TEST_F(FourMapTenth, VerdictsStableUnderDeeperSearch) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    FieldElement x = PointOf(ifs, RandomWord(rng, 0, 5), RandomWord(rng, 1, 3));
    MultiplicityReport shallow = CountCodings(ifs, x, 20);
    if (shallow.verdict == Multiplicity::kAtLeast) continue;
    MultiplicityReport deep = CountCodings(ifs, x, 40);
    EXPECT_EQ(shallow.verdict, deep.verdict) << x.ToString();
    EXPECT_EQ(shallow.count, deep.count) << x.ToString();
  }
}

TEST(FourMapFamily, Report) {
  UkFamilyReport r = AnalyzeFourMapFamily(Q(1, 10));
  EXPECT_TRUE(r.perron_is_two_plus_sqrt2);
  EXPECT_NEAR(r.closed_form, std::log(2 + std::sqrt(2.0)) / std::log(10.0), 1e-15);
  EXPECT_NEAR(r.univoque.dimension, r.closed_form, 1e-10);
  EXPECT_EQ(r.left_switch_point.count, 2);
  EXPECT_EQ(r.right_switch_point.count, 2);
  EXPECT_GT(r.sampled, 0);
  EXPECT_EQ(r.odd_above_one, 0);
  EXPECT_EQ(r.countably_infinite, 0);
}

TEST(FourMapFamily, LambdaRange) {
  // (5 - sqrt 21) / 2 is about 0.2087.
  EXPECT_NO_THROW(AnalyzeFourMapFamily(Q(19, 100)));
  try {
    AnalyzeFourMapFamily(Q(21, 100));
    FAIL() << "expected LambdaOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLambdaOutOfRange);
  }
}

TEST(FourMapFamily, SameDimensionFormulaAcrossLambda) {
  for (long q : {5L, 7L, 10L, 20L}) {
    UkFamilyReport r = AnalyzeFourMapFamily(Q(1, q));
    EXPECT_NEAR(r.univoque.dimension, std::log(2 + std::sqrt(2.0)) / std::log(static_cast<double>(q)), 1e-10) << q;
  }
}

TEST(CountCodings, InhomogeneousSystemEndpoints) {
  // 1/3 = f_1(1) is the fixed point of f_2: codings 2^n 1 3^infinity and 2^infinity.
  Ifs ifs = testing::LoadFixture("inhomogeneous_three_maps.json");
  EXPECT_EQ(CountCodings(ifs, Q(1, 3)).verdict, Multiplicity::kCountablyInfinite);
  // 2/3 = f_3(0) only.
  MultiplicityReport m = CountCodings(ifs, Q(2, 3));
  EXPECT_EQ(m.verdict, Multiplicity::kExactly);
  EXPECT_EQ(CodingStrings(m), std::vector<std::string>{"3(1)"});
}

TEST(CountCodings, CantorPointsAreUnique) {
  Ifs ifs = testing::LoadFixture("cantor.json");
  for (auto [p, q] : {std::pair{1L, 4L}, {3L, 4L}, {1L, 3L}, {2L, 3L}}) {
    MultiplicityReport m = CountCodings(ifs, Q(p, q));
    EXPECT_EQ(m.verdict, Multiplicity::kExactly) << p << "/" << q;
    EXPECT_EQ(m.count, 1) << p << "/" << q;
  }
  // 1/2 lies in the gap.
  EXPECT_EQ(CountCodings(ifs, Q(1, 2)).count, 0);
}

TEST(MultiplicityName, Names) {
  EXPECT_EQ(MultiplicityName(Multiplicity::kExactly), "exactly");
  EXPECT_EQ(MultiplicityName(Multiplicity::kUncountable), "uncountable");
}

}  // namespace
}  // namespace fractal_sft
