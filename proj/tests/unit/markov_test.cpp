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

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "fractal_sft/codings.hpp"
#include "fractal_sft/dimension.hpp"
#include "fractal_sft/error.hpp"
#include "fractal_sft/markov.hpp"

namespace fractal_sft {
namespace {

using testing::LoadFixture;

FieldElement Q(long p, long q = 1) { return FieldElement(NumberField::Rationals(), MakeRational(p, q)); }

// Names of the retained blocks covered by the chosen transition of a retained block.
std::string Cover(const MarkovPartition& p, int pos) {
  auto t = p.ChosenTransition(p.retained[pos]);
  if (!t) return "-";
  std::string out;
  for (int raw = t->first; raw < t->last; ++raw) {
    int q = p.RetainedPosition(raw);
    if (q >= 0) out += p.names[q];
  }
  return out;
}

int ChosenMap(const MarkovPartition& p, int pos) {
  auto t = p.ChosenTransition(p.retained[pos]);
  return t ? t->map : -1;
}

std::vector<std::string> SwitchNames(const MarkovPartition& p) {
  std::vector<std::string> out;
  for (int pos : p.switch_blocks) out.push_back(p.names[pos]);
  return out;
}

TEST(BuildPartition, ThreeMapsWithRatioQuarter) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("three_maps_quarter.json"));
  const auto& p = a.partition;
  ASSERT_EQ(p.names, (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(Cover(p, 0), "ABC");
  EXPECT_EQ(Cover(p, 1), "D");
  EXPECT_EQ(Cover(p, 2), "CD");
  EXPECT_EQ(Cover(p, 3), "ABCD");
  EXPECT_EQ((std::vector<int>{ChosenMap(p, 0), ChosenMap(p, 1), ChosenMap(p, 2), ChosenMap(p, 3)}),
            (std::vector<int>{0, 0, 1, 2}));
  EXPECT_EQ(SwitchNames(p), std::vector<std::string>{"B"});
  // A = [0, rho], B = [rho, rho / (1 - rho)], D = [1, 1 / (1 - rho)].
  EXPECT_EQ(p.blocks[p.retained[0]].hi, Q(1, 4));
  EXPECT_EQ(p.blocks[p.retained[1]].hi, Q(1, 3));
  EXPECT_EQ(p.blocks[p.retained[3]].lo, Q(1));
  EXPECT_EQ(p.blocks[p.retained[3]].hi, Q(4, 3));
}

TEST(BuildPartition, InhomogeneousThreeMaps) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("inhomogeneous_three_maps.json"));
  const auto& p = a.partition;
  ASSERT_EQ(p.names, (std::vector<std::string>{"A", "B", "C", "D", "E"}));
  EXPECT_EQ(Cover(p, 0), "ABCD");
  EXPECT_EQ(Cover(p, 1), "E");
  EXPECT_EQ(Cover(p, 2), "CDE");
  EXPECT_EQ(Cover(p, 3), "ABC");
  EXPECT_EQ(Cover(p, 4), "DE");
  EXPECT_EQ((std::vector<int>{ChosenMap(p, 0), ChosenMap(p, 1), ChosenMap(p, 2), ChosenMap(p, 3), ChosenMap(p, 4)}),
            (std::vector<int>{0, 0, 1, 2, 2}));
  EXPECT_EQ(SwitchNames(p), std::vector<std::string>{"B"});
  std::vector<FieldElement> expected{Q(0), Q(8, 27), Q(1, 3), Q(11, 27), Q(2, 3), Q(8, 9), Q(1)};
  EXPECT_EQ(p.breakpoints, expected);
}

TEST(BuildPartition, CantorDropsTheGap) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("cantor.json"));
  EXPECT_EQ(a.partition.retained.size(), 2u);
  EXPECT_EQ(a.s.entries, (BinaryMatrix{{1, 1}, {1, 1}}));
  EXPECT_TRUE(a.partition.switch_blocks.empty());
}

TEST(BuildPartition, MissingBreakpointIsNonMarkov) {
  Ifs ifs = LoadFixture("inhomogeneous_three_maps.json");
  auto regions = SwitchRegions(DetectExactOverlaps(ifs));
  // Only the first-level endpoints: T_2 of [1/3, 11/27] lands on 1 but T_1 of [8/27, 1/3] does not.
  try {
    BuildPartition(ifs, ifs.endpoints, regions);
    FAIL() << "expected NonMarkov";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonMarkov);
  }
}

TEST(Adjacency, ReferenceMatrices) {
  EXPECT_EQ(AnalyzeIfs(LoadFixture("three_maps_quarter.json")).s.entries, testing::reference::kThreeMapsS);
  EXPECT_EQ(AnalyzeIfs(LoadFixture("three_maps_sqrt3.json")).s.entries, testing::reference::kThreeMapsS);
  UkFamilyReport uk = AnalyzeFourMapFamily(Q(1, 10));
  EXPECT_EQ(uk.s.entries, testing::reference::kFourMapS);
}

TEST(Adjacency, EntriesMatchLabels) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    for (int u = 0; u < a.s.size(); ++u) {
      for (int v = 0; v < a.s.size(); ++v) {
        EXPECT_EQ(a.s.entries[u][v] == 1, a.s.labels.count({u, v}) == 1) << c.file << " " << u << "," << v;
      }
    }
  }
}

TEST(PruneSwitch, ReferenceMatrices) {
  EXPECT_EQ(AnalyzeIfs(LoadFixture("three_maps_quarter.json")).s_prime.deleted.entries, testing::reference::kThreeMapsSPrime);
  UkFamilyReport uk = AnalyzeFourMapFamily(Q(1, 10));
  EXPECT_EQ(uk.s_prime.deleted.entries, testing::reference::kFourMapSPrime);
  EXPECT_EQ(uk.s_prime.deleted.names, (std::vector<std::string>{"A", "B", "D", "E"}));
}

TEST(PruneSwitch, InhomogeneousWeightPattern) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("inhomogeneous_three_maps.json"));
  EXPECT_EQ(a.s_prime.pruned.entries, (BinaryMatrix{{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(a.s_prime.pruned.names, (std::vector<std::string>{"A", "C", "D", "E"}));
}

TEST(PruneSwitch, DeletedIsPrincipalSubmatrix) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    std::vector<int> keep;
    for (int u = 0; u < a.s.size(); ++u) {
      if (std::find(a.partition.switch_blocks.begin(), a.partition.switch_blocks.end(), u) ==
          a.partition.switch_blocks.end()) {
        keep.push_back(u);
      }
    }
    EXPECT_EQ(a.s_prime.deleted.entries, PrincipalSubmatrix(a.s.entries, keep)) << c.file;
  }
}

TEST(PruneSwitch, PerronDoesNotIncrease) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    double full = SpectralRadius(ToReal(a.s.entries));
    double pruned = SpectralRadius(ToReal(a.s_prime.pruned.entries));
    EXPECT_LE(pruned, full + 1e-9) << c.file;
  }
}

TEST(PruneEmptyRows, IteratesToFixedPoint) {
  AdjacencyMatrix m;
  // 0 -> 1 -> 2 with 2 a dead end; 3 has a self-loop and feeds 0.
  m.entries = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}};
  m.names = {"A", "B", "C", "D"};
  m.blocks = {0, 1, 2, 3};
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (m.entries[u][v]) m.labels[{u, v}] = 0;
  AdjacencyMatrix p = PruneEmptyRows(m);
  EXPECT_EQ(p.entries, (BinaryMatrix{{1}}));
  EXPECT_EQ(p.names, std::vector<std::string>{"D"});
}

TEST(DecomposeScc, IdentityHasTwoLoops) {
  SccDecomposition d = DecomposeScc({{1, 0}, {0, 1}});
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_TRUE(d.has_cycle[0]);
  EXPECT_TRUE(d.has_cycle[1]);
  EXPECT_FALSE(d.strongly_connected);
}

TEST(DecomposeScc, FourMapPrunedIsIrreducible) {
  SccDecomposition d = DecomposeScc(testing::reference::kFourMapSPrime);
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.components[0].size(), 4u);
  EXPECT_TRUE(d.strongly_connected);
}

TEST(DecomposeScc, ReferenceSurvivorMatrixWithZeroRows) {
  SccDecomposition d = DecomposeScc(testing::reference::kPeriodicWordHoleSPrime);
  ASSERT_EQ(d.components.size(), 5u);
  int loops = 0;
  for (size_t c = 0; c < d.components.size(); ++c) {
    EXPECT_EQ(d.components[c].size(), 1u);
    if (d.has_cycle[c]) {
      ++loops;
      int v = d.components[c][0];
      EXPECT_TRUE(v == 0 || v == 4) << v;
    }
  }
  EXPECT_EQ(loops, 2);
}

TEST(DecomposeScc, RandomMatricesPartitionVertices) {
  std::mt19937_64 rng(20260203);
  std::bernoulli_distribution bit(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    BinaryMatrix m(n, std::vector<int>(n));
    for (auto& row : m)
      for (auto& e : row) e = bit(rng);
    SccDecomposition d = DecomposeScc(m);
    std::vector<int> comp(n, -1);
    for (size_t c = 0; c < d.components.size(); ++c)
      for (int v : d.components[c]) {
        EXPECT_EQ(comp[v], -1);
        comp[v] = static_cast<int>(c);
      }
    // Reachability closure; u ~ v iff mutually reachable.
    auto reach = m;
    for (int i = 0; i < n; ++i) reach[i][i] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) EXPECT_EQ(comp[u] == comp[v], reach[u][v] && reach[v][u]);
  }
}

TEST(WeightedGraph, InhomogeneousWeights) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("inhomogeneous_three_maps.json"));
  WeightedGraph g = MakeWeightedGraph(a.ifs, a.s);
  ASSERT_EQ(g.n, 5);
  int edges = 0;
  for (const auto& e : g.edges) {
    FieldElement expected = e.u == 2 ? Q(1, 9) : Q(1, 3);
    EXPECT_EQ(e.weight, expected) << e.u << "," << e.v;
    EXPECT_EQ(a.s.entries[e.u][e.v], 1);
    ++edges;
  }
  EXPECT_EQ(edges, 13);
}

TEST(WeightedGraph, UniformRatio) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("three_maps_quarter.json"));
  for (const auto& e : MakeWeightedGraph(a.ifs, a.s).edges) EXPECT_EQ(e.weight, Q(1, 4));
  IfsAnalysis c = AnalyzeIfs(LoadFixture("cantor.json"));
  WeightedGraph g = MakeWeightedGraph(c.ifs, c.s);
  EXPECT_EQ(g.edges.size(), 4u);
  for (const auto& e : g.edges) EXPECT_EQ(e.weight, Q(1, 3));
}

TEST(Verify, CoversAndOpenSetConditionOnCorpus) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    EXPECT_TRUE(VerifyMarkovCovers(a.ifs, a.partition)) << c.file;
    EXPECT_TRUE(VerifyOpenSetCondition(a.ifs, a.partition, a.s)) << c.file;
  }
}

TEST(Verify, CoverEndpointsAreBreakpoints) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    const auto& p = a.partition;
    for (int raw : p.retained) {
      auto t = p.ChosenTransition(raw);
      ASSERT_TRUE(t.has_value());
      const auto& m = a.ifs.maps[t->map];
      EXPECT_EQ(m.ApplyInverse(p.blocks[raw].lo), p.blocks[t->first].lo) << c.file;
      EXPECT_EQ(m.ApplyInverse(p.blocks[raw].hi), p.blocks[t->last - 1].hi) << c.file;
    }
  }
}

TEST(BlockName, Letters) {
  EXPECT_EQ(BlockName(0), "A");
  EXPECT_EQ(BlockName(25), "Z");
  EXPECT_NE(BlockName(26), BlockName(0));
}

}  // namespace
}  // namespace fractal_sft
