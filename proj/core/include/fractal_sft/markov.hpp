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

#ifndef FRACTAL_SFT_MARKOV_HPP_
#define FRACTAL_SFT_MARKOV_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fractal_sft/ifs.hpp"
#include "fractal_sft/matrix.hpp"

namespace fractal_sft {

// Which branch a block uses when several expanding maps are defined on it.
enum class MapChoice { kLazy, kGreedy };

struct Transition {
  int map = 0;
  // Raw block range [first, last) covering T_map(block) exactly.
  int first = 0;
  int last = 0;
};

struct MarkovPartition {
  std::vector<FieldElement> breakpoints;
  // Raw blocks [b_i, b_{i+1}] before pruning.
  std::vector<Interval> blocks;
  std::vector<std::optional<int>> chosen_map;
  // Every map whose first-level image contains the block and whose image of
  // the block is a union of blocks.
  std::vector<std::vector<Transition>> transitions;
  // Raw indices of blocks kept after iterated pruning, ascending.
  std::vector<int> retained;
  std::vector<std::string> names;  // per retained block
  // Positions into `retained`.
  std::vector<int> switch_blocks;
  std::vector<std::string> warnings;

  std::optional<Transition> ChosenTransition(int raw) const;
  int RetainedPosition(int raw) const;
};

MarkovPartition BuildPartition(const Ifs& ifs, const std::vector<FieldElement>& breakpoints,
                               const std::vector<Interval>& switch_regions, MapChoice choice = MapChoice::kLazy);

// Intersections f_i(hull) cap f_j(hull) carried by the certificates.
std::vector<Interval> SwitchRegions(const std::vector<OverlapCertificate>& certs);

// Restricts the partition to retained blocks satisfying keep, then prunes
// again. Used to look at the part of a partition lying in a sub-interval.
MarkovPartition RestrictPartition(const MarkovPartition& p, const std::vector<bool>& keep_raw);

struct AdjacencyMatrix {
  BinaryMatrix entries;
  // (row, col) -> map index of the edge's contraction.
  std::map<std::pair<int, int>, int> labels;
  // Raw block index of each row.
  std::vector<int> blocks;
  std::vector<std::string> names;

  int size() const { return static_cast<int>(entries.size()); }
};

AdjacencyMatrix Adjacency(const MarkovPartition& p);

AdjacencyMatrix Submatrix(const AdjacencyMatrix& s, const std::vector<int>& keep);

struct SwitchPruned {
  // Switch rows and columns deleted; the matrix in the usual form.
  AdjacencyMatrix deleted;
  // The same after iterated removal of vertices without outgoing edges.
  AdjacencyMatrix pruned;
};

SwitchPruned PruneSwitch(const MarkovPartition& p, const AdjacencyMatrix& s);

// Repeatedly removes vertices with empty rows.
AdjacencyMatrix PruneEmptyRows(const AdjacencyMatrix& s);

struct SccDecomposition {
  std::vector<std::vector<int>> components;
  // True when the component carries an infinite path (size > 1 or self-loop).
  std::vector<bool> has_cycle;
  bool strongly_connected = false;
};

SccDecomposition DecomposeScc(const BinaryMatrix& m);

struct WeightedEdge {
  int u = 0;
  int v = 0;
  FieldElement weight;
};

struct WeightedGraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<std::string> names;
};

WeightedGraph MakeWeightedGraph(const Ifs& ifs, const AdjacencyMatrix& s);
// Every edge of s weighted by the same value.
WeightedGraph UniformWeightedGraph(const AdjacencyMatrix& s, const FieldElement& weight);

// Every recorded transition maps block endpoints onto breakpoints and the
// cover abuts.
bool VerifyMarkovCovers(const Ifs& ifs, const MarkovPartition& p);

// For each vertex u the images f(A_v) of its out-edges have disjoint
// interiors inside A_u.
bool VerifyOpenSetCondition(const Ifs& ifs, const MarkovPartition& p, const AdjacencyMatrix& s);

std::string BlockName(int index);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_MARKOV_HPP_
