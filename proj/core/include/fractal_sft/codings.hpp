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

#ifndef FRACTAL_SFT_CODINGS_HPP_
#define FRACTAL_SFT_CODINGS_HPP_

#include <string>
#include <vector>

#include "fractal_sft/dimension.hpp"
#include "fractal_sft/ifs.hpp"
#include "fractal_sft/markov.hpp"
#include "fractal_sft/words.hpp"

namespace fractal_sft {

inline constexpr int kDefaultCodingDepth = 40;

// Graph of orbit values reachable from x: an edge v -> T_i(v) exists when
// T_i(v) stays in the hull. Infinite paths from the root are the codings.
struct CodingGraph {
  std::vector<FieldElement> values;  // values[0] is the root
  // (map index, target node)
  std::vector<std::vector<std::pair<int, int>>> edges;
  std::vector<int> depth;
  // Nodes at the depth limit whose successors were not explored.
  std::vector<bool> open;
  int max_depth = 0;

  bool closed() const;
};

CodingGraph EnumerateCodings(const Ifs& ifs, const FieldElement& x, int depth = kDefaultCodingDepth);

enum class Multiplicity { kExactly, kCountablyInfinite, kUncountable, kAtLeast };

struct MultiplicityReport {
  FieldElement point;
  Multiplicity verdict = Multiplicity::kAtLeast;
  // Exactly: the count; AtLeast: certified codings found, capped.
  long count = 0;
  int depth = 0;
  // Listed when the verdict is Exactly; letters are map names.
  std::vector<PeriodicWord> codings;

  std::string ToString() const;
};

MultiplicityReport ClassifyMultiplicity(const Ifs& ifs, const CodingGraph& graph);
MultiplicityReport CountCodings(const Ifs& ifs, const FieldElement& x, int depth = kDefaultCodingDepth);

// f_1 = l x, f_2 = l x + 2l, f_3 = l x + 3l - l^2, f_4 = l x + 1 - l.
Ifs FourMapFamily(const FieldElement& lambda);

struct UkFamilyReport {
  FieldElement lambda;
  MarkovPartition partition;
  AdjacencyMatrix s;
  SwitchPruned s_prime;
  SpectralResult univoque;
  // perron(S') = 2 + sqrt 2, i.e. x^2 - 4x + 2 divides the characteristic polynomial.
  bool perron_is_two_plus_sqrt2 = false;
  double closed_form = 0.0;  // log(2 + sqrt 2) / -log(lambda)
  MultiplicityReport left_switch_point;   // 3l - l^2
  MultiplicityReport right_switch_point;  // 3l
  // Verdicts over the sampled points.
  int sampled = 0;
  int odd_above_one = 0;
  int countably_infinite = 0;
  std::vector<std::string> warnings;
};

// Requires 0 < lambda and lambda^2 - 5 lambda + 1 > 0 with lambda < 1/2.
UkFamilyReport AnalyzeFourMapFamily(const FieldElement& lambda, int depth = kDefaultCodingDepth);

std::string MultiplicityName(Multiplicity m);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_CODINGS_HPP_
