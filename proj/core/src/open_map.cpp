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

#include "fractal_sft/open_map.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "fractal_sft/error.hpp"
#include "fractal_sft/number_field.hpp"

namespace fractal_sft {
namespace {

constexpr int kOrbitCap = 1000000;

Rational Double(const Rational& x) {
  Rational y = 2 * x;
  if (y >= 1) y -= 1;
  return y;
}

std::vector<Rational> DoublingOrbit(const Rational& x) {
  std::vector<Rational> orbit;
  std::set<Rational> seen;
  Rational cur = x;
  while (seen.insert(cur).second) {
    orbit.push_back(cur);
    if (orbit.size() > static_cast<size_t>(kOrbitCap)) Fail(ErrorCode::kExplosionGuard, "doubling orbit too long");
    cur = Double(cur);
  }
  return orbit;
}

int PointIndex(const std::vector<Rational>& pts, const Rational& x) {
  auto it = std::lower_bound(pts.begin(), pts.end(), x);
  if (it == pts.end() || *it != x) return -1;
  return static_cast<int>(it - pts.begin());
}

std::vector<double> PowerVector(const BinaryMatrix& m, bool transpose) {
  size_t n = m.size();
  std::vector<double> v(n, 1.0), next(n);
  for (int iter = 0; iter < 100000; ++iter) {
    double norm = 0;
    for (size_t i = 0; i < n; ++i) {
      double acc = v[i];
      for (size_t j = 0; j < n; ++j) acc += (transpose ? m[j][i] : m[i][j]) * v[j];
      next[i] = acc;
      norm += acc;
    }
    double diff = 0;
    for (size_t i = 0; i < n; ++i) {
      next[i] /= norm;
      diff = std::max(diff, std::abs(next[i] - v[i]));
    }
    v.swap(next);
    if (diff < 1e-16) break;
  }
  return v;
}

}  // namespace

Rational ParseBinary(std::string_view word) {
  PeriodicWord w = PeriodicWord::Parse(word);
  for (char c : w.preperiod() + w.period()) {
    if (c != '0' && c != '1') Fail(ErrorCode::kMalformedWord, "binary word has digit " + std::string(1, c));
  }
  if (w.period().find('0') == std::string::npos) {
    Fail(ErrorCode::kAllOnesPeriod, "binary word '" + std::string(word) + "' ends in 1^infinity");
  }
  auto value = [](const std::string& digits) {
    BigInt v = 0;
    for (char c : digits) v = 2 * v + (c - '0');
    return v;
  };
  BigInt pre_scale = BigInt(1) << w.preperiod().size();
  BigInt per_scale = (BigInt(1) << w.period().size()) - 1;
  Rational out(value(w.preperiod()), pre_scale);
  out.canonicalize();
  Rational tail(value(w.period()), per_scale * pre_scale);
  tail.canonicalize();
  return out + tail;
}

PeriodicWord BinaryExpansion(const Rational& x) {
  if (x < 0 || x >= 1) Fail(ErrorCode::kOutOfDomain, "binary expansion needs x in [0, 1)");
  std::map<Rational, size_t> seen;
  std::string digits;
  Rational cur = x;
  while (seen.emplace(cur, digits.size()).second) {
    digits.push_back(cur >= Rational(1, 2) ? '1' : '0');
    cur = Double(cur);
  }
  size_t start = seen[cur];
  return PeriodicWord(digits.substr(0, start), digits.substr(start)).Canonical();
}

Rational ParseHoleEndpoint(std::string_view text) {
  if (text.find('(') != std::string_view::npos) return ParseBinary(text);
  return ParseRational(text);
}

Hole MakeHole(const Rational& a, const Rational& b) {
  if (!(0 <= a && a < b && b <= 1)) {
    Fail(ErrorCode::kMalformedInput, "hole needs 0 <= a < b <= 1, got [" + ToString(a) + ", " + ToString(b) + ")");
  }
  return Hole{a, b};
}

HoleAnalysis HolePartition(const Hole& hole) {
  HoleAnalysis h;
  h.hole = MakeHole(hole.a, hole.b);
  if (hole.a <= 0 || hole.b >= Rational(1, 2)) {
    h.warnings.push_back("hole [" + ToString(hole.a) + ", " + ToString(hole.b) + ") is not inside (0, 1/2)");
  }
  if (hole.a < 1) h.orbit_a = DoublingOrbit(hole.a);
  if (hole.b < 1) h.orbit_b = DoublingOrbit(hole.b);
  std::set<Rational> pts{Rational(0), Rational(1, 2), Rational(1), hole.a, hole.b};
  pts.insert(h.orbit_a.begin(), h.orbit_a.end());
  pts.insert(h.orbit_b.begin(), h.orbit_b.end());
  h.partition_points.assign(pts.begin(), pts.end());

  int n = static_cast<int>(h.partition_points.size()) - 1;
  h.s.entries.assign(n, std::vector<int>(n, 0));
  for (int r = 0; r < n; ++r) {
    h.s.blocks.push_back(r);
    h.s.names.push_back(BlockName(r));
    Rational lo = h.BlockLo(r), hi = h.BlockHi(r);
    int digit = lo < Rational(1, 2) ? 0 : 1;
    int first = PointIndex(h.partition_points, 2 * lo - digit);
    int last = PointIndex(h.partition_points, 2 * hi - digit);
    if (first < 0 || last < 0) Fail(ErrorCode::kNonMarkov, "doubling image of a block is not a union of blocks");
    for (int c = first; c < last; ++c) {
      h.s.entries[r][c] = 1;
      h.s.labels[{r, c}] = digit;
    }
    if (hole.a <= lo && hi <= hole.b) h.hole_blocks.push_back(r);
  }
  std::vector<int> keep;
  for (int r = 0; r < n; ++r) {
    if (std::find(h.hole_blocks.begin(), h.hole_blocks.end(), r) == h.hole_blocks.end()) keep.push_back(r);
  }
  h.s_prime = Submatrix(h.s, keep);
  h.s_pruned = PruneEmptyRows(h.s_prime);
  h.irreducible = h.s_pruned.size() > 0 && DecomposeScc(h.s_pruned.entries).strongly_connected;
  return h;
}

SpectralResult SurvivorDimension(const HoleAnalysis& analysis) {
  if (analysis.s_pruned.size() == 0) {
    Fail(ErrorCode::kEmptySurvivor, "every block is pruned; the survivor set is countable");
  }
  FieldPtr q = NumberField::Rationals();
  return SolvePhi(UniformWeightedGraph(analysis.s_pruned, FieldElement(q, Rational(1, 2))));
}

AdjacencyMatrix DominantComponent(const AdjacencyMatrix& s) {
  SccDecomposition scc = DecomposeScc(s.entries);
  std::vector<int> best;
  double best_rho = -1;
  for (size_t c = 0; c < scc.components.size(); ++c) {
    if (!scc.has_cycle[c]) continue;
    std::vector<int> comp = scc.components[c];
    std::sort(comp.begin(), comp.end());
    double rho = PerronRoot(PrincipalSubmatrix(s.entries, comp)).value;
    if (rho > best_rho + 1e-12) {
      best_rho = rho;
      best = comp;
    }
  }
  if (best.empty()) Fail(ErrorCode::kZeroMatrix, "matrix has no cycle");
  return Submatrix(s, best);
}

ParryChain ParryMeasure(const AdjacencyMatrix& s) {
  if (s.size() == 0 || !DecomposeScc(s.entries).strongly_connected) {
    Fail(ErrorCode::kNotIrreducible, "Parry measure needs an irreducible matrix");
  }
  size_t n = s.entries.size();
  ParryChain out;
  out.states = s.names;
  out.perron = PerronRoot(s.entries).value;
  out.entropy = std::log(out.perron);
  std::vector<double> v = PowerVector(s.entries, false);
  std::vector<double> u = PowerVector(s.entries, true);
  out.transition.assign(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (s.entries[i][j]) out.transition[i][j] = v[j] / (out.perron * v[i]);
    }
  }
  double total = 0;
  for (size_t i = 0; i < n; ++i) total += u[i] * v[i];
  for (size_t i = 0; i < n; ++i) out.stationary.push_back(u[i] * v[i] / total);
  return out;
}

std::string ConjugacyDigits(const HoleAnalysis& analysis, const std::vector<int>& block_path) {
  int n = analysis.s.size();
  std::string digits;
  for (size_t k = 0; k < block_path.size(); ++k) {
    int b = block_path[k];
    if (b < 0 || b >= n) Fail(ErrorCode::kInadmissiblePath, "block index out of range");
    if (k > 0 && !analysis.s.entries[block_path[k - 1]][b]) {
      Fail(ErrorCode::kInadmissiblePath, "no edge " + analysis.s.names[block_path[k - 1]] + " -> " +
                                              analysis.s.names[b]);
    }
    digits.push_back(analysis.BlockLo(b) < Rational(1, 2) ? '0' : '1');
  }
  return digits;
}

}  // namespace fractal_sft
