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

#include "fractal_sft/codings.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <map>

#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

constexpr int kMaxNodes = 200000;
constexpr long kCountCap = 1 << 20;
constexpr size_t kListCap = 1024;

char Letter(const Ifs& ifs, int k) {
  const std::string& name = ifs.names[k];
  return name.size() == 1 ? name[0] : static_cast<char>('1' + k);
}

// Iterative Tarjan over adjacency lists; returns the component of each node.
std::vector<int> Components(const CodingGraph& g, int& count) {
  int n = static_cast<int>(g.values.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0;
  count = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, size_t>> work{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!work.empty()) {
      auto& [v, pos] = work.back();
      if (pos < g.edges[v].size()) {
        int w = g.edges[v][pos++].second;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          work.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      int done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

bool CodingGraph::closed() const {
  for (bool o : open) {
    if (o) return false;
  }
  return true;
}

CodingGraph EnumerateCodings(const Ifs& ifs, const FieldElement& x, int depth) {
  if (depth < 1) Fail(ErrorCode::kMalformedInput, "coding depth must be positive");
  CodingGraph g;
  g.max_depth = depth;
  std::map<FieldElement, int, FieldLess> ids;
  auto add = [&](const FieldElement& v, int d) {
    auto [it, fresh] = ids.emplace(v, static_cast<int>(g.values.size()));
    if (fresh) {
      g.values.push_back(v);
      g.edges.emplace_back();
      g.depth.push_back(d);
      g.open.push_back(false);
    }
    return std::make_pair(it->second, fresh);
  };
  if (!ifs.hull.Contains(x)) {
    add(x, 0);
    return g;
  }
  std::deque<int> queue{add(x, 0).first};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (g.depth[u] >= depth || static_cast<int>(g.values.size()) >= kMaxNodes) {
      g.open[u] = true;
      continue;
    }
    FieldElement v = g.values[u];
    for (int k = 0; k < ifs.size(); ++k) {
      if (!ifs.Image(k).Contains(v)) continue;
      auto [w, fresh] = add(ifs.maps[k].ApplyInverse(v), g.depth[u] + 1);
      g.edges[u].push_back({k, w});
      if (fresh) queue.push_back(w);
    }
  }
  return g;
}

std::string MultiplicityName(Multiplicity m) {
  switch (m) {
    case Multiplicity::kExactly:
      return "exactly";
    case Multiplicity::kCountablyInfinite:
      return "countably_infinite";
    case Multiplicity::kUncountable:
      return "uncountable";
    case Multiplicity::kAtLeast:
      return "at_least";
  }
  return "?";
}

std::string MultiplicityReport::ToString() const {
  switch (verdict) {
    case Multiplicity::kExactly:
      return "Exactly(" + std::to_string(count) + ")";
    case Multiplicity::kCountablyInfinite:
      return "CountablyInfinite";
    case Multiplicity::kUncountable:
      return "Uncountable";
    case Multiplicity::kAtLeast:
      return "AtLeast(" + std::to_string(count) + ", depth " + std::to_string(depth) + ")";
  }
  return "?";
}

MultiplicityReport ClassifyMultiplicity(const Ifs& ifs, const CodingGraph& g) {
  MultiplicityReport r;
  r.point = g.values.front();
  r.depth = g.max_depth;
  int n = static_cast<int>(g.values.size());
  int ncomp = 0;
  std::vector<int> comp = Components(g, ncomp);
  std::vector<int> size(ncomp, 0);
  std::vector<bool> cyclic(ncomp, false);
  for (int u = 0; u < n; ++u) ++size[comp[u]];
  for (int u = 0; u < n; ++u) {
    for (auto [k, w] : g.edges[u]) {
      if (w == u || (comp[w] == comp[u] && size[comp[u]] > 1)) cyclic[comp[u]] = true;
    }
  }
  // Nodes from which a cycle, hence an infinite path, is reachable.
  std::vector<std::vector<int>> reverse(n);
  for (int u = 0; u < n; ++u) {
    for (auto [k, w] : g.edges[u]) reverse[w].push_back(u);
  }
  std::vector<bool> live(n, false);
  std::vector<int> stack;
  for (int u = 0; u < n; ++u) {
    if (cyclic[comp[u]]) {
      live[u] = true;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int p : reverse[u]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  bool uncountable = false;
  bool infinite = false;
  for (int u = 0; u < n; ++u) {
    if (!live[u] || !cyclic[comp[u]]) continue;
    int inside = 0, exits = 0;
    for (auto [k, w] : g.edges[u]) {
      if (!live[w]) continue;
      if (comp[w] == comp[u]) {
        ++inside;
      } else {
        ++exits;
      }
    }
    if (inside >= 2) uncountable = true;
    if (exits > 0) infinite = true;
  }
  if (uncountable) {
    r.verdict = Multiplicity::kUncountable;
    return r;
  }
  if (!live[0]) {
    r.count = 0;
    r.verdict = g.closed() ? Multiplicity::kExactly : Multiplicity::kAtLeast;
    return r;
  }
  if (infinite) {
    r.count = kCountCap;
    r.verdict = g.closed() ? Multiplicity::kCountablyInfinite : Multiplicity::kAtLeast;
    return r;
  }
  // Every live cycle is simple with no exit, so paths are prefixes into a cycle.
  std::vector<long> memo(n, -1);
  std::function<long(int)> count = [&](int u) -> long {
    if (memo[u] >= 0) return memo[u];
    if (cyclic[comp[u]]) return memo[u] = 1;
    long total = 0;
    for (auto [k, w] : g.edges[u]) {
      if (live[w]) total = std::min(kCountCap, total + count(w));
    }
    return memo[u] = total;
  };
  r.count = count(0);
  r.verdict = g.closed() ? Multiplicity::kExactly : Multiplicity::kAtLeast;
  std::function<void(int, std::string&)> list = [&](int u, std::string& prefix) {
    if (r.codings.size() >= kListCap) return;
    if (cyclic[comp[u]]) {
      std::string period;
      int v = u;
      do {
        for (auto [k, w] : g.edges[v]) {
          if (live[w] && comp[w] == comp[u]) {
            period.push_back(Letter(ifs, k));
            v = w;
            break;
          }
        }
      } while (v != u);
      r.codings.push_back(PeriodicWord(prefix, period).Canonical());
      return;
    }
    for (auto [k, w] : g.edges[u]) {
      if (!live[w]) continue;
      prefix.push_back(Letter(ifs, k));
      list(w, prefix);
      prefix.pop_back();
    }
  };
  std::string prefix;
  list(0, prefix);
  return r;
}

MultiplicityReport CountCodings(const Ifs& ifs, const FieldElement& x, int depth) {
  return ClassifyMultiplicity(ifs, EnumerateCodings(ifs, x, depth));
}

Ifs FourMapFamily(const FieldElement& lambda) {
  FieldPtr f = lambda.field();
  FieldElement one(f, 1), two(f, 2), three(f, 3);
  std::vector<AffineMap> maps{AffineMap{lambda, FieldElement(f, 0)}, AffineMap{lambda, two * lambda},
                              AffineMap{lambda, three * lambda - lambda * lambda}, AffineMap{lambda, one - lambda}};
  return MakeIfs(f, std::move(maps), {"1", "2", "3", "4"});
}

UkFamilyReport AnalyzeFourMapFamily(const FieldElement& lambda, int depth) {
  FieldPtr f = lambda.field();
  FieldElement one(f, 1), half(f, Rational(1, 2)), five(f, 5);
  if (lambda.Sign() <= 0 || lambda >= half || (lambda * lambda - five * lambda + one).Sign() <= 0) {
    Fail(ErrorCode::kLambdaOutOfRange, "lambda must lie in (0, (5 - sqrt 21) / 2), got " + lambda.ToString());
  }
  UkFamilyReport rep;
  rep.lambda = lambda;
  Ifs ifs = FourMapFamily(lambda);
  auto certs = DetectExactOverlaps(ifs);
  auto orbits = ComputeEndpointOrbits(ifs);
  rep.partition = BuildPartition(ifs, orbits.breakpoints, SwitchRegions(certs));
  rep.s = Adjacency(rep.partition);
  rep.s_prime = PruneSwitch(rep.partition, rep.s);
  rep.univoque = SolvePhi(MakeWeightedGraph(ifs, rep.s_prime.pruned));
  Polynomial target = Polynomial::FromInts({2, -4, 1});
  rep.perron_is_two_plus_sqrt2 = (CharPoly(rep.s_prime.pruned.entries) % target).is_zero() &&
                                 std::abs(PerronRoot(rep.s_prime.pruned.entries).value - (2 + std::sqrt(2.0))) < 1e-12;
  rep.closed_form = std::log(2 + std::sqrt(2.0)) / -std::log(lambda.ToDouble());
  FieldElement three(f, 3);
  rep.left_switch_point = CountCodings(ifs, three * lambda - lambda * lambda, depth);
  rep.right_switch_point = CountCodings(ifs, three * lambda, depth);
  for (const auto& b : orbits.breakpoints) {
    std::vector<FieldElement> points{b};
    for (int i = 0; i < ifs.size(); ++i) {
      FieldElement y = ifs.maps[i].Apply(b);
      points.push_back(y);
      for (int j = 0; j < ifs.size(); ++j) points.push_back(ifs.maps[j].Apply(y));
    }
    for (const auto& p : points) {
      MultiplicityReport m = CountCodings(ifs, p, depth);
      ++rep.sampled;
      if (m.verdict == Multiplicity::kExactly && m.count > 1 && m.count % 2 == 1) ++rep.odd_above_one;
      if (m.verdict == Multiplicity::kCountablyInfinite) ++rep.countably_infinite;
    }
  }
  rep.warnings = rep.partition.warnings;
  return rep;
}

}  // namespace fractal_sft
