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

#include "fractal_sft/markov.hpp"

#include <algorithm>
#include <functional>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

std::string BlockName(int index) {
  std::string name;
  int i = index;
  do {
    name.insert(name.begin(), static_cast<char>('A' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return name;
}

std::optional<Transition> MarkovPartition::ChosenTransition(int raw) const {
  if (!chosen_map[raw]) return std::nullopt;
  for (const auto& t : transitions[raw]) {
    if (t.map == *chosen_map[raw]) return t;
  }
  return std::nullopt;
}

int MarkovPartition::RetainedPosition(int raw) const {
  auto it = std::lower_bound(retained.begin(), retained.end(), raw);
  if (it == retained.end() || *it != raw) return -1;
  return static_cast<int>(it - retained.begin());
}

namespace {

std::optional<int> BreakpointIndex(const std::vector<FieldElement>& points, const FieldElement& x) {
  auto it = std::lower_bound(points.begin(), points.end(), x, FieldLess{});
  if (it == points.end() || !(*it == x)) return std::nullopt;
  return static_cast<int>(it - points.begin());
}

// Keeps a block while its chosen transition reaches another kept block.
std::vector<int> PruneBlocks(const MarkovPartition& p, std::vector<bool> alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t r = 0; r < p.blocks.size(); ++r) {
      if (!alive[r]) continue;
      auto t = p.ChosenTransition(static_cast<int>(r));
      bool reaches = false;
      if (t) {
        for (int c = t->first; c < t->last && !reaches; ++c) reaches = alive[c];
      }
      if (!reaches) {
        alive[r] = false;
        changed = true;
      }
    }
  }
  std::vector<int> kept;
  for (size_t r = 0; r < alive.size(); ++r) {
    if (alive[r]) kept.push_back(static_cast<int>(r));
  }
  return kept;
}

void NameRetained(MarkovPartition& p) {
  p.names.clear();
  for (size_t i = 0; i < p.retained.size(); ++i) p.names.push_back(BlockName(static_cast<int>(i)));
}

}  // namespace

std::vector<Interval> SwitchRegions(const std::vector<OverlapCertificate>& certs) {
  std::vector<Interval> out;
  for (const auto& c : certs) out.push_back(c.intersection);
  return out;
}

MarkovPartition BuildPartition(const Ifs& ifs, const std::vector<FieldElement>& breakpoints,
                               const std::vector<Interval>& switch_regions, MapChoice choice) {
  if (breakpoints.size() < 2) Fail(ErrorCode::kMalformedInput, "partition needs at least two breakpoints");
  MarkovPartition p;
  p.breakpoints = breakpoints;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) p.blocks.push_back(Interval{breakpoints[i], breakpoints[i + 1]});
  p.chosen_map.resize(p.blocks.size());
  p.transitions.resize(p.blocks.size());
  for (size_t r = 0; r < p.blocks.size(); ++r) {
    const Interval& block = p.blocks[r];
    std::vector<int> candidates;
    for (int k = 0; k < ifs.size(); ++k) {
      if (ifs.Image(k).Contains(block)) candidates.push_back(k);
    }
    if (candidates.empty()) continue;
    int chosen = choice == MapChoice::kLazy ? candidates.front() : candidates.back();
    p.chosen_map[r] = chosen;
    // Switch blocks are deleted later, so their images need not be Markov.
    bool in_switch = false;
    for (const auto& region : switch_regions) in_switch = in_switch || region.Contains(block);
    for (int k : candidates) {
      Interval img{ifs.maps[k].ApplyInverse(block.lo), ifs.maps[k].ApplyInverse(block.hi)};
      auto a = BreakpointIndex(breakpoints, img.lo);
      auto b = BreakpointIndex(breakpoints, img.hi);
      if (!a || !b) {
        if (k == chosen && !in_switch) {
          Fail(ErrorCode::kNonMarkov, "image of block [" + block.lo.ToString() + ", " + block.hi.ToString() +
                                          "] under map " + ifs.names[k] + " is not a union of blocks");
        }
        continue;
      }
      p.transitions[r].push_back(Transition{k, *a, *b});
    }
  }
  std::vector<bool> alive(p.blocks.size(), true);
  p.retained = PruneBlocks(p, alive);
  NameRetained(p);
  for (const auto& region : switch_regions) {
    if (!BreakpointIndex(breakpoints, region.lo) || !BreakpointIndex(breakpoints, region.hi)) {
      p.warnings.push_back("switch region [" + region.lo.ToString() + ", " + region.hi.ToString() +
                           "] is not a union of partition blocks");
    }
  }
  for (size_t pos = 0; pos < p.retained.size(); ++pos) {
    const Interval& block = p.blocks[p.retained[pos]];
    for (const auto& region : switch_regions) {
      if (region.Contains(block)) {
        p.switch_blocks.push_back(static_cast<int>(pos));
        break;
      }
    }
  }
  return p;
}

MarkovPartition RestrictPartition(const MarkovPartition& p, const std::vector<bool>& keep_raw) {
  MarkovPartition q = p;
  std::vector<bool> alive(p.blocks.size(), false);
  for (int r : p.retained) alive[r] = keep_raw[r];
  std::vector<int> switch_raw;
  for (int pos : p.switch_blocks) switch_raw.push_back(p.retained[pos]);
  q.retained = PruneBlocks(q, alive);
  NameRetained(q);
  q.switch_blocks.clear();
  for (int raw : switch_raw) {
    int pos = q.RetainedPosition(raw);
    if (pos >= 0) q.switch_blocks.push_back(pos);
  }
  return q;
}

AdjacencyMatrix Adjacency(const MarkovPartition& p) {
  AdjacencyMatrix s;
  size_t n = p.retained.size();
  s.entries.assign(n, std::vector<int>(n, 0));
  s.blocks = p.retained;
  s.names = p.names;
  for (size_t u = 0; u < n; ++u) {
    auto t = p.ChosenTransition(p.retained[u]);
    if (!t) continue;
    for (int c = t->first; c < t->last; ++c) {
      int v = p.RetainedPosition(c);
      if (v < 0) continue;
      s.entries[u][v] = 1;
      s.labels[{static_cast<int>(u), v}] = t->map;
    }
  }
  return s;
}

AdjacencyMatrix Submatrix(const AdjacencyMatrix& s, const std::vector<int>& keep) {
  AdjacencyMatrix out;
  out.entries = PrincipalSubmatrix(s.entries, keep);
  for (size_t a = 0; a < keep.size(); ++a) {
    out.blocks.push_back(s.blocks[keep[a]]);
    out.names.push_back(s.names[keep[a]]);
    for (size_t b = 0; b < keep.size(); ++b) {
      auto it = s.labels.find({keep[a], keep[b]});
      if (it != s.labels.end()) out.labels[{static_cast<int>(a), static_cast<int>(b)}] = it->second;
    }
  }
  return out;
}

AdjacencyMatrix PruneEmptyRows(const AdjacencyMatrix& s) {
  std::vector<int> keep(s.size());
  for (int i = 0; i < s.size(); ++i) keep[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> next;
    for (int u : keep) {
      bool any = false;
      for (int v : keep) any = any || s.entries[u][v] != 0;
      if (any) {
        next.push_back(u);
      } else {
        changed = true;
      }
    }
    keep = std::move(next);
  }
  return Submatrix(s, keep);
}

SwitchPruned PruneSwitch(const MarkovPartition& p, const AdjacencyMatrix& s) {
  std::vector<int> keep;
  for (int u = 0; u < s.size(); ++u) {
    if (std::find(p.switch_blocks.begin(), p.switch_blocks.end(), u) == p.switch_blocks.end()) keep.push_back(u);
  }
  SwitchPruned out{Submatrix(s, keep), {}};
  out.pruned = PruneEmptyRows(out.deleted);
  if (out.pruned.size() == 0) Fail(ErrorCode::kAllBlocksPruned, "no block survives deletion of the switch region");
  return out;
}

SccDecomposition DecomposeScc(const BinaryMatrix& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0;
  SccDecomposition out;
  std::function<void(int)> visit = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < n; ++w) {
      if (!m[v][w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<int> c;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        c.push_back(w);
      } while (w != v);
      std::sort(c.begin(), c.end());
      out.components.push_back(std::move(c));
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  std::sort(out.components.begin(), out.components.end());
  for (const auto& c : out.components) out.has_cycle.push_back(c.size() > 1 || m[c[0]][c[0]] != 0);
  out.strongly_connected = n > 0 && out.components.size() == 1;
  return out;
}

WeightedGraph MakeWeightedGraph(const Ifs& ifs, const AdjacencyMatrix& s) {
  WeightedGraph g;
  g.n = s.size();
  g.names = s.names;
  for (const auto& [uv, k] : s.labels) g.edges.push_back(WeightedEdge{uv.first, uv.second, ifs.maps[k].ratio.Abs()});
  return g;
}

WeightedGraph UniformWeightedGraph(const AdjacencyMatrix& s, const FieldElement& weight) {
  WeightedGraph g;
  g.n = s.size();
  g.names = s.names;
  for (int u = 0; u < s.size(); ++u) {
    for (int v = 0; v < s.size(); ++v) {
      if (s.entries[u][v]) g.edges.push_back(WeightedEdge{u, v, weight});
    }
  }
  return g;
}

bool VerifyMarkovCovers(const Ifs& ifs, const MarkovPartition& p) {
  for (size_t r = 0; r < p.blocks.size(); ++r) {
    for (const auto& t : p.transitions[r]) {
      if (t.first >= t.last) return false;
      const auto& f = ifs.maps[t.map];
      if (!(f.ApplyInverse(p.blocks[r].lo) == p.blocks[t.first].lo)) return false;
      if (!(f.ApplyInverse(p.blocks[r].hi) == p.blocks[t.last - 1].hi)) return false;
      for (int c = t.first; c + 1 < t.last; ++c) {
        if (!(p.blocks[c].hi == p.blocks[c + 1].lo)) return false;
      }
    }
  }
  return true;
}

bool VerifyOpenSetCondition(const Ifs& ifs, const MarkovPartition& p, const AdjacencyMatrix& s) {
  for (int u = 0; u < s.size(); ++u) {
    const Interval& home = p.blocks[s.blocks[u]];
    std::vector<Interval> pieces;
    for (int v = 0; v < s.size(); ++v) {
      auto it = s.labels.find({u, v});
      if (it == s.labels.end()) continue;
      Interval img = ImageOf(ifs.maps[it->second], p.blocks[s.blocks[v]]);
      if (!home.Contains(img)) return false;
      pieces.push_back(img);
    }
    std::sort(pieces.begin(), pieces.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (size_t i = 1; i < pieces.size(); ++i) {
      if (pieces[i].lo < pieces[i - 1].hi) return false;
    }
  }
  return true;
}

}  // namespace fractal_sft
