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

#include "fractal_sft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

using Int128 = __int128;

double LogOf(const BigInt& v) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

void Fit(GrowthEstimate& g, double scale) {
  std::vector<double> x, y;
  for (const auto& [n, c] : g.counts) {
    if (c <= 0) continue;
    x.push_back(n);
    y.push_back(LogOf(c));
  }
  g.slope = TailSlope(x, y);
  g.estimated_dimension = scale > 0 ? g.slope / scale : g.slope;
}

void Guard(double work, const std::string& what) {
  if (work > kOracleGuard) Fail(ErrorCode::kExplosionGuard, what + " exceeds the enumeration guard");
}

// Reruns count(n) with n raised until the predicted final count reaches the
// budget or n hits the cap. Polynomially growing counts get long words cheaply.
template <class Count>
GrowthEstimate Adaptive(Count count, int n, int n_cap, double budget) {
  GrowthEstimate g = count(n);
  while (n < n_cap) {
    double last = g.counts.back().second.get_d();
    double rate = std::max(g.slope, 0.02);
    int next = std::min(n_cap, n + static_cast<int>(std::log(budget / std::max(last, 1.0)) / rate));
    if (next <= n) break;
    n = next;
    g = count(n);
  }
  return g;
}

}  // namespace

double TailSlope(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  if (n < 2) return 0.0;
  size_t start = n / 2;
  if (n - start < 2) start = n - 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = static_cast<double>(n - start);
  for (size_t i = start; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double den = m * sxx - sx * sx;
  return den == 0 ? 0.0 : (m * sxy - sx * sy) / den;
}

GrowthEstimate CountSftWords(const BinaryMatrix& s, int n_max, double log_base) {
  if (n_max < 4) Fail(ErrorCode::kMalformedInput, "word length must be at least 4");
  bool any = false;
  for (const auto& row : s) any = any || std::any_of(row.begin(), row.end(), [](int v) { return v != 0; });
  if (!any) Fail(ErrorCode::kZeroMatrix, "word count of the zero matrix");
  size_t n = s.size();
  std::vector<BigInt> v(n, 1);
  GrowthEstimate g;
  for (int len = 1; len <= n_max; ++len) {
    BigInt total = 0;
    for (const auto& x : v) total += x;
    g.counts.emplace_back(len, total);
    std::vector<BigInt> next(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (s[i][j]) next[i] += v[j];
      }
    }
    v.swap(next);
  }
  Fit(g, log_base);
  return g;
}

GrowthEstimate SurvivorCylinderCount(const Hole& hole, int n_max) {
  if (n_max < 8 || n_max > 60) Fail(ErrorCode::kMalformedInput, "cylinder length must lie in [8, 60]");
  auto small = [](const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= 40; };
  if (!small(hole.a.get_num()) || !small(hole.a.get_den()) || !small(hole.b.get_num()) ||
      !small(hole.b.get_den())) {
    Fail(ErrorCode::kNotSupported, "hole endpoints have denominators beyond 2^40");
  }
  Int128 an = hole.a.get_num().get_si(), ad = hole.a.get_den().get_si();
  Int128 bn = hole.b.get_num().get_si(), bd = hole.b.get_den().get_si();
  GrowthEstimate g;
  std::vector<double> per_level(n_max + 1, 0.0);
  double visited = 0;
  // vals[j] is the value of the suffix starting at j, of length depth - j.
  std::vector<std::vector<Int128>> stack_vals(n_max + 1);
  std::function<void(int)> extend = [&](int depth) {
    const auto& cur = stack_vals[depth];
    for (int d = 0; d <= 1; ++d) {
      auto& next = stack_vals[depth + 1];
      next.resize(depth + 1);
      bool dead = false;
      for (int j = 0; j <= depth && !dead; ++j) {
        Int128 v = (j < depth ? 2 * cur[j] : 0) + d;
        next[j] = v;
        Int128 scale = Int128(1) << (depth + 1 - j);
        dead = an * scale <= v * ad && (v + 1) * bd <= bn * scale;
      }
      if (dead) continue;
      per_level[depth + 1] += 1;
      Guard(++visited, "survivor enumeration");
      if (depth + 1 < n_max) extend(depth + 1);
    }
  };
  extend(0);
  for (int n = 1; n <= n_max; ++n) g.counts.emplace_back(n, BigInt(per_level[n]));
  Fit(g, std::log(2.0));
  g.note = "cylinders whose shifts never fall inside the hole; dimension = slope / log 2";
  return g;
}

GrowthEstimate UniqueWordCount(const BetaSystem& sys, int n_max, int bound) {
  if (n_max < 4) Fail(ErrorCode::kMalformedInput, "word length must be at least 4");
  ExpansionOfOne one = QuasiGreedyOne(sys, bound);
  if (!one.resolved) Fail(ErrorCode::kQuasiGreedyUnresolved, "quasi-greedy expansion of 1 is unresolved");
  std::string eta = one.quasi_greedy.Prefix(n_max + 1);
  std::vector<double> per_level(n_max + 1, 0.0);
  double visited = 0;
  // Each pending constraint: start position k (1-based) and whether it is reflected.
  std::function<void(int, std::vector<std::pair<int, int>>&)> extend = [&](int m,
                                                                            std::vector<std::pair<int, int>>& tied) {
    for (int d = 0; d <= 1; ++d) {
      std::vector<std::pair<int, int>> next;
      bool dead = false;
      for (auto [k, flip] : tied) {
        int dd = flip ? 1 - d : d;
        int e = eta[m + 1 - k - 1] - '0';
        if (dd > e) {
          dead = true;
          break;
        }
        if (dd == e) next.emplace_back(k, flip);
      }
      if (dead) continue;
      next.emplace_back(m + 1, d);
      per_level[m + 1] += 1;
      Guard(++visited, "unique word enumeration");
      if (m + 1 < n_max) extend(m + 1, next);
    }
  };
  std::vector<std::pair<int, int>> none;
  extend(0, none);
  GrowthEstimate g;
  for (int n = 1; n <= n_max; ++n) g.counts.emplace_back(n, BigInt(per_level[n]));
  Fit(g, std::log(sys.beta.ToDouble()));
  g.note = "truncated lexicographic test against eta; over-counts, slope converges from above";
  return g;
}

GrowthEstimate SurvivorCylinderCountAdaptive(const Hole& hole, double budget) {
  return Adaptive([&](int n) { return SurvivorCylinderCount(hole, n); }, 16, 60, budget);
}

GrowthEstimate UniqueWordCountAdaptive(const BetaSystem& sys, double budget, int bound) {
  return Adaptive([&](int n) { return UniqueWordCount(sys, n, bound); }, 16, 80, budget);
}

GrowthEstimate BoxCountIfs(const Ifs& ifs, int level) {
  if (level < 4) Fail(ErrorCode::kMalformedInput, "level must be at least 4");
  Guard(std::pow(static_cast<double>(ifs.size()), level), "cylinder count");
  std::vector<std::pair<double, double>> maps;
  double r_max = 0;
  for (const auto& f : ifs.maps) {
    maps.emplace_back(f.ratio.ToDouble(), f.offset.ToDouble());
    r_max = std::max(r_max, f.ratio.ToDouble());
  }
  std::vector<std::pair<double, double>> cyl{{ifs.hull.lo.ToDouble(), ifs.hull.hi.ToDouble()}};
  GrowthEstimate g;
  for (int n = 1; n <= level; ++n) {
    std::vector<std::pair<double, double>> next;
    next.reserve(cyl.size() * maps.size());
    for (const auto& [lo, hi] : cyl) {
      for (const auto& [r, o] : maps) next.emplace_back(r * lo + o, r * hi + o);
    }
    cyl.swap(next);
    std::sort(cyl.begin(), cyl.end());
    double delta = std::pow(r_max, n);
    long long boxes = 0;
    long long last = std::numeric_limits<long long>::min();
    for (const auto& [lo, hi] : cyl) {
      long long first = static_cast<long long>(std::floor(lo / delta));
      long long end = static_cast<long long>(std::floor(hi / delta));
      first = std::max(first, last + 1);
      if (end >= first) boxes += end - first + 1;
      last = std::max(last, end);
    }
    g.counts.emplace_back(n, BigInt(static_cast<double>(boxes)));
  }
  Fit(g, -std::log(r_max));
  g.note = "double precision cylinders; boxes of width r_max^n";
  return g;
}

GrowthEstimate WeightedCoverCount(const WeightedGraph& graph, int levels) {
  if (levels < 4) Fail(ErrorCode::kMalformedInput, "levels must be at least 4");
  std::vector<std::vector<std::pair<int, double>>> out(graph.n);
  double rho = 0;
  for (const auto& e : graph.edges) {
    out[e.u].emplace_back(e.v, e.weight.ToDouble());
    rho = std::max(rho, e.weight.ToDouble());
  }
  if (rho <= 0 || rho >= 1) Fail(ErrorCode::kMalformedInput, "weights must lie in (0, 1)");
  GrowthEstimate g;
  double visited = 0;
  for (int k = 1; k <= levels; ++k) {
    double delta = std::pow(rho, k) * (1 + 1e-12);
    double count = 0;
    std::function<void(int, double)> walk = [&](int u, double w) {
      Guard(++visited, "weighted path enumeration");
      if (w <= delta) {
        count += 1;
        return;
      }
      for (const auto& [v, r] : out[u]) walk(v, w * r);
    };
    for (int u = 0; u < graph.n; ++u) walk(u, 1.0);
    g.counts.emplace_back(k, BigInt(count));
    if (count > kCoverStop) break;
  }
  Fit(g, -std::log(rho));
  g.note = "stopping-time path cover at scale rho^k";
  return g;
}

}  // namespace fractal_sft
