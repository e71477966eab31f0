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

#include "fractal_sft/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

std::string MeasureFlagName(MeasureFlag flag) {
  return flag == MeasureFlag::kPositiveFinite ? "positive_finite" : "unknown";
}

IsolatedRoot PerronRoot(const BinaryMatrix& s) {
  bool any = false;
  for (const auto& row : s) {
    for (int v : row) any = any || v != 0;
  }
  if (!any) Fail(ErrorCode::kZeroMatrix, "Perron root of the zero matrix");
  return LargestRealRoot(CharPoly(s));
}

namespace {

constexpr int kMaxPowerIterations = 100000;

double IrreducibleRadius(const RealMatrix& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  std::vector<double> v(n, 1.0), mv(n);
  double estimate = 0.0;
  for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
    double lo = INFINITY, hi = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (size_t j = 0; j < n; ++j) acc += m[i][j] * v[j];
      mv[i] = acc;
      double r = acc / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    estimate = 0.5 * (lo + hi);
    if (hi - lo <= 1e-15 * std::max(hi, 1e-300)) return estimate;
    double top = 0.0;
    for (size_t i = 0; i < n; ++i) {
      v[i] = mv[i] + v[i];
      top = std::max(top, v[i]);
    }
    for (auto& x : v) x /= top;
  }
  return estimate;
}

BinaryMatrix Pattern(const RealMatrix& m) {
  BinaryMatrix p(m.size(), std::vector<int>(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m.size(); ++j) p[i][j] = m[i][j] > 0 ? 1 : 0;
  }
  return p;
}

RealMatrix Restrict(const RealMatrix& m, const std::vector<int>& keep) {
  RealMatrix out(keep.size(), std::vector<double>(keep.size(), 0.0));
  for (size_t a = 0; a < keep.size(); ++a) {
    for (size_t b = 0; b < keep.size(); ++b) out[a][b] = m[keep[a]][keep[b]];
  }
  return out;
}

struct Subgraph {
  int n = 0;
  std::vector<WeightedEdge> edges;
  std::vector<double> weights;
};

Subgraph Induced(const WeightedGraph& g, const std::vector<int>& comp) {
  Subgraph s;
  s.n = static_cast<int>(comp.size());
  for (const auto& e : g.edges) {
    auto iu = std::find(comp.begin(), comp.end(), e.u);
    auto iv = std::find(comp.begin(), comp.end(), e.v);
    if (iu == comp.end() || iv == comp.end()) continue;
    s.edges.push_back(WeightedEdge{static_cast<int>(iu - comp.begin()), static_cast<int>(iv - comp.begin()), e.weight});
    s.weights.push_back(e.weight.ToDouble());
  }
  return s;
}

double PhiOf(const Subgraph& s, double t) {
  RealMatrix m(s.n, std::vector<double>(s.n, 0.0));
  for (size_t i = 0; i < s.edges.size(); ++i) m[s.edges[i].u][s.edges[i].v] += std::pow(s.weights[i], t);
  return IrreducibleRadius(m);
}

struct ExactSolution {
  Polynomial char_poly;
  IsolatedRoot root;
  FieldElement base;
  int exponent = 1;
  double dimension = 0.0;
};

Polynomial Interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Polynomial result;
  for (size_t i = 0; i < xs.size(); ++i) {
    Polynomial term = Polynomial::Constant(ys[i]);
    Rational denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Polynomial(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + Rational(1) / denom * term;
  }
  return result;
}

std::optional<ExactSolution> SolveExactly(const Subgraph& s) {
  if (s.edges.empty()) return std::nullopt;
  FieldElement base = s.edges.front().weight;
  for (const auto& e : s.edges) {
    if (base < e.weight) base = e.weight;
  }
  FieldPtr field = base.field();
  FieldElement one(field, 1);
  if (!(base < one) || base.Sign() <= 0) return std::nullopt;
  std::vector<int> exps;
  for (const auto& e : s.edges) {
    FieldElement p = base;
    int k = 1;
    while (e.weight < p && k < 64) {
      p *= base;
      ++k;
    }
    if (!(p == e.weight)) return std::nullopt;
    exps.push_back(k);
  }
  int K = *std::max_element(exps.begin(), exps.end());
  int degree = s.n * K;
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= degree; ++i) {
    Rational y(i);
    RationalMatrix m = Identity(s.n);
    for (size_t e = 0; e < s.edges.size(); ++e) {
      Rational w = 1;
      for (int k = 0; k < exps[e]; ++k) w *= y;
      m[s.edges[e].u][s.edges[e].v] -= w;
    }
    xs.push_back(y);
    ys.push_back(Determinant(std::move(m)));
  }
  Polynomial p = Interpolate(xs, ys);
  if (p.degree() < 1) return std::nullopt;
  auto roots = PositiveRealRoots(p, PowerOfTwoInverse(20));
  if (roots.empty()) return std::nullopt;
  Rational lo = roots.front().lo, hi = roots.front().hi;
  const Polynomial& py = roots.front().poly;
  while (lo == 0 || hi - lo > lo / (1 << 20)) RefineRoot(py, lo, hi, (hi - lo) / 2);
  Polynomial q = CharPoly(Power(Inverse(Companion(p)), static_cast<unsigned>(K)));
  for (int attempt = 0; attempt < 400; ++attempt) {
    Rational xlo = 1, xhi = 1;
    for (int k = 0; k < K; ++k) {
      xlo /= hi;
      xhi /= lo;
    }
    if (q.Eval(xlo) != 0 && q.Eval(xhi) != 0 && SturmCount(q, xlo, xhi) == 1) {
      ExactSolution sol{q, RootInInterval(q, xlo, xhi), base.Pow(-K), K, 0.0};
      sol.dimension = std::log(sol.root.value) / (K * -std::log(base.ToDouble()));
      return sol;
    }
    RefineRoot(py, lo, hi, (hi - lo) / 2);
  }
  return std::nullopt;
}

}  // namespace

double SpectralRadius(const RealMatrix& m) {
  auto scc = DecomposeScc(Pattern(m));
  double best = 0.0;
  for (size_t c = 0; c < scc.components.size(); ++c) {
    if (!scc.has_cycle[c]) continue;
    best = std::max(best, IrreducibleRadius(Restrict(m, scc.components[c])));
  }
  return best;
}

double Phi(const WeightedGraph& graph, double t) {
  RealMatrix m(graph.n, std::vector<double>(graph.n, 0.0));
  for (const auto& e : graph.edges) m[e.u][e.v] += std::pow(e.weight.ToDouble(), t);
  return SpectralRadius(m);
}

SpectralResult SolvePhi(const WeightedGraph& graph, double tol) {
  BinaryMatrix pattern(graph.n, std::vector<int>(graph.n, 0));
  for (const auto& e : graph.edges) pattern[e.u][e.v] = 1;
  auto scc = DecomposeScc(pattern);
  SpectralResult result;
  result.components = scc.components;
  double best = -1.0;
  std::optional<Subgraph> dominant;
  constexpr double kUpper = 1.0 + 1e-6;
  for (size_t c = 0; c < scc.components.size(); ++c) {
    if (!scc.has_cycle[c]) continue;
    Subgraph sub = Induced(graph, scc.components[c]);
    double t;
    if (PhiOf(sub, 0.0) <= 1.0 + 1e-14) {
      t = 0.0;
    } else if (PhiOf(sub, kUpper) > 1.0) {
      t = 1.0;
      result.warnings.push_back("Phi(1) > 1 on component " + std::to_string(c) + "; dimension clamped to 1");
    } else {
      double lo = 0.0, hi = kUpper;
      for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (PhiOf(sub, mid) > 1.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      t = 0.5 * (lo + hi);
    }
    if (t > best) {
      best = t;
      result.dominant_component = static_cast<int>(c);
      dominant = std::move(sub);
    }
  }
  if (!dominant) Fail(ErrorCode::kNoSolution, "graph has no cycle, Phi(0) < 1");
  result.dimension = best;
  if (auto exact = SolveExactly(*dominant)) {
    result.char_poly = exact->char_poly;
    result.perron_factor = StripRationalRoots(exact->char_poly).Monic();
    result.perron = exact->root;
    result.log_base = exact->base;
    result.exact_form = "log(r)/log(" + exact->base.ToString() + "), r = root of " + exact->char_poly.ToString() +
                        " near " + std::to_string(exact->root.value);
    if (std::abs(exact->dimension - best) > 1e-9 && best < 1.0) {
      result.warnings.push_back("exact and bisection dimensions differ by " +
                                std::to_string(std::abs(exact->dimension - best)));
    }
    if (best < 1.0) result.dimension = exact->dimension;
  }
  result.measure = scc.strongly_connected ? MeasureFlag::kPositiveFinite : MeasureFlag::kUnknown;
  result.phi_residual = std::abs(Phi(graph, result.dimension) - 1.0);
  return result;
}

IfsAnalysis AnalyzeIfs(const Ifs& ifs, double tol) {
  IfsAnalysis a{ifs, DetectExactOverlaps(ifs), ComputeEndpointOrbits(ifs), {}, {}, {}, {}, {}};
  a.partition = BuildPartition(ifs, a.orbits.breakpoints, SwitchRegions(a.overlaps));
  a.s = Adjacency(a.partition);
  a.s_prime = PruneSwitch(a.partition, a.s);
  a.attractor = SolvePhi(MakeWeightedGraph(ifs, a.s), tol);
  a.univoque = SolvePhi(MakeWeightedGraph(ifs, a.s_prime.pruned), tol);
  return a;
}

DimensionReport MakeDimensionReport(const WeightedGraph& attractor_graph, const WeightedGraph& univoque_graph) {
  DimensionReport r{SolvePhi(attractor_graph), SolvePhi(univoque_graph)};
  if (r.univoque.dimension > r.attractor.dimension + 1e-12) {
    Fail(ErrorCode::kNoSolution, "univoque dimension exceeds attractor dimension");
  }
  return r;
}

}  // namespace fractal_sft
