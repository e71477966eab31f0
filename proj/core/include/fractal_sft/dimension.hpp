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

#ifndef FRACTAL_SFT_DIMENSION_HPP_
#define FRACTAL_SFT_DIMENSION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fractal_sft/markov.hpp"
#include "fractal_sft/matrix.hpp"
#include "fractal_sft/polynomial.hpp"

namespace fractal_sft {

enum class MeasureFlag { kPositiveFinite, kUnknown };

struct SpectralResult {
  // Polynomial whose largest relevant root r gives dimension = log r / log base.
  std::optional<Polynomial> char_poly;
  // char_poly with its rational linear factors divided out.
  std::optional<Polynomial> perron_factor;
  std::optional<IsolatedRoot> perron;
  // Reciprocal of the common contraction raised to the largest exponent.
  std::optional<FieldElement> log_base;
  double dimension = 0.0;
  std::string exact_form;
  MeasureFlag measure = MeasureFlag::kUnknown;
  double phi_residual = 0.0;
  std::vector<std::vector<int>> components;
  int dominant_component = -1;
  std::vector<std::string> warnings;
};

// Largest real root of char_poly(s); this is the spectral radius.
IsolatedRoot PerronRoot(const BinaryMatrix& s);

// Spectral radius of a nonnegative matrix by shifted power iteration,
// taken componentwise over strongly connected components.
double SpectralRadius(const RealMatrix& m);

double Phi(const WeightedGraph& graph, double t);

SpectralResult SolvePhi(const WeightedGraph& graph, double tol = 1e-13);

struct DimensionReport {
  SpectralResult attractor;
  SpectralResult univoque;
};

DimensionReport MakeDimensionReport(const WeightedGraph& attractor_graph, const WeightedGraph& univoque_graph);

// The whole IFS pipeline: overlaps, endpoint orbits, lazy partition, S and
// S', and both dimensions.
struct IfsAnalysis {
  Ifs ifs;
  std::vector<OverlapCertificate> overlaps;
  EndpointOrbits orbits;
  MarkovPartition partition;
  AdjacencyMatrix s;
  SwitchPruned s_prime;
  SpectralResult attractor;
  SpectralResult univoque;
};

IfsAnalysis AnalyzeIfs(const Ifs& ifs, double tol = 1e-13);

std::string MeasureFlagName(MeasureFlag flag);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_DIMENSION_HPP_
