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

#ifndef FRACTAL_SFT_JSON_IO_HPP_
#define FRACTAL_SFT_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include "fractal_sft/beta.hpp"
#include "fractal_sft/codings.hpp"
#include "fractal_sft/dimension.hpp"
#include "fractal_sft/ifs.hpp"
#include "fractal_sft/markov.hpp"
#include "fractal_sft/open_map.hpp"
#include "fractal_sft/oracle.hpp"

namespace fractal_sft {

// Serialized forms. Keys are sorted (nlohmann::json uses std::map), so equal
// values dump to identical text.
using Json = nlohmann::json;

Json ToJson(const Rational& r);
Json ToJson(const Polynomial& p);
// Power-basis coefficients as "p/q" strings; a plain string for rationals.
Json ToJson(const FieldElement& x);
Json ToJson(const IsolatedRoot& root);
Json ToJson(const PeriodicWord& w);
Json ToJson(const Ifs& ifs);
Json ToJson(const AdjacencyMatrix& s);
Json ToJson(const MarkovPartition& p);
Json ToJson(const SwitchPruned& s);
Json ToJson(const SpectralResult& r);
Json ToJson(const GreedyExpansion& e);
Json ToJson(const ExpansionOfOne& one);
Json ToJson(const SftClassification& c);
Json ToJson(const UnivoqueAnalysis& a);
Json ToJson(const HoleAnalysis& a);
Json ToJson(const ParryChain& c);
Json ToJson(const MultiplicityReport& m);
Json ToJson(const UkFamilyReport& r);
Json ToJson(const GrowthEstimate& g);

// Integer or "p/q" string coefficient lists.
Polynomial PolynomialFromJson(const Json& j);
BinaryMatrix MatrixFromJson(const Json& j);

// Snake-case classification labels used in reports.
std::string ClassificationLabel(SftKind kind);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_JSON_IO_HPP_
