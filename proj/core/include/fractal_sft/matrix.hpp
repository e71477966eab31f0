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

#ifndef FRACTAL_SFT_MATRIX_HPP_
#define FRACTAL_SFT_MATRIX_HPP_

#include <vector>

#include "fractal_sft/polynomial.hpp"
#include "fractal_sft/rational.hpp"

namespace fractal_sft {

using RationalMatrix = std::vector<std::vector<Rational>>;
using BinaryMatrix = std::vector<std::vector<int>>;
using RealMatrix = std::vector<std::vector<double>>;

RationalMatrix ToRational(const BinaryMatrix& m);
RealMatrix ToReal(const BinaryMatrix& m);
RationalMatrix Identity(size_t n);
RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix Power(const RationalMatrix& a, unsigned k);
RationalMatrix Inverse(RationalMatrix a);
Rational Determinant(RationalMatrix a);

// det(xI - m) by Faddeev-LeVerrier, exact.
Polynomial CharPoly(const RationalMatrix& m);
Polynomial CharPoly(const BinaryMatrix& m);

// Companion matrix of a polynomial of degree >= 1; its characteristic
// polynomial is the monic version of p.
RationalMatrix Companion(const Polynomial& p);

BinaryMatrix PrincipalSubmatrix(const BinaryMatrix& m, const std::vector<int>& keep);

bool IsSquare(const BinaryMatrix& m);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_MATRIX_HPP_
