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

#ifndef FRACTAL_SFT_RATIONAL_HPP_
#define FRACTAL_SFT_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fractal_sft {

using BigInt = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals such as "0.19" or "-1.5".
Rational ParseRational(std::string_view text);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string ToString(const Rational& r);

double ToDouble(const Rational& r);

inline Rational MakeRational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// 2^-bits as an exact rational.
Rational PowerOfTwoInverse(unsigned bits);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_RATIONAL_HPP_
