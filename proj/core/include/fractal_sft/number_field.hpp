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

#ifndef FRACTAL_SFT_NUMBER_FIELD_HPP_
#define FRACTAL_SFT_NUMBER_FIELD_HPP_

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fractal_sft/polynomial.hpp"
#include "fractal_sft/rational.hpp"

namespace fractal_sft {

// Q(beta) for a real algebraic beta given by a minimal polynomial and an
// isolating interval. Immutable once built, apart from a cached refinement
// of the interval used by Sign.
class NumberField {
 public:
  // Rational linear factors of min_poly that do not vanish at the selected
  // root are divided out; a rational root yields a degree-1 field.
  static std::shared_ptr<const NumberField> Make(const Polynomial& min_poly, const Rational& lo,
                                                 const Rational& hi);
  // Q itself, presented as the degree-1 field with generator 1.
  static std::shared_ptr<const NumberField> Rationals();

  const Polynomial& min_poly() const { return min_poly_; }
  int degree() const { return min_poly_.degree(); }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  double generator_value() const { return value_; }
  bool is_rational() const { return degree() == 1; }

  // Sign of sum c_i beta^i, exact.
  int Sign(const std::vector<Rational>& coeffs) const;
  // Enclosure of sum c_i beta^i on the stored interval.
  std::pair<Rational, Rational> Enclose(const std::vector<Rational>& coeffs) const;
  double Approximate(const std::vector<Rational>& coeffs) const;

  bool SameAs(const NumberField& other) const;

 private:
  NumberField(Polynomial min_poly, Rational lo, Rational hi);
  Polynomial min_poly_;
  Rational lo_;
  Rational hi_;
  double value_ = 0;
  mutable std::mutex refine_mu_;
  mutable Rational fine_lo_;
  mutable Rational fine_hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}
  static FieldElement FromPolynomial(FieldPtr field, const Polynomial& p);
  static FieldElement FromCoeffs(FieldPtr field, const std::vector<Rational>& coeffs);
  static FieldElement Generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  // Power-basis coefficients, exactly degree() entries.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  int Sign() const;
  bool IsZero() const;
  double ToDouble() const;
  std::optional<Rational> AsRational() const;
  FieldElement Inverse() const;
  FieldElement Abs() const { return Sign() < 0 ? -*this : *this; }
  FieldElement Pow(int k) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  // Polynomial in the generator, written with variable "b", e.g. "3b-b^2".
  std::string ToString() const;
  // Coefficients as "p/q" strings, the serialized form.
  std::vector<std::string> CoeffStrings() const;

 private:
  void CheckSameField(const FieldElement& o) const;
  void Reduce(Polynomial p);
  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

enum class Ordering { kLess, kEqual, kGreater };
Ordering Cmp(const FieldElement& a, const FieldElement& b);

// Strict weak order usable as a std::map comparator.
struct FieldLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const { return a < b; }
};

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_NUMBER_FIELD_HPP_
