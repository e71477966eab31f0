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

#ifndef FRACTAL_SFT_POLYNOMIAL_HPP_
#define FRACTAL_SFT_POLYNOMIAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fractal_sft/rational.hpp"

namespace fractal_sft {

// Univariate polynomial with rational coefficients in ascending order.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial FromInts(const std::vector<long>& coeffs);
  static Polynomial Constant(const Rational& c);
  static Polynomial X();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(int i) const;

  Rational Eval(const Rational& x) const;
  double EvalDouble(double x) const;
  Polynomial Derivative() const;
  Polynomial Monic() const;
  // Scales to coprime integer coefficients with positive leading term.
  Polynomial Primitive() const;
  std::vector<BigInt> IntegerCoeffs() const;
  // p(x) -> p(a x) etc. are expressed through Compose.
  Polynomial Compose(const Polynomial& inner) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Returns (quotient, remainder); divisor must be nonzero.
  std::pair<Polynomial, Polynomial> DivMod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return DivMod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return DivMod(divisor).first; }

  // Human-readable form such as "x^3-x^2-x-1".
  std::string ToString(const std::string& var = "x") const;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0,0) is zero.
Polynomial Gcd(Polynomial a, Polynomial b);

// Returns (g, s, t) with s*a + t*b = g = Gcd(a, b).
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd ExtendedEuclid(const Polynomial& a, const Polynomial& b);

bool IsSquarefree(const Polynomial& p);

// Rational roots by the rational root test, sorted ascending, distinct.
std::vector<Rational> RationalRoots(const Polynomial& p);

// p divided by every linear factor (x - r) for its rational roots, with
// multiplicity. Useful to expose the part of a characteristic polynomial
// that carries an irrational Perron root.
Polynomial StripRationalRoots(const Polynomial& p);

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  // Distinct real roots in the open interval (lo, hi); endpoints must not be roots.
  int Count(const Rational& lo, const Rational& hi) const;
  // Distinct real roots on the whole line.
  int CountAll() const;
  const Polynomial& poly() const { return seq_.front(); }

 private:
  int SignChanges(const Rational& x) const;
  int SignChangesAtInfinity(bool positive) const;
  std::vector<Polynomial> seq_;
};

int SturmCount(const Polynomial& p, const Rational& lo, const Rational& hi);

// Bound B with every real root in (-B, B).
Rational RootBound(const Polynomial& p);

struct IsolatedRoot {
  Polynomial poly;
  Rational lo;
  Rational hi;
  double value = 0.0;
};

// Disjoint open intervals, one per distinct real root, ascending.
std::vector<std::pair<Rational, Rational>> IsolateRealRoots(const Polynomial& p);

// Shrinks (lo, hi), which must hold exactly one root of p, to width < tol.
// The root may be rational and hit by a midpoint; in that case the interval
// collapses around it without placing an endpoint on the root.
void RefineRoot(const Polynomial& p, Rational& lo, Rational& hi, const Rational& tol);

IsolatedRoot LargestRealRoot(const Polynomial& p, const Rational& tol = PowerOfTwoInverse(48));

// Root of p in (lo, hi) refined to tol, p must have exactly one root there.
IsolatedRoot RootInInterval(const Polynomial& p, const Rational& lo, const Rational& hi,
                            const Rational& tol = PowerOfTwoInverse(48));

// Positive real roots, ascending.
std::vector<IsolatedRoot> PositiveRealRoots(const Polynomial& p,
                                            const Rational& tol = PowerOfTwoInverse(48));

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_POLYNOMIAL_HPP_
