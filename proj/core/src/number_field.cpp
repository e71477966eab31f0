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

#include "fractal_sft/number_field.hpp"

#include <algorithm>

#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

constexpr unsigned kStoredPrecisionBits = 64;
constexpr unsigned kRefineStepBits = 32;
constexpr unsigned kMaxRefineBits = 1u << 22;

std::pair<Rational, Rational> IntervalMul(const std::pair<Rational, Rational>& a,
                                          const std::pair<Rational, Rational>& b) {
  Rational p[4] = {a.first * b.first, a.first * b.second, a.second * b.first, a.second * b.second};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

std::pair<Rational, Rational> HornerEnclosure(const std::vector<Rational>& c, const Rational& lo,
                                              const Rational& hi) {
  std::pair<Rational, Rational> acc{Rational(0), Rational(0)};
  std::pair<Rational, Rational> x{lo, hi};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = IntervalMul(acc, x);
    acc.first += *it;
    acc.second += *it;
  }
  return acc;
}

int ClosedIntervalRootCount(const Polynomial& p, const Rational& lo, const Rational& hi) {
  int count = 0;
  Polynomial q = p;
  for (const Rational& e : {lo, hi}) {
    if (q.degree() >= 1 && q.Eval(e) == 0) {
      ++count;
      q = q / Polynomial(std::vector<Rational>{-e, Rational(1)});
    }
  }
  if (q.degree() >= 1) count += SturmCount(q, lo, hi);
  return count;
}

}  // namespace

NumberField::NumberField(Polynomial min_poly, Rational lo, Rational hi)
    : min_poly_(std::move(min_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (is_rational()) {
    Rational root = -min_poly_.coeff(0) / min_poly_.coeff(1);
    lo_ = hi_ = root;
  } else {
    RefineRoot(min_poly_, lo_, hi_, PowerOfTwoInverse(kStoredPrecisionBits));
  }
  fine_lo_ = lo_;
  fine_hi_ = hi_;
  value_ = Rational((lo_ + hi_) / 2).get_d();
}

std::shared_ptr<const NumberField> NumberField::Make(const Polynomial& min_poly, const Rational& lo,
                                                     const Rational& hi) {
  if (min_poly.degree() < 1) Fail(ErrorCode::kFieldConstructionFailure, "minimal polynomial must have degree >= 1");
  if (!(lo < hi)) Fail(ErrorCode::kFieldConstructionFailure, "hint interval is empty");
  if (!IsSquarefree(min_poly)) Fail(ErrorCode::kNotSquarefree, min_poly.ToString() + " is not squarefree");
  int count = ClosedIntervalRootCount(min_poly, lo, hi);
  if (count == 0) Fail(ErrorCode::kNoRootInHint, min_poly.ToString() + " has no root in the hint interval");
  if (count > 1) {
    Fail(ErrorCode::kMultipleRootsInHint,
         min_poly.ToString() + " has " + std::to_string(count) + " roots in the hint interval");
  }
  Polynomial p = min_poly.Monic();
  Rational a = lo, b = hi;
  for (const auto& r : RationalRoots(p)) {
    if (lo <= r && r <= hi) {
      Polynomial lin(std::vector<Rational>{-r, Rational(1)});
      return std::shared_ptr<const NumberField>(new NumberField(lin, r, r));
    }
  }
  p = StripRationalRoots(p).Monic();
  return std::shared_ptr<const NumberField>(new NumberField(p, a, b));
}

std::shared_ptr<const NumberField> NumberField::Rationals() {
  static const auto kQ = std::shared_ptr<const NumberField>(
      new NumberField(Polynomial::FromInts({-1, 1}), Rational(1), Rational(1)));
  return kQ;
}

std::pair<Rational, Rational> NumberField::Enclose(const std::vector<Rational>& coeffs) const {
  return HornerEnclosure(coeffs, lo_, hi_);
}

double NumberField::Approximate(const std::vector<Rational>& coeffs) const {
  if (is_rational()) return coeffs.empty() ? 0.0 : coeffs[0].get_d();
  auto [a, b] = Enclose(coeffs);
  return Rational((a + b) / 2).get_d();
}

int NumberField::Sign(const std::vector<Rational>& coeffs) const {
  bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
  if (all_zero) return 0;
  if (is_rational()) return sgn(coeffs[0]);
  auto [a, b] = Enclose(coeffs);
  if (a > 0) return 1;
  if (b < 0) return -1;
  // The refinement is kept, so a long run of comparisons only pays for new bits.
  std::lock_guard<std::mutex> lock(refine_mu_);
  bool nonzero = false;
  for (unsigned bits = 0;; bits += kRefineStepBits) {
    auto [x, y] = HornerEnclosure(coeffs, fine_lo_, fine_hi_);
    if (x > 0) return 1;
    if (y < 0) return -1;
    if (!nonzero) {
      Polynomial g = Gcd(Polynomial(coeffs), min_poly_);
      if (g.degree() >= 1 && SturmCount(g, lo_, hi_) > 0) return 0;
      nonzero = true;
    }
    if (bits > kMaxRefineBits) Fail(ErrorCode::kFieldConstructionFailure, "sign determination did not terminate");
    RefineRoot(min_poly_, fine_lo_, fine_hi_, (fine_hi_ - fine_lo_) * PowerOfTwoInverse(kRefineStepBits));
  }
}

bool NumberField::SameAs(const NumberField& other) const {
  if (this == &other) return true;
  if (!(min_poly_ == other.min_poly_)) return false;
  if (is_rational()) return lo_ == other.lo_;
  Rational a = std::max(lo_, other.lo_), b = std::min(hi_, other.hi_);
  if (!(a < b)) return false;
  return SturmCount(min_poly_, a, b) == 1;
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  coeffs_.assign(field_->degree(), Rational(0));
  coeffs_[0] = value;
}

FieldElement FieldElement::FromPolynomial(FieldPtr field, const Polynomial& p) {
  FieldElement e;
  e.field_ = std::move(field);
  e.Reduce(p);
  return e;
}

FieldElement FieldElement::FromCoeffs(FieldPtr field, const std::vector<Rational>& coeffs) {
  return FromPolynomial(std::move(field), Polynomial(coeffs));
}

FieldElement FieldElement::Generator(FieldPtr field) {
  return FromPolynomial(std::move(field), Polynomial::X());
}

void FieldElement::Reduce(Polynomial p) {
  Polynomial r = p % field_->min_poly();
  coeffs_.assign(field_->degree(), Rational(0));
  for (int i = 0; i <= r.degree(); ++i) coeffs_[i] = r.coeff(i);
}

void FieldElement::CheckSameField(const FieldElement& o) const {
  if (!field_ || !o.field_) Fail(ErrorCode::kFieldMismatch, "uninitialized field element");
  if (field_ != o.field_ && !field_->SameAs(*o.field_)) {
    Fail(ErrorCode::kFieldMismatch, "elements belong to different fields");
  }
}

int FieldElement::Sign() const { return field_->Sign(coeffs_); }

bool FieldElement::IsZero() const { return Sign() == 0; }

double FieldElement::ToDouble() const { return field_->Approximate(coeffs_); }

std::optional<Rational> FieldElement::AsRational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  CheckSameField(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  CheckSameField(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  CheckSameField(o);
  if (field_->is_rational()) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  Reduce(Polynomial(coeffs_) * Polynomial(o.coeffs_));
  return *this;
}

FieldElement FieldElement::Inverse() const {
  if (field_->is_rational()) {
    if (coeffs_[0] == 0) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
    return FieldElement(field_, Rational(1) / coeffs_[0]);
  }
  Polynomial c(coeffs_);
  if (c.is_zero()) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
  auto eg = ExtendedEuclid(c, field_->min_poly());
  if (eg.g.degree() > 0) {
    if (IsZero()) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
    Fail(ErrorCode::kReducibleModulus, "minimal polynomial " + field_->min_poly().ToString() + " is reducible");
  }
  return FromPolynomial(field_, eg.s);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  CheckSameField(o);
  return *this *= o.Inverse();
}

FieldElement FieldElement::Pow(int k) const {
  if (k < 0) return Inverse().Pow(-k);
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.CheckSameField(b);
  if (a.coeffs_ == b.coeffs_) return true;
  return (a - b).Sign() == 0;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.CheckSameField(b);
  if (a.coeffs_ == b.coeffs_) return std::strong_ordering::equal;
  int s = (a - b).Sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering Cmp(const FieldElement& a, const FieldElement& b) {
  auto o = a <=> b;
  if (o < 0) return Ordering::kLess;
  if (o > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

std::string FieldElement::ToString() const {
  if (field_->is_rational()) return fractal_sft::ToString(coeffs_[0]);
  return Polynomial(coeffs_).ToString("b");
}

std::vector<std::string> FieldElement::CoeffStrings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(fractal_sft::ToString(c));
  return out;
}

}  // namespace fractal_sft
