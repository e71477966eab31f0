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

#include "fractal_sft/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  Trim();
}

Polynomial Polynomial::FromInts(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::X() { return FromInts({0, 1}); }

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Rational Polynomial::Eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::EvalDouble(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::Derivative() const {
  std::vector<Rational> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::Monic() const {
  if (is_zero()) return *this;
  Rational lc = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v /= lc;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::Primitive() const {
  if (is_zero()) return *this;
  BigInt lcm_den = 1;
  for (const auto& c : coeffs_) lcm_den = lcm(lcm_den, BigInt(c.get_den()));
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (const auto& c : coeffs_) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    ints.push_back(v);
    g = gcd(g, v);
  }
  if (coeffs_.back() < 0) g = -g;
  std::vector<Rational> out;
  for (auto& v : ints) out.emplace_back(BigInt(v / g));
  return Polynomial(std::move(out));
}

std::vector<BigInt> Polynomial::IntegerCoeffs() const {
  std::vector<BigInt> out;
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) Fail(ErrorCode::kMalformedInput, "polynomial has non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

Polynomial Polynomial::Compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::DivMod(const Polynomial& divisor) const {
  if (divisor.is_zero()) Fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(degree() - dd + 1);
  const Rational& lc = divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lc;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::ToString(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    bool unit = mag == 1;
    if (!unit || i == 0) {
      std::string s = fractal_sft::ToString(mag);
      if (mag.get_den() != 1 && i > 0) s = "(" + s + ")";
      out += s;
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial Gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

ExtendedGcd ExtendedEuclid(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::Constant(1), s1;
  Polynomial t0, t1 = Polynomial::Constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.DivMod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

bool IsSquarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return Gcd(p, p.Derivative()).degree() == 0;
}

namespace {

std::vector<BigInt> PositiveDivisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
    if (d > 1000000) Fail(ErrorCode::kNotSupported, "coefficient too large for rational root test");
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> RationalRoots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  Polynomial q = p.Primitive();
  auto c = q.IntegerCoeffs();
  size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == c.size()) return roots;
  std::set<Rational> found;
  for (const auto& num : PositiveDivisors(c[low])) {
    for (const auto& den : PositiveDivisors(c.back())) {
      for (int sgn : {-1, 1}) {
        Rational r(BigInt(num * sgn), den);
        r.canonicalize();
        if (found.count(r) == 0 && q.Eval(r) == 0) found.insert(r);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

Polynomial StripRationalRoots(const Polynomial& p) {
  Polynomial q = p;
  for (const auto& r : RationalRoots(p)) {
    Polynomial lin(std::vector<Rational>{-r, Rational(1)});
    while (q.degree() >= 1 && q.Eval(r) == 0) q = q / lin;
  }
  return q;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) Fail(ErrorCode::kNoRealRoot, "Sturm sequence of the zero polynomial");
  auto normalize = [](const Polynomial& q) {
    if (q.is_zero()) return q;
    Rational s = abs(q.leading());
    return Rational(1) / s * q;
  };
  seq_.push_back(normalize(p));
  Polynomial d = p.Derivative();
  if (d.is_zero()) return;
  seq_.push_back(normalize(d));
  while (true) {
    Polynomial r = seq_[seq_.size() - 2] % seq_.back();
    if (r.is_zero()) break;
    seq_.push_back(normalize(-r));
  }
}

int SturmSequence::SignChanges(const Rational& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.Eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::SignChangesAtInfinity(bool positive) const {
  int changes = 0;
  int prev = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::Count(const Rational& lo, const Rational& hi) const {
  if (poly().Eval(lo) == 0 || poly().Eval(hi) == 0) {
    Fail(ErrorCode::kEndpointIsRoot, "Sturm interval endpoint is a root");
  }
  if (hi <= lo) return 0;
  return SignChanges(lo) - SignChanges(hi);
}

int SturmSequence::CountAll() const { return SignChangesAtInfinity(false) - SignChangesAtInfinity(true); }

int SturmCount(const Polynomial& p, const Rational& lo, const Rational& hi) {
  return SturmSequence(p).Count(lo, hi);
}

Rational RootBound(const Polynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[i] / p.leading())));
  return m + 1;
}

namespace {

// A point strictly inside (lo, hi), near the middle, that is not a root of p.
Rational SplitPoint(const Polynomial& p, const Rational& lo, const Rational& hi) {
  static const long kFractions[][2] = {{1, 2}, {3, 7}, {4, 7}, {2, 5}, {3, 5}, {5, 11}, {6, 11},
                                       {1, 3}, {2, 3}, {4, 9}, {5, 9}, {7, 15}, {8, 15}};
  for (const auto& f : kFractions) {
    Rational m = lo + (hi - lo) * Rational(f[0], f[1]);
    if (p.Eval(m) != 0) return m;
  }
  for (long k = 16;; k += 1) {
    Rational m = lo + (hi - lo) * Rational(k, 2 * k + 1);
    if (p.Eval(m) != 0) return m;
  }
}

void Isolate(const SturmSequence& sturm, const Rational& lo, const Rational& hi, int count,
             std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational m = SplitPoint(sturm.poly(), lo, hi);
  int left = sturm.Count(lo, m);
  Isolate(sturm, lo, m, left, out);
  Isolate(sturm, m, hi, count - left, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> IsolateRealRoots(const Polynomial& p) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  SturmSequence sturm(p);
  Rational b = RootBound(p);
  while (p.Eval(b) == 0 || p.Eval(-b) == 0) b += 1;
  Isolate(sturm, -b, b, sturm.Count(-b, b), out);
  return out;
}

void RefineRoot(const Polynomial& p, Rational& lo, Rational& hi, const Rational& tol) {
  int slo = sgn(p.Eval(lo));
  int shi = sgn(p.Eval(hi));
  std::optional<SturmSequence> sturm;
  while (hi - lo >= tol) {
    Rational m = SplitPoint(p, lo, hi);
    int sm = sgn(p.Eval(m));
    bool root_left;
    if (slo != 0 && shi != 0 && slo != shi) {
      root_left = sm != slo;
    } else {
      if (!sturm) sturm.emplace(p);
      root_left = sturm->Count(lo, m) > 0;
    }
    if (root_left) {
      hi = m;
      shi = sm;
    } else {
      lo = m;
      slo = sm;
    }
  }
}

IsolatedRoot RootInInterval(const Polynomial& p, const Rational& lo, const Rational& hi, const Rational& tol) {
  IsolatedRoot r{p, lo, hi, 0.0};
  RefineRoot(p, r.lo, r.hi, tol);
  r.value = Rational((r.lo + r.hi) / 2).get_d();
  try {
    for (const Rational& q : RationalRoots(p)) {
      if (lo <= q && q <= hi) r.value = q.get_d();
    }
  } catch (const Error&) {
    // Huge coefficients: keep the interval midpoint.
  }
  return r;
}

IsolatedRoot LargestRealRoot(const Polynomial& p, const Rational& tol) {
  auto roots = IsolateRealRoots(p);
  if (roots.empty()) Fail(ErrorCode::kNoRealRoot, "polynomial " + p.ToString() + " has no real root");
  return RootInInterval(p, roots.back().first, roots.back().second, tol);
}

std::vector<IsolatedRoot> PositiveRealRoots(const Polynomial& p, const Rational& tol) {
  std::vector<IsolatedRoot> out;
  if (p.degree() <= 0) return out;
  Polynomial q = p;
  // Drop the root at zero so that 0 can serve as an interval endpoint.
  while (q.coeff(0) == 0 && q.degree() > 0) q = q / Polynomial::X();
  if (q.degree() <= 0) return out;
  SturmSequence sturm(q);
  Rational b = RootBound(q);
  while (q.Eval(b) == 0) b += 1;
  std::vector<std::pair<Rational, Rational>> intervals;
  Isolate(sturm, Rational(0), b, sturm.Count(Rational(0), b), intervals);
  for (auto& [lo, hi] : intervals) out.push_back(RootInInterval(q, lo, hi, tol));
  return out;
}

}  // namespace fractal_sft
