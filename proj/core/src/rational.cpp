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

#include "fractal_sft/rational.hpp"

#include <cctype>

#include "fractal_sft/error.hpp"

namespace fractal_sft {
namespace {

bool IsIntegerLiteral(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den)) {
      Fail(ErrorCode::kMalformedInput, "bad rational '" + std::string(text) + "'");
    }
    BigInt d = ParseInteger(den);
    if (d == 0) Fail(ErrorCode::kMalformedInput, "zero denominator in '" + std::string(text) + "'");
    Rational r(ParseInteger(num), d);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits.front() == '-' || whole_digits.front() == '+')) {
      whole_digits.remove_prefix(1);
    }
    if ((!whole_digits.empty() && !IsIntegerLiteral(whole_digits)) ||
        (!frac.empty() && !IsIntegerLiteral(frac)) || frac.find_first_of("+-") != std::string_view::npos ||
        (whole_digits.empty() && frac.empty())) {
      Fail(ErrorCode::kMalformedInput, "bad decimal '" + std::string(text) + "'");
    }
    BigInt num = whole_digits.empty() ? BigInt(0) : ParseInteger(whole_digits);
    BigInt den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    Rational r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }
  if (!IsIntegerLiteral(s)) Fail(ErrorCode::kMalformedInput, "bad rational '" + std::string(text) + "'");
  return Rational(ParseInteger(s));
}

std::string ToString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double ToDouble(const Rational& r) { return r.get_d(); }

Rational PowerOfTwoInverse(unsigned bits) {
  BigInt den = 1;
  den <<= bits;
  return Rational(BigInt(1), den);
}

}  // namespace fractal_sft
