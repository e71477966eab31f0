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

#include "fractal_sft/words.hpp"

#include <numeric>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

PeriodicWord::PeriodicWord(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) Fail(ErrorCode::kMalformedWord, "empty period");
}

PeriodicWord PeriodicWord::Parse(std::string_view text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      close + 1 != text.size() || close == open + 1) {
    Fail(ErrorCode::kMalformedWord, "expected pre(period), got '" + std::string(text) + "'");
  }
  std::string pre(text.substr(0, open));
  std::string per(text.substr(open + 1, close - open - 1));
  for (char c : pre + per) {
    if (c < '0' || c > '9') Fail(ErrorCode::kMalformedWord, "non-digit in '" + std::string(text) + "'");
  }
  return PeriodicWord(pre, per);
}

char PeriodicWord::At(size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

PeriodicWord PeriodicWord::Shift(size_t k) const {
  if (k <= preperiod_.size()) return PeriodicWord(preperiod_.substr(k), period_);
  size_t r = (k - preperiod_.size()) % period_.size();
  return PeriodicWord("", period_.substr(r) + period_.substr(0, r));
}

PeriodicWord PeriodicWord::Reflect(char max_digit) const {
  auto flip = [max_digit](std::string s) {
    for (char& c : s) c = static_cast<char>('0' + (max_digit - c));
    return s;
  };
  return PeriodicWord(flip(preperiod_), flip(period_));
}

std::string PeriodicWord::Prefix(size_t n) const {
  std::string out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(At(i));
  return out;
}

PeriodicWord PeriodicWord::Canonical() const {
  std::string per = period_;
  for (size_t d = 1; d <= per.size(); ++d) {
    if (per.size() % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < per.size() && ok; ++i) ok = per[i] == per[i - d];
    if (ok) {
      per = per.substr(0, d);
      break;
    }
  }
  std::string pre = preperiod_;
  while (!pre.empty() && pre.back() == per.back()) {
    per = per.back() + per.substr(0, per.size() - 1);
    pre.pop_back();
  }
  return PeriodicWord(pre, per);
}

std::string PeriodicWord::ToString() const { return preperiod_ + "(" + period_ + ")"; }

bool operator==(const PeriodicWord& a, const PeriodicWord& b) { return CompareWords(a, b) == 0; }

int CompareWords(const PeriodicWord& a, const PeriodicWord& b) {
  size_t n = std::max(a.preperiod().size(), b.preperiod().size()) +
             std::lcm(a.period().size(), b.period().size());
  for (size_t i = 0; i < n; ++i) {
    char x = a.At(i), y = b.At(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace fractal_sft
