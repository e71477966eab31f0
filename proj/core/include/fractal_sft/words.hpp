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

#ifndef FRACTAL_SFT_WORDS_HPP_
#define FRACTAL_SFT_WORDS_HPP_

#include <string>
#include <string_view>

namespace fractal_sft {

// Infinite word prefix + period^infinity over a digit alphabet stored as chars.
// An empty period denotes a finite word (only used transiently).
class PeriodicWord {
 public:
  PeriodicWord() = default;
  PeriodicWord(std::string preperiod, std::string period);
  // Parses "pre(period)", e.g. "0(01)" or "(01010)".
  static PeriodicWord Parse(std::string_view text);

  const std::string& preperiod() const { return preperiod_; }
  const std::string& period() const { return period_; }
  char At(size_t i) const;
  // sigma^k of the word.
  PeriodicWord Shift(size_t k) const;
  // Digitwise d -> (max_digit - d).
  PeriodicWord Reflect(char max_digit = '1') const;
  std::string Prefix(size_t n) const;
  // Canonical form: shortest period, then shortest preperiod.
  PeriodicWord Canonical() const;
  std::string ToString() const;

  friend bool operator==(const PeriodicWord& a, const PeriodicWord& b);

 private:
  std::string preperiod_;
  std::string period_;
};

// Lexicographic comparison of infinite words: -1, 0, 1.
int CompareWords(const PeriodicWord& a, const PeriodicWord& b);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_WORDS_HPP_
