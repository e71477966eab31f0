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

#ifndef FRACTAL_SFT_ERROR_HPP_
#define FRACTAL_SFT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fractal_sft {

enum class ErrorCode {
  kNotSquarefree,
  kNoRootInHint,
  kMultipleRootsInHint,
  kFieldMismatch,
  kNotSquare,
  kNoRealRoot,
  kEndpointIsRoot,
  kDivisionByZero,
  kReducibleModulus,
  kNotContraction,
  kEmptySpec,
  kFieldConstructionFailure,
  kNotSupported,
  kUnresolvedOverlap,
  kNoAdmissibleMap,
  kOrbitNotPeriodic,
  kNonMarkov,
  kAllBlocksPruned,
  kZeroMatrix,
  kNoSolution,
  kOutOfDomain,
  kBetaTooSmall,
  kOrbitNotEventuallyPeriodic,
  kDegenerateUnivoque,
  kQuasiGreedyUnresolved,
  kMalformedWord,
  kAllOnesPeriod,
  kEmptySurvivor,
  kNotIrreducible,
  kInadmissiblePath,
  kLambdaOutOfRange,
  kExplosionGuard,
  kMalformedInput,
};

// Input errors are the caller's fault, hypothesis errors mean the analyzed
// system does not satisfy what the construction needs.
enum class ErrorKind { kInput, kHypothesis, kInternal };

std::string_view ErrorCodeName(ErrorCode code);
ErrorKind KindOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  ErrorKind kind() const { return KindOf(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace fractal_sft

#endif  // FRACTAL_SFT_ERROR_HPP_
