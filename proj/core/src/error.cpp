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

#include "fractal_sft/error.hpp"

namespace fractal_sft {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kNoRootInHint: return "NoRootInHint";
    case ErrorCode::kMultipleRootsInHint: return "MultipleRootsInHint";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNoRealRoot: return "NoRealRoot";
    case ErrorCode::kEndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kNotContraction: return "NotContraction";
    case ErrorCode::kEmptySpec: return "EmptySpec";
    case ErrorCode::kFieldConstructionFailure: return "FieldConstructionFailure";
    case ErrorCode::kNotSupported: return "NotSupported";
    case ErrorCode::kUnresolvedOverlap: return "UnresolvedOverlap";
    case ErrorCode::kNoAdmissibleMap: return "NoAdmissibleMap";
    case ErrorCode::kOrbitNotPeriodic: return "OrbitNotPeriodic";
    case ErrorCode::kNonMarkov: return "NonMarkov";
    case ErrorCode::kAllBlocksPruned: return "AllBlocksPruned";
    case ErrorCode::kZeroMatrix: return "ZeroMatrix";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kBetaTooSmall: return "BetaTooSmall";
    case ErrorCode::kOrbitNotEventuallyPeriodic: return "OrbitNotEventuallyPeriodic";
    case ErrorCode::kDegenerateUnivoque: return "DegenerateUnivoque";
    case ErrorCode::kQuasiGreedyUnresolved: return "QuasiGreedyUnresolved";
    case ErrorCode::kMalformedWord: return "MalformedWord";
    case ErrorCode::kAllOnesPeriod: return "AllOnesPeriod";
    case ErrorCode::kEmptySurvivor: return "EmptySurvivor";
    case ErrorCode::kNotIrreducible: return "NotIrreducible";
    case ErrorCode::kInadmissiblePath: return "InadmissiblePath";
    case ErrorCode::kLambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::kExplosionGuard: return "ExplosionGuard";
    case ErrorCode::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

ErrorKind KindOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquarefree:
    case ErrorCode::kNoRootInHint:
    case ErrorCode::kMultipleRootsInHint:
    case ErrorCode::kNotContraction:
    case ErrorCode::kEmptySpec:
    case ErrorCode::kFieldConstructionFailure:
    case ErrorCode::kNotSupported:
    case ErrorCode::kOutOfDomain:
    case ErrorCode::kBetaTooSmall:
    case ErrorCode::kMalformedWord:
    case ErrorCode::kAllOnesPeriod:
    case ErrorCode::kLambdaOutOfRange:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kNotSquare:
    case ErrorCode::kInadmissiblePath:
      return ErrorKind::kInput;
    case ErrorCode::kUnresolvedOverlap:
    case ErrorCode::kNoAdmissibleMap:
    case ErrorCode::kOrbitNotPeriodic:
    case ErrorCode::kNonMarkov:
    case ErrorCode::kAllBlocksPruned:
    case ErrorCode::kNoSolution:
    case ErrorCode::kOrbitNotEventuallyPeriodic:
    case ErrorCode::kDegenerateUnivoque:
    case ErrorCode::kQuasiGreedyUnresolved:
    case ErrorCode::kEmptySurvivor:
    case ErrorCode::kNotIrreducible:
    case ErrorCode::kZeroMatrix:
    case ErrorCode::kExplosionGuard:
      return ErrorKind::kHypothesis;
    default:
      return ErrorKind::kInternal;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace fractal_sft
