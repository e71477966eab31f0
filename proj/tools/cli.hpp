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

#ifndef FRACTAL_SFT_TOOLS_CLI_HPP_
#define FRACTAL_SFT_TOOLS_CLI_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fractal_sft/json_io.hpp"

namespace fractal_sft::cli {

enum class Command { kIfsDim, kUnivoqueDim, kBetaClassify, kBetaDim, kHoleDim, kCountCodings, kUkFamily, kVerify };

enum ExitCode { kOk = 0, kBadInput = 1, kHypothesis = 2, kVerifyFailed = 3 };

inline constexpr double kOracleTolerance = 0.05;
inline constexpr double kDefaultTol = 1e-13;

struct Request {
  Command command = Command::kIfsDim;
  std::optional<Json> spec;                 // IFS spec, already loaded
  std::vector<std::string> poly;            // ascending coefficients
  std::optional<std::vector<std::string>> hint;  // [lo, hi]
  std::optional<std::string> a, b;          // hole endpoints
  std::optional<std::string> lambda;
  std::optional<std::string> x;             // point for count-codings
  int depth = kDefaultCodingDepth;
  int bound = kDefaultBetaBound;
  double tol = kDefaultTol;
  bool verify = false;
};

struct Response {
  int exit_code = kOk;
  Json report;
};

std::string CommandName(Command c);
std::optional<Command> ParseCommand(const std::string& name);

// Canonical form; also the payload hashed for the cache key.
Json RequestToJson(const Request& r);
Request RequestFromJson(const Json& j);

// Never throws; errors become exit codes with a diagnostic payload.
Response Run(const Request& request);

// FNV-1a over the canonical request text, as 16 hex digits.
std::string CacheKey(const Request& request);

// Run with an on-disk cache. An empty dir disables caching.
Response RunCached(const Request& request, const std::string& cache_dir);

// Requests processed on up to `threads` workers; results in input order.
std::vector<Response> RunSweep(const std::vector<Request>& requests, int threads, const std::string& cache_dir);

}  // namespace fractal_sft::cli

#endif  // FRACTAL_SFT_TOOLS_CLI_HPP_
