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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "fractal_sft/error.hpp"

#ifndef FRACTAL_SFT_VERSION
#define FRACTAL_SFT_VERSION "unknown"
#endif

namespace fractal_sft::cli {
namespace {

constexpr int kSurvivorCheckLength = 120;
constexpr double kCylinderBudget = 4e6;

struct Names {
  Command command;
  const char* name;
};

constexpr Names kCommands[] = {
    {Command::kIfsDim, "ifs-dim"},           {Command::kUnivoqueDim, "univoque-dim"},
    {Command::kBetaClassify, "beta-classify"}, {Command::kBetaDim, "beta-dim"},
    {Command::kHoleDim, "hole-dim"},         {Command::kCountCodings, "count-codings"},
    {Command::kUkFamily, "uk-family"},       {Command::kVerify, "verify"},
};

std::string KindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInput:
      return "input";
    case ErrorKind::kHypothesis:
      return "hypothesis";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "internal";
}

// Collects oracle cross-checks for a report.
class Checks {
 public:
  void Add(const std::string& what, double pipeline, const GrowthEstimate& g, double tol = kOracleTolerance) {
    double delta = std::abs(pipeline - g.estimated_dimension);
    ok_ = ok_ && delta <= tol;
    items_.push_back({{"check", what},
                      {"pipeline", pipeline},
                      {"oracle", g.estimated_dimension},
                      {"delta", delta},
                      {"tolerance", tol},
                      {"pass", delta <= tol},
                      {"oracle_detail", fractal_sft::ToJson(g)}});
  }
  void Flag(const std::string& what, bool pass) {
    ok_ = ok_ && pass;
    items_.push_back({{"check", what}, {"pass", pass}});
  }
  bool ok() const { return ok_; }
  Json Report() const { return {{"pass", ok_}, {"checks", items_}}; }

 private:
  bool ok_ = true;
  Json items_ = Json::array();
};

Polynomial RequestPoly(const Request& r) {
  if (r.poly.empty()) Fail(ErrorCode::kMalformedInput, "--poly is required");
  std::vector<Rational> coeffs;
  for (const auto& c : r.poly) coeffs.push_back(ParseRational(c));
  return Polynomial(std::move(coeffs));
}

BetaSystem RequestBeta(const Request& r) {
  std::optional<std::pair<Rational, Rational>> hint;
  if (r.hint) {
    if (r.hint->size() != 2) Fail(ErrorCode::kMalformedInput, "--hint needs two endpoints");
    hint = std::make_pair(ParseRational((*r.hint)[0]), ParseRational((*r.hint)[1]));
  }
  return MakeBetaSystem(RequestPoly(r), hint);
}

const Json& RequestSpec(const Request& r) {
  if (!r.spec) Fail(ErrorCode::kMalformedInput, "--spec is required");
  return *r.spec;
}

Rational RequestRational(const std::optional<std::string>& v, const std::string& flag) {
  if (!v) Fail(ErrorCode::kMalformedInput, flag + " is required");
  return ParseRational(*v);
}

int LevelFor(int maps) {
  int level = 4;
  while (std::pow(static_cast<double>(maps), level + 1) <= kCylinderBudget) ++level;
  return level;
}

Json IfsDim(const Request& r, Checks& checks, bool univoque_only) {
  IfsAnalysis a = AnalyzeIfs(LoadIfs(RequestSpec(r)), r.tol);
  Json out;
  out["ifs"] = ToJson(a.ifs);
  out["overlaps"] = static_cast<int>(a.overlaps.size());
  out["partition"] = ToJson(a.partition);
  out["s"] = ToJson(a.s);
  out["s_prime"] = ToJson(a.s_prime);
  out["dim_univoque"] = ToJson(a.univoque);
  if (!univoque_only) {
    out["dim_attractor"] = ToJson(a.attractor);
    out["univoque_not_above_attractor"] = a.univoque.dimension <= a.attractor.dimension + 1e-12;
    if (r.verify) checks.Add("box count of the attractor", a.attractor.dimension, BoxCountIfs(a.ifs, LevelFor(a.ifs.size())));
  }
  if (r.verify) {
    checks.Add("weighted path cover of S'", a.univoque.dimension,
               WeightedCoverCount(MakeWeightedGraph(a.ifs, a.s_prime.pruned), 60));
    checks.Flag("Markov covers exact", VerifyMarkovCovers(a.ifs, a.partition));
    checks.Flag("open set condition on S", VerifyOpenSetCondition(a.ifs, a.partition, a.s));
  }
  return out;
}

Json BetaClassify(const Request& r) {
  BetaSystem sys = RequestBeta(r);
  ExpansionOfOne one = QuasiGreedyOne(sys, r.bound);
  SftClassification c = ClassifySft(sys, one);
  Json out = ToJson(c);
  out["beta_poly"] = ToJson(sys.field->min_poly());
  out["beta"] = sys.beta.ToDouble();
  out["expansion_of_one"] = ToJson(one);
  if (one.resolved) out["quasi_greedy"] = ToJson(one.quasi_greedy);
  return out;
}

Json BetaDim(const Request& r, Checks& checks) {
  BetaSystem sys = RequestBeta(r);
  UnivoqueAnalysis a = UnivoqueDimension(sys, r.bound);
  Json out = ToJson(a);
  out["beta_poly"] = ToJson(sys.field->min_poly());
  out["beta"] = sys.beta.ToDouble();
  out["classification"] = ClassificationLabel(a.classification.kind);
  out["quasi_greedy"] = ToJson(a.one.quasi_greedy);
  if (r.verify) {
    checks.Add("unique word count", a.dim.dimension, UniqueWordCountAdaptive(sys, kCylinderBudget, r.bound));
    checks.Add("full domain against unit interval", a.dim.dimension,
               GrowthEstimate{{}, a.full_dim.dimension, a.full_dim.dimension, "pipeline on [0, 1/(beta-1)]"}, 1e-9);
  }
  return out;
}

Json HoleDim(const Request& r, Checks& checks) {
  if (!r.a || !r.b) Fail(ErrorCode::kMalformedInput, "--a and --b are required");
  Rational a = ParseHoleEndpoint(*r.a);
  Rational b = ParseHoleEndpoint(*r.b);
  HoleAnalysis h = HolePartition(MakeHole(a, b));
  SpectralResult dim = SurvivorDimension(h);
  Json out = ToJson(h);
  out["dimension"] = ToJson(dim);
  out["char_poly"] = out["dimension"]["char_poly"];
  AdjacencyMatrix dominant = DominantComponent(h.s_pruned);
  if (dominant.size() > 0 && dim.dimension > 0) {
    out["parry"] = ToJson(ParryMeasure(dominant));
    out["parry_on"] = h.irreducible ? "s_pruned" : "dominant_component";
  }
  if (r.verify) {
    checks.Add("survivor cylinder count", dim.dimension, SurvivorCylinderCountAdaptive(h.hole, kCylinderBudget));
    if (h.s_pruned.size() > 0) {
      checks.Add("word count of S'", dim.dimension, CountSftWords(h.s_pruned.entries, kSurvivorCheckLength, std::log(2.0)));
    }
  }
  return out;
}

FieldElement ParsePoint(const FieldPtr& field, const std::string& text) {
  if (!text.empty() && text.front() == '[') return ParseFieldElement(field, Json::parse(text));
  return ParseFieldElement(field, Json(text));
}

Json CountCodingsCommand(const Request& r, Checks& checks) {
  if (!r.x) Fail(ErrorCode::kMalformedInput, "--x is required");
  Ifs ifs = r.spec ? LoadIfs(*r.spec)
                   : FourMapFamily(FieldElement(NumberField::Rationals(), RequestRational(r.lambda, "--lambda or --spec")));
  FieldElement x = ParsePoint(ifs.field, *r.x);
  MultiplicityReport m = CountCodings(ifs, x, r.depth);
  Json out = ToJson(m);
  out["summary"] = m.ToString();
  if (r.verify) {
    MultiplicityReport deeper = CountCodings(ifs, x, 2 * r.depth);
    checks.Flag("verdict stable at depth " + std::to_string(2 * r.depth),
                m.verdict == Multiplicity::kAtLeast || (deeper.verdict == m.verdict && deeper.count == m.count));
  }
  return out;
}

Json UkFamily(const Request& r, Checks& checks) {
  FieldElement lambda(NumberField::Rationals(), RequestRational(r.lambda, "--lambda"));
  UkFamilyReport rep = AnalyzeFourMapFamily(lambda, r.depth);
  Json out = ToJson(rep);
  if (r.verify) {
    checks.Add("word count of S'", std::log(2 + std::sqrt(2.0)),
               CountSftWords(rep.s_prime.pruned.entries, 40));
    checks.Add("closed form", rep.closed_form,
               GrowthEstimate{{}, rep.univoque.dimension, rep.univoque.dimension, "pipeline"}, 1e-10);
    checks.Flag("perron root is 2 + sqrt 2", rep.perron_is_two_plus_sqrt2);
    checks.Flag("no sampled point with an odd number > 1 of codings", rep.odd_above_one == 0);
    checks.Flag("no sampled point with countably many codings", rep.countably_infinite == 0);
  }
  return out;
}

Json Dispatch(const Request& r, Checks& checks) {
  switch (r.command) {
    case Command::kIfsDim:
      return IfsDim(r, checks, false);
    case Command::kUnivoqueDim:
      return r.spec ? IfsDim(r, checks, true) : BetaDim(r, checks);
    case Command::kBetaClassify:
      return BetaClassify(r);
    case Command::kBetaDim:
      return BetaDim(r, checks);
    case Command::kHoleDim:
      return HoleDim(r, checks);
    case Command::kCountCodings:
      return CountCodingsCommand(r, checks);
    case Command::kUkFamily:
      return UkFamily(r, checks);
    case Command::kVerify:
      break;
  }
  // verify: pick the analysis from the inputs given and force the oracle checks.
  Request v = r;
  v.verify = true;
  if (r.spec && r.x) return CountCodingsCommand(v, checks);
  if (r.spec) return IfsDim(v, checks, false);
  if (!r.poly.empty()) return BetaDim(v, checks);
  if (r.a || r.b) return HoleDim(v, checks);
  if (r.lambda && r.x) return CountCodingsCommand(v, checks);
  if (r.lambda) return UkFamily(v, checks);
  Fail(ErrorCode::kMalformedInput, "verify needs --spec, --poly, --a/--b or --lambda");
}

void Validate(const Request& r) {
  if (r.depth <= 0 || r.bound <= 0) Fail(ErrorCode::kMalformedInput, "--depth and --bound must be positive");
  if (!(r.tol > 0 && r.tol <= 1e-3)) Fail(ErrorCode::kMalformedInput, "--tol must lie in (0, 1e-3]");
}

uint64_t Fnv1a(const std::string& text) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string CommandName(Command c) {
  for (const auto& n : kCommands) {
    if (n.command == c) return n.name;
  }
  return "?";
}

std::optional<Command> ParseCommand(const std::string& name) {
  for (const auto& n : kCommands) {
    if (name == n.name) return n.command;
  }
  return std::nullopt;
}

Json RequestToJson(const Request& r) {
  Json j;
  j["command"] = CommandName(r.command);
  if (r.spec) j["spec"] = *r.spec;
  if (!r.poly.empty()) j["poly"] = r.poly;
  if (r.hint) j["hint"] = *r.hint;
  if (r.a) j["a"] = *r.a;
  if (r.b) j["b"] = *r.b;
  if (r.lambda) j["lambda"] = *r.lambda;
  if (r.x) j["x"] = *r.x;
  j["depth"] = r.depth;
  j["bound"] = r.bound;
  j["tol"] = r.tol;
  j["verify"] = r.verify;
  return j;
}

Request RequestFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("command")) Fail(ErrorCode::kMalformedInput, "request needs a command");
  Request r;
  auto cmd = ParseCommand(j["command"].get<std::string>());
  if (!cmd) Fail(ErrorCode::kMalformedInput, "unknown command " + j["command"].dump());
  r.command = *cmd;
  auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.contains("spec")) r.spec = j["spec"];
  if (j.contains("poly")) {
    if (j["poly"].is_string()) {
      std::stringstream ss(j["poly"].get<std::string>());
      for (std::string c; std::getline(ss, c, ',');) r.poly.push_back(c);
    } else {
      for (const auto& c : j["poly"]) r.poly.push_back(text(c));
    }
  }
  if (j.contains("hint")) r.hint = std::vector<std::string>{text(j["hint"].at(0)), text(j["hint"].at(1))};
  if (j.contains("a")) r.a = text(j["a"]);
  if (j.contains("b")) r.b = text(j["b"]);
  if (j.contains("lambda")) r.lambda = text(j["lambda"]);
  if (j.contains("x")) r.x = text(j["x"]);
  r.depth = j.value("depth", r.depth);
  r.bound = j.value("bound", r.bound);
  r.tol = j.value("tol", r.tol);
  r.verify = j.value("verify", r.verify);
  return r;
}

Response Run(const Request& request) {
  Response resp;
  Json& report = resp.report;
  report["request"] = RequestToJson(request);
  report["version"] = {{"fractal_sft", FRACTAL_SFT_VERSION}};
  report["bounds"] = {{"depth", request.depth},
                      {"bound", request.bound},
                      {"tol", request.tol},
                      {"oracle_tolerance", kOracleTolerance},
                      {"cylinder_budget", kCylinderBudget}};
  try {
    Validate(request);
    Checks checks;
    report["result"] = Dispatch(request, checks);
    if (request.verify || request.command == Command::kVerify) {
      report["verify"] = checks.Report();
      if (!checks.ok()) resp.exit_code = kVerifyFailed;
    }
  } catch (const Error& e) {
    resp.exit_code = e.kind() == ErrorKind::kInput ? kBadInput : kHypothesis;
    report["error"] = {{"code", std::string(ErrorCodeName(e.code()))}, {"kind", KindName(e.kind())}, {"message", e.what()}};
  } catch (const Json::exception& e) {
    resp.exit_code = kBadInput;
    report["error"] = {{"code", "MalformedInput"}, {"kind", "input"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    resp.exit_code = kHypothesis;
    report["error"] = {{"code", "Internal"}, {"kind", "internal"}, {"message", e.what()}};
  }
  report["exit_code"] = resp.exit_code;
  return resp;
}

std::string CacheKey(const Request& request) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(Fnv1a(RequestToJson(request).dump())));
  return buf;
}

Response RunCached(const Request& request, const std::string& cache_dir) {
  if (cache_dir.empty()) return Run(request);
  namespace fs = std::filesystem;
  fs::path path = fs::path(cache_dir) / (CacheKey(request) + ".json");
  std::error_code ec;
  if (fs::exists(path, ec)) {
    std::ifstream in(path);
    Json cached = Json::parse(in, nullptr, false);
    // A stale entry with a colliding key is ignored.
    if (!cached.is_discarded() && cached.value("request", Json()) == RequestToJson(request)) {
      return Response{cached.value("exit_code", 0), cached};
    }
  }
  Response resp = Run(request);
  if (resp.exit_code == kOk || resp.exit_code == kVerifyFailed) {
    fs::create_directories(cache_dir, ec);
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp);
      out << resp.report.dump(2) << "\n";
    }
    fs::rename(tmp, path, ec);
  }
  return resp;
}

std::vector<Response> RunSweep(const std::vector<Request>& requests, int threads, const std::string& cache_dir) {
  std::vector<Response> out(requests.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < requests.size(); i = next++) out[i] = RunCached(requests[i], cache_dir);
  };
  int n = std::max(1, std::min<int>(threads, static_cast<int>(requests.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace fractal_sft::cli
