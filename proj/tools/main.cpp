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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

using fractal_sft::Json;
namespace cli = fractal_sft::cli;

struct Flags {
  std::string spec;
  std::string poly;
  std::vector<std::string> hint;
  std::string a, b, lambda, x;
  int depth = fractal_sft::kDefaultCodingDepth;
  int bound = fractal_sft::kDefaultBetaBound;
  double tol = cli::kDefaultTol;
  bool verify = false;
};

void AddRequestFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--spec", f.spec, "IFS spec JSON file");
  sub->add_option("--poly", f.poly, "ascending polynomial coefficients, comma separated");
  sub->add_option("--hint", f.hint, "isolating interval lo hi for the root")->expected(2);
  sub->add_option("--a", f.a, "left hole endpoint: p/q, decimal or binary word pre(period)");
  sub->add_option("--b", f.b, "right hole endpoint");
  sub->add_option("--lambda", f.lambda, "contraction ratio of the four-map family");
  sub->add_option("--x", f.x, "point to code: p/q or a JSON coefficient list");
  sub->add_option("--depth", f.depth, "coding enumeration depth");
  sub->add_option("--bound", f.bound, "orbit length bound for expansions of 1");
  sub->add_option("--tol", f.tol, "spectral solve tolerance, in (0, 1e-3]");
  sub->add_flag("--verify", f.verify, "run the brute-force cross-checks");
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

cli::Request BuildRequest(cli::Command command, const Flags& f) {
  cli::Request r;
  r.command = command;
  if (!f.spec.empty()) r.spec = ReadJsonFile(f.spec);
  if (!f.poly.empty()) {
    std::stringstream ss(f.poly);
    for (std::string c; std::getline(ss, c, ',');) r.poly.push_back(c);
  }
  if (!f.hint.empty()) r.hint = f.hint;
  if (!f.a.empty()) r.a = f.a;
  if (!f.b.empty()) r.b = f.b;
  if (!f.lambda.empty()) r.lambda = f.lambda;
  if (!f.x.empty()) r.x = f.x;
  r.depth = f.depth;
  r.bound = f.bound;
  r.tol = f.tol;
  r.verify = f.verify;
  return r;
}

int Emit(const Json& j, const std::string& json_out) {
  std::string text = j.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(json_out);
  if (!out) {
    std::cerr << "cannot write " << json_out << "\n";
    return cli::kBadInput;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractal-sft: exact dimensions of self-similar sets, univoque sets and survivor sets"};
  app.require_subcommand(0, 1);
  std::string json_out, cache_dir, sweep;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--json-out", json_out, "write the report here instead of stdout");
  app.add_option("--cache-dir", cache_dir, "result cache directory (FRACTAL_SFT_CACHE overrides)");
  app.add_option("--sweep", sweep, "JSON file with an array of requests, run in parallel");
  app.add_option("--threads", threads, "worker threads for --sweep")->check(CLI::PositiveNumber);

  Flags flags;
  std::vector<std::pair<CLI::App*, cli::Command>> subs;
  const std::pair<const char*, const char*> kHelp[] = {
      {"ifs-dim", "attractor and univoque dimension of an exactly overlapping IFS"},
      {"univoque-dim", "univoque dimension for an IFS (--spec) or a beta (--poly)"},
      {"beta-classify", "whether the univoque set of beta is a subshift of finite type"},
      {"beta-dim", "univoque set of beta: partition, matrices and dimension"},
      {"hole-dim", "survivor set of the doubling map with hole [a, b)"},
      {"count-codings", "number of codings of a point"},
      {"uk-family", "the four-map family f_i = lambda x + a_i"},
      {"verify", "any of the above with every brute-force check"},
  };
  for (const auto& [name, help] : kHelp) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--json-out", json_out, "write the report here instead of stdout");
    sub->add_option("--cache-dir", cache_dir, "result cache directory");
    AddRequestFlags(sub, flags);
    subs.emplace_back(sub, *cli::ParseCommand(name));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kOk : cli::kBadInput;
  }

  if (const char* env = std::getenv("FRACTAL_SFT_CACHE")) cache_dir = env;

  try {
    if (!sweep.empty()) {
      Json list = ReadJsonFile(sweep);
      if (!list.is_array()) throw std::runtime_error("--sweep file must hold a JSON array");
      std::vector<cli::Request> requests;
      for (const auto& item : list) requests.push_back(cli::RequestFromJson(item));
      auto results = cli::RunSweep(requests, threads, cache_dir);
      Json out = Json::array();
      int code = cli::kOk;
      for (const auto& r : results) {
        out.push_back(r.report);
        code = std::max(code, r.exit_code);
      }
      int io = Emit(out, json_out);
      return io ? io : code;
    }
    for (const auto& [sub, command] : subs) {
      if (!sub->parsed()) continue;
      auto resp = cli::RunCached(BuildRequest(command, flags), cache_dir);
      int io = Emit(resp.report, json_out);
      return io ? io : resp.exit_code;
    }
  } catch (const std::exception& e) {
    Json err = {{"error", {{"code", "MalformedInput"}, {"kind", "input"}, {"message", e.what()}}}, {"exit_code", 1}};
    Emit(err, json_out);
    return cli::kBadInput;
  }
  std::cout << app.help();
  return cli::kBadInput;
}
