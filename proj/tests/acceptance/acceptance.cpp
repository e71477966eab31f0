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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "fractal_sft/codings.hpp"
#include "fractal_sft/error.hpp"
#include "fractal_sft/oracle.hpp"

namespace fractal_sft {
namespace {

using testing::LoadFixture;

constexpr double kOracleTol = 0.05;

// Collects failed assertions and a short summary for one criterion.
class Ledger {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void Near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": got " << got << ", want " << want << " +- " << tol;
    Check(std::abs(got - want) <= tol, os.str());
  }
  void Note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  std::string id;
  std::string title;
  double seconds;  // runtime limit; 0 means none beyond the suite limit
  std::function<void(Ledger&)> body;
};

// Runs one item of a criterion under its own time limit.
template <typename F>
auto Timed(Ledger& l, const std::string& what, double limit, F&& f) {
  auto start = std::chrono::steady_clock::now();
  auto result = f();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s took %.3f s, limit %.0f s", what.c_str(), secs, limit);
  l.Check(secs < limit, buf);
  return result;
}

FieldElement Q(long p, long q = 1) { return FieldElement(NumberField::Rationals(), MakeRational(p, q)); }
BetaSystem Beta(const std::vector<long>& poly) { return MakeBetaSystem(Polynomial::FromInts(poly)); }
double LargestRoot(const std::vector<long>& poly) { return LargestRealRoot(Polynomial::FromInts(poly)).value; }

std::string Str(const BinaryMatrix& m) {
  std::string s;
  for (const auto& row : m) {
    if (!s.empty()) s += " ";
    for (int e : row) s += static_cast<char>('0' + e);
  }
  return s;
}

void SameMatrix(Ledger& l, const BinaryMatrix& got, const BinaryMatrix& want, const std::string& what) {
  l.Check(got == want, what + ": got " + Str(got) + ", reference " + Str(want));
}

std::vector<std::string> CodingStrings(const MultiplicityReport& m) {
  std::vector<std::string> out;
  for (const auto& w : m.codings) out.push_back(w.Canonical().ToString());
  std::sort(out.begin(), out.end());
  return out;
}

// Parry chain checks on one matrix.
void ParryChecks(Ledger& l, const AdjacencyMatrix& s, const std::string& name) {
  SccDecomposition scc = DecomposeScc(s.entries);
  if (s.size() == 0 || !scc.strongly_connected || !scc.has_cycle[0]) return;
  ParryChain p = ParryMeasure(s);
  int n = s.size();
  double total = 0;
  for (int i = 0; i < n; ++i) {
    double row = 0, flow = 0;
    for (int j = 0; j < n; ++j) {
      row += p.transition[i][j];
      flow += p.stationary[j] * p.transition[j][i];
    }
    l.Near(row, 1.0, 1e-12, name + " row " + std::to_string(i) + " sum");
    l.Near(flow, p.stationary[i], 1e-12, name + " stationary at " + std::to_string(i));
    total += p.stationary[i];
  }
  l.Near(total, 1.0, 1e-12, name + " stationary mass");
  l.Near(p.entropy, std::log(PerronRoot(s.entries).value), 1e-9, name + " entropy");
  // Cylinder masses by dynamic programming over the last vertex.
  std::vector<double> mass = p.stationary;
  for (int len = 1; len <= 8; ++len) {
    double sum = 0;
    for (double m : mass) sum += m;
    l.Near(sum, 1.0, 1e-9, name + " cylinders of length " + std::to_string(len));
    std::vector<double> next(n, 0.0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (s.entries[u][v]) next[v] += mass[u] * p.transition[u][v];
    mass = next;
  }
  l.Note(name + ": " + std::to_string(n) + " states, entropy " + std::to_string(p.entropy));
}

// x^5 - 6x^4 + 9x^3 - 8x^2 + 4x - 1.
const Polynomial kInhomogeneousQuintic = Polynomial::FromInts({-1, 4, -8, 9, -6, 1});
const std::vector<long> kTribonacci{-1, -1, -1, 1};
const std::vector<long> kGolden{-1, -1, 1};
const std::vector<long> kPisotQuartic{-1, 1, 0, -2, 1};
const std::vector<long> kUniqueOneQuartic{1, 0, -2, -1, 1};

void InhomogeneousUnivoque(Ledger& l) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("inhomogeneous_three_maps.json"));
  const SpectralResult& u = a.univoque;
  l.Check(u.perron_factor && *u.perron_factor == kInhomogeneousQuintic,
          "univoque polynomial " + (u.perron_factor ? u.perron_factor->ToString() : std::string("missing")));
  l.Check(u.log_base && *u.log_base == Q(9), "log base 9");
  double r = LargestRoot({-1, 4, -8, 9, -6, 1});
  l.Near(u.dimension, std::log(r) / std::log(9.0), 1e-12, "dim U = log r / log 9");
  double phi = Phi(MakeWeightedGraph(a.ifs, a.s_prime.pruned), u.dimension);
  l.Near(phi, 1.0, 1e-9, "Phi(dim U)");
  l.Note("dim U = " + std::to_string(u.dimension) + ", r = " + std::to_string(r));
}

void InhomogeneousAttractor(Ledger& l) {
  IfsAnalysis a = AnalyzeIfs(LoadFixture("inhomogeneous_three_maps.json"));
  GrowthEstimate box = BoxCountIfs(a.ifs, 8);
  l.Near(a.attractor.dimension, box.estimated_dimension, kOracleTol, "dim K against box count at level 8");
  l.Near(a.attractor.dimension, testing::derived::kInhomogeneousAttractor, 1e-9, "dim K against derived value");
  if (a.attractor.perron_factor) l.Note("attractor polynomial " + a.attractor.perron_factor->ToString());
  l.Note("dim K = " + std::to_string(a.attractor.dimension) + ", box count " + std::to_string(box.estimated_dimension));
}

void FourMapFamilyCriterion(Ledger& l) {
  UkFamilyReport r = AnalyzeFourMapFamily(Q(1, 10));
  IsolatedRoot root = PerronRoot(r.s_prime.pruned.entries);
  l.Check(root.poly % Polynomial::FromInts({2, -4, 1}) == Polynomial(), "x^2 - 4x + 2 divides " + root.poly.ToString());
  l.Near(root.value, 2 + std::sqrt(2.0), 1e-12, "perron root");
  double closed = std::log(2 + std::sqrt(2.0)) / std::log(10.0);
  l.Near(r.univoque.dimension, closed, 1e-10, "dim U_1 against log(2 + sqrt 2) / log 10");
  Ifs ifs = FourMapFamily(Q(1, 10));
  MultiplicityReport left = CountCodings(ifs, Q(29, 100));
  MultiplicityReport right = CountCodings(ifs, Q(3, 10));
  l.Check(left.verdict == Multiplicity::kExactly && left.count == 2, "3l - l^2: " + left.ToString());
  l.Check(right.verdict == Multiplicity::kExactly && right.count == 2, "3l: " + right.ToString());
  l.Check(CodingStrings(left) == std::vector<std::string>{"24(1)", "3(1)"}, "codings of 3l - l^2");
  l.Check(CodingStrings(right) == std::vector<std::string>{"2(4)", "31(4)"}, "codings of 3l");
}

void ReferenceMatrices(Ledger& l) {
  using namespace testing::reference;
  IfsAnalysis q4 = Timed(l, "three-map", 5, [] { return AnalyzeIfs(LoadFixture("three_maps_quarter.json")); });
  SameMatrix(l, q4.s.entries, kThreeMapsS, "three-map 4x4 S");
  SameMatrix(l, q4.s_prime.deleted.entries, kThreeMapsSPrime, "three-map 3x3 S'");
  UnivoqueAnalysis t = Timed(l, "tribonacci", 5, [] { return UnivoqueDimension(Beta(kTribonacci)); });
  SameMatrix(l, t.s.entries, kTribonacciS, "tribonacci 7x7 S");
  HoleAnalysis h = Timed(l, "periodic-word hole", 5, [] { return HolePartition(MakeHole(ParseHoleEndpoint("(01010)"), ParseHoleEndpoint("(10010)"))); });
  SameMatrix(l, h.s.entries, kPeriodicWordHoleS, "periodic-word hole 7x7 S");
  SameMatrix(l, h.s_prime.entries, kPeriodicWordHoleSPrime, "periodic-word hole 5x5 S'");
  if (h.s.entries != kPeriodicWordHoleS) {
    l.Note("block C = [9/31, 10/31) doubles onto [18/31, 20/31) = F; the reference rows send it to E");
    l.Note("the reference S' row C is empty; the doubling map gives 00010; see README");
  }
}

void BetaClassifications(Ledger& l) {
  SftClassification t = Timed(l, "tribonacci", 1, [] { return ClassifySft(Beta(kTribonacci)); });
  l.Check(t.kind == SftKind::kLeftEndpointHit && !t.is_sft(), "tribonacci: " + t.Name());
  l.Check(t.step == 2, "tribonacci step " + std::to_string(t.step));
  SftClassification p = Timed(l, "Pisot quartic", 1, [] { return ClassifySft(Beta(kPisotQuartic)); });
  l.Check(p.kind == SftKind::kRightEndpointHit && p.is_sft(), "Pisot quartic: " + p.Name());
  auto [one, c] = Timed(l, "unique-one quartic", 1, [] {
    BetaSystem u = Beta(kUniqueOneQuartic);
    ExpansionOfOne one = QuasiGreedyOne(u);
    return std::pair{one, ClassifySft(u, one)};
  });
  l.Check(!c.is_sft(), "unique-one quartic: " + c.Name());
  l.Check(!one.greedy_finite && one.greedy == one.quasi_greedy, "unique expansion of 1: " + one.greedy.ToString());
}

void BetaDimensions(Ledger& l) {
  double golden = LargestRoot(kGolden);
  for (const auto& [name, poly] : {std::pair{"tribonacci", kTribonacci}, std::pair{"Pisot quartic", kPisotQuartic}}) {
    BetaSystem sys = Beta(poly);
    UnivoqueAnalysis a = Timed(l, name, 10, [&] { return UnivoqueDimension(sys); });
    l.Near(a.dim.dimension, std::log(golden) / std::log(sys.beta.ToDouble()), 1e-9, std::string(name) + " log G / log beta");
  }
  BetaSystem u = Beta(kUniqueOneQuartic);
  UnivoqueAnalysis a = Timed(l, "unique-one quartic", 10, [&] { return UnivoqueDimension(u); });
  double r = LargestRoot({-2, -2, 0, 1});
  l.Near(a.dim.dimension, std::log(r) / std::log(u.beta.ToDouble()), 1e-9, "unique-one quartic log r / log beta");
  l.Near(a.dim.perron ? a.dim.perron->value : 0.0, 1.7693, 1e-4, "r against 1.7693");
  std::vector<std::vector<long>> multinacci{kTribonacci, {-1, -1, -1, -1, 1}, {-1, -1, -1, -1, -1, 1}};
  for (size_t n = 1; n < multinacci.size(); ++n) {
    double prev = LargestRoot(multinacci[n - 1]);
    BetaSystem sys = Beta(multinacci[n]);
    std::string name = "multinacci n=" + std::to_string(n + 3);
    UnivoqueAnalysis m = Timed(l, name, 10, [&] { return UnivoqueDimension(sys); });
    l.Near(m.dim.dimension, std::log(prev) / std::log(sys.beta.ToDouble()), 1e-9, name);
  }
}

void ThirtyFirstHole(Ledger& l) {
  Hole hole = MakeHole(MakeRational(1, 31), MakeRational(2, 31));
  SpectralResult r = SurvivorDimension(HolePartition(hole));
  Polynomial quartic = Polynomial::FromInts({-1, -1, -1, -1, 1});
  l.Check(r.perron_factor && *r.perron_factor == quartic,
          "survivor polynomial " + (r.perron_factor ? r.perron_factor->ToString() : std::string("missing")));
  double alpha = LargestRoot({-1, -1, -1, -1, 1});
  l.Near(r.dimension, std::log(alpha) / std::log(2.0), 1e-12, "dim J = log alpha / log 2");
  GrowthEstimate g = SurvivorCylinderCount(hole, 25);
  l.Near(g.estimated_dimension, r.dimension, kOracleTol, "cylinder count at n=25");
  l.Note("dim J = " + std::to_string(r.dimension) + ", cylinder count " + std::to_string(g.estimated_dimension));
}

// Irreducible S' as is; a reducible one through its dominant component.
void ParryOnMatrix(Ledger& l, const AdjacencyMatrix& s, const std::string& name) {
  if (s.size() == 0) return;
  if (DecomposeScc(s.entries).strongly_connected) {
    ParryChecks(l, s, name);
  } else {
    ParryChecks(l, DominantComponent(s), name + " dominant");
  }
}

void ParryProperties(Ledger& l) {
  size_t before = l.notes().size();
  for (const auto& c : testing::IfsCorpus()) ParryOnMatrix(l, AnalyzeIfs(LoadFixture(c.file)).s_prime.pruned, c.file);
  l.Check(l.notes().size() - before == testing::IfsCorpus().size(), "every IFS S' checked");
  before = l.notes().size();
  for (const auto& c : testing::BetaCorpus()) {
    UnivoqueAnalysis a = UnivoqueDimension(testing::MakeBeta(c));
    ParryOnMatrix(l, a.s_prime.pruned, c.name);
  }
  l.Check(l.notes().size() - before == testing::BetaCorpus().size(), "every beta S' checked");
  before = l.notes().size();
  for (const auto& c : testing::HoleCorpus()) {
    HoleAnalysis h = HolePartition(testing::MakeCaseHole(c));
    if (SurvivorDimension(h).dimension > 0) ParryOnMatrix(l, h.s_pruned, c.name);
  }
  l.Check(l.notes().size() - before >= 2, "survivor S' with positive entropy checked");
}

void PropertySuites(Ledger& l) {
  // Field axioms on random elements of the tribonacci field.
  FieldPtr field = NumberField::Make(Polynomial::FromInts(kTribonacci), Rational(1), Rational(2));
  std::mt19937_64 rng(20260116);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  auto random = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.push_back(MakeRational(num(rng), den(rng)));
    return FieldElement::FromCoeffs(field, c);
  };
  int axiom_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    FieldElement a = random(), b = random(), c = random();
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c ||
        (!a.IsZero() && a * a.Inverse() != FieldElement(field, 1))) {
      ++axiom_failures;
    }
  }
  l.Check(axiom_failures == 0, "field axioms failed on " + std::to_string(axiom_failures) + " of 1000 triples");

  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    l.Check(VerifyMarkovCovers(a.ifs, a.partition), c.file + " covers");
    l.Check(VerifyOpenSetCondition(a.ifs, a.partition, a.s), c.file + " open set condition");
    l.Check(a.univoque.dimension <= a.attractor.dimension, c.file + " dim U <= dim K");
  }
  for (long q : {5L, 10L, 20L}) {
    UkFamilyReport r = AnalyzeFourMapFamily(Q(1, q));
    Ifs ifs = FourMapFamily(Q(1, q));
    l.Check(VerifyMarkovCovers(ifs, r.partition), "four-map 1/" + std::to_string(q) + " covers");
    l.Check(VerifyOpenSetCondition(ifs, r.partition, r.s), "four-map 1/" + std::to_string(q) + " open set condition");
  }

  for (const auto& c : testing::BetaCorpus()) {
    BetaSystem sys = testing::MakeBeta(c);
    UnivoqueAnalysis a = UnivoqueDimension(sys);
    Ifs ifs = sys.AsIfs();
    l.Check(VerifyMarkovCovers(ifs, a.partition), c.name + " covers");
    l.Check(VerifyOpenSetCondition(ifs, a.partition, a.s), c.name + " open set condition");
    // G^k(1) + G^k(1 bar) = 1 / (beta - 1) until the orbit reaches the switch region.
    GreedyExpansion one = GreedyExpand(sys, sys.one, 60);
    GreedyExpansion bar = GreedyExpand(sys, sys.one_bar, 60);
    size_t n = std::min(one.orbit.size(), bar.orbit.size());
    for (size_t k = 0; k < n; ++k) {
      l.Check(one.orbit[k] + bar.orbit[k] == sys.domain_hi, c.name + " reflection at k=" + std::to_string(k));
      if (sys.Switch().Contains(one.orbit[k])) break;
    }
  }

  std::mt19937_64 paths(20260305);
  int commuted = 0;
  for (const auto& c : testing::HoleCorpus()) {
    HoleAnalysis h = HolePartition(testing::MakeCaseHole(c));
    int n = h.s.size();
    for (int trial = 0; trial < 250; ++trial) {
      std::vector<int> path{static_cast<int>(paths() % n)};
      while (path.size() < 24) {
        std::vector<int> next;
        for (int v = 0; v < n; ++v)
          if (h.s.entries[path.back()][v]) next.push_back(v);
        path.push_back(next[paths() % next.size()]);
      }
      std::string digits = ConjugacyDigits(h, path);
      std::vector<int> shifted(path.begin() + 1, path.end());
      bool ok = ConjugacyDigits(h, shifted) == digits.substr(1);
      l.Check(ok, c.name + " shift on path " + std::to_string(trial));
      commuted += ok;
    }
  }
  l.Check(commuted == 1000, "shift commutes on " + std::to_string(commuted) + " of 1000 paths");
  l.Note(std::to_string(l.checks()) + " exact checks");
}

void OracleCrossValidation(Ledger& l) {
  for (const auto& c : testing::IfsCorpus()) {
    IfsAnalysis a = AnalyzeIfs(LoadFixture(c.file));
    int level = 4;
    while (std::pow(static_cast<double>(a.ifs.size()), level + 1) <= 60000) ++level;
    l.Near(BoxCountIfs(a.ifs, level).estimated_dimension, a.attractor.dimension, kOracleTol, c.file + " K box count");
    l.Near(WeightedCoverCount(MakeWeightedGraph(a.ifs, a.s), 60).estimated_dimension, a.attractor.dimension,
           kOracleTol, c.file + " K weighted covers");
    l.Near(WeightedCoverCount(MakeWeightedGraph(a.ifs, a.s_prime.pruned), 60).estimated_dimension,
           a.univoque.dimension, kOracleTol, c.file + " U weighted covers");
  }
  UkFamilyReport uk = AnalyzeFourMapFamily(Q(1, 10));
  l.Near(CountSftWords(uk.s_prime.pruned.entries, 40, std::log(10.0)).estimated_dimension, uk.univoque.dimension,
         kOracleTol, "four-map U word count");
  for (const auto& c : testing::BetaCorpus()) {
    BetaSystem sys = testing::MakeBeta(c);
    UnivoqueAnalysis a = UnivoqueDimension(sys);
    l.Near(UniqueWordCountAdaptive(sys).estimated_dimension, a.dim.dimension, kOracleTol, c.name + " unique words");
  }
  for (const auto& c : testing::HoleCorpus()) {
    Hole hole = testing::MakeCaseHole(c);
    SpectralResult r = SurvivorDimension(HolePartition(hole));
    l.Near(SurvivorCylinderCountAdaptive(hole).estimated_dimension, r.dimension, kOracleTol, c.name + " cylinders");
  }
  l.Note(std::to_string(l.checks()) + " spectral results compared");
}

int RunAll() {
  std::vector<Criterion> criteria{
      {"AC1", "inhomogeneous three-map univoque dimension", 10, InhomogeneousUnivoque},
      {"AC2", "inhomogeneous three-map attractor against box count", 60, InhomogeneousAttractor},
      {"AC3", "four-map family: 2 + sqrt 2 and switch-point codings", 5, FourMapFamilyCriterion},
      {"AC4", "reference 0/1 matrices reproduced bit-exactly", 15, ReferenceMatrices},
      {"AC5", "beta classifications", 3, BetaClassifications},
      {"AC6", "univoque dimensions for beta", 50, BetaDimensions},
      {"AC7", "survivor set of the hole (1/31, 2/31)", 60, ThirtyFirstHole},
      {"AC8", "Parry measure on irreducible S'", 0, ParryProperties},
      {"AC9", "property suites", 0, PropertySuites},
      {"AC10", "oracle cross-validation of every spectral result", 0, OracleCrossValidation},
  };
  constexpr double kSuiteSeconds = 600;
  auto suite_start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger l;
    auto start = std::chrono::steady_clock::now();
    try {
      c.body(l);
    } catch (const std::exception& e) {
      l.Check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "runtime %.2f s over %.0f s", secs, c.seconds);
      l.Check(secs < c.seconds, buf);
    }
    std::printf("%-4s %s  %-55s %3d checks  %7.2f s\n", c.id.c_str(), l.ok() ? "PASS" : "FAIL", c.title.c_str(),
                l.checks(), secs);
    for (const auto& f : l.failures()) std::printf("       fail: %s\n", f.c_str());
    for (const auto& n : l.notes()) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
    failed += !l.ok();
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("total %.1f s (limit %.0f s), %d of %zu criteria failed\n", total, kSuiteSeconds, failed, criteria.size());
  return failed == 0 && total < kSuiteSeconds ? 0 : 1;
}

}  // namespace
}  // namespace fractal_sft

int main() { return fractal_sft::RunAll(); }
