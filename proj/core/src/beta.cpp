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

#include "fractal_sft/beta.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "fractal_sft/error.hpp"

namespace fractal_sft {

Ifs BetaSystem::AsIfs() const {
  FieldElement inv = beta.Inverse();
  std::vector<AffineMap> maps{AffineMap{inv, FieldElement(field, 0)}, AffineMap{inv, inv}};
  return MakeIfs(field, std::move(maps), {"0", "1"});
}

BetaSystem MakeBetaSystem(FieldPtr field) {
  BetaSystem sys;
  sys.field = field;
  sys.beta = FieldElement::Generator(field);
  FieldElement one(field, 1);
  FieldElement two(field, 2);
  if (sys.beta <= one || sys.beta >= two) {
    Fail(ErrorCode::kOutOfDomain, "base must lie strictly between 1 and 2, got " + sys.beta.ToString());
  }
  sys.one = one;
  sys.domain_hi = (sys.beta - one).Inverse();
  sys.switch_lo = sys.beta.Inverse();
  sys.switch_hi = sys.switch_lo * sys.domain_hi;
  sys.one_bar = (two - sys.beta) * sys.domain_hi;
  return sys;
}

BetaSystem MakeBetaSystem(const Polynomial& poly, std::optional<std::pair<Rational, Rational>> hint) {
  if (hint) return MakeBetaSystem(NumberField::Make(poly, hint->first, hint->second));
  IsolatedRoot r = LargestRealRoot(poly);
  return MakeBetaSystem(NumberField::Make(poly, r.lo, r.hi));
}

bool AboveGoldenMean(const BetaSystem& sys) {
  return (sys.beta * sys.beta - sys.beta - sys.one).Sign() > 0;
}

int GreedyDigit(const BetaSystem& sys, const FieldElement& x) { return x >= sys.switch_lo ? 1 : 0; }

FieldElement GreedyMap(const BetaSystem& sys, const FieldElement& x) {
  FieldElement y = sys.beta * x;
  return GreedyDigit(sys, x) == 1 ? y - sys.one : y;
}

PeriodicWord GreedyExpansion::Word() const {
  if (!cycle_start) throw std::logic_error("greedy expansion has no detected cycle");
  return PeriodicWord(digits.substr(0, *cycle_start), digits.substr(*cycle_start, cycle_end - *cycle_start))
      .Canonical();
}

namespace {

void CheckDomain(const BetaSystem& sys, const FieldElement& x) {
  if (x.Sign() < 0 || x > sys.domain_hi) Fail(ErrorCode::kOutOfDomain, x.ToString() + " lies outside the domain");
}

bool InOpenSwitch(const BetaSystem& sys, const FieldElement& x) { return sys.switch_lo < x && x < sys.switch_hi; }

// Greedy orbit that stops at cycles and, when cut_at_switch is set, at the
// first point strictly inside the switch region.
GreedyExpansion Walk(const BetaSystem& sys, const FieldElement& x, int n, bool cut_at_switch) {
  CheckDomain(sys, x);
  GreedyExpansion e;
  // Reduced coefficients are canonical, so lexicographic order on them finds
  // repeats without any sign tests.
  std::map<std::vector<Rational>, int> seen;
  FieldElement cur = x;
  e.orbit.push_back(cur);
  seen.emplace(cur.coeffs(), 0);
  for (int i = 1; i <= n; ++i) {
    if (cut_at_switch && InOpenSwitch(sys, cur)) break;
    e.digits.push_back(static_cast<char>('0' + GreedyDigit(sys, cur)));
    cur = GreedyMap(sys, cur);
    auto it = seen.find(cur.coeffs());
    if (it != seen.end()) {
      e.cycle_start = it->second;
      e.cycle_end = i;
      break;
    }
    e.orbit.push_back(cur);
    seen.emplace(cur.coeffs(), i);
  }
  return e;
}

FieldElement PeriodValue(const BetaSystem& sys, const std::string& digits) {
  FieldElement inv = sys.beta.Inverse();
  FieldElement acc(sys.field, 0);
  FieldElement scale = inv;
  for (char c : digits) {
    if (c == '1') acc += scale;
    scale *= inv;
  }
  return acc;
}

}  // namespace

GreedyExpansion GreedyExpand(const BetaSystem& sys, const FieldElement& x, int n) {
  if (n < 1) Fail(ErrorCode::kMalformedInput, "digit count must be positive");
  return Walk(sys, x, n, false);
}

FieldElement WordValue(const BetaSystem& sys, const PeriodicWord& word) {
  FieldElement inv = sys.beta.Inverse();
  FieldElement head = PeriodValue(sys, word.preperiod());
  FieldElement tail = PeriodValue(sys, word.period()) / (sys.one - inv.Pow(static_cast<int>(word.period().size())));
  return head + inv.Pow(static_cast<int>(word.preperiod().size())) * tail;
}

ExpansionOfOne QuasiGreedyOne(const BetaSystem& sys, int bound) {
  if (bound < 1) Fail(ErrorCode::kMalformedInput, "bound must be positive");
  ExpansionOfOne out;
  out.bound = bound;
  GreedyExpansion g = Walk(sys, sys.one, bound, false);
  out.greedy_prefix = g.digits;
  if (!g.periodic()) {
    out.orbit_values.assign(g.orbit.begin() + 1, g.orbit.end());
    return out;
  }
  out.resolved = true;
  out.greedy = g.Word();
  out.greedy_finite = out.greedy.period() == "0";
  if (!out.greedy_finite) {
    out.quasi_greedy = out.greedy;
    out.orbit_values.assign(g.orbit.begin() + 1, g.orbit.end());
    return out;
  }
  std::string head = out.greedy.preperiod();
  head.back() = '0';
  out.quasi_greedy = PeriodicWord("", head).Canonical();
  size_t n = head.size();
  for (size_t i = 1; i <= n; ++i) out.orbit_values.push_back(WordValue(sys, out.quasi_greedy.Shift(i)));
  return out;
}

std::string SftKindName(SftKind kind) {
  switch (kind) {
    case SftKind::kInteriorHit:
      return "SFT_InteriorHit";
    case SftKind::kRightEndpointHit:
      return "SFT_RightEndpointHit";
    case SftKind::kLeftEndpointHit:
      return "NotSFT_LeftEndpointHit";
    case SftKind::kNeverHits:
      return "NotSFT_NeverHits";
    case SftKind::kUnresolved:
      return "Unresolved";
  }
  return "?";
}

std::string SftClassification::Name() const {
  if (kind == SftKind::kNeverHits) return SftKindName(kind);
  return SftKindName(kind) + "(" + std::to_string(step) + ")";
}

SftClassification ClassifySft(const BetaSystem& sys, const ExpansionOfOne& one) {
  if (!AboveGoldenMean(sys)) {
    Fail(ErrorCode::kBetaTooSmall, "univoque set is {0, 1/(beta-1)} at or below the golden mean");
  }
  SftClassification c;
  for (size_t k = 0; k < one.orbit_values.size(); ++k) {
    const FieldElement& q = one.orbit_values[k];
    int step = static_cast<int>(k) + 1;
    if (q == sys.switch_lo) return {SftKind::kLeftEndpointHit, step};
    if (q == sys.switch_hi) {
      if (!one.greedy_finite) throw std::logic_error("right endpoint hit with an infinite greedy expansion of 1");
      return {SftKind::kRightEndpointHit, step};
    }
    if (InOpenSwitch(sys, q)) return {SftKind::kInteriorHit, step};
  }
  if (one.resolved) return {SftKind::kNeverHits, 0};
  c.kind = SftKind::kUnresolved;
  c.step = one.bound;
  return c;
}

SftClassification ClassifySft(const BetaSystem& sys, int bound) { return ClassifySft(sys, QuasiGreedyOne(sys, bound)); }

UnivoqueAnalysis UnivoqueDimension(const BetaSystem& sys, int bound) {
  if (!AboveGoldenMean(sys)) {
    Fail(ErrorCode::kDegenerateUnivoque, "univoque set is {0, 1/(beta-1)} at or below the golden mean");
  }
  UnivoqueAnalysis a;
  a.one = QuasiGreedyOne(sys, bound);
  a.classification = ClassifySft(sys, a.one);
  a.orbit_one = Walk(sys, sys.one, bound, true);
  a.orbit_one_bar = Walk(sys, sys.one_bar, bound, true);
  auto cut = [&](const GreedyExpansion& e) { return InOpenSwitch(sys, e.orbit.back()); };
  a.interior_hit = cut(a.orbit_one) || cut(a.orbit_one_bar);
  for (const auto* e : {&a.orbit_one, &a.orbit_one_bar}) {
    if (!e->periodic() && !cut(*e)) {
      Fail(ErrorCode::kOrbitNotEventuallyPeriodic,
           "greedy orbit of " + e->orbit.front().ToString() + " not periodic within " + std::to_string(bound) +
               " steps");
    }
  }
  if (a.interior_hit) {
    a.warnings.push_back("orbit of 1 enters the open switch region; partition cut at the entry point");
  } else if (a.classification.kind == SftKind::kRightEndpointHit) {
    a.warnings.push_back("right endpoint hit: 1 has a finite greedy expansion; the closing block keeps its out-edges");
  }

  std::set<FieldElement, FieldLess> points{FieldElement(sys.field, 0), sys.switch_lo, sys.switch_hi, sys.one,
                                           sys.domain_hi};
  for (const auto& v : a.orbit_one.orbit) points.insert(v);
  for (const auto& v : a.orbit_one_bar.orbit) points.insert(v);
  std::vector<FieldElement> breakpoints(points.begin(), points.end());

  Ifs ifs = sys.AsIfs();
  a.partition = BuildPartition(ifs, breakpoints, {sys.Switch()}, MapChoice::kGreedy);
  a.s = Adjacency(a.partition);
  a.s_prime = PruneSwitch(a.partition, a.s);

  std::vector<bool> keep(a.partition.blocks.size());
  for (size_t r = 0; r < keep.size(); ++r) keep[r] = a.partition.blocks[r].hi <= sys.one;
  a.unit_partition = RestrictPartition(a.partition, keep);
  a.unit_s = Adjacency(a.unit_partition);
  a.unit_s_prime = PruneSwitch(a.unit_partition, a.unit_s);

  FieldElement weight = sys.beta.Inverse();
  a.dim = SolvePhi(UniformWeightedGraph(a.unit_s_prime.pruned, weight));
  a.full_dim = SolvePhi(UniformWeightedGraph(a.s_prime.pruned, weight));
  if (std::abs(a.dim.dimension - a.full_dim.dimension) > 1e-9) {
    a.warnings.push_back("dimension on [0,1] differs from the full-domain value");
  }
  for (const auto& w : a.partition.warnings) a.warnings.push_back(w);
  return a;
}

bool IsUniqueCoding(const PeriodicWord& word, const ExpansionOfOne& one) {
  if (!one.resolved) Fail(ErrorCode::kQuasiGreedyUnresolved, "quasi-greedy expansion of 1 is not eventually periodic");
  for (char c : word.preperiod() + word.period()) {
    if (c != '0' && c != '1') Fail(ErrorCode::kMalformedWord, "digits must be 0 or 1");
  }
  size_t span = word.preperiod().size() + word.period().size();
  for (size_t k = 1; k <= span; ++k) {
    PeriodicWord tail = word.Shift(k);
    if (word.At(k - 1) == '1') tail = tail.Reflect();
    if (CompareWords(tail, one.quasi_greedy) >= 0) return false;
  }
  return true;
}

bool IsUniqueCoding(const PeriodicWord& word, const BetaSystem& sys, int bound) {
  return IsUniqueCoding(word, QuasiGreedyOne(sys, bound));
}

}  // namespace fractal_sft
