// Copyright 2026 The hccrystal Authors
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
//
// The named consistency checks behind the `verify` subcommand. Each check
// sweeps a documented parameter range, cross-validates independent routes to
// the same answer, and reports the first few counterexamples on failure.

#include "core/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/crystal.hpp"
#include "core/error.hpp"
#include "core/fixtures.hpp"
#include "core/hc.hpp"
#include "core/partition.hpp"
#include "core/symbol.hpp"

namespace hcc {
namespace {

// Collects expectation outcomes and renders the final one-block report.
class Reporter {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= kMaxShown) lines_.push_back("  counterexample: " + what);
  }

  CheckResult Finish(std::string_view name) const {
    std::ostringstream out;
    out << name << ": " << (failed_ == 0 ? "pass" : "FAIL") << " (" << checked_
        << " assertions";
    if (failed_ > 0) out << ", " << failed_ << " failed";
    out << ")";
    for (const std::string& line : lines_) out << "\n" << line;
    if (failed_ > kMaxShown) {
      out << "\n  ... " << (failed_ - kMaxShown)
          << " further counterexamples suppressed";
    }
    return CheckResult{failed_ == 0, out.str()};
  }

 private:
  static constexpr int kMaxShown = 5;
  int checked_ = 0;
  int failed_ = 0;
  std::vector<std::string> lines_;
};

std::vector<int> EValues(const CheckOptions& o, std::vector<int> def) {
  return o.e_values.empty() ? def : o.e_values;
}
int Cap(int value, int def) { return value > 0 ? value : def; }
int CapT(int value, int def) { return value >= 0 ? value : def; }

std::string Show(const Partition& p) { return format_partition(p); }
std::string Show(const Bipartition& b) { return format_bipartition(b); }
std::string Show(const ChargedBipartition& v) {
  std::ostringstream out;
  out << format_bipartition(v.bipartition) << " at charge (" << v.charge.first
      << "," << v.charge.second << ")";
  return out.str();
}

// Re-parse and re-format a display label so compact fixture notation
// ("31^2") compares equal to the canonical comma form ("3,1^2").
std::string NormalizePartitionLabel(const std::string& label) {
  return format_partition(parse_partition(label));
}
std::string NormalizeBipartitionLabel(const std::string& label) {
  return format_bipartition(parse_bipartition(label));
}

Partition Column(int m) { return Partition(std::vector<int>(m, 1)); }

// Iterates the canonical move to exhaustion; returns the terminal symbol.
Symbol CanonicalFixedPoint(const Symbol& start, int e) {
  Symbol cur = start;
  int guard = 0;
  while (auto op = canonical_op(cur, e)) {
    cur = apply_op(cur, op->kind, op->j, e);
    if (++guard > 10000) FailDomain("canonical move iteration did not stop");
  }
  return cur;
}

// --- example7.2: the pinned worked walkthrough ------------------------------

CheckResult CheckWorkedExample(std::string_view name, const CheckOptions&) {
  Reporter r;
  const int e = 3;
  const int t = 5;
  const Partition lambda = parse_partition("15,14,13,10^3,1");
  const Partition lambda2 = parse_partition("13^3,10^3,1");
  const Bipartition mu = parse_bipartition("5^3,4^2.6");
  const Bipartition mu2 = parse_bipartition("5^2,4^2.8,6");
  const std::pair<int, int> c{4, 0};

  r.Expect(beta_set(lambda, 9) == BetaSet{23, 21, 19, 15, 14, 13, 3, 1, 0},
           "beta numbers of " + Show(lambda) + " at size 9");
  const TwoCoreSplit split = two_core_split(lambda);
  r.Expect(split.t == t && split.quotient == mu,
           "two-core split of " + Show(lambda) + " gave t=" +
               std::to_string(split.t) + ", " + Show(split.quotient));
  r.Expect(two_core_join(t, mu) == lambda,
           "join of t=5 and " + Show(mu) + " is not " + Show(lambda));

  const Symbol s = make_symbol(mu, c);
  r.Expect(s.row1.entries_at_least(-2) ==
               std::vector<int>{9, 8, 7, 5, 4, -1, -2},
           "row 1 beads of the symbol of " + Show(mu));
  r.Expect(s.row2.entries_at_least(-2) == std::vector<int>{6, -1, -2},
           "row 2 beads of the symbol of " + Show(mu));

  const ChargedAbacus fused = fused_abacus(s, e);
  r.Expect(fused.entries_at_least(-2) ==
               std::vector<int>{21, 19, 17, 13, 12, 11, 1, -1, -2},
           "fused beads at or above -2");
  const BetaWindow window = beta_window(fused);
  r.Expect(window.beta == BetaSet{23, 21, 19, 15, 14, 13, 3, 1, 0},
           "beta window of the fused abacus");
  r.Expect(fused.partition() == lambda,
           "fused abacus partition is " + Show(fused.partition()));

  const auto op = canonical_op(s, e);
  r.Expect(op.has_value() && op->kind == OpKind::kFirstToSecond && op->j == 9,
           "canonical move should take 9 from row 1 to row 2");
  const Symbol s2 = apply_op(s, OpKind::kFirstToSecond, 9, e);
  r.Expect(s2.bipartition() == mu2,
           "moved symbol carries " + Show(s2.bipartition()));
  r.Expect(s2.charges() == std::pair<int, int>(3, 1),
           "moved symbol charges");

  const CoreShift shift = op_core_shift(t, OpKind::kFirstToSecond);
  r.Expect(shift.t_after == 3 && !shift.swapped,
           "core index after the move should be 3 without a component swap");
  r.Expect(two_core_join(3, mu2) == lambda2,
           "join of t=3 and " + Show(mu2) + " is not " + Show(lambda2));
  r.Expect(fused_abacus(s2, e).partition() == lambda2,
           "fused abacus after the move");
  r.Expect(remove_hook(lambda, HookRemoval{23, 3}, 9) == lambda2,
           "hook removal 23 -> 20 on the size-9 beta set");

  const Symbol terminal = CanonicalFixedPoint(s, e);
  r.Expect(fused_abacus(terminal, e).partition() == e_core(lambda, e),
           "terminal fused partition is not the 3-core of " + Show(lambda));
  return r.Finish(name);
}

// --- tables: the three frozen reference graphs ------------------------------

std::set<std::pair<std::string, std::string>> EdgeLabelSet(
    const CrystalGraph& g, const std::vector<std::string>& label) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& edge : g.edges())
    out.insert({label[edge.from], label[edge.to]});
  return out;
}

void CompareCrystalFixture(Reporter& r) {
  const ReferenceGraph& fix = reference_crystal_c00_e3();
  const CrystalGraph g = build_graph({0, 0}, 3, 3);

  std::vector<int> per_rank(4, 0);
  std::vector<std::string> labels;
  for (const auto& v : g.vertices()) {
    ++per_rank[v.rank];
    labels.push_back(v.label);
  }
  r.Expect(g.vertices().size() == 18 && per_rank == std::vector<int>{1, 2, 5, 10},
           "rank layer sizes of the charge (0,0) graph");

  for (std::size_t l = 0; l < fix.levels.size(); ++l) {
    std::vector<std::string> want;
    for (const std::string& lab : fix.levels[l])
      want.push_back(NormalizeBipartitionLabel(lab));
    std::sort(want.begin(), want.end());
    std::vector<std::string> got;
    for (const auto& v : g.vertices())
      if (v.rank == fix.level_ranks[l]) got.push_back(v.label);
    std::sort(got.begin(), got.end());
    r.Expect(got == want,
             "vertex labels at rank " + std::to_string(fix.level_ranks[l]));
  }

  std::set<std::pair<std::string, std::string>> want_edges;
  for (const auto& [from, to] : fix.edges)
    want_edges.insert(
        {NormalizeBipartitionLabel(from), NormalizeBipartitionLabel(to)});
  r.Expect(EdgeLabelSet(g, labels) == want_edges && g.edges().size() == 16,
           "edge set of the charge (0,0) graph");

  std::set<std::string> no_incoming(labels.begin(), labels.end());
  for (const auto& edge : g.edges()) no_incoming.erase(labels[edge.to]);
  std::set<std::string> below_top;
  bool hw_matches_indegree = true;
  for (const auto& v : g.vertices()) {
    const bool source = no_incoming.count(v.label) > 0;
    if (source && v.rank < g.max_rank()) below_top.insert(v.label);
    if (v.highest_weight != source) hw_matches_indegree = false;
  }
  r.Expect(hw_matches_indegree,
           "highest-weight flags should coincide with in-degree 0");
  r.Expect(below_top == std::set<std::string>{"-.-", "-.1"},
           "in-degree-0 vertices below the top rank");
  std::set<std::string> want_sources;
  for (const std::string& lab : fix.source_labels())
    want_sources.insert(NormalizeBipartitionLabel(lab));
  r.Expect(no_incoming == want_sources, "full in-degree-0 vertex set");
}

void CompareBranchingFixture(Reporter& r, int t, const ReferenceGraph& fix) {
  const int e = 3;
  const int depth = static_cast<int>(fix.levels.size()) - 1;
  const CrystalGraph g = build_graph(series_charge(t, e), e, depth);

  std::vector<std::string> label;
  for (const auto& v : g.vertices())
    label.push_back(Show(two_core_join(t, v.bipartition)));

  for (std::size_t l = 0; l < fix.levels.size(); ++l) {
    r.Expect(t * (t + 1) / 2 + 2 * static_cast<int>(l) == fix.level_ranks[l],
             "degree ladder of the index-" + std::to_string(t) + " graph");
    std::vector<std::string> want;
    for (const std::string& lab : fix.levels[l])
      want.push_back(NormalizePartitionLabel(lab));
    std::sort(want.begin(), want.end());
    std::vector<std::string> got;
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
      if (g.vertices()[i].rank == static_cast<int>(l)) got.push_back(label[i]);
    std::sort(got.begin(), got.end());
    r.Expect(got == want, "degree-" + std::to_string(fix.level_ranks[l]) +
                              " labels of the index-" + std::to_string(t) +
                              " graph");
  }

  std::set<std::pair<std::string, std::string>> want_edges;
  for (const auto& [from, to] : fix.edges)
    want_edges.insert(
        {NormalizePartitionLabel(from), NormalizePartitionLabel(to)});
  r.Expect(EdgeLabelSet(g, label) == want_edges,
           "edge set of the index-" + std::to_string(t) + " graph");
}

void ComparePrediction(Reporter& r) {
  // Expected grouping straight off the reference graphs: degree ->
  // root label -> members of that degree.
  std::map<int, std::map<std::string, std::set<std::string>>> want;
  for (const ReferenceGraph* fix :
       {&reference_branching_t1(), &reference_branching_t2()}) {
    for (std::size_t l = 0; l < fix->levels.size(); ++l) {
      for (const std::string& lab : fix->levels[l]) {
        want[fix->level_ranks[l]]
            [NormalizePartitionLabel(fix->root_of(lab))]
                .insert(NormalizePartitionLabel(lab));
      }
    }
  }

  const std::map<int, std::set<std::string>> want_new = {
      {1, {"1"}},
      {3, {"1^3", "2,1"}},
      {5, {}},
      {7, {"1^7", "3,2,1^2", "2^3,1"}},
  };

  for (int n : {1, 3, 5, 7}) {
    const Prediction pred = predict_series(n, 3);
    std::map<std::string, std::set<std::string>> got;
    std::set<std::string> got_new;
    for (const SeriesPrediction& sp : pred.series) {
      r.Expect(sp.violations.empty(),
               "series of " + Show(sp.cuspidal) + " at degree " +
                   std::to_string(n) + " reported violations");
      auto& members = got[Show(sp.cuspidal)];
      for (const Partition& m : sp.members) members.insert(Show(m));
      if (sp.cuspidal.size() == n) got_new.insert(Show(sp.cuspidal));
    }
    r.Expect(got == want[n],
             "series grouping at degree " + std::to_string(n));
    r.Expect(got_new == want_new.at(n),
             "new cuspidal labels at degree " + std::to_string(n));
  }
}

CheckResult CheckReferenceGraphs(std::string_view name, const CheckOptions&) {
  Reporter r;
  CompareCrystalFixture(r);
  CompareBranchingFixture(r, 1, reference_branching_t1());
  CompareBranchingFixture(r, 2, reference_branching_t2());
  ComparePrediction(r);
  return r.Finish(name);
}

// --- lemma7.2: fused abacus vs the join, on random instances ---------------

CheckResult CheckFusedJoinAgreement(std::string_view name,
                                    const CheckOptions& options) {
  Reporter r;
  const std::vector<int> es = EValues(options, {3, 5, 7});
  const int max_rank = Cap(options.max_rank, 12);
  const int max_t = CapT(options.max_t, 6);
  std::mt19937 rng(20260815);  // fixed seed: the sweep is reproducible
  for (int trial = 0; trial < 300; ++trial) {
    const int rank = std::uniform_int_distribution<int>(0, max_rank)(rng);
    const int first = std::uniform_int_distribution<int>(0, rank)(rng);
    const Bipartition b{random_partition(first, rng),
                        random_partition(rank - first, rng)};
    const int t = std::uniform_int_distribution<int>(0, max_t)(rng);
    const int e = es[std::uniform_int_distribution<std::size_t>(
        0, es.size() - 1)(rng)];
    const Symbol s = make_symbol(b, series_charge(t, e));
    const Partition via_abacus = fused_abacus(s, e).partition();
    const Partition via_join = two_core_join(t, b);
    r.Expect(via_abacus == via_join,
             "fused abacus of " + Show(b) + " (t=" + std::to_string(t) +
                 ", e=" + std::to_string(e) + ") carries " +
                 Show(via_abacus) + ", join gives " + Show(via_join));
  }
  return r.Finish(name);
}

// --- prop6.7: the two weight-1 cuspidal labels per index --------------------

CheckResult CheckWeightOneCuspidals(std::string_view name,
                                    const CheckOptions& options) {
  Reporter r;
  for (int e : EValues(options, {3, 5})) {
    for (int t = 0; t <= (e - 1) / 2; ++t) {
      const int n = t * (t + 1) / 2 + e;
      std::set<std::string> got;
      for (const Partition& p : partitions_of(n))
        if (e_weight(p, e) == 1 && predict_weakly_cuspidal(p, e))
          got.insert(Show(p));
      std::set<std::string> want;
      for (const Partition& p : weight_one_cuspidals(t, e))
        want.insert(Show(p));
      std::ostringstream what;
      what << "weight-1 cuspidal labels at degree " << n << " (e=" << e
           << ", t=" << t << "): got {";
      for (const std::string& g : got) what << " " << g;
      what << " }, expected {";
      for (const std::string& w : want) what << " " << w;
      what << " }";
      r.Expect(got == want, what.str());
    }
  }
  return r.Finish(name);
}

// --- prop7.5: the column family, three routes -------------------------------

CheckResult CheckSteinbergHighestWeightRule(std::string_view name,
                                            const CheckOptions& options) {
  Reporter r;
  for (int e : EValues(options, {3, 5, 7, 9})) {
    for (int t = 0; t <= 1; ++t) {
      for (int m = 0; m <= Cap(options.max_m, 25); ++m) {
        const ChargedBipartition v{Bipartition{Partition(), Column(m)},
                                   series_charge(t, e)};
        const bool hw = is_highest_weight(v, e);
        const bool periodic =
            is_totally_periodic(make_symbol(v.bipartition, v.charge), e);
        const bool rule =
            (2 * m + t) % e == 0 || (2 * m + t - 1) % e == 0;
        const SteinbergCheck sc = steinberg_crystal_check(m, t, e);
        r.Expect(hw == rule && periodic == rule && sc.agree &&
                     sc.crystal_highest_weight == hw,
                 "column of " + std::to_string(m) + " (t=" +
                     std::to_string(t) + ", e=" + std::to_string(e) +
                     "): crystal=" + std::to_string(hw) + ", periodic=" +
                     std::to_string(periodic) + ", divisor rule=" +
                     std::to_string(rule));
      }
    }
  }
  return r.Finish(name);
}

// --- thm7.6: cores of joined highest-weight labels are staircases -----------

CheckResult CheckCuspidalCoreStaircase(std::string_view name,
                                       const CheckOptions& options) {
  Reporter r;
  for (int e : EValues(options, {3, 5})) {
    for (int t = 0; t <= CapT(options.max_t, 3); ++t) {
      const std::pair<int, int> charge = series_charge(t, e);
      for (int m = 0; m <= Cap(options.max_rank, 6); ++m) {
        for (const Bipartition& b : bipartitions_of(m)) {
          const ChargedBipartition v{b, charge};
          if (!is_highest_weight(v, e)) continue;
          const Partition joined = two_core_join(t, b);
          const Partition core = e_core(joined, e);
          int s = -1;
          const bool stair = is_staircase(core, &s);
          r.Expect(stair, "core of " + Show(joined) + " (e=" +
                              std::to_string(e) + ") is " + Show(core) +
                              ", not a staircase");
          if (!stair) continue;
          const EcoreCheck ec = cuspidal_ecore_check(joined, e);
          r.Expect(ec.is_staircase && ec.s == s &&
                       hecke_parameter_exponent(joined, e) == s,
                   "parameter exponent of " + Show(joined));
          const Symbol terminal =
              CanonicalFixedPoint(make_symbol(b, charge), e);
          r.Expect(fused_abacus(terminal, e).partition() == core,
                   "terminal fused partition of " + Show(v) +
                       " differs from the core " + Show(core));
        }
      }
    }
  }
  return r.Finish(name);
}

// --- thm7.8: every component looks like an empty-root component -------------

CheckResult CheckComponentShiftIsomorphism(std::string_view name,
                                           const CheckOptions& options) {
  Reporter r;
  const int depth = 4;
  for (int e : EValues(options, {3, 5})) {
    std::map<int, CrystalGraph> reference;  // staircase index -> component
    for (int t = 0; t <= CapT(options.max_t, 3); ++t) {
      const std::pair<int, int> charge = series_charge(t, e);
      for (int m = 0; m <= Cap(options.max_rank, 6); ++m) {
        for (const Bipartition& b : bipartitions_of(m)) {
          const ChargedBipartition v{b, charge};
          if (!is_highest_weight(v, e)) continue;
          int s = -1;
          if (!is_staircase(e_core(two_core_join(t, b), e), &s)) {
            r.Expect(false, "core of the join of " + Show(v) +
                                " is not a staircase");
            continue;
          }
          auto [it, fresh] = reference.try_emplace(s);
          if (fresh) {
            it->second = build_component(
                ChargedBipartition{Bipartition{}, series_charge(s, e)}, e,
                depth);
          }
          const CrystalGraph comp = build_component(v, e, depth);
          const std::optional<int> d = iso_color_shift(comp, it->second);
          r.Expect(d.has_value(),
                   "no color shift maps the component of " + Show(v) +
                       " onto the empty-root component for s=" +
                       std::to_string(s));
        }
      }
    }
  }
  return r.Finish(name);
}

// --- lemma7.7: periodicity and signatures survive the moves -----------------

CheckResult CheckPeriodicityPreservation(std::string_view name,
                                         const CheckOptions& options) {
  Reporter r;
  for (int e : EValues(options, {3})) {
    for (int t = 0; t <= CapT(options.max_t, 3); ++t) {
      const std::pair<int, int> charge = series_charge(t, e);
      for (int m = 0; m <= Cap(options.max_rank, 5); ++m) {
        for (const Bipartition& b : bipartitions_of(m)) {
          const Symbol s = make_symbol(b, charge);
          if (!is_totally_periodic(s, e)) continue;
          for (OpKind kind :
               {OpKind::kFirstToSecond, OpKind::kSecondToFirst}) {
            for (int j : legal_ops(s, kind, e)) {
              const Symbol moved = apply_op(s, kind, j, e);
              r.Expect(is_totally_periodic(moved, e),
                       "moving " + std::to_string(j) + " in the symbol of " +
                           Show(b) + " (t=" + std::to_string(t) +
                           ") broke total periodicity");
            }
          }
          const auto op = canonical_op(s, e);
          if (!op) continue;
          const Symbol moved = apply_op(s, op->kind, op->j, e);
          const ChargedBipartition before{s.bipartition(), s.charges()};
          const ChargedBipartition after{moved.bipartition(), moved.charges()};
          for (int i = 0; i < e; ++i) {
            const ReducedWord w1 = reduced_word(before, e, i);
            const ReducedWord w2 = reduced_word(after, e, i);
            r.Expect(w1.alpha == w2.alpha && w1.beta == w2.beta,
                     "signature " + std::to_string(i) +
                         " changed under the canonical move on " + Show(b) +
                         " (t=" + std::to_string(t) + ")");
          }
        }
      }
    }
  }
  return r.Finish(name);
}

// --- prop7.9: siblings of distinct color have distinct cores ----------------

CheckResult CheckDistinctChildCores(std::string_view name,
                                    const CheckOptions& options) {
  Reporter r;
  for (int e : EValues(options, {3})) {
    for (int t = 0; t <= CapT(options.max_t, 3); ++t) {
      const std::pair<int, int> charge = series_charge(t, e);
      for (int m = 0; m <= Cap(options.max_rank, 6); ++m) {
        for (const Bipartition& b : bipartitions_of(m)) {
          const ChargedBipartition v{b, charge};
          std::vector<std::pair<int, Partition>> cores;
          for (int i = 0; i < e; ++i) {
            if (auto child = add_good_node(v, e, i)) {
              cores.emplace_back(
                  i, e_core(two_core_join(t, child->bipartition), e));
            }
          }
          for (std::size_t a = 0; a < cores.size(); ++a) {
            for (std::size_t c = a + 1; c < cores.size(); ++c) {
              r.Expect(cores[a].second != cores[c].second,
                       "children of " + Show(v) + " under colors " +
                           std::to_string(cores[a].first) + " and " +
                           std::to_string(cores[c].first) +
                           " share the core " + Show(cores[a].second));
            }
          }
        }
      }
    }
  }
  return r.Finish(name);
}

// --- registry ---------------------------------------------------------------

using CheckFn = CheckResult (*)(std::string_view, const CheckOptions&);

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

const NamedCheck kChecks[] = {
    {"example7.2", CheckWorkedExample},
    {"tables", CheckReferenceGraphs},
    {"lemma7.2", CheckFusedJoinAgreement},
    {"prop6.7", CheckWeightOneCuspidals},
    {"prop7.5", CheckSteinbergHighestWeightRule},
    {"thm7.6", CheckCuspidalCoreStaircase},
    {"lemma7.7", CheckPeriodicityPreservation},
    {"thm7.8", CheckComponentShiftIsomorphism},
    {"prop7.9", CheckDistinctChildCores},
};

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const NamedCheck& c : kChecks) out.push_back(c.name);
    return out;
  }();
  return names;
}

CheckResult run_check(std::string_view name, const CheckOptions& options) {
  for (const NamedCheck& c : kChecks)
    if (name == c.name) return c.fn(name, options);
  FailInvalid("unknown check: " + std::string(name));
}

}  // namespace hcc
