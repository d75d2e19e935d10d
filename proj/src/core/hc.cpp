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

#include "core/hc.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "core/error.hpp"

namespace hcc {

namespace {

void RequireOddE(int e) {
  if (e < 3 || e % 2 == 0) FailInvalid("e must be odd and at least 3");
}

}  // namespace

std::pair<int, int> series_charge(int t, int e) {
  RequireOddE(e);
  if (t < 0) FailInvalid("2-core index must be non-negative");
  return {t + (1 - e) / 2, 0};
}

bool predict_weakly_cuspidal(const Partition& p, int e) {
  RequireOddE(e);
  const TwoCoreSplit split = two_core_split(p);
  return is_highest_weight(
      ChargedBipartition{split.quotient, series_charge(split.t, e)}, e);
}

ChargedBipartition hw_ancestor(const ChargedBipartition& v, int e) {
  ChargedBipartition cur = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < e && !moved; ++i) {
      if (auto up = remove_good_node(cur, e, i); up.has_value()) {
        cur = std::move(*up);
        moved = true;
      }
    }
  }
  return cur;
}

EcoreCheck cuspidal_ecore_check(const Partition& p, int e) {
  if (!predict_weakly_cuspidal(p, e)) {
    FailDomain("label is not predicted cuspidal");
  }
  const Partition core = e_core(p, e);
  int s = 0;
  if (is_staircase(core, &s)) return EcoreCheck{true, s};
  return EcoreCheck{false, std::nullopt};
}

std::optional<int> hecke_parameter_exponent(const Partition& p, int e) {
  return cuspidal_ecore_check(p, e).s;
}

Prediction predict_series(int n, int e) {
  RequireOddE(e);
  if (n < 0) FailInvalid("n must be non-negative");
  Prediction out;
  out.e = e;
  out.n = n;
  for (int t = 0;; ++t) {
    const int core_size = t * (t + 1) / 2;
    if (core_size > n) break;
    if ((n - core_size) % 2 != 0) continue;
    const int m = (n - core_size) / 2;
    const std::pair<int, int> charge = series_charge(t, e);
    std::map<std::string, SeriesPrediction> by_root;
    for (const Bipartition& b : bipartitions_of(m)) {
      const ChargedBipartition root =
          hw_ancestor(ChargedBipartition{b, charge}, e);
      const std::string key = format_bipartition(root.bipartition);
      auto [it, fresh] = by_root.try_emplace(key);
      SeriesPrediction& sp = it->second;
      if (fresh) {
        sp.t = t;
        sp.cuspidal = two_core_join(t, root.bipartition);
        const Partition core = e_core(sp.cuspidal, e);
        int s = 0;
        if (is_staircase(core, &s)) {
          sp.s = s;
        } else {
          sp.violations.push_back("e-core of predicted cuspidal " +
                                  format_partition(sp.cuspidal) + " is " +
                                  format_partition(core) +
                                  ", not a staircase");
        }
      }
      const Partition member = two_core_join(t, b);
      if (two_core_split(member).t != t) {
        FailDomain("2-core mismatch in series assembly");  // unreachable
      }
      sp.members.push_back(member);
    }
    std::vector<SeriesPrediction> block;
    block.reserve(by_root.size());
    for (auto& [key, sp] : by_root) block.push_back(std::move(sp));
    std::sort(block.begin(), block.end(),
              [](const SeriesPrediction& x, const SeriesPrediction& y) {
                return format_partition(x.cuspidal) <
                       format_partition(y.cuspidal);
              });
    for (auto& sp : block) {
      std::sort(sp.members.begin(), sp.members.end(),
                [](const Partition& x, const Partition& y) {
                  return format_partition(x) < format_partition(y);
                });
      out.series.push_back(std::move(sp));
    }
  }
  // The series must partition the degree-n labels.
  std::vector<Partition> covered;
  for (const auto& sp : out.series) {
    covered.insert(covered.end(), sp.members.begin(), sp.members.end());
  }
  std::sort(covered.begin(), covered.end());
  std::vector<Partition> all = partitions_of(n);
  std::sort(all.begin(), all.end());
  if (covered != all) FailDomain("series do not partition the labels");
  return out;
}

std::vector<Partition> weight_one_cuspidals(int t, int e) {
  RequireOddE(e);
  if (t < 0 || t > (e - 1) / 2) {
    FailInvalid("t must lie between 0 and (e-1)/2");
  }
  std::vector<Partition> out;
  {
    std::vector<int> parts;
    for (int v = t; v >= 2; --v) parts.push_back(v);
    parts.insert(parts.end(), t == 0 ? e : e + 1, 1);
    out.push_back(Partition(std::move(parts)));
  }
  if (t < (e - 1) / 2) {
    std::vector<int> parts;
    for (int v = t + 2; v >= 2; --v) parts.push_back(v);
    parts.insert(parts.end(), e - 2 * t - 2, 1);
    out.push_back(Partition(std::move(parts)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool steinberg_cuspidal(int n, int e) {
  RequireOddE(e);
  if (n < 0) FailInvalid("n must be non-negative");
  return n % e == 0 || n % e == 1;
}

SteinbergCheck steinberg_crystal_check(int m, int t, int e) {
  RequireOddE(e);
  if (m < 0 || t < 0) FailInvalid("m and t must be non-negative");
  std::vector<int> ones(m, 1);
  const ChargedBipartition v{
      Bipartition{Partition(), Partition(std::move(ones))},
      series_charge(t, e)};
  SteinbergCheck out;
  out.crystal_highest_weight = is_highest_weight(v, e);
  out.divisor_rule = (2 * m + t) % e == 0 || (2 * m + t) % e == 1;
  out.agree = out.crystal_highest_weight == out.divisor_rule;
  return out;
}

namespace {

std::string MemberLine(const SeriesPrediction& sp) {
  std::string line;
  for (const Partition& p : sp.members) {
    if (!line.empty()) line += ' ';
    line += format_partition(p);
  }
  return line;
}

}  // namespace

std::string to_text(const Prediction& p) {
  std::string out = "weak series prediction (conjectural)\n";
  out += "e: " + std::to_string(p.e) + "\n";
  out += "n: " + std::to_string(p.n) + "\n";
  out += "series: " + std::to_string(p.series.size()) + "\n";
  for (const auto& sp : p.series) {
    out += "cuspidal " + format_partition(sp.cuspidal) + " (degree " +
           std::to_string(sp.cuspidal.size()) + ", t=" + std::to_string(sp.t);
    if (sp.s.has_value()) {
      out += ", s=" + std::to_string(*sp.s) + ", Q=q^" +
             std::to_string(2 * *sp.s + 1);
    }
    out += ")";
    if (sp.cuspidal.size() == p.n) out += " [new]";
    out += ":\n  " + MemberLine(sp) + "\n";
    for (const std::string& v : sp.violations) {
      out += "  violation: " + v + "\n";
    }
  }
  return out;
}

std::string to_json(const Prediction& p) {
  nlohmann::ordered_json j;
  j["e"] = p.e;
  j["n"] = p.n;
  j["conjectural"] = true;
  j["series"] = nlohmann::ordered_json::array();
  for (const auto& sp : p.series) {
    nlohmann::ordered_json js;
    js["t"] = sp.t;
    js["cuspidal"] = format_partition(sp.cuspidal);
    js["cuspidal_degree"] = sp.cuspidal.size();
    js["new_cuspidal"] = sp.cuspidal.size() == p.n;
    if (sp.s.has_value()) {
      js["s"] = *sp.s;
      js["hecke_q_power"] = 2 * *sp.s + 1;
    } else {
      js["s"] = nullptr;
      js["hecke_q_power"] = nullptr;
    }
    js["members"] = nlohmann::ordered_json::array();
    for (const Partition& m : sp.members) js["members"].push_back(format_partition(m));
    js["violations"] = sp.violations;
    j["series"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string to_dot(const Prediction& p) {
  std::string out = "digraph series {\n  rankdir=TB;\n";
  for (int t = 0;; ++t) {
    const int core_size = t * (t + 1) / 2;
    if (core_size > p.n) break;
    if ((p.n - core_size) % 2 != 0) continue;
    const int m = (p.n - core_size) / 2;
    const CrystalGraph g = build_graph(series_charge(t, p.e), p.e, m);
    for (const auto& v : g.vertices()) {
      out += "  \"" + format_partition(two_core_join(t, v.bipartition)) +
             "\";\n";
    }
    for (const auto& edge : g.edges()) {
      out += "  \"" +
             format_partition(
                 two_core_join(t, g.vertices()[edge.from].bipartition)) +
             "\" -> \"" +
             format_partition(
                 two_core_join(t, g.vertices()[edge.to].bipartition)) +
             "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace hcc
