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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/hc.hpp"
#include "core/partition.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

using hcc::Partition;
using hcc::Prediction;

Partition P(const std::string& text) { return hcc::parse_partition(text); }

std::set<std::string> Labels(const std::vector<Partition>& ps) {
  std::set<std::string> out;
  for (const Partition& p : ps) out.insert(hcc::format_partition(p));
  return out;
}

}  // namespace

TEST_SUITE("hc") {

TEST_CASE("chart charges") {
  CHECK(hcc::series_charge(0, 3) == std::pair<int, int>(-1, 0));
  CHECK(hcc::series_charge(1, 3) == std::pair<int, int>(0, 0));
  CHECK(hcc::series_charge(2, 3) == std::pair<int, int>(1, 0));
  CHECK(hcc::series_charge(0, 5) == std::pair<int, int>(-2, 0));
  CHECK(hcc::series_charge(3, 7) == std::pair<int, int>(0, 0));
  CHECK_THROWS_AS(hcc::series_charge(0, 4), hcc::Error);
  CHECK_THROWS_AS(hcc::series_charge(-1, 3), hcc::Error);
}

TEST_CASE("cuspidal predictions for small labels") {
  CHECK(hcc::predict_weakly_cuspidal(P("1"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("1^3"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("2,1"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("1^4"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("1^7"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("3,2,1^2"), 3));
  CHECK(hcc::predict_weakly_cuspidal(P("2^3,1"), 3));
  CHECK_FALSE(hcc::predict_weakly_cuspidal(P("2"), 3));
  CHECK_FALSE(hcc::predict_weakly_cuspidal(P("1,1"), 3));
  CHECK_FALSE(hcc::predict_weakly_cuspidal(P("3"), 3));
  CHECK_FALSE(hcc::predict_weakly_cuspidal(P("5"), 3));
}

TEST_CASE("highest-weight ancestors") {
  const hcc::ChargedBipartition v{hcc::parse_bipartition("1.-"), {0, 0}};
  const hcc::ChargedBipartition root{hcc::parse_bipartition("-.-"), {0, 0}};
  CHECK(hcc::hw_ancestor(v, 3) == root);
  const hcc::ChargedBipartition hw{hcc::parse_bipartition("-.1"), {0, 0}};
  CHECK(hcc::hw_ancestor(hw, 3) == hw);
}

TEST_CASE("e-core staircase checks and Hecke exponents") {
  const auto c1 = hcc::cuspidal_ecore_check(P("1^3"), 3);
  CHECK(c1.is_staircase);
  CHECK(c1.s == 0);
  CHECK(hcc::hecke_parameter_exponent(P("1^3"), 3) == 0);
  CHECK(hcc::hecke_parameter_exponent(P("2,1"), 3) == 0);
  CHECK(hcc::hecke_parameter_exponent(P("1^7"), 3) == 1);
  CHECK(hcc::hecke_parameter_exponent(P("3,2,1^2"), 3) == 1);
  CHECK(hcc::hecke_parameter_exponent(P("2^3,1"), 3) == 1);

  // (3,1) at e = 5 has a removable residue-1 node, so it is not predicted
  // cuspidal and the staircase check refuses it.
  CHECK_THROWS_AS(hcc::cuspidal_ecore_check(P("3,1"), 5), hcc::Error);
  CHECK_THROWS_AS(hcc::hecke_parameter_exponent(P("3,1"), 5), hcc::Error);
}

TEST_CASE("weight-one cuspidal families") {
  CHECK(Labels(hcc::weight_one_cuspidals(0, 3)) ==
        std::set<std::string>{"1^3", "2,1"});
  CHECK(Labels(hcc::weight_one_cuspidals(1, 3)) ==
        std::set<std::string>{"1^4"});
  CHECK(Labels(hcc::weight_one_cuspidals(0, 5)) ==
        std::set<std::string>{"1^5", "2,1^3"});
  CHECK(Labels(hcc::weight_one_cuspidals(1, 5)) ==
        std::set<std::string>{"1^6", "3,2,1"});
  CHECK(Labels(hcc::weight_one_cuspidals(2, 5)) ==
        std::set<std::string>{"2,1^6"});
  CHECK_THROWS_AS(hcc::weight_one_cuspidals(2, 3), hcc::Error);

  for (int e : {3, 5, 7}) {
    for (int t = 0; 2 * t <= e - 1; ++t) {
      for (const Partition& p : hcc::weight_one_cuspidals(t, e)) {
        CAPTURE(e);
        CAPTURE(t);
        CAPTURE(hcc::format_partition(p));
        CHECK(p.size() == t * (t + 1) / 2 + e);
        CHECK(hcc::e_weight(p, e) == 1);
      }
    }
  }
}

TEST_CASE("column labels follow the divisibility rule") {
  CHECK(hcc::steinberg_cuspidal(1, 3));
  CHECK(hcc::steinberg_cuspidal(3, 3));
  CHECK(hcc::steinberg_cuspidal(4, 3));
  CHECK_FALSE(hcc::steinberg_cuspidal(5, 3));
  CHECK(hcc::steinberg_cuspidal(6, 3));
  CHECK(hcc::steinberg_cuspidal(7, 3));
  CHECK_FALSE(hcc::steinberg_cuspidal(8, 3));
  CHECK(hcc::steinberg_cuspidal(5, 5));
  CHECK(hcc::steinberg_cuspidal(6, 5));
  CHECK_FALSE(hcc::steinberg_cuspidal(7, 5));

  for (int e : {3, 5}) {
    for (int n = 1; n <= 10; ++n) {
      CAPTURE(e);
      CAPTURE(n);
      CHECK(hcc::steinberg_cuspidal(n, e) ==
            hcc::predict_weakly_cuspidal(P("1^" + std::to_string(n)), e));
    }
  }

  const auto check = hcc::steinberg_crystal_check(3, 1, 3);
  CHECK(check.crystal_highest_weight);
  CHECK(check.divisor_rule);
  CHECK(check.agree);
  for (int e : {3, 5, 7}) {
    for (int t = 0; t <= 1; ++t) {
      for (int m = 0; m <= 10; ++m) {
        CAPTURE(e);
        CAPTURE(t);
        CAPTURE(m);
        CHECK(hcc::steinberg_crystal_check(m, t, e).agree);
      }
    }
  }
}

TEST_CASE("series grouping at small degrees") {
  const Prediction one = hcc::predict_series(1, 3);
  REQUIRE(one.series.size() == 1);
  CHECK(one.series[0].t == 1);
  CHECK(one.series[0].cuspidal == P("1"));
  CHECK(one.series[0].s == 1);
  CHECK(Labels(one.series[0].members) == std::set<std::string>{"1"});
  CHECK(one.series[0].violations.empty());

  const Prediction two = hcc::predict_series(2, 3);
  REQUIRE(two.series.size() == 1);
  CHECK(two.series[0].t == 0);
  CHECK(two.series[0].cuspidal.empty());
  CHECK(two.series[0].s == 0);
  CHECK(Labels(two.series[0].members) == std::set<std::string>{"2", "1^2"});

  const Prediction seven = hcc::predict_series(7, 3);
  REQUIRE(seven.series.size() == 6);
  std::map<std::string, std::set<std::string>> got;
  int member_total = 0;
  for (const auto& sp : seven.series) {
    got[hcc::format_partition(sp.cuspidal)] = Labels(sp.members);
    member_total += static_cast<int>(sp.members.size());
    CHECK(sp.violations.empty());
    for (const Partition& m : sp.members) {
      CHECK(hcc::two_core_split(m).t == sp.t);
    }
  }
  CHECK(member_total == 15);
  const std::map<std::string, std::set<std::string>> want = {
      {"1", {"7", "5,1^2", "3,2^2", "5,2"}},
      {"1^3", {"3^2,1", "4,2,1", "3,1^4", "2^2,1^3"}},
      {"2,1", {"6,1", "4,3", "4,1^3", "2,1^5"}},
      {"1^7", {"1^7"}},
      {"3,2,1^2", {"3,2,1^2"}},
      {"2^3,1", {"2^3,1"}},
  };
  CHECK(got == want);

  // Series are listed by (t, cuspidal label).
  for (size_t i = 0; i + 1 < seven.series.size(); ++i) {
    const auto& a = seven.series[i];
    const auto& b = seven.series[i + 1];
    CHECK(std::pair(a.t, a.cuspidal) < std::pair(b.t, b.cuspidal));
  }

  CHECK_THROWS_AS(hcc::predict_series(-1, 3), hcc::Error);
  CHECK_THROWS_AS(hcc::predict_series(3, 4), hcc::Error);
}

TEST_CASE("prediction renderers") {
  const Prediction seven = hcc::predict_series(7, 3);
  const std::string text = hcc::to_text(seven);
  CHECK(text.rfind("weak series prediction", 0) == 0);
  CHECK(text.find("cuspidal 1^7") != std::string::npos);
  CHECK(text.find("[new]") != std::string::npos);

  const nlohmann::json j = nlohmann::json::parse(hcc::to_json(seven));
  CHECK(j.at("e") == 3);
  CHECK(j.at("n") == 7);
  CHECK(j.at("series").size() == 6);

  const std::string dot = hcc::to_dot(seven);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"1^7\"") != std::string::npos);
}

}  // TEST_SUITE("hc")
