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

#ifndef HCCRYSTAL_CORE_HC_HPP_
#define HCCRYSTAL_CORE_HC_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/crystal.hpp"
#include "core/partition.hpp"

namespace hcc {

/// The charge pair (t + (1-e)/2, 0) that places the graphs for 2-core index
/// t. Requires e odd, e >= 3.
std::pair<int, int> series_charge(int t, int e);

/// Predicted: the labeled module is weakly cuspidal iff the charged vertex of
/// its 2-core split is highest weight.
bool predict_weakly_cuspidal(const Partition& p, int e);

/// The hw vertex reached from v by exhausting good-removable moves.
ChargedBipartition hw_ancestor(const ChargedBipartition& v, int e);

/// e-core shape test for a predicted-cuspidal label.
struct EcoreCheck {
  bool is_staircase;
  std::optional<int> s;  // the staircase index when is_staircase
};
EcoreCheck cuspidal_ecore_check(const Partition& p, int e);

/// The exponent s with predicted Hecke parameter q^(2s+1); nullopt (a
/// violation worth reporting, never expected) when the e-core of the
/// predicted-cuspidal label is not a staircase.
std::optional<int> hecke_parameter_exponent(const Partition& p, int e);

/// One predicted weak series at degree n.
struct SeriesPrediction {
  int t = 0;                        // shared 2-core index of the members
  Partition cuspidal;               // predicted cuspidal label, degree <= n
  std::optional<int> s;             // staircase index of its e-core
  std::vector<Partition> members;   // the degree-n labels in this series
  std::vector<std::string> violations;  // expected empty
};

/// Grouping of all degree-n labels into predicted weak series.
struct Prediction {
  int e = 0;
  int n = 0;
  std::vector<SeriesPrediction> series;  // ordered by (t, cuspidal label)
};
Prediction predict_series(int n, int e);

/// The predicted weight-1 cuspidal labels of degree t(t+1)/2 + e for
/// 0 <= t <= (e-1)/2: one label at the top t, two otherwise.
std::vector<Partition> weight_one_cuspidals(int t, int e);

/// Predicted: the degree-n label 1^n is cuspidal iff e | n or e | n-1.
bool steinberg_cuspidal(int n, int e);

/// Both routes to the 1^n family statement: the crystal test on
/// (-, 1^m) at series_charge(t, e) and the divisibility rule on 2m + t.
struct SteinbergCheck {
  bool crystal_highest_weight;
  bool divisor_rule;
  bool agree;
};
SteinbergCheck steinberg_crystal_check(int m, int t, int e);

std::string to_text(const Prediction& p);
std::string to_json(const Prediction& p);
/// Branching-graph view: every label of degree <= n linked to its children,
/// one rooted tree-like component per predicted cuspidal.
std::string to_dot(const Prediction& p);

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_HC_HPP_
