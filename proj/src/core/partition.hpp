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

#ifndef HCCRYSTAL_CORE_PARTITION_HPP_
#define HCCRYSTAL_CORE_PARTITION_HPP_

#include <compare>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hcc {

/// An integer partition: weakly decreasing positive parts, canonical form
/// (no trailing zeros). Immutable value type.
class Partition {
 public:
  Partition() = default;
  /// Validates weak decrease and non-negativity; strips trailing zeros.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Sum of parts, |p|.
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// 1-based part access; parts beyond length() read as 0.
  int part(int j) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An ordered pair of partitions.
struct Bipartition {
  Partition first;
  Partition second;

  int rank() const { return first.size() + second.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// A beta-set: strictly decreasing non-negative integers, stored descending.
using BetaSet = std::vector<int>;

/// Smallest odd size >= length(p); the default beta-set size used wherever a
/// single canonical choice is needed (2-quotients, hook removal).
int canonical_beta_size(const Partition& p);

/// Beta-numbers of p with respect to a set of the given size:
/// entry_j = part_j + (size - j), 1 <= j <= size. Requires size >= length(p).
BetaSet beta_set(const Partition& p, int size);

/// Inverse of beta_set: sorts, validates distinct non-negative entries,
/// subtracts the staircase, strips zeros.
Partition partition_of_beta_set(BetaSet b);

/// The e-core: slide every beta-number down by multiples of e within its
/// residue class until no move is possible. Independent of beta-set size.
Partition e_core(const Partition& p, int e);

/// (|p| - |e_core(p)|) / e.
int e_weight(const Partition& p, int e);

/// The 2-quotient computed from an odd-cardinality beta-set: component one
/// collects the even beta-numbers (halved), component two the odd ones
/// ((x-1)/2). Independent of the (odd) beta-set size.
Bipartition two_quotient(const Partition& p);

/// The staircase partition (t, t-1, ..., 1); t = 0 gives the empty partition.
Partition staircase(int t);

/// The t with p == staircase(t), if any.
bool is_staircase(const Partition& p, int* t_out);

/// Decomposition of p into its 2-core index and normalized 2-quotient.
struct TwoCoreSplit {
  int t;                 // 2-core of p is staircase(t)
  Bipartition quotient;  // two_quotient(p), components swapped when t is odd
};
TwoCoreSplit two_core_split(const Partition& p);

/// Inverse of two_core_split: the unique partition with 2-core staircase(t)
/// and normalized 2-quotient q. |result| = t(t+1)/2 + 2*rank(q).
Partition two_core_join(int t, const Bipartition& q);

/// An e-hook designated on a beta-set: replace beta_entry by
/// beta_entry - length.
struct HookRemoval {
  int beta_entry;
  int length;
};

/// Removes the designated hook. beta_size selects the beta-set the entry
/// refers to (0 = canonical_beta_size). Errors if the entry is absent, the
/// target present, or the target negative.
Partition remove_hook(const Partition& p, HookRemoval hook, int beta_size = 0);

// --- text forms -----------------------------------------------------------
//
// Grammar: parts separated by commas, each "N" or "N^K" (K >= 1 copies);
// "-" denotes the empty partition; whitespace is ignored. Strings without a
// comma are also accepted in compact form, one digit per part ("421" or
// "21^3"), falling back to a single multi-digit part when the digit reading
// is not weakly decreasing ("15" is the partition (15)).
// A bipartition is "<first>.<second>".

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);
Bipartition parse_bipartition(std::string_view text);
std::string format_bipartition(const Bipartition& b);
/// "c1,c2" with optional signs, e.g. "-1,0".
std::pair<int, int> parse_charge_pair(std::string_view text);

// --- enumeration ----------------------------------------------------------

/// Number of partitions of n (n <= 120 supported; plenty for the sweeps).
long long partition_count(int n);
/// Number of bipartitions of n: sum_k p(k) * p(n-k).
long long bipartition_count(int n);
/// All partitions of n, decreasing-lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All bipartitions of total rank n, ordered by (first, second).
std::vector<Bipartition> bipartitions_of(int n);

/// Uniformly random partition of n (DP unranking; deterministic given rng).
Partition random_partition(int n, std::mt19937& rng);

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_PARTITION_HPP_
