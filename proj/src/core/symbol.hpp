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

#ifndef HCCRYSTAL_CORE_SYMBOL_HPP_
#define HCCRYSTAL_CORE_SYMBOL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/partition.hpp"

namespace hcc {

/// A single-runner abacus: the bead positions are the integers
///   entry(j) = part_j - j + charge + 1,  j = 1, 2, ...
/// i.e. a partition shifted so that far enough down every position is a bead.
/// Canonical value type: (charge, partition) determines the bead set and
/// vice versa (charge = first bead - number of holes below it).
class ChargedAbacus {
 public:
  explicit ChargedAbacus(int charge, Partition partition = Partition());

  int charge() const { return charge_; }
  const Partition& partition() const { return partition_; }

  /// 1-based bead positions, strictly decreasing in j.
  int entry(int j) const;
  int max_entry() const { return entry(1); }
  /// Every position <= full_below() is a bead.
  int full_below() const { return charge_ - partition_.length(); }
  bool contains(int x) const;
  /// All bead positions >= lo, descending.
  std::vector<int> entries_at_least(int lo) const;

  /// Copy with a bead added at x (x must be a hole).
  ChargedAbacus with(int x) const;
  /// Copy with the bead at x removed (x must be a bead).
  ChargedAbacus without(int x) const;
  ChargedAbacus without_all(const std::vector<int>& xs) const;

  /// Abacus whose beads are `beads` (strictly decreasing, all >= floor) plus
  /// every integer below floor.
  static ChargedAbacus from_beads(const std::vector<int>& beads_desc,
                                  int floor);

  friend bool operator==(const ChargedAbacus&, const ChargedAbacus&) = default;

 private:
  int charge_;
  Partition partition_;
};

/// A two-row symbol: row 1 charged by c1 carries the first partition, row 2
/// charged by c2 the second. Displayed with row 2 above row 1.
struct Symbol {
  ChargedAbacus row1;
  ChargedAbacus row2;

  Bipartition bipartition() const {
    return Bipartition{row1.partition(), row2.partition()};
  }
  std::pair<int, int> charges() const { return {row1.charge(), row2.charge()}; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

Symbol make_symbol(const Bipartition& b, std::pair<int, int> charge);

/// Interleaves the two rows onto one runner (e odd): position 2j+e is a bead
/// iff j is in row 1, position 2j iff j is in row 2.
ChargedAbacus fused_abacus(const Symbol& s, int e);

/// A finite beta-set view of an abacus: beta = {x + shift : x bead, x >= -shift}
/// with shift the smallest even n >= max(2, -full_below()-1), so that every
/// position below -shift is a bead.
struct BetaWindow {
  BetaSet beta;
  int shift;
};
BetaWindow beta_window(const ChargedAbacus& a);

/// The two elementary moves on a symbol. Both shift one fused bead down by e.
enum class OpKind {
  kFirstToSecond,  // (value j: row 1 -> row 2); needs j in row1, j not in row2
  kSecondToFirst,  // (value j: row 2 -> row 1 as j-e); needs j-e not in row1
};

/// Applies the move at value j; domain error if its precondition fails.
Symbol apply_op(const Symbol& s, OpKind kind, int j, int e);

/// All values j at which the move is legal, descending. Always finite.
std::vector<int> legal_ops(const Symbol& s, OpKind kind, int e);

/// The canonical move: the first-to-second move at the largest eligible j;
/// if row 1 is contained in row 2, the second-to-first move at the largest
/// eligible j; none when the fused abacus is shift-stable (an e-core).
struct CanonicalOp {
  OpKind kind;
  int j;
};
std::optional<CanonicalOp> canonical_op(const Symbol& s, int e);

/// How a move changes the 2-core index t of the fused partition, and whether
/// the parity flip swaps the quotient components.
struct CoreShift {
  int t_after;
  bool swapped;
};
CoreShift op_core_shift(int t, OpKind kind);

/// An e-period: beads at the e consecutive values top, top-1, ..., top-e+1
/// (top = the symbol's largest entry), each taken in row 1 when present there
/// and row 2 otherwise, with the row sequence weakly decreasing (2s then 1s).
struct Period {
  struct Cell {
    int value;
    int row;    // 1 or 2
    int index;  // j with entry(j) == value in that row
  };
  std::vector<Cell> cells;
  int top() const { return cells.front().value; }
};
std::optional<Period> find_period(const Symbol& s, int e);

/// Removes the period's beads (charges drop accordingly).
Symbol remove_period(const Symbol& s, const Period& p);

/// True when repeatedly removing e-periods empties both partitions.
bool is_totally_periodic(const Symbol& s, int e);

/// Two-line picture, row 2 above row 1, shared tail elided as "...".
std::string render_symbol(const Symbol& s);
/// Ruler plus bead/hole line for one runner.
std::string render_abacus(const ChargedAbacus& a);

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_SYMBOL_HPP_
