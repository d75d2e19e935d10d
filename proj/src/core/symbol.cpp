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

#include "core/symbol.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace hcc {

namespace {

// ceil(a / 2) for possibly negative a.
int CeilHalf(int a) { return a >= 0 ? (a + 1) / 2 : a / 2; }

void RequireOddE(int e) {
  if (e < 3 || e % 2 == 0) FailInvalid("e must be odd and at least 3");
}

}  // namespace

ChargedAbacus::ChargedAbacus(int charge, Partition partition)
    : charge_(charge), partition_(std::move(partition)) {}

int ChargedAbacus::entry(int j) const {
  if (j < 1) FailInvalid("abacus entries are 1-based");
  return partition_.part(j) - j + charge_ + 1;
}

bool ChargedAbacus::contains(int x) const {
  if (x <= full_below()) return true;
  for (int j = 1; j <= partition_.length(); ++j) {
    const int e = entry(j);
    if (e == x) return true;
    if (e < x) return false;
  }
  return false;
}

std::vector<int> ChargedAbacus::entries_at_least(int lo) const {
  std::vector<int> out;
  for (int j = 1;; ++j) {
    const int e = entry(j);
    if (e < lo) break;
    out.push_back(e);
  }
  return out;
}

ChargedAbacus ChargedAbacus::from_beads(const std::vector<int>& beads_desc,
                                        int floor) {
  const int n = static_cast<int>(beads_desc.size());
  for (int i = 0; i < n; ++i) {
    if (beads_desc[i] < floor) FailInvalid("bead below the window floor");
    if (i > 0 && beads_desc[i] >= beads_desc[i - 1]) {
      FailInvalid("beads must be strictly decreasing");
    }
  }
  if (n == 0) return ChargedAbacus(floor - 1);
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) {
    // Holes below bead i: positions in [floor, bead) minus the beads there.
    parts[i] = (beads_desc[i] - floor) - (n - 1 - i);
  }
  Partition p(std::move(parts));
  const int charge = beads_desc[0] - p.part(1);
  return ChargedAbacus(charge, std::move(p));
}

ChargedAbacus ChargedAbacus::with(int x) const {
  if (contains(x)) FailDomain("abacus already has a bead at that position");
  const int floor = std::min(x, full_below() + 1);
  std::vector<int> beads = entries_at_least(floor);
  beads.insert(std::upper_bound(beads.begin(), beads.end(), x,
                                std::greater<int>()),
               x);
  return from_beads(beads, floor);
}

ChargedAbacus ChargedAbacus::without(int x) const {
  if (!contains(x)) FailDomain("abacus has no bead at that position");
  const int floor = std::min(x, full_below() + 1);
  std::vector<int> beads = entries_at_least(floor);
  beads.erase(std::find(beads.begin(), beads.end(), x));
  return from_beads(beads, floor);
}

ChargedAbacus ChargedAbacus::without_all(const std::vector<int>& xs) const {
  ChargedAbacus a = *this;
  for (int x : xs) a = a.without(x);
  return a;
}

Symbol make_symbol(const Bipartition& b, std::pair<int, int> charge) {
  return Symbol{ChargedAbacus(charge.first, b.first),
                ChargedAbacus(charge.second, b.second)};
}

ChargedAbacus fused_abacus(const Symbol& s, int e) {
  RequireOddE(e);
  // Positions at or below L are beads of both parities.
  const int L =
      std::min(2 * s.row1.full_below() + e, 2 * s.row2.full_below());
  std::vector<int> beads;
  for (int j : s.row1.entries_at_least(CeilHalf(L + 1 - e))) {
    beads.push_back(2 * j + e);
  }
  for (int j : s.row2.entries_at_least(CeilHalf(L + 1))) {
    beads.push_back(2 * j);
  }
  std::sort(beads.begin(), beads.end(), std::greater<int>());
  return ChargedAbacus::from_beads(beads, L + 1);
}

BetaWindow beta_window(const ChargedAbacus& a) {
  int shift = std::max(2, -a.full_below() - 1);
  if (shift % 2 == 1) ++shift;
  BetaWindow w;
  w.shift = shift;
  for (int x : a.entries_at_least(-shift)) w.beta.push_back(x + shift);
  return w;
}

Symbol apply_op(const Symbol& s, OpKind kind, int j, int e) {
  RequireOddE(e);
  if (kind == OpKind::kFirstToSecond) {
    if (!s.row1.contains(j)) FailDomain("move needs the value in row 1");
    if (s.row2.contains(j)) FailDomain("move target in row 2 is occupied");
    return Symbol{s.row1.without(j), s.row2.with(j)};
  }
  if (!s.row2.contains(j)) FailDomain("move needs the value in row 2");
  if (s.row1.contains(j - e)) FailDomain("move target in row 1 is occupied");
  return Symbol{s.row1.with(j - e), s.row2.without(j)};
}

std::vector<int> legal_ops(const Symbol& s, OpKind kind, int e) {
  RequireOddE(e);
  std::vector<int> out;
  if (kind == OpKind::kFirstToSecond) {
    // j not in row 2 forces j above row 2's full tail.
    for (int j : s.row1.entries_at_least(s.row2.full_below() + 1)) {
      if (!s.row2.contains(j)) out.push_back(j);
    }
  } else {
    // j - e not in row 1 forces j - e above row 1's full tail.
    for (int j : s.row2.entries_at_least(s.row1.full_below() + e + 1)) {
      if (!s.row1.contains(j - e)) out.push_back(j);
    }
  }
  return out;
}

std::optional<CanonicalOp> canonical_op(const Symbol& s, int e) {
  const std::vector<int> first = legal_ops(s, OpKind::kFirstToSecond, e);
  if (!first.empty()) return CanonicalOp{OpKind::kFirstToSecond, first.front()};
  const std::vector<int> second = legal_ops(s, OpKind::kSecondToFirst, e);
  if (!second.empty()) {
    return CanonicalOp{OpKind::kSecondToFirst, second.front()};
  }
  return std::nullopt;
}

CoreShift op_core_shift(int t, OpKind kind) {
  if (t < 0) FailInvalid("2-core index must be non-negative");
  if (kind == OpKind::kSecondToFirst) return CoreShift{t + 2, false};
  if (t >= 2) return CoreShift{t - 2, false};
  // t = 1 -> 0 and t = 0 -> 1; the parity flip swaps quotient components.
  return CoreShift{1 - t, true};
}

std::optional<Period> find_period(const Symbol& s, int e) {
  if (e < 2) FailInvalid("e must be at least 2");
  const int top = std::max(s.row1.max_entry(), s.row2.max_entry());
  Period p;
  int prev_row = 2;
  for (int l = 0; l < e; ++l) {
    const int value = top - l;
    int row;
    if (s.row1.contains(value)) {
      row = 1;
    } else if (s.row2.contains(value)) {
      row = 2;
    } else {
      return std::nullopt;
    }
    if (row > prev_row) return std::nullopt;  // rows must not climb back to 2
    prev_row = row;
    const ChargedAbacus& a = row == 1 ? s.row1 : s.row2;
    // entry(j) = value has a unique solution; scan the finite head, else tail.
    int index = a.charge() + 1 - value;  // tail formula when beyond the parts
    for (int j = 1; j <= a.partition().length(); ++j) {
      if (a.entry(j) == value) {
        index = j;
        break;
      }
    }
    p.cells.push_back(Period::Cell{value, row, index});
  }
  return p;
}

Symbol remove_period(const Symbol& s, const Period& p) {
  std::vector<int> from1, from2;
  for (const auto& cell : p.cells) {
    (cell.row == 1 ? from1 : from2).push_back(cell.value);
  }
  return Symbol{s.row1.without_all(from1), s.row2.without_all(from2)};
}

bool is_totally_periodic(const Symbol& s, int e) {
  Symbol cur = s;
  // Every removal deletes e beads above the (fixed) initial floor while any
  // remain there, so this bound is never hit; it guards against logic bugs.
  const int floor = std::min(cur.row1.full_below(), cur.row2.full_below()) - 2 * e;
  int budget = static_cast<int>(cur.row1.entries_at_least(floor).size() +
                                cur.row2.entries_at_least(floor).size()) +
               8;
  while (!cur.row1.partition().empty() || !cur.row2.partition().empty()) {
    if (--budget < 0) FailDomain("period removal failed to terminate");
    const auto period = find_period(cur, e);
    if (!period.has_value()) return false;
    cur = remove_period(cur, *period);
  }
  return true;
}

namespace {

std::string RenderRow(const std::vector<int>& ascending, int width) {
  std::string line = "( ...";
  for (int v : ascending) {
    std::string num = std::to_string(v);
    line += ' ';
    line.append(width - num.size(), ' ');
    line += num;
  }
  line += " )";
  return line;
}

}  // namespace

std::string render_symbol(const Symbol& s) {
  const int lo = std::min(s.row1.full_below(), s.row2.full_below()) - 1;
  std::vector<int> r1 = s.row1.entries_at_least(lo);
  std::vector<int> r2 = s.row2.entries_at_least(lo);
  std::reverse(r1.begin(), r1.end());
  std::reverse(r2.begin(), r2.end());
  size_t width = 1;
  for (const auto& row : {r1, r2}) {
    for (int v : row) width = std::max(width, std::to_string(v).size());
  }
  return RenderRow(r2, static_cast<int>(width)) + "\n" +
         RenderRow(r1, static_cast<int>(width)) + "\n";
}

std::string render_abacus(const ChargedAbacus& a) {
  const int lo = a.full_below() - 1;
  const int hi = std::max(a.max_entry(), a.full_below()) + 1;
  size_t width = 1;
  for (int x = lo; x <= hi; ++x) {
    width = std::max(width, std::to_string(x).size());
  }
  std::string ruler, beads;
  for (int x = lo; x <= hi; ++x) {
    std::string num = std::to_string(x);
    ruler += ' ';
    ruler.append(width - num.size(), ' ');
    ruler += num;
    beads += ' ';
    beads.append(width - 1, ' ');
    beads += a.contains(x) ? "●" : "·";  // bead / hole
  }
  return ruler + "\n" + beads + "\n";
}

}  // namespace hcc
