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

#include "core/partition.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "core/error.hpp"

namespace hcc {

namespace {

// Largest n supported by the counting tables.
constexpr int kMaxCount = 120;

std::string Describe(std::string_view text) {
  return "'" + std::string(text) + "'";
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) FailInvalid("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      FailInvalid("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int j) const {
  if (j < 1) FailInvalid("part index is 1-based");
  return j <= length() ? parts_[j - 1] : 0;
}

int canonical_beta_size(const Partition& p) {
  int s = p.length();
  return (s % 2 == 1) ? s : s + 1;
}

BetaSet beta_set(const Partition& p, int size) {
  if (size < p.length()) {
    FailInvalid("beta-set size must be at least the number of parts");
  }
  BetaSet b;
  b.reserve(size);
  for (int j = 1; j <= size; ++j) b.push_back(p.part(j) + size - j);
  return b;
}

Partition partition_of_beta_set(BetaSet b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  const int s = static_cast<int>(b.size());
  std::vector<int> parts(s);
  for (int j = 1; j <= s; ++j) {
    const int entry = b[j - 1];
    if (entry < 0) FailInvalid("beta-numbers must be non-negative");
    if (j < s && entry == b[j]) FailInvalid("beta-numbers must be distinct");
    parts[j - 1] = entry - (s - j);
  }
  return Partition(std::move(parts));
}

Partition e_core(const Partition& p, int e) {
  if (e < 2) FailInvalid("e must be at least 2");
  const BetaSet b = beta_set(p, canonical_beta_size(p));
  std::vector<int> counts(e, 0);
  for (int x : b) ++counts[x % e];
  BetaSet slid;
  slid.reserve(b.size());
  for (int r = 0; r < e; ++r) {
    for (int i = 0; i < counts[r]; ++i) slid.push_back(r + i * e);
  }
  return partition_of_beta_set(std::move(slid));
}

int e_weight(const Partition& p, int e) {
  return (p.size() - e_core(p, e).size()) / e;
}

Bipartition two_quotient(const Partition& p) {
  const BetaSet b = beta_set(p, canonical_beta_size(p));
  BetaSet evens, odds;
  for (int x : b) {
    if (x % 2 == 0) {
      evens.push_back(x / 2);
    } else {
      odds.push_back((x - 1) / 2);
    }
  }
  return Bipartition{partition_of_beta_set(std::move(evens)),
                     partition_of_beta_set(std::move(odds))};
}

Partition staircase(int t) {
  if (t < 0) FailInvalid("staircase index must be non-negative");
  std::vector<int> parts(t);
  for (int i = 0; i < t; ++i) parts[i] = t - i;
  return Partition(std::move(parts));
}

bool is_staircase(const Partition& p, int* t_out) {
  const int t = p.length();
  for (int j = 1; j <= t; ++j) {
    if (p.part(j) != t - j + 1) return false;
  }
  if (t_out != nullptr) *t_out = t;
  return true;
}

TwoCoreSplit two_core_split(const Partition& p) {
  const Partition core = e_core(p, 2);
  int t = 0;
  if (!is_staircase(core, &t)) FailDomain("2-core is not a staircase");
  Bipartition q = two_quotient(p);
  if (t % 2 == 1) std::swap(q.first, q.second);
  return TwoCoreSplit{t, std::move(q)};
}

Partition two_core_join(int t, const Bipartition& q) {
  if (t < 0) FailInvalid("2-core index must be non-negative");
  // Undo the parity normalization, then interleave the two beta-sets onto the
  // even and odd integers. The relative runner sizes encode t.
  const Partition& even_src = (t % 2 == 1) ? q.second : q.first;
  const Partition& odd_src = (t % 2 == 1) ? q.first : q.second;
  int even_count, odd_count;
  if (t % 2 == 1) {
    even_count = std::max(even_src.length(), odd_src.length() - t);
    odd_count = even_count + t;
  } else {
    odd_count = std::max(odd_src.length(), even_src.length() - t - 1);
    even_count = odd_count + t + 1;
  }
  BetaSet merged;
  merged.reserve(even_count + odd_count);
  for (int x : beta_set(even_src, even_count)) merged.push_back(2 * x);
  for (int x : beta_set(odd_src, odd_count)) merged.push_back(2 * x + 1);
  return partition_of_beta_set(std::move(merged));
}

Partition remove_hook(const Partition& p, HookRemoval hook, int beta_size) {
  if (hook.length < 1) FailInvalid("hook length must be positive");
  if (beta_size == 0) beta_size = canonical_beta_size(p);
  BetaSet b = beta_set(p, beta_size);
  auto it = std::find(b.begin(), b.end(), hook.beta_entry);
  if (it == b.end()) FailDomain("designated beta-number is not present");
  const int target = hook.beta_entry - hook.length;
  if (target < 0) FailDomain("hook removal would leave a negative beta-number");
  if (std::find(b.begin(), b.end(), target) != b.end()) {
    FailDomain("hook target beta-number is already occupied");
  }
  *it = target;
  return partition_of_beta_set(std::move(b));
}

// --- text forms -------------------------------------------------------------

namespace {

std::string StripSpace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int ParseNumber(std::string_view token) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    FailParse("malformed number in " + Describe(token));
  }
  return value;
}

// "N" or "N^K": append K copies of N.
void ParseToken(std::string_view token, std::vector<int>* parts) {
  if (token.empty()) FailParse("empty partition token");
  const size_t caret = token.find('^');
  std::string_view num = token.substr(0, caret);
  const int value = ParseNumber(num);
  int count = 1;
  if (caret != std::string_view::npos) {
    count = ParseNumber(token.substr(caret + 1));
    if (count < 1) FailParse("multiplicity must be at least 1");
  }
  if (value < 1) FailParse("partition parts must be positive");
  parts->insert(parts->end(), count, value);
}

bool WeaklyDecreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1]) return false;
  }
  return true;
}

// One digit per part, with "^K" applying to the preceding digit.
bool TryParseCompact(std::string_view text, std::vector<int>* parts) {
  parts->clear();
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    const int value = c - '0';
    if (value == 0) return false;
    ++i;
    int count = 1;
    if (i < text.size() && text[i] == '^') {
      // A single digit: "3^21" reads as 3^2 followed by a part 1, not as 3^21.
      // Multi-digit multiplicities take the comma form or a lone "N^K" token.
      ++i;
      if (i >= text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[i]))) {
        return false;
      }
      count = text[i] - '0';
      if (count < 1) return false;
      ++i;
    }
    parts->insert(parts->end(), count, value);
  }
  return WeaklyDecreasing(*parts);
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const std::string s = StripSpace(text);
  if (s.empty()) FailParse("empty partition text");
  if (s == "-") return Partition();
  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    size_t start = 0;
    while (start <= s.size()) {
      const size_t comma = s.find(',', start);
      const size_t end = comma == std::string::npos ? s.size() : comma;
      ParseToken(std::string_view(s).substr(start, end - start), &parts);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!WeaklyDecreasing(parts)) {
      FailParse("parts must be weakly decreasing in " + Describe(text));
    }
  } else if (!TryParseCompact(s, &parts)) {
    // Not valid digit-per-part; accept a single "N" or "N^K" token.
    parts.clear();
    ParseToken(s, &parts);
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[i]);
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

Bipartition parse_bipartition(std::string_view text) {
  const std::string s = StripSpace(text);
  const size_t dot = s.find('.');
  if (dot == std::string::npos) {
    FailParse("bipartition must be '<first>.<second>', got " + Describe(text));
  }
  if (s.find('.', dot + 1) != std::string::npos) {
    FailParse("bipartition has more than one '.' in " + Describe(text));
  }
  return Bipartition{parse_partition(std::string_view(s).substr(0, dot)),
                     parse_partition(std::string_view(s).substr(dot + 1))};
}

std::string format_bipartition(const Bipartition& b) {
  return format_partition(b.first) + "." + format_partition(b.second);
}

std::pair<int, int> parse_charge_pair(std::string_view text) {
  const std::string s = StripSpace(text);
  const size_t comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    FailParse("charge must be 'c1,c2', got " + Describe(text));
  }
  return {ParseNumber(std::string_view(s).substr(0, comma)),
          ParseNumber(std::string_view(s).substr(comma + 1))};
}

// --- enumeration ------------------------------------------------------------

namespace {

const std::vector<long long>& PartitionCounts() {
  static const std::vector<long long> counts = [] {
    std::vector<long long> dp(kMaxCount + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= kMaxCount; ++part) {
      for (int n = part; n <= kMaxCount; ++n) dp[n] += dp[n - part];
    }
    return dp;
  }();
  return counts;
}

// bounded[k][n] = number of partitions of n with all parts <= k.
const std::vector<std::vector<long long>>& BoundedCounts() {
  static const std::vector<std::vector<long long>> table = [] {
    std::vector<std::vector<long long>> t(
        kMaxCount + 1, std::vector<long long>(kMaxCount + 1, 0));
    for (int k = 0; k <= kMaxCount; ++k) t[k][0] = 1;
    for (int k = 1; k <= kMaxCount; ++k) {
      for (int n = 1; n <= kMaxCount; ++n) {
        t[k][n] = t[k - 1][n] + (n >= k ? t[k][n - k] : 0);
      }
    }
    return t;
  }();
  return table;
}

void EnumeratePartitions(int n, int max_part, std::vector<int>* prefix,
                         std::vector<Partition>* out) {
  if (n == 0) {
    out->push_back(Partition(*prefix));
    return;
  }
  for (int v = std::min(n, max_part); v >= 1; --v) {
    prefix->push_back(v);
    EnumeratePartitions(n - v, v, prefix, out);
    prefix->pop_back();
  }
}

}  // namespace

long long partition_count(int n) {
  if (n < 0) return 0;
  if (n > kMaxCount) FailInvalid("partition_count: n too large");
  return PartitionCounts()[n];
}

long long bipartition_count(int n) {
  long long total = 0;
  for (int k = 0; k <= n; ++k) total += partition_count(k) * partition_count(n - k);
  return total;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) FailInvalid("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  EnumeratePartitions(n, n, &prefix, &out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int a = 0; a <= n; ++a) {
    for (const Partition& f : partitions_of(a)) {
      for (const Partition& s : partitions_of(n - a)) {
        out.push_back(Bipartition{f, s});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition random_partition(int n, std::mt19937& rng) {
  if (n < 0 || n > kMaxCount) FailInvalid("random_partition: bad n");
  const auto& bounded = BoundedCounts();
  std::vector<int> parts;
  int remaining = n;
  int bound = n;
  while (remaining > 0) {
    std::uniform_int_distribution<long long> pick(
        0, bounded[std::min(bound, remaining)][remaining] - 1);
    long long r = pick(rng);
    // Choose the largest part v: exactly bounded[v][remaining - v] partitions
    // of `remaining` with parts <= min(bound, remaining) start with v.
    for (int v = std::min(bound, remaining); v >= 1; --v) {
      const long long with_v = bounded[v][remaining - v];
      if (r < with_v) {
        parts.push_back(v);
        remaining -= v;
        bound = v;
        break;
      }
      r -= with_v;
    }
  }
  return Partition(std::move(parts));
}

}  // namespace hcc
