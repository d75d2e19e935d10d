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

#ifndef HCCRYSTAL_CORE_FIXTURES_HPP_
#define HCCRYSTAL_CORE_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

namespace hcc {

/// A hand-checked reference graph frozen as data: labels per level plus an
/// explicit (uncolored) edge list, both in the original display notation.
struct ReferenceGraph {
  std::vector<int> level_ranks;                   // rank/degree per level
  std::vector<std::vector<std::string>> levels;   // labels per level
  std::vector<std::pair<std::string, std::string>> edges;

  /// All labels with no incoming edge, in level order.
  std::vector<std::string> source_labels() const;
  /// The source reaching `label` (every vertex here has exactly one).
  std::string root_of(const std::string& label) const;
};

/// The charge (0,0), e = 3 graph on bipartitions of rank <= 3.
const ReferenceGraph& reference_crystal_c00_e3();
/// The degree <= 7 branching graph for 2-core index 1.
const ReferenceGraph& reference_branching_t1();
/// The degree <= 7 branching graph for 2-core index 2.
const ReferenceGraph& reference_branching_t2();

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_FIXTURES_HPP_
