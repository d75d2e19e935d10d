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
// Frozen reference graphs for the golden tests. Each graph is recorded
// exactly as displayed in its source diagram, level by level and arrow by
// arrow, so a reviewer can audit every cell; the tests re-derive the same
// graphs from first principles and compare.

#include "core/fixtures.hpp"

#include <algorithm>
#include <map>

namespace hcc {

std::vector<std::string> ReferenceGraph::source_labels() const {
  std::vector<std::string> out;
  for (const auto& level : levels) {
    for (const std::string& label : level) {
      bool incoming = false;
      for (const auto& [from, to] : edges) {
        if (to == label) {
          incoming = true;
          break;
        }
      }
      if (!incoming) out.push_back(label);
    }
  }
  return out;
}

std::string ReferenceGraph::root_of(const std::string& label) const {
  std::string cur = label;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& [from, to] : edges) {
      if (to == cur) {
        cur = from;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

const ReferenceGraph& reference_crystal_c00_e3() {
  // Ranks 0..3 of the charge (0,0), e = 3 graph. Display layout, top to
  // bottom (arrows all point downward one rank):
  //   rank 0:  -.-
  //   rank 1:  1.-   -.1
  //   rank 2:  2.-   1.1   1^2.-   -.2   -.1^2
  //   rank 3:  3.-  2.1  1^2.1  21.-  1.2  -.3  1.1^2  -.21  -.1^3  1^3.-
  // The two rank-3 cells -.1^3 and 1^3.- carry no arrows at all.
  static const ReferenceGraph g{
      {0, 1, 2, 3},
      {{"-.-"},
       {"1.-", "-.1"},
       {"2.-", "1.1", "1^2.-", "-.2", "-.1^2"},
       {"3.-", "2.1", "1^2.1", "21.-", "1.2", "-.3", "1.1^2", "-.21", "-.1^3",
        "1^3.-"}},
      {{"-.-", "1.-"},
       {"1.-", "2.-"},
       {"1.-", "1.1"},
       {"1.-", "1^2.-"},
       {"-.1", "-.2"},
       {"-.1", "-.1^2"},
       {"2.-", "3.-"},
       {"2.-", "2.1"},
       {"1.1", "2.1"},
       {"1.1", "1^2.1"},
       {"1^2.-", "1^2.1"},
       {"1^2.-", "21.-"},
       {"-.2", "1.2"},
       {"-.2", "-.3"},
       {"-.1^2", "1.1^2"},
       {"-.1^2", "-.21"}}};
  return g;
}

const ReferenceGraph& reference_branching_t1() {
  // Odd degrees 1,3,5,7; staircase column for 2-core (1). Display layout:
  //   degree 1:  1
  //   degree 3:  3              1^3
  //   degree 5:  5  31^2  32    2^21  1^5
  //   degree 7:  7  51^2  32^2  52  3^21  421  31^4  2^21^3  1^7  321^2
  // 1^7 and 321^2 carry no arrows.
  static const ReferenceGraph g{
      {1, 3, 5, 7},
      {{"1"},
       {"3", "1^3"},
       {"5", "31^2", "32", "2^21", "1^5"},
       {"7", "51^2", "32^2", "52", "3^21", "421", "31^4", "2^21^3", "1^7",
        "321^2"}},
      {{"1", "3"},
       {"3", "5"},
       {"3", "31^2"},
       {"3", "32"},
       {"1^3", "2^21"},
       {"1^3", "1^5"},
       {"5", "7"},
       {"5", "51^2"},
       {"31^2", "51^2"},
       {"31^2", "32^2"},
       {"32", "32^2"},
       {"32", "52"},
       {"2^21", "3^21"},
       {"2^21", "421"},
       {"1^5", "31^4"},
       {"1^5", "2^21^3"}}};
  return g;
}

const ReferenceGraph& reference_branching_t2() {
  // Odd degrees 3,5,7; staircase column for 2-core (2,1). Display layout:
  //   degree 3:  21
  //   degree 5:  41   21^3
  //   degree 7:  61  43  41^3  21^5  2^31
  // 2^31 carries no arrows.
  static const ReferenceGraph g{{3, 5, 7},
                                {{"21"},
                                 {"41", "21^3"},
                                 {"61", "43", "41^3", "21^5", "2^31"}},
                                {{"21", "41"},
                                 {"21", "21^3"},
                                 {"41", "61"},
                                 {"41", "43"},
                                 {"21^3", "41^3"},
                                 {"21^3", "21^5"}}};
  return g;
}

}  // namespace hcc
