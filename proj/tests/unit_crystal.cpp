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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/crystal.hpp"
#include "core/error.hpp"
#include "core/partition.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

using hcc::BoxNode;
using hcc::ChargedBipartition;
using hcc::CrystalGraph;

ChargedBipartition V(const std::string& bipartition, int c1, int c2) {
  return ChargedBipartition{hcc::parse_bipartition(bipartition), {c1, c2}};
}

bool ThrowsKind(hcc::ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const hcc::Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_SUITE("crystal") {

TEST_CASE("node contents and reduced words") {
  CHECK(hcc::node_content(BoxNode{1, 1, 1}, {-1, 0}) == -1);
  CHECK(hcc::node_content(BoxNode{1, 2, 2}, {-1, 0}) == 1);
  CHECK(hcc::node_content(BoxNode{3, 1, 2}, {0, 4}) == 2);

  // Root at (0,0): two addable boxes of residue 0; the good one is in
  // component 1 (component 2 sorts first, the rightmost survivor wins).
  const auto root = hcc::reduced_word(V("-.-", 0, 0), 3, 0);
  CHECK(root.alpha == 2);
  CHECK(root.beta == 0);
  REQUIRE(root.good_addable.has_value());
  CHECK(*root.good_addable == BoxNode{1, 1, 1});
  CHECK_FALSE(root.good_removable.has_value());
  CHECK(hcc::reduced_word(V("-.-", 0, 0), 3, 1).alpha == 0);
  CHECK(hcc::reduced_word(V("-.-", 0, 0), 3, 2).alpha == 0);

  // ((1),-): the residue-0 word reads A (component 2) then R (component 1),
  // which does not cancel.
  const auto ar = hcc::reduced_word(V("1.-", 0, 0), 3, 0);
  CHECK(ar.alpha == 1);
  CHECK(ar.beta == 1);
  REQUIRE(ar.good_addable.has_value());
  CHECK(*ar.good_addable == BoxNode{1, 1, 2});
  REQUIRE(ar.good_removable.has_value());
  CHECK(*ar.good_removable == BoxNode{1, 1, 1});

  // (-,(1)): the same positions read R then A and cancel completely.
  const auto ra = hcc::reduced_word(V("-.1", 0, 0), 3, 0);
  CHECK(ra.alpha == 0);
  CHECK(ra.beta == 0);
  CHECK_FALSE(ra.good_addable.has_value());
  CHECK_FALSE(ra.good_removable.has_value());

  CHECK(ThrowsKind(hcc::ErrorKind::kInvalidArgument,
                   [] { hcc::reduced_word(V("-.-", 0, 0), 3, 3); }));
  CHECK(ThrowsKind(hcc::ErrorKind::kInvalidArgument,
                   [] { hcc::reduced_word(V("-.-", 0, 0), 1, 0); }));
}

TEST_CASE("good-node moves invert each other") {
  const auto down = hcc::add_good_node(V("-.-", 0, 0), 3, 0);
  REQUIRE(down.has_value());
  CHECK(*down == V("1.-", 0, 0));
  CHECK_FALSE(hcc::add_good_node(V("-.-", 0, 0), 3, 1).has_value());
  CHECK_FALSE(hcc::add_good_node(V("-.-", 0, 0), 3, 2).has_value());

  const auto up = hcc::remove_good_node(V("1.-", 0, 0), 3, 0);
  REQUIRE(up.has_value());
  CHECK(*up == V("-.-", 0, 0));
  CHECK_FALSE(hcc::remove_good_node(V("-.1", 0, 0), 3, 0).has_value());

  CHECK(hcc::is_highest_weight(V("-.-", 0, 0), 3));
  CHECK(hcc::is_highest_weight(V("-.-", -1, 0), 3));
  CHECK(hcc::is_highest_weight(V("-.1", 0, 0), 3));
  CHECK(hcc::is_highest_weight(V("-.1^3", 0, 0), 3));
  CHECK(hcc::is_highest_weight(V("1^3.-", 0, 0), 3));
  CHECK_FALSE(hcc::is_highest_weight(V("1.-", 0, 0), 3));
  CHECK_FALSE(hcc::is_highest_weight(V("-.1", -1, 0), 3));

  // Round trip over every vertex and residue of a mid-size graph.
  const CrystalGraph g = hcc::build_graph({-1, 0}, 3, 4);
  for (const auto& vx : g.vertices()) {
    const ChargedBipartition v{vx.bipartition, g.charge()};
    for (int i = 0; i < g.e(); ++i) {
      if (const auto w = hcc::add_good_node(v, g.e(), i)) {
        CHECK(hcc::remove_good_node(*w, g.e(), i) == v);
      }
      if (const auto u = hcc::remove_good_node(v, g.e(), i)) {
        CHECK(hcc::add_good_node(*u, g.e(), i) == v);
      }
    }
  }
}

TEST_CASE("weights count addable minus removable per residue") {
  CHECK(hcc::weight(V("-.-", 0, 0), 3) == std::vector<int>{2, 0, 0});
  CHECK(hcc::weight(V("-.-", -1, 0), 3) == std::vector<int>{1, 0, 1});
  CHECK(hcc::weight(V("1.-", 0, 0), 3) == std::vector<int>{0, 1, 1});
  CHECK(hcc::weight(V("-.1", 0, 0), 3) == std::vector<int>{0, 1, 1});
}

TEST_CASE("full graph layout, layers, and sources") {
  const CrystalGraph g = hcc::build_graph({0, 0}, 3, 3);
  CHECK(g.e() == 3);
  CHECK(g.charge() == std::pair<int, int>(0, 0));
  CHECK(g.max_rank() == 3);
  CHECK(g.root() == -1);
  CHECK(g.vertices().size() == 18);
  CHECK(g.edges().size() == 16);

  std::map<int, int> per_rank;
  for (const auto& v : g.vertices()) ++per_rank[v.rank];
  CHECK(per_rank == std::map<int, int>{{0, 1}, {1, 2}, {2, 5}, {3, 10}});

  // Layer sizes equal the bipartition counts at every rank.
  for (const auto& [rank, count] : per_rank) {
    CHECK(count == hcc::bipartition_count(rank));
  }

  CHECK(g.index_of("-.-") == 0);
  CHECK(g.index_of("no-such-label") == -1);
  const int one = g.index_of("1.-");
  REQUIRE(one >= 0);
  CHECK(g.vertices()[one].rank == 1);

  // Highest-weight flags agree with the vertex-level test, and the sources
  // are exactly the flagged vertices.
  std::set<std::string> source_labels;
  for (int idx : g.sources()) source_labels.insert(g.vertices()[idx].label);
  CHECK(source_labels ==
        std::set<std::string>{"-.-", "-.1", "-.1^3", "1^3.-"});
  for (const auto& v : g.vertices()) {
    CHECK(v.highest_weight ==
          hcc::is_highest_weight({v.bipartition, g.charge()}, 3));
  }

  // child[] agrees with the edge list; at most one edge per color each way.
  std::set<std::pair<int, int>> out_seen, in_seen;
  for (const auto& e : g.edges()) {
    CHECK(g.vertices()[e.from].child[e.residue] == e.to);
    CHECK(out_seen.insert({e.from, e.residue}).second);
    CHECK(in_seen.insert({e.to, e.residue}).second);
    CHECK(g.vertices()[e.to].rank == g.vertices()[e.from].rank + 1);
  }

  // A few hand-checked colored edges.
  const auto has_edge = [&](const std::string& from, const std::string& to,
                            int residue) {
    for (const auto& e : g.edges()) {
      if (g.vertices()[e.from].label == from &&
          g.vertices()[e.to].label == to && e.residue == residue) {
        return true;
      }
    }
    return false;
  };
  CHECK(has_edge("-.-", "1.-", 0));
  CHECK(has_edge("1.-", "2.-", 1));
  CHECK(has_edge("1.-", "1^2.-", 2));
  CHECK(has_edge("1.-", "1.1", 0));
  CHECK(has_edge("-.1", "-.2", 1));
  CHECK(has_edge("-.1", "-.1^2", 2));
}

TEST_CASE("components are restricted reachable subgraphs") {
  const CrystalGraph c = hcc::build_component(V("-.-", 0, 0), 3, 3);
  CHECK(c.vertices().size() == 9);
  CHECK(c.edges().size() == 10);
  CHECK(c.root() == c.index_of("-.-"));
  CHECK(c.max_rank() == 3);

  // Everything in the component also sits in the full graph.
  const CrystalGraph g = hcc::build_graph({0, 0}, 3, 3);
  for (const auto& v : c.vertices()) CHECK(g.index_of(v.label) >= 0);

  CHECK(ThrowsKind(hcc::ErrorKind::kDomain,
                   [] { hcc::build_component(V("1.-", 0, 0), 3, 2); }));
}

TEST_CASE("vertex budget is enforced") {
  hcc::BuildOptions tight;
  tight.max_vertices = 10;
  CHECK(ThrowsKind(hcc::ErrorKind::kLimit,
                   [&] { hcc::build_graph({0, 0}, 3, 8, tight); }));
}

TEST_CASE("color-shift isomorphism between components") {
  const CrystalGraph a = hcc::build_component(V("-.1", 0, 0), 3, 3);
  const CrystalGraph b = hcc::build_component(V("-.-", -1, 0), 3, 3);
  const auto shift = hcc::iso_color_shift(a, b);
  REQUIRE(shift.has_value());
  CHECK(*shift == 1);

  CHECK(hcc::iso_color_shift(a, a) == 0);
  CHECK(hcc::iso_color_shift(b, b) == 0);

  const CrystalGraph c = hcc::build_component(V("-.-", 0, 0), 3, 3);
  CHECK_FALSE(hcc::iso_color_shift(c, b).has_value());
}

TEST_CASE("rendering is deterministic and parallel-safe") {
  const CrystalGraph g1 = hcc::build_graph({-1, 0}, 3, 5);
  const CrystalGraph g2 = hcc::build_graph({-1, 0}, 3, 5);
  CHECK(hcc::to_dot(g1) == hcc::to_dot(g2));
  CHECK(hcc::to_json(g1) == hcc::to_json(g2));
  CHECK(hcc::to_text(g1) == hcc::to_text(g2));

  hcc::BuildOptions parallel;
  parallel.workers = 4;
  const CrystalGraph g4 = hcc::build_graph({-1, 0}, 3, 5, parallel);
  CHECK(hcc::to_json(g4) == hcc::to_json(g1));
  CHECK(hcc::to_dot(g4) == hcc::to_dot(g1));

  const std::string dot = hcc::to_dot(g1);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"-.-\"") != std::string::npos);

  const nlohmann::json j = nlohmann::json::parse(hcc::to_json(g1));
  CHECK(j.at("e") == 3);
  CHECK(j.at("max_rank") == 5);
  CHECK(j.at("vertices").size() == g1.vertices().size());
  CHECK(j.at("edges").size() == g1.edges().size());

  CHECK(hcc::to_text(g1).rfind("crystal graph", 0) == 0);
}

}  // TEST_SUITE("crystal")
