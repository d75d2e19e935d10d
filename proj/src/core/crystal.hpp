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

#ifndef HCCRYSTAL_CORE_CRYSTAL_HPP_
#define HCCRYSTAL_CORE_CRYSTAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/partition.hpp"

namespace hcc {

/// A bipartition placed at a charge pair; the vertices of the charged graphs.
struct ChargedBipartition {
  Bipartition bipartition;
  std::pair<int, int> charge;

  friend bool operator==(const ChargedBipartition&,
                         const ChargedBipartition&) = default;
};

/// A box (row, col) in component 1 or 2 of a bipartition.
struct BoxNode {
  int row;        // 1-based
  int col;        // 1-based
  int component;  // 1 or 2

  friend bool operator==(const BoxNode&, const BoxNode&) = default;
};

/// col - row + charge of the node's component.
int node_content(const BoxNode& n, std::pair<int, int> charge);

/// The i-signature of a vertex after cancellation: reading all addable (A)
/// and removable (R) boxes of residue i in increasing order (content, then
/// component 2 before component 1 on ties) and repeatedly deleting
/// consecutive "RA" pairs leaves A^alpha R^beta.
struct ReducedWord {
  int alpha = 0;
  int beta = 0;
  std::optional<BoxNode> good_addable;   // the rightmost surviving A
  std::optional<BoxNode> good_removable; // the leftmost surviving R
};
ReducedWord reduced_word(const ChargedBipartition& v, int e, int i);

/// Adds the good addable i-box (the raising/lowering pair of crystal moves);
/// nullopt when no good box exists.
std::optional<ChargedBipartition> add_good_node(const ChargedBipartition& v,
                                                int e, int i);
std::optional<ChargedBipartition> remove_good_node(const ChargedBipartition& v,
                                                   int e, int i);

/// True when no residue has a good removable box.
bool is_highest_weight(const ChargedBipartition& v, int e);

/// The e fundamental-weight coefficients (alpha_i - beta_i for each residue).
/// The imaginary (null-root) coefficient is not tracked.
std::vector<int> weight(const ChargedBipartition& v, int e);

struct BuildOptions {
  std::size_t max_vertices = 1'000'000;
  int workers = 1;
};

/// A rank-layered directed graph with residue-colored edges. Vertices are
/// sorted by (rank, label); edges by (from, residue). Immutable once built.
class CrystalGraph {
 public:
  struct Vertex {
    int rank;
    Bipartition bipartition;
    std::string label;
    std::vector<int> child;  // child[i] = vertex index under residue i, or -1
    bool highest_weight;
  };
  struct Edge {
    int from;
    int to;
    int residue;
  };

  int e() const { return e_; }
  std::pair<int, int> charge() const { return charge_; }
  int max_rank() const { return max_rank_; }
  /// Index of the component root; -1 for full graphs.
  int root() const { return root_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int index_of(std::string_view label) const;
  /// Indices of highest-weight vertices (no good removable box), ascending.
  std::vector<int> sources() const;

 private:
  friend CrystalGraph build_graph(std::pair<int, int>, int, int,
                                  const BuildOptions&);
  friend CrystalGraph build_component(const ChargedBipartition&, int, int,
                                      const BuildOptions&);
  int e_ = 0;
  std::pair<int, int> charge_;
  int max_rank_ = 0;
  int root_ = -1;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// All bipartitions of rank <= max_rank at the given charge, with every
/// good-addable edge between consecutive ranks.
CrystalGraph build_graph(std::pair<int, int> charge, int e, int max_rank,
                         const BuildOptions& options = {});

/// The vertices reachable from root (which must be highest weight) in at most
/// `depth` moves, with their edges.
CrystalGraph build_component(const ChargedBipartition& root, int e, int depth,
                             const BuildOptions& options = {});

/// The color rotation d (residue i of a maps to (i + d) mod e of b) making
/// the two rooted component graphs isomorphic, if one exists.
std::optional<int> iso_color_shift(const CrystalGraph& a,
                                   const CrystalGraph& b);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);
std::string to_text(const CrystalGraph& g);

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_CRYSTAL_HPP_
