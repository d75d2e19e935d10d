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

#include "core/crystal.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "core/error.hpp"

namespace hcc {

namespace {

int Residue(int content, int e) { return ((content % e) + e) % e; }

struct Letter {
  bool addable;
  BoxNode node;
  int content;
};

// Ascending content; on content ties component 2 reads before component 1.
bool LetterBefore(const Letter& x, const Letter& y) {
  if (x.content != y.content) return x.content < y.content;
  return x.node.component > y.node.component;
}

// All addable/removable boxes of one component, appended to out.
void CollectNodes(const Partition& p, int component, std::vector<Letter>* out,
                  std::pair<int, int> charge) {
  const int len = p.length();
  for (int a = 1; a <= len + 1; ++a) {
    if (a == 1 || p.part(a - 1) > p.part(a)) {
      const BoxNode node{a, p.part(a) + 1, component};
      out->push_back(Letter{true, node, node_content(node, charge)});
    }
  }
  for (int a = 1; a <= len; ++a) {
    if (p.part(a) > p.part(a + 1)) {
      const BoxNode node{a, p.part(a), component};
      out->push_back(Letter{false, node, node_content(node, charge)});
    }
  }
}

std::vector<Letter> SortedLetters(const ChargedBipartition& v, int e, int i) {
  if (e < 2) FailInvalid("e must be at least 2");
  if (i < 0 || i >= e) FailInvalid("residue out of range");
  std::vector<Letter> all;
  CollectNodes(v.bipartition.first, 1, &all, v.charge);
  CollectNodes(v.bipartition.second, 2, &all, v.charge);
  std::vector<Letter> word;
  for (const Letter& l : all) {
    if (Residue(l.content, e) == i) word.push_back(l);
  }
  std::sort(word.begin(), word.end(), LetterBefore);
  for (size_t k = 1; k < word.size(); ++k) {
    if (word[k].content == word[k - 1].content &&
        word[k].node.component == word[k - 1].node.component) {
      FailDomain("ambiguous node order");  // cannot happen for partitions
    }
  }
  return word;
}

Partition WithBox(const Partition& p, const BoxNode& n, int delta) {
  std::vector<int> parts = p.parts();
  if (n.row == p.length() + 1) parts.push_back(0);
  parts[n.row - 1] += delta;
  return Partition(std::move(parts));
}

ChargedBipartition ApplyBox(const ChargedBipartition& v, const BoxNode& n,
                            int delta) {
  ChargedBipartition out = v;
  Partition& p = n.component == 1 ? out.bipartition.first
                                  : out.bipartition.second;
  p = WithBox(p, n, delta);
  return out;
}

// Deterministic order-preserving parallel loop: f(i) must only write state
// owned by index i.
template <typename F>
void ParallelFor(int n, int workers, F&& f) {
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) f(i);
    });
  }
  for (auto& t : threads) t.join();
}

struct VertexExpansion {
  std::vector<std::string> child_labels;  // per residue; empty = no child
  std::vector<Bipartition> child_bips;    // parallel to child_labels
  bool highest_weight = true;
};

// Reduced words for every residue at once: children labels + hw flag.
VertexExpansion Expand(const ChargedBipartition& v, int e, bool with_children) {
  VertexExpansion out;
  out.child_labels.assign(e, "");
  out.child_bips.assign(e, Bipartition{});
  for (int i = 0; i < e; ++i) {
    const ReducedWord w = reduced_word(v, e, i);
    if (w.beta > 0) out.highest_weight = false;
    if (with_children && w.good_addable.has_value()) {
      out.child_bips[i] = ApplyBox(v, *w.good_addable, +1).bipartition;
      out.child_labels[i] = format_bipartition(out.child_bips[i]);
    }
  }
  return out;
}

}  // namespace

int node_content(const BoxNode& n, std::pair<int, int> charge) {
  if (n.component != 1 && n.component != 2) FailInvalid("component must be 1 or 2");
  return n.col - n.row + (n.component == 1 ? charge.first : charge.second);
}

ReducedWord reduced_word(const ChargedBipartition& v, int e, int i) {
  const std::vector<Letter> word = SortedLetters(v, e, i);
  std::vector<Letter> stack;
  for (const Letter& l : word) {
    if (l.addable && !stack.empty() && !stack.back().addable) {
      stack.pop_back();  // an R immediately followed by an A cancels
    } else {
      stack.push_back(l);
    }
  }
  ReducedWord out;
  for (const Letter& l : stack) {
    if (l.addable) {
      ++out.alpha;
    } else {
      ++out.beta;
    }
  }
  if (out.alpha > 0) out.good_addable = stack[out.alpha - 1].node;
  if (out.beta > 0) out.good_removable = stack[out.alpha].node;
  return out;
}

std::optional<ChargedBipartition> add_good_node(const ChargedBipartition& v,
                                                int e, int i) {
  const ReducedWord w = reduced_word(v, e, i);
  if (!w.good_addable.has_value()) return std::nullopt;
  return ApplyBox(v, *w.good_addable, +1);
}

std::optional<ChargedBipartition> remove_good_node(const ChargedBipartition& v,
                                                   int e, int i) {
  const ReducedWord w = reduced_word(v, e, i);
  if (!w.good_removable.has_value()) return std::nullopt;
  return ApplyBox(v, *w.good_removable, -1);
}

bool is_highest_weight(const ChargedBipartition& v, int e) {
  for (int i = 0; i < e; ++i) {
    if (reduced_word(v, e, i).beta > 0) return false;
  }
  return true;
}

std::vector<int> weight(const ChargedBipartition& v, int e) {
  std::vector<int> out(e);
  for (int i = 0; i < e; ++i) {
    const ReducedWord w = reduced_word(v, e, i);
    out[i] = w.alpha - w.beta;
  }
  return out;
}

int CrystalGraph::index_of(std::string_view label) const {
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> CrystalGraph::sources() const {
  std::vector<int> out;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].highest_weight) out.push_back(static_cast<int>(i));
  }
  return out;
}

CrystalGraph build_graph(std::pair<int, int> charge, int e, int max_rank,
                         const BuildOptions& options) {
  if (e < 2) FailInvalid("e must be at least 2");
  if (max_rank < 0) FailInvalid("max_rank must be non-negative");
  std::size_t total = 0;
  for (int m = 0; m <= max_rank; ++m) {
    total += static_cast<std::size_t>(bipartition_count(m));
    if (total > options.max_vertices) {
      FailLimit("vertex budget exceeded; lower max_rank or raise the limit");
    }
  }

  CrystalGraph g;
  g.e_ = e;
  g.charge_ = charge;
  g.max_rank_ = max_rank;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> level_bounds;  // [begin, end) per rank
  for (int m = 0; m <= max_rank; ++m) {
    const int begin = static_cast<int>(g.vertices_.size());
    std::vector<std::string> labels;
    std::vector<Bipartition> bips = bipartitions_of(m);
    std::vector<std::pair<std::string, Bipartition>> level;
    level.reserve(bips.size());
    for (Bipartition& b : bips) {
      level.emplace_back(format_bipartition(b), std::move(b));
    }
    std::sort(level.begin(), level.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [label, bip] : level) {
      index.emplace(label, static_cast<int>(g.vertices_.size()));
      g.vertices_.push_back(CrystalGraph::Vertex{
          m, std::move(bip), std::move(label), std::vector<int>(e, -1), false});
    }
    level_bounds.emplace_back(begin, static_cast<int>(g.vertices_.size()));
  }

  const int n = static_cast<int>(g.vertices_.size());
  std::vector<VertexExpansion> expansions(n);
  ParallelFor(n, options.workers, [&](int idx) {
    CrystalGraph::Vertex& v = g.vertices_[idx];
    expansions[idx] = Expand(ChargedBipartition{v.bipartition, charge}, e,
                             v.rank < max_rank);
  });
  for (int idx = 0; idx < n; ++idx) {
    CrystalGraph::Vertex& v = g.vertices_[idx];
    v.highest_weight = expansions[idx].highest_weight;
    for (int i = 0; i < e; ++i) {
      const std::string& child = expansions[idx].child_labels[i];
      if (child.empty()) continue;
      const auto it = index.find(child);
      if (it == index.end()) FailDomain("child vertex missing from its level");
      v.child[i] = it->second;
      g.edges_.push_back(CrystalGraph::Edge{idx, it->second, i});
    }
  }
  return g;
}

CrystalGraph build_component(const ChargedBipartition& root, int e, int depth,
                             const BuildOptions& options) {
  if (e < 2) FailInvalid("e must be at least 2");
  if (depth < 0) FailInvalid("depth must be non-negative");
  if (!is_highest_weight(root, e)) {
    FailDomain("component root must be a highest-weight vertex");
  }

  CrystalGraph g;
  g.e_ = e;
  g.charge_ = root.charge;
  g.max_rank_ = root.bipartition.rank() + depth;
  g.root_ = 0;
  std::unordered_map<std::string, int> index;

  std::vector<Bipartition> level{root.bipartition};
  index.emplace(format_bipartition(root.bipartition), 0);
  g.vertices_.push_back(CrystalGraph::Vertex{
      root.bipartition.rank(), root.bipartition,
      format_bipartition(root.bipartition), std::vector<int>(e, -1), true});

  for (int d = 0; d < depth && !level.empty(); ++d) {
    const int base = static_cast<int>(g.vertices_.size()) -
                     static_cast<int>(level.size());
    const int n = static_cast<int>(level.size());
    std::vector<VertexExpansion> expansions(n);
    ParallelFor(n, options.workers, [&](int k) {
      expansions[k] = Expand(ChargedBipartition{level[k], root.charge}, e,
                             /*with_children=*/true);
    });
    // Deterministic merge: next level's labels sorted, then indexed.
    std::map<std::string, Bipartition> next;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < e; ++i) {
        const std::string& label = expansions[k].child_labels[i];
        if (label.empty() || next.count(label) != 0) continue;
        next.emplace(label, expansions[k].child_bips[i]);
      }
    }
    for (auto& [label, bip] : next) {
      if (g.vertices_.size() >= options.max_vertices) {
        FailLimit("vertex budget exceeded; lower depth or raise the limit");
      }
      index.emplace(label, static_cast<int>(g.vertices_.size()));
      g.vertices_.push_back(CrystalGraph::Vertex{bip.rank(), bip, label,
                                                 std::vector<int>(e, -1),
                                                 false});
    }
    std::vector<Bipartition> next_level;
    next_level.reserve(next.size());
    for (int k = 0; k < n; ++k) {
      CrystalGraph::Vertex& v = g.vertices_[base + k];
      for (int i = 0; i < e; ++i) {
        const std::string& label = expansions[k].child_labels[i];
        if (label.empty()) continue;
        const int to = index.at(label);
        v.child[i] = to;
        g.edges_.push_back(CrystalGraph::Edge{base + k, to, i});
      }
    }
    for (auto& [label, bip] : next) next_level.push_back(std::move(bip));
    level = std::move(next_level);
  }
  return g;
}

std::optional<int> iso_color_shift(const CrystalGraph& a,
                                   const CrystalGraph& b) {
  if (a.e() != b.e()) FailInvalid("graphs were built with different e");
  if (a.root() < 0 || b.root() < 0) {
    FailInvalid("color-shift comparison needs rooted component graphs");
  }
  if (a.vertices().size() != b.vertices().size()) return std::nullopt;
  const int e = a.e();
  const int n = static_cast<int>(a.vertices().size());
  for (int d = 0; d < e; ++d) {
    std::vector<int> to_b(n, -1), to_a(n, -1);
    std::vector<std::pair<int, int>> queue{{a.root(), b.root()}};
    to_b[a.root()] = b.root();
    to_a[b.root()] = a.root();
    bool ok = true;
    for (size_t q = 0; q < queue.size() && ok; ++q) {
      const auto [u, v] = queue[q];
      for (int i = 0; i < e && ok; ++i) {
        const int cu = a.vertices()[u].child[i];
        const int cv = b.vertices()[v].child[(i + d) % e];
        if ((cu < 0) != (cv < 0)) {
          ok = false;
        } else if (cu >= 0) {
          if (to_b[cu] < 0 && to_a[cv] < 0) {
            to_b[cu] = cv;
            to_a[cv] = cu;
            queue.emplace_back(cu, cv);
          } else if (to_b[cu] != cv || to_a[cv] != cu) {
            ok = false;
          }
        }
      }
    }
    if (ok && static_cast<int>(queue.size()) == n) return d;
  }
  return std::nullopt;
}

std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n  rankdir=TB;\n";
  for (size_t i = 0; i < g.vertices().size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + g.vertices()[i].label +
           "\"];\n";
  }
  for (const auto& edge : g.edges()) {
    out += "  v" + std::to_string(edge.from) + " -> v" +
           std::to_string(edge.to) + " [label=\"" +
           std::to_string(edge.residue) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["e"] = g.e();
  j["charge"] = {g.charge().first, g.charge().second};
  j["max_rank"] = g.max_rank();
  if (g.root() >= 0) j["root"] = g.vertices()[g.root()].label;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) {
    j["vertices"].push_back({{"rank", v.rank},
                             {"bipartition", v.label},
                             {"highest_weight", v.highest_weight}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& edge : g.edges()) {
    j["edges"].push_back(
        {{"from", edge.from}, {"to", edge.to}, {"residue", edge.residue}});
  }
  return j.dump(2) + "\n";
}

std::string to_text(const CrystalGraph& g) {
  std::string out = "crystal graph\n";
  out += "e: " + std::to_string(g.e()) + "\n";
  out += "charge: (" + std::to_string(g.charge().first) + "," +
         std::to_string(g.charge().second) + ")\n";
  out += "max rank: " + std::to_string(g.max_rank()) + "\n";
  if (g.root() >= 0) {
    out += "component root: " + g.vertices()[g.root()].label + "\n";
  }

  std::map<int, std::vector<const CrystalGraph::Vertex*>> by_rank;
  for (const auto& v : g.vertices()) by_rank[v.rank].push_back(&v);
  std::string counts;
  for (const auto& [rank, vs] : by_rank) {
    if (!counts.empty()) counts += ' ';
    counts += std::to_string(vs.size());
  }
  out += "vertices: " + std::to_string(g.vertices().size()) +
         " (by rank: " + counts + ")\n";
  out += "edges: " + std::to_string(g.edges().size()) + "\n";

  std::string below, top;
  for (int idx : g.sources()) {
    const auto& v = g.vertices()[idx];
    std::string item = v.label + " (rank " + std::to_string(v.rank) + ")";
    std::string& line = v.rank == g.max_rank() ? top : below;
    if (!line.empty()) line += ", ";
    line += item;
  }
  out += "sources: " + (below.empty() ? "none" : below) + "\n";
  if (!top.empty()) out += "sources at top rank: " + top + "\n";

  for (const auto& [rank, vs] : by_rank) {
    out += "rank " + std::to_string(rank) + ":";
    for (const auto* v : vs) out += " " + v->label;
    out += "\n";
  }
  if (!g.edges().empty()) {
    out += "edges (from -residue-> to):\n";
    for (const auto& edge : g.edges()) {
      out += "  " + g.vertices()[edge.from].label + " -" +
             std::to_string(edge.residue) + "-> " + g.vertices()[edge.to].label +
             "\n";
    }
  }
  return out;
}

}  // namespace hcc
