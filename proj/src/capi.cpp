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
// The extern-"C" surface: opaque handles over the C++ core, status codes for
// every failure path, and a thread-local last-error message.

#include "hccrystal/hccrystal.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "core/crystal.hpp"
#include "core/error.hpp"
#include "core/hc.hpp"
#include "core/partition.hpp"
#include "core/symbol.hpp"
#include "core/verify.hpp"

struct hcc_graph {
  hcc::CrystalGraph graph;
};

struct hcc_prediction {
  hcc::Prediction prediction;
};

namespace {

thread_local std::string t_last_error;

hcc_status Fail(hcc_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

hcc_status FromError(const hcc::Error& err) {
  switch (err.kind()) {
    case hcc::ErrorKind::kParse:
      return Fail(HCC_ERROR_PARSE, err.what());
    case hcc::ErrorKind::kInvalidArgument:
      return Fail(HCC_ERROR_INVALID, err.what());
    case hcc::ErrorKind::kDomain:
      return Fail(HCC_ERROR_DOMAIN, err.what());
    case hcc::ErrorKind::kLimit:
      return Fail(HCC_ERROR_LIMIT, err.what());
  }
  return Fail(HCC_ERROR_INVALID, err.what());
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
hcc_status Guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const hcc::Error& err) {
    return FromError(err);
  } catch (const std::exception& ex) {
    return Fail(HCC_ERROR_INVALID, ex.what());
  }
}

hcc::BuildOptions MakeOptions(long long max_vertices, int workers) {
  hcc::BuildOptions options;
  if (max_vertices > 0)
    options.max_vertices = static_cast<std::size_t>(max_vertices);
  options.workers = workers > 0 ? workers : 1;
  return options;
}

hcc_status RenderToOut(const std::string& text, char** out) {
  *out = CopyString(text);
  return HCC_OK;
}

std::vector<int> ParseIntList(const char* text) {
  std::vector<int> out;
  if (text == nullptr) return out;
  const std::string s(text);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    const std::string item = s.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      hcc::FailParse("bad integer list item: \"" + item + "\"");
    }
    if (used != item.size())
      hcc::FailParse("bad integer list item: \"" + item + "\"");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* hcc_last_error(void) { return t_last_error.c_str(); }

void hcc_string_free(char* s) { delete[] s; }

hcc_status hcc_graph_build(int e, int charge1, int charge2, int max_rank,
                           long long max_vertices, int workers,
                           hcc_graph** out) {
  if (out == nullptr) return Fail(HCC_ERROR_NULL, "out must not be NULL");
  *out = nullptr;
  return Guarded([&] {
    *out = new hcc_graph{hcc::build_graph({charge1, charge2}, e, max_rank,
                                          MakeOptions(max_vertices, workers))};
    return HCC_OK;
  });
}

hcc_status hcc_graph_component(int e, int charge1, int charge2,
                               const char* root_bipartition, int depth,
                               long long max_vertices, int workers,
                               hcc_graph** out) {
  if (out == nullptr) return Fail(HCC_ERROR_NULL, "out must not be NULL");
  *out = nullptr;
  if (root_bipartition == nullptr)
    return Fail(HCC_ERROR_NULL, "root_bipartition must not be NULL");
  return Guarded([&] {
    const hcc::ChargedBipartition root{
        hcc::parse_bipartition(root_bipartition), {charge1, charge2}};
    *out = new hcc_graph{hcc::build_component(
        root, e, depth, MakeOptions(max_vertices, workers))};
    return HCC_OK;
  });
}

void hcc_graph_free(hcc_graph* g) { delete g; }

hcc_status hcc_graph_counts(const hcc_graph* g, long long* vertices,
                            long long* edges) {
  if (g == nullptr) return Fail(HCC_ERROR_NULL, "graph must not be NULL");
  if (vertices != nullptr)
    *vertices = static_cast<long long>(g->graph.vertices().size());
  if (edges != nullptr)
    *edges = static_cast<long long>(g->graph.edges().size());
  return HCC_OK;
}

hcc_status hcc_graph_render(const hcc_graph* g, hcc_format format,
                            char** out) {
  if (g == nullptr || out == nullptr)
    return Fail(HCC_ERROR_NULL, "graph and out must not be NULL");
  return Guarded([&] {
    switch (format) {
      case HCC_FORMAT_TEXT:
        return RenderToOut(hcc::to_text(g->graph), out);
      case HCC_FORMAT_DOT:
        return RenderToOut(hcc::to_dot(g->graph), out);
      case HCC_FORMAT_JSON:
        return RenderToOut(hcc::to_json(g->graph), out);
    }
    return Fail(HCC_ERROR_INVALID, "unknown render format");
  });
}

hcc_status hcc_graph_color_shift(const hcc_graph* a, const hcc_graph* b,
                                 int* shift) {
  if (a == nullptr || b == nullptr || shift == nullptr)
    return Fail(HCC_ERROR_NULL, "graphs and shift must not be NULL");
  return Guarded([&] {
    const auto d = hcc::iso_color_shift(a->graph, b->graph);
    if (!d.has_value())
      return Fail(HCC_ERROR_DOMAIN,
                  "the graphs are not isomorphic under any color rotation");
    *shift = *d;
    return HCC_OK;
  });
}

hcc_status hcc_predict(int n, int e, hcc_prediction** out) {
  if (out == nullptr) return Fail(HCC_ERROR_NULL, "out must not be NULL");
  *out = nullptr;
  return Guarded([&] {
    *out = new hcc_prediction{hcc::predict_series(n, e)};
    return HCC_OK;
  });
}

void hcc_prediction_free(hcc_prediction* p) { delete p; }

hcc_status hcc_prediction_render(const hcc_prediction* p, hcc_format format,
                                 char** out) {
  if (p == nullptr || out == nullptr)
    return Fail(HCC_ERROR_NULL, "prediction and out must not be NULL");
  return Guarded([&] {
    switch (format) {
      case HCC_FORMAT_TEXT:
        return RenderToOut(hcc::to_text(p->prediction), out);
      case HCC_FORMAT_DOT:
        return RenderToOut(hcc::to_dot(p->prediction), out);
      case HCC_FORMAT_JSON:
        return RenderToOut(hcc::to_json(p->prediction), out);
    }
    return Fail(HCC_ERROR_INVALID, "unknown render format");
  });
}

hcc_status hcc_render_symbol(const char* bipartition, int charge1, int charge2,
                             char** out) {
  if (bipartition == nullptr || out == nullptr)
    return Fail(HCC_ERROR_NULL, "bipartition and out must not be NULL");
  return Guarded([&] {
    const hcc::Symbol s = hcc::make_symbol(hcc::parse_bipartition(bipartition),
                                           {charge1, charge2});
    return RenderToOut(hcc::render_symbol(s), out);
  });
}

hcc_status hcc_render_fused_abacus(const char* bipartition, int charge1,
                                   int charge2, int e, char** out) {
  if (bipartition == nullptr || out == nullptr)
    return Fail(HCC_ERROR_NULL, "bipartition and out must not be NULL");
  return Guarded([&] {
    const hcc::Symbol s = hcc::make_symbol(hcc::parse_bipartition(bipartition),
                                           {charge1, charge2});
    return RenderToOut(hcc::render_abacus(hcc::fused_abacus(s, e)), out);
  });
}

hcc_status hcc_join(int t, const char* bipartition, char** out) {
  if (bipartition == nullptr || out == nullptr)
    return Fail(HCC_ERROR_NULL, "bipartition and out must not be NULL");
  return Guarded([&] {
    const hcc::Partition joined =
        hcc::two_core_join(t, hcc::parse_bipartition(bipartition));
    return RenderToOut(hcc::format_partition(joined), out);
  });
}

hcc_status hcc_bipartition_rank(const char* bipartition, int* rank) {
  if (bipartition == nullptr || rank == nullptr)
    return Fail(HCC_ERROR_NULL, "bipartition and rank must not be NULL");
  return Guarded([&] {
    *rank = hcc::parse_bipartition(bipartition).rank();
    return HCC_OK;
  });
}

hcc_status hcc_core(const char* partition, int e, char** core_out,
                    int* weight_out) {
  if (partition == nullptr)
    return Fail(HCC_ERROR_NULL, "partition must not be NULL");
  return Guarded([&] {
    const hcc::Partition p = hcc::parse_partition(partition);
    const hcc::Partition core = hcc::e_core(p, e);
    if (weight_out != nullptr) *weight_out = hcc::e_weight(p, e);
    if (core_out != nullptr)
      return RenderToOut(hcc::format_partition(core), core_out);
    return HCC_OK;
  });
}

hcc_status hcc_highest_weight(const char* bipartition, int charge1,
                              int charge2, int e, int* crystal_hw,
                              int* periodic) {
  if (bipartition == nullptr)
    return Fail(HCC_ERROR_NULL, "bipartition must not be NULL");
  return Guarded([&] {
    const hcc::Bipartition b = hcc::parse_bipartition(bipartition);
    const hcc::ChargedBipartition v{b, {charge1, charge2}};
    if (crystal_hw != nullptr)
      *crystal_hw = hcc::is_highest_weight(v, e) ? 1 : 0;
    if (periodic != nullptr)
      *periodic = hcc::is_totally_periodic(
                      hcc::make_symbol(b, {charge1, charge2}), e)
                      ? 1
                      : 0;
    return HCC_OK;
  });
}

hcc_status hcc_check_names(char** out) {
  if (out == nullptr) return Fail(HCC_ERROR_NULL, "out must not be NULL");
  return Guarded([&] {
    std::string joined;
    for (const std::string& name : hcc::check_names()) {
      if (!joined.empty()) joined += ",";
      joined += name;
    }
    return RenderToOut(joined, out);
  });
}

hcc_status hcc_verify(const char* check, const char* e_list, int max_m,
                      int max_rank, int max_t, int* passed, char** report) {
  if (check == nullptr) return Fail(HCC_ERROR_NULL, "check must not be NULL");
  return Guarded([&] {
    hcc::CheckOptions options;
    options.e_values = ParseIntList(e_list);
    options.max_m = max_m;
    options.max_rank = max_rank;
    options.max_t = max_t;
    const hcc::CheckResult result = hcc::run_check(check, options);
    if (passed != nullptr) *passed = result.passed ? 1 : 0;
    if (report != nullptr) return RenderToOut(result.report, report);
    return HCC_OK;
  });
}

}  // extern "C"
