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

// Command-line front end.  Everything here goes through the public C API in
// include/hccrystal/hccrystal.h; no core header is included.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hccrystal/hccrystal.h"

namespace {

// Exit codes: 0 on success, 1 when a well-formed request fails (an invalid
// move, an exceeded budget, a failed verification), 2 on usage errors.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int ExitCodeFor(hcc_status status) {
  switch (status) {
    case HCC_OK:
      return kExitOk;
    case HCC_ERROR_DOMAIN:
    case HCC_ERROR_LIMIT:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

int ReportError(hcc_status status) {
  std::cerr << "error: " << hcc_last_error() << "\n";
  return ExitCodeFor(status);
}

// Parses "c1,c2" into a charge pair.
bool ParseChargePair(const std::string& text, int* c1, int* c2) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    *c1 = std::stoi(text.substr(0, comma), &used);
    if (used != comma) return false;
    const std::string rest = text.substr(comma + 1);
    *c2 = std::stoi(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// Reads a positive integer from the environment, keeping `fallback` when the
// variable is unset or empty.  Returns false (with a message) on junk.
bool ReadPositiveEnv(const char* name, long long fallback, long long* out) {
  const char* text = std::getenv(name);
  if (text == nullptr || *text == '\0') {
    *out = fallback;
    return true;
  }
  char* end = nullptr;
  const long long value = std::strtoll(text, &end, 10);
  if (end == text || *end != '\0' || value <= 0) {
    std::cerr << "error: " << name << " must be a positive integer, got \""
              << text << "\"\n";
    return false;
  }
  *out = value;
  return true;
}

bool ReadBudgets(long long* max_vertices, long long* workers) {
  return ReadPositiveEnv("CRYSTAL_MAX_VERTICES", 0, max_vertices) &&
         ReadPositiveEnv("CRYSTAL_WORKERS", 0, workers);
}

hcc_format FormatOf(const std::string& name) {
  if (name == "dot") return HCC_FORMAT_DOT;
  if (name == "json") return HCC_FORMAT_JSON;
  return HCC_FORMAT_TEXT;
}

// Writes `text` to `path`, or to stdout when `path` is empty.
int Emit(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open \"" << path << "\" for writing\n";
    return kExitFailure;
  }
  file << text;
  if (!file.flush()) {
    std::cerr << "error: failed to write \"" << path << "\"\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct CrystalArgs {
  int e = 3;
  std::string charge = "0,0";
  int max_rank = 0;
  std::string component;
  bool has_component = false;
  std::string format = "text";
  std::string out;
};

struct HcArgs {
  int e = 3;
  int n = 0;
  std::string format = "text";
  std::string out;
};

struct InspectArgs {
  std::string bipartition;
  std::string partition;
  std::string charge = "0,0";
  int e = 3;
  int t = 0;
  std::string out;
};

struct VerifyArgs {
  std::string check;
  std::string e_list;
  int max_m = 0;
  int max_rank = 0;
  int max_t = -1;
};

int RunCrystal(const CrystalArgs& args) {
  int c1 = 0;
  int c2 = 0;
  if (!ParseChargePair(args.charge, &c1, &c2)) {
    std::cerr << "error: --charge expects \"c1,c2\", got \"" << args.charge
              << "\"\n";
    return kExitUsage;
  }
  long long max_vertices = 0;
  long long workers = 0;
  if (!ReadBudgets(&max_vertices, &workers)) return kExitUsage;

  hcc_graph* graph = nullptr;
  hcc_status status = HCC_OK;
  if (args.has_component) {
    // --max-rank caps the absolute rank, so convert it to a depth below the
    // root of the requested component.
    int root_rank = 0;
    status = hcc_bipartition_rank(args.component.c_str(), &root_rank);
    if (status != HCC_OK) return ReportError(status);
    if (args.max_rank < root_rank) {
      std::cerr << "error: --max-rank " << args.max_rank
                << " is below the rank " << root_rank
                << " of the component root\n";
      return kExitUsage;
    }
    status = hcc_graph_component(args.e, c1, c2, args.component.c_str(),
                                 args.max_rank - root_rank, max_vertices,
                                 static_cast<int>(workers), &graph);
  } else {
    status = hcc_graph_build(args.e, c1, c2, args.max_rank, max_vertices,
                             static_cast<int>(workers), &graph);
  }
  if (status != HCC_OK) return ReportError(status);

  char* text = nullptr;
  status = hcc_graph_render(graph, FormatOf(args.format), &text);
  if (status != HCC_OK) {
    hcc_graph_free(graph);
    return ReportError(status);
  }
  const int code = Emit(args.out, text);
  hcc_string_free(text);
  hcc_graph_free(graph);
  return code;
}

int RunHc(const HcArgs& args) {
  hcc_prediction* prediction = nullptr;
  hcc_status status = hcc_predict(args.n, args.e, &prediction);
  if (status != HCC_OK) return ReportError(status);

  char* text = nullptr;
  status = hcc_prediction_render(prediction, FormatOf(args.format), &text);
  if (status != HCC_OK) {
    hcc_prediction_free(prediction);
    return ReportError(status);
  }
  const int code = Emit(args.out, text);
  hcc_string_free(text);
  hcc_prediction_free(prediction);
  return code;
}

int EmitOwned(const std::string& path, char* text) {
  const int code = Emit(path, text);
  hcc_string_free(text);
  return code;
}

int RunInspectSymbol(const InspectArgs& args) {
  int c1 = 0;
  int c2 = 0;
  if (!ParseChargePair(args.charge, &c1, &c2)) {
    std::cerr << "error: --charge expects \"c1,c2\", got \"" << args.charge
              << "\"\n";
    return kExitUsage;
  }
  char* text = nullptr;
  const hcc_status status =
      hcc_render_symbol(args.bipartition.c_str(), c1, c2, &text);
  if (status != HCC_OK) return ReportError(status);
  return EmitOwned(args.out, text);
}

int RunInspectAbacus(const InspectArgs& args) {
  int c1 = 0;
  int c2 = 0;
  if (!ParseChargePair(args.charge, &c1, &c2)) {
    std::cerr << "error: --charge expects \"c1,c2\", got \"" << args.charge
              << "\"\n";
    return kExitUsage;
  }
  char* text = nullptr;
  const hcc_status status = hcc_render_fused_abacus(args.bipartition.c_str(),
                                                    c1, c2, args.e, &text);
  if (status != HCC_OK) return ReportError(status);
  return EmitOwned(args.out, text);
}

int RunInspectPhi(const InspectArgs& args) {
  char* text = nullptr;
  const hcc_status status =
      hcc_join(args.t, args.bipartition.c_str(), &text);
  if (status != HCC_OK) return ReportError(status);
  std::string line(text);
  hcc_string_free(text);
  line += "\n";
  return Emit(args.out, line.c_str());
}

int RunInspectEcore(const InspectArgs& args) {
  char* core = nullptr;
  int weight = 0;
  const hcc_status status =
      hcc_core(args.partition.c_str(), args.e, &core, &weight);
  if (status != HCC_OK) return ReportError(status);
  std::string body;
  body += std::to_string(args.e) + "-core: " + core + "\n";
  body += std::to_string(args.e) + "-weight: " + std::to_string(weight) + "\n";
  hcc_string_free(core);
  return Emit(args.out, body.c_str());
}

int RunInspectHw(const InspectArgs& args) {
  int c1 = 0;
  int c2 = 0;
  if (!ParseChargePair(args.charge, &c1, &c2)) {
    std::cerr << "error: --charge expects \"c1,c2\", got \"" << args.charge
              << "\"\n";
    return kExitUsage;
  }
  int from_graph = 0;
  int from_periods = 0;
  const hcc_status status = hcc_highest_weight(
      args.bipartition.c_str(), c1, c2, args.e, &from_graph, &from_periods);
  if (status != HCC_OK) return ReportError(status);
  std::string body;
  if (from_graph == from_periods) {
    body = std::string("highest weight: ") + (from_graph ? "yes" : "no") +
           " (both criteria agree)\n";
  } else {
    body = std::string("highest weight: criteria disagree (graph says ") +
           (from_graph ? "yes" : "no") + ", periodicity says " +
           (from_periods ? "yes" : "no") + ")\n";
  }
  const int code = Emit(args.out, body.c_str());
  if (code != kExitOk) return code;
  return from_graph == from_periods ? kExitOk : kExitFailure;
}

int RunVerify(const VerifyArgs& args) {
  int passed = 0;
  char* report = nullptr;
  const hcc_status status = hcc_verify(
      args.check.c_str(), args.e_list.empty() ? nullptr : args.e_list.c_str(),
      args.max_m, args.max_rank, args.max_t, &passed, &report);
  if (status != HCC_OK) return ReportError(status);
  std::cout << report << "\n";
  hcc_string_free(report);
  return passed != 0 ? kExitOk : kExitFailure;
}

std::string CheckNameList() {
  char* names = nullptr;
  if (hcc_check_names(&names) != HCC_OK) return "";
  std::string result(names);
  hcc_string_free(names);
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Partition and symbol combinatorics, colored graphs on bipartitions, "
      "and series prediction"};
  app.name("hccrystal");
  app.require_subcommand(1);

  CrystalArgs crystal_args;
  CLI::App* crystal = app.add_subcommand(
      "crystal", "Build the colored graph on charged bipartitions");
  crystal->add_option("--e", crystal_args.e, "Color count (must be odd, >= 3)")
      ->capture_default_str();
  crystal->add_option("--charge", crystal_args.charge,
                      "Charge pair \"c1,c2\"")
      ->capture_default_str();
  crystal->add_option("--max-rank", crystal_args.max_rank,
                      "Largest rank to include")
      ->required();
  CLI::Option* component_opt = crystal->add_option(
      "--component", crystal_args.component,
      "Restrict to the connected component rooted at this bipartition");
  crystal->add_option("--format", crystal_args.format, "Output format")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  crystal->add_option("--out", crystal_args.out,
                      "Write output to this file instead of stdout");

  HcArgs hc_args;
  CLI::App* hc = app.add_subcommand(
      "hc", "Predict how rank-n bipartitions group into series");
  hc->add_option("--e", hc_args.e, "Color count (must be odd, >= 3)")
      ->capture_default_str();
  hc->add_option("--n", hc_args.n, "Rank to analyze")->required();
  hc->add_option("--format", hc_args.format, "Output format")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  hc->add_option("--out", hc_args.out,
                 "Write output to this file instead of stdout");

  InspectArgs inspect_args;
  CLI::App* inspect =
      app.add_subcommand("inspect", "Inspect a single combinatorial object");
  inspect->require_subcommand(1);

  CLI::App* ins_symbol = inspect->add_subcommand(
      "symbol", "Render the two-row symbol of a charged bipartition");
  ins_symbol
      ->add_option("--bipartition", inspect_args.bipartition,
                   "Bipartition \"first.second\"")
      ->required();
  ins_symbol
      ->add_option("--charge", inspect_args.charge, "Charge pair \"c1,c2\"")
      ->capture_default_str();
  ins_symbol->add_option("--out", inspect_args.out,
                         "Write output to this file instead of stdout");

  CLI::App* ins_abacus = inspect->add_subcommand(
      "abacus", "Render the fused one-runner abacus of a charged bipartition");
  ins_abacus
      ->add_option("--bipartition", inspect_args.bipartition,
                   "Bipartition \"first.second\"")
      ->required();
  ins_abacus
      ->add_option("--charge", inspect_args.charge, "Charge pair \"c1,c2\"")
      ->capture_default_str();
  ins_abacus->add_option("--e", inspect_args.e, "Color count (must be odd)")
      ->capture_default_str();
  ins_abacus->add_option("--out", inspect_args.out,
                         "Write output to this file instead of stdout");

  CLI::App* ins_phi = inspect->add_subcommand(
      "phi", "Assemble the partition with 2-core index t and this quotient");
  ins_phi->add_option("--t", inspect_args.t, "2-core index (t >= 0)")
      ->required();
  ins_phi
      ->add_option("--bipartition", inspect_args.bipartition,
                   "Quotient pair \"first.second\"")
      ->required();
  ins_phi->add_option("--out", inspect_args.out,
                      "Write output to this file instead of stdout");

  CLI::App* ins_ecore = inspect->add_subcommand(
      "ecore", "Compute the e-core and e-weight of a partition");
  ins_ecore
      ->add_option("--partition", inspect_args.partition, "Partition to reduce")
      ->required();
  ins_ecore->add_option("--e", inspect_args.e, "Hook length to strip")
      ->capture_default_str();
  ins_ecore->add_option("--out", inspect_args.out,
                        "Write output to this file instead of stdout");

  CLI::App* ins_hw = inspect->add_subcommand(
      "hw", "Test whether a charged bipartition is a source vertex");
  ins_hw
      ->add_option("--bipartition", inspect_args.bipartition,
                   "Bipartition \"first.second\"")
      ->required();
  ins_hw->add_option("--charge", inspect_args.charge, "Charge pair \"c1,c2\"")
      ->capture_default_str();
  ins_hw->add_option("--e", inspect_args.e, "Color count (must be odd)")
      ->capture_default_str();
  ins_hw->add_option("--out", inspect_args.out,
                     "Write output to this file instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run one of the built-in cross-check suites");
  verify
      ->add_option("check", verify_args.check,
                   "Check name; one of: " + CheckNameList())
      ->required();
  verify->add_option("--e", verify_args.e_list,
                     "Comma-separated color counts to sweep (e.g. \"3,5\")");
  verify->add_option("--max-m", verify_args.max_m,
                     "Cap on column lengths swept (0 = default)");
  verify->add_option("--max-rank", verify_args.max_rank,
                     "Cap on ranks swept (0 = default)");
  verify->add_option("--max-t", verify_args.max_t,
                     "Cap on 2-core indices swept (-1 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  crystal_args.has_component = component_opt->count() > 0;

  if (crystal->parsed()) return RunCrystal(crystal_args);
  if (hc->parsed()) return RunHc(hc_args);
  if (inspect->parsed()) {
    if (ins_symbol->parsed()) return RunInspectSymbol(inspect_args);
    if (ins_abacus->parsed()) return RunInspectAbacus(inspect_args);
    if (ins_phi->parsed()) return RunInspectPhi(inspect_args);
    if (ins_ecore->parsed()) return RunInspectEcore(inspect_args);
    if (ins_hw->parsed()) return RunInspectHw(inspect_args);
  }
  if (verify->parsed()) return RunVerify(verify_args);
  return kExitUsage;
}
