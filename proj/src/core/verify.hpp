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

#ifndef HCCRYSTAL_CORE_VERIFY_HPP_
#define HCCRYSTAL_CORE_VERIFY_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace hcc {

/// Outcome of one named consistency check.
struct CheckResult {
  bool passed = false;
  /// First line: "<name>: pass|FAIL (<count> assertions...)"; further lines
  /// list counterexamples.
  std::string report;
};

/// Sweep ranges for the checks that take them. Zero/empty/negative fields
/// select each check's documented default.
struct CheckOptions {
  std::vector<int> e_values;  // empty = check default
  int max_m = 0;              // <= 0 = check default
  int max_rank = 0;           // <= 0 = check default
  int max_t = -1;             // < 0 = check default
};

/// The accepted check names, in canonical order. The names are fixed tokens
/// of the command-line interface.
const std::vector<std::string>& check_names();

/// Runs one named check; invalid-argument error for an unknown name.
CheckResult run_check(std::string_view name, const CheckOptions& options = {});

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_VERIFY_HPP_
