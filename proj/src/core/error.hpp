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

#ifndef HCCRYSTAL_CORE_ERROR_HPP_
#define HCCRYSTAL_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hcc {

enum class ErrorKind {
  kParse,            // malformed partition/bipartition/charge text
  kInvalidArgument,  // parameter outside the documented domain (e even, ...)
  kDomain,           // structurally valid input violating a precondition
  kLimit,            // resource guard exceeded (vertex budget)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void FailParse(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}
[[noreturn]] inline void FailInvalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, what);
}
[[noreturn]] inline void FailDomain(const std::string& what) {
  throw Error(ErrorKind::kDomain, what);
}
[[noreturn]] inline void FailLimit(const std::string& what) {
  throw Error(ErrorKind::kLimit, what);
}

}  // namespace hcc

#endif  // HCCRYSTAL_CORE_ERROR_HPP_
