// Copyright 2026 The fockchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Cross-checks between independent computational routes, run by
// `fockchan validate`.

#ifndef FOCKCHAN_TOOLS_VALIDATE_HPP_
#define FOCKCHAN_TOOLS_VALIDATE_HPP_

#include <string>
#include <vector>

namespace fockchan::cli {

struct ValidationOptions {
  bool quick = false;
  /// Offset added to the closed-form x5 before comparison.
  double perturb_x5 = 0.0;
};

struct CheckResult {
  std::string name;
  std::string description;
  double tolerance = 0.0;
  double observed = 0.0;
  bool passed = false;
};

std::vector<CheckResult> run_validation(const ValidationOptions& options);

}  // namespace fockchan::cli

#endif  // FOCKCHAN_TOOLS_VALIDATE_HPP_
