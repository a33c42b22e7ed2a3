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

#include "fockchan/fock_core.hpp"

#include <cmath>
#include <string>

namespace fockchan {

double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("log_binomial: require 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const int kk = std::min(k, n - k);
  double acc = 0.0;
  for (int i = 1; i <= kk; ++i) {
    acc += std::log(static_cast<double>(n - kk + i) / static_cast<double>(i));
  }
  return acc;
}

namespace {

template <typename Op>
void check_density_impl(const Op& op, const char* name) {
  const auto& e = op.entries();
  if (!e.allFinite()) throw NumericError(std::string(name) + ": non-finite entry");
  if ((e - e.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError(std::string(name) + ": density operator is not symmetric within 1e-12");
  }
  if (e.trace() > 1.0 + 1e-9) throw DomainError(std::string(name) + ": density operator trace exceeds 1");
  if (min_eigenvalue_block_symmetric(e) < -1e-9) {
    throw DomainError(std::string(name) + ": density operator has a negative eigenvalue");
  }
}

}  // namespace

void check_density(const FockOperator& op) { check_density_impl(op, "FockOperator"); }

void check_density(const TwoModeFockOperator& op) { check_density_impl(op, "TwoModeFockOperator"); }

}  // namespace fockchan
