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

#ifndef FOCKCHAN_TOOLS_CLI_HPP_
#define FOCKCHAN_TOOLS_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fockchan/thresholds.hpp"

namespace fockchan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string command;
  StateFamily family = StateFamily::Noon;
  int n = 5;
  ChannelKind kind = ChannelKind::Attenuator;
  std::optional<double> kappa;
  std::optional<double> noise;
  std::optional<KappaGrid> grid;
  double tol = kDefaultSolverTol;
  double tail_tol = kDefaultTailTol;
  std::optional<int> cutoff;  // empty = adaptive
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty = stdout
  std::string meta_path;
  int figure_id = 0;
  bool full_ppt = false;
  bool quick = false;
  double perturb = 0.0;
  unsigned threads = 1;
};

/// Throws UsageError when the configuration violates its invariants.
void check_config(const RunConfig& config);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

/// Thread cap from FOCKCHAN_THREADS, defaulting to the hardware concurrency.
unsigned threads_from_env();

/// Header row shared by the sweep and figure CSV outputs.
inline constexpr const char* kCurveCsvHeader = "kappa,a_curve,g_inf,g_1,margin";

void write_curve_csv(const ThresholdCurve& curve, std::ostream& os);

/// Entry point behind the `fockchan` executable. `args` excludes the program
/// name. Errors are reported on `err` as a single `error: <kind>: ...` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fockchan::cli

#endif  // FOCKCHAN_TOOLS_CLI_HPP_
