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

// Noise thresholds a(kappa) where a witness changes sign, swept over kappa.

#ifndef FOCKCHAN_THRESHOLDS_HPP_
#define FOCKCHAN_THRESHOLDS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "fockchan/witness.hpp"

namespace fockchan {

/// delta(kappa, a); negative means entanglement is certified.
using DeltaFunction = std::function<double(double kappa, double noise)>;

inline constexpr double kDefaultSolverTol = 1e-9;
inline constexpr double kCoarseScanStep = 0.25;
inline constexpr double kFineScanStep = 0.01;

DeltaFunction delta_function(StateFamily family, ChannelKind kind, int n);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// lo = 0 and the first hi in {1, 2, 4, ..., 64} with delta(kappa, hi) > 0.
/// Throws BracketError if delta(kappa, 0) >= 0 or no sign change appears.
Bracket bracket(const DeltaFunction& delta, double kappa);

struct ThresholdSolution {
  double a = 0.0;
  double bracket_width = 0.0;
  int iterations = 0;
};

/// First noise value where delta turns from negative to non-negative, located
/// by a 0.25 scan, confirmed at 0.01 resolution, and refined by bisection to
/// width < tol. The result is checked to straddle the sign change at +-2 tol.
ThresholdSolution solve_threshold(const DeltaFunction& delta, double kappa, double tol = kDefaultSolverTol);

ThresholdSolution solve_threshold(StateFamily family, ChannelKind kind, int n, double kappa,
                                  double tol = kDefaultSolverTol);

/// Noise at which ppt_separable flips for a two-mode squeezed vacuum behind two
/// identical channels, by bisection on the boolean. Independent of the closed
/// forms in gaussian.hpp, which it is used to check.
double numeric_gaussian_threshold(ChannelKind kind, double mu, double kappa, double tol = 1e-10);

/// Noise at which the full partial transpose of the truncated two-sided output
/// stops having a negative eigenvalue. Expensive; intended for comparison
/// against the 2x2 witness threshold at small n.
double full_ppt_threshold(StateFamily family, ChannelKind kind, int n, double kappa, int cutoff,
                          double tol = 1e-6);

struct KappaGrid {
  double kappa_min = 0.05;
  double kappa_max = 1.0;
  int steps = 40;

  static KappaGrid attenuator_default() { return {0.05, 1.0, 40}; }
  static KappaGrid amplifier_default() { return {1.0, 1.6, 40}; }

  /// Evenly spaced, endpoints included.
  std::vector<double> points() const;
};

struct CurvePoint {
  double kappa = 0.0;
  double a_threshold = 0.0;
  double bracket_width = 0.0;
  int iterations = 0;
  double g_inf = 0.0;  // breaking_line(kind, kappa)
  double g_1 = 0.0;    // Gaussian threshold of a one-ebit squeezed vacuum

  double margin() const { return a_threshold - g_inf; }
};

struct CurveFailure {
  double kappa = 0.0;
  std::string reason;
};

struct ThresholdCurve {
  StateFamily family = StateFamily::Noon;
  ChannelKind kind = ChannelKind::Attenuator;
  int n = 0;
  double tol = kDefaultSolverTol;
  std::vector<CurvePoint> points;      // kappa strictly increasing
  std::vector<CurveFailure> failures;  // grid points with no threshold
};

/// Solves every grid point, on up to `threads` worker threads. The result is
/// assembled in grid order and does not depend on the thread count.
ThresholdCurve sweep_curve(StateFamily family, ChannelKind kind, int n, const KappaGrid& grid,
                           double tol = kDefaultSolverTol, unsigned threads = 1);

struct RegionRow {
  double kappa = 0.0;
  double a_threshold = 0.0;
  double breaking = 0.0;
  double margin = 0.0;
};

/// Channels that break every Gaussian state yet leave the witness negative:
/// margin = a_threshold - breaking_line > 0.
struct RegionReport {
  std::vector<RegionRow> rows;
  std::vector<double> positive_kappas;

  bool empty() const { return positive_kappas.empty(); }
};

RegionReport region_r(const ThresholdCurve& curve);

}  // namespace fockchan

#endif  // FOCKCHAN_THRESHOLDS_HPP_
