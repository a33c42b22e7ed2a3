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

#include "fockchan/thresholds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <variant>

namespace fockchan {

namespace {

std::string kappa_str(double kappa) { return std::to_string(kappa); }

// Bisection on a predicate that is false below the root and true above it.
// Returns the final [lo, hi] and the iteration count.
template <typename Pred>
std::pair<Bracket, int> bisect(Pred above_root, double lo, double hi, double tol) {
  int iterations = 0;
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at double resolution
    (above_root(mid) ? hi : lo) = mid;
    ++iterations;
  }
  return {{lo, hi}, iterations};
}

double one_ebit_mu() {
  static const double mu = ebits_to_mu(1.0);
  return mu;
}

}  // namespace

DeltaFunction delta_function(StateFamily family, ChannelKind kind, int n) {
  if (n < 1) throw DomainError("delta_function: photon number n must be >= 1");
  return [family, kind, n](double kappa, double noise) {
    return delta_from_elements(family, x_elements(n, ChannelParams(kind, kappa, noise)));
  };
}

Bracket bracket(const DeltaFunction& delta, double kappa) {
  if (!(delta(kappa, 0.0) < 0.0)) {
    throw BracketError("bracket: delta >= 0 at a = 0 for kappa = " + kappa_str(kappa) +
                       "; the witness certifies no entanglement to start from");
  }
  for (double hi = 1.0; hi <= 64.0; hi *= 2.0) {
    if (delta(kappa, hi) > 0.0) return {0.0, hi};
  }
  throw BracketError("bracket: no sign change of delta for a <= 64 at kappa = " + kappa_str(kappa));
}

ThresholdSolution solve_threshold(const DeltaFunction& delta, double kappa, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_threshold: tol must be > 0");
  const Bracket br = bracket(delta, kappa);
  auto f = [&](double a) { return delta(kappa, a); };

  // Coarse upward scan for the first non-negative value.
  double lo = br.lo;
  double hi = br.hi;
  for (int i = 1;; ++i) {
    const double a = std::min(i * kCoarseScanStep, br.hi);
    if (f(a) >= 0.0) {
      hi = a;
      lo = (i - 1) * kCoarseScanStep;
      break;
    }
    if (a >= br.hi) break;
  }
  // Fine re-scan of [0, hi].
  for (int i = 1;; ++i) {
    const double a = std::min(i * kFineScanStep, hi);
    if (f(a) >= 0.0) {
      lo = (i - 1) * kFineScanStep;
      hi = a;
      break;
    }
    if (a >= hi) break;
  }

  const auto [interval, iterations] = bisect([&](double a) { return f(a) >= 0.0; }, lo, hi, tol);
  ThresholdSolution s{0.5 * (interval.lo + interval.hi), interval.hi - interval.lo, iterations};

  const double below = s.a - 2.0 * tol;
  if ((below >= 0.0 && !(f(below) < 0.0)) || !(f(s.a + 2.0 * tol) > 0.0)) {
    throw NumericError("solve_threshold: sign change not confirmed around a = " + std::to_string(s.a) +
                       " at kappa = " + kappa_str(kappa));
  }
  return s;
}

ThresholdSolution solve_threshold(StateFamily family, ChannelKind kind, int n, double kappa, double tol) {
  return solve_threshold(delta_function(family, kind, n), kappa, tol);
}

double numeric_gaussian_threshold(ChannelKind kind, double mu, double kappa, double tol) {
  const VarianceMatrix v = tmsv_variance(SqueezeParam(mu));
  auto separable = [&](double a) { return ppt_separable(evolve_variance(v, ChannelParams(kind, kappa, a))); };
  if (separable(0.0)) return 0.0;
  double hi = 1.0;
  while (!separable(hi)) {
    hi *= 2.0;
    if (hi > 64.0) throw BracketError("numeric_gaussian_threshold: still entangled at a = 64");
  }
  const Bracket b = bisect(separable, 0.0, hi, tol).first;
  return 0.5 * (b.lo + b.hi);
}

double full_ppt_threshold(StateFamily family, ChannelKind kind, int n, double kappa, int cutoff, double tol) {
  const NonGaussianState state = make_state(family, n);
  auto separable = [&](double a) {
    const TwoSidedOutput out = evolve_two_sided(state, ChannelParams(kind, kappa, a), cutoff);
    return full_ppt_min_eigenvalue(out.rho) >= 0.0;
  };
  if (separable(0.0)) return 0.0;
  double hi = 1.0;
  while (!separable(hi)) {
    hi *= 2.0;
    if (hi > 64.0) throw BracketError("full_ppt_threshold: still NPT at a = 64");
  }
  const Bracket b = bisect(separable, 0.0, hi, tol).first;
  return 0.5 * (b.lo + b.hi);
}

std::vector<double> KappaGrid::points() const {
  if (!(kappa_min < kappa_max)) throw DomainError("KappaGrid: require kappa_min < kappa_max");
  if (steps < 2) throw DomainError("KappaGrid: require steps >= 2");
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (kappa_max - kappa_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[i] = kappa_min + i * h;
  out.back() = kappa_max;
  return out;
}

ThresholdCurve sweep_curve(StateFamily family, ChannelKind kind, int n, const KappaGrid& grid, double tol,
                           unsigned threads) {
  const std::vector<double> kappas = grid.points();
  for (double kappa : kappas) ChannelParams(kind, kappa, 0.0);  // domain check for the whole grid up front

  const DeltaFunction delta = delta_function(family, kind, n);
  const double mu1 = one_ebit_mu();
  using Outcome = std::variant<CurvePoint, CurveFailure>;
  std::vector<Outcome> outcomes(kappas.size());

  auto solve_one = [&](std::size_t i) {
    const double kappa = kappas[i];
    try {
      const ThresholdSolution s = solve_threshold(delta, kappa, tol);
      CurvePoint p;
      p.kappa = kappa;
      p.a_threshold = s.a;
      p.bracket_width = s.bracket_width;
      p.iterations = s.iterations;
      p.g_inf = breaking_line(kind, kappa);
      p.g_1 = kind == ChannelKind::Attenuator ? attenuator_gaussian_threshold(mu1, kappa)
                                              : amplifier_gaussian_threshold(mu1, kappa);
      outcomes[i] = p;
    } catch (const BracketError& e) {
      outcomes[i] = CurveFailure{kappa, e.what()};
    } catch (const NumericError& e) {
      outcomes[i] = CurveFailure{kappa, e.what()};
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(kappas.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < kappas.size(); ++i) solve_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < kappas.size(); i = next++) solve_one(i);
      });
    }
  }

  ThresholdCurve curve;
  curve.family = family;
  curve.kind = kind;
  curve.n = n;
  curve.tol = tol;
  for (const Outcome& o : outcomes) {
    if (const auto* p = std::get_if<CurvePoint>(&o)) {
      curve.points.push_back(*p);
    } else {
      curve.failures.push_back(std::get<CurveFailure>(o));
    }
  }
  return curve;
}

RegionReport region_r(const ThresholdCurve& curve) {
  RegionReport report;
  report.rows.reserve(curve.points.size());
  for (const CurvePoint& p : curve.points) {
    const RegionRow row{p.kappa, p.a_threshold, p.g_inf, p.margin()};
    report.rows.push_back(row);
    if (row.margin > 0.0) report.positive_kappas.push_back(row.kappa);
  }
  return report;
}

}  // namespace fockchan
