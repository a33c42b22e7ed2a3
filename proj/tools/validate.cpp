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

#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fockchan/thresholds.hpp"

namespace fockchan::cli {

namespace {

std::vector<ChannelParams> channel_grid(bool quick) {
  std::vector<ChannelParams> grid;
  const std::vector<double> noises = {0.0, 0.5, 2.0};
  const std::vector<double> att = quick ? std::vector<double>{0.3, 1.0} : std::vector<double>{0.3, 0.7, 0.95, 1.0};
  const std::vector<double> amp = quick ? std::vector<double>{1.0, 1.5} : std::vector<double>{1.0, 1.2, 1.5};
  for (double k : att)
    for (double a : noises) grid.push_back(ChannelParams::attenuator(k, a));
  for (double k : amp)
    for (double a : noises) grid.push_back(ChannelParams::amplifier(k, a));
  return grid;
}

CheckResult kraus_oracle(const ValidationOptions& opt) {
  const int max_index = opt.quick ? 3 : 6;
  const int cutoff = opt.quick ? 16 : 40;
  double worst = 0.0;
  for (const ChannelParams& p : channel_grid(opt.quick)) {
    for (int m = 0; m <= max_index; ++m) {
      for (int n = 0; n <= max_index; ++n) {
        const Eigen::MatrixXd closed = evolve_dyad(m, n, p, cutoff).op.entries();
        const Eigen::MatrixXd kraus = kraus_sum_evolve(m, n, p, cutoff).entries();
        worst = std::max(worst, (closed - kraus).cwiseAbs().maxCoeff());
      }
    }
  }
  return {"dyad_vs_kraus_sum", "closed-form dyad evolution vs explicit Kraus sum, entrywise", 1e-10, worst,
          worst <= 1e-10};
}

CheckResult x_elements_vs_evolution(const ValidationOptions& opt) {
  const int max_n = opt.quick ? 3 : 6;
  double worst = 0.0;
  for (const ChannelParams& p : channel_grid(opt.quick)) {
    for (int n = 1; n <= max_n; ++n) {
      SingleModeElements x = x_elements(n, p);
      x.x5 += opt.perturb_x5;
      const int cutoff = n;
      const FockOperator nn = evolve_dyad(n, n, p, cutoff).op;
      const FockOperator zz = evolve_dyad(0, 0, p, cutoff).op;
      const FockOperator n0 = evolve_dyad(n, 0, p, cutoff).op;
      const FockOperator zn = evolve_dyad(0, n, p, cutoff).op;
      const double errors[] = {std::abs(x.x1 - nn(n, n)), std::abs(x.x2 - nn(0, 0)), std::abs(x.x3 - zz(0, 0)),
                               std::abs(x.x4 - zz(n, n)), std::abs(x.x5 - n0(n, 0)), std::abs(x.x5 - zn(0, n))};
      for (double e : errors) worst = std::max(worst, e);
    }
  }
  return {"x_elements_vs_evolution", "closed-form x1..x5 vs bra-kets of the evolved dyads", 1e-10, worst,
          worst <= 1e-10};
}

CheckResult delta_vs_projection(const ValidationOptions& opt) {
  const int max_n = opt.quick ? 3 : 6;
  double worst = 0.0;
  for (const ChannelParams& p : channel_grid(opt.quick)) {
    for (StateFamily family : {StateFamily::Noon, StateFamily::Pnes}) {
      for (int n = 1; n <= max_n; ++n) {
        SingleModeElements x = x_elements(n, p);
        x.x5 += opt.perturb_x5;
        const double closed = delta_from_elements(family, x);
        const TwoSidedOutput out = evolve_two_sided(make_state(family, n), p, n);
        const double projected = delta_from_projection(family, project_subspace(out.rho, n));
        worst = std::max(worst, std::abs(closed - projected));
      }
    }
  }
  return {"delta_vs_two_sided_evolution", "witness from x-elements vs witness from the projected two-mode output",
          1e-10, worst, worst <= 1e-10};
}

CheckResult gaussian_thresholds(const ValidationOptions& opt) {
  const int samples = opt.quick ? 10 : 50;
  std::mt19937_64 rng(20110518);
  std::uniform_real_distribution<double> mu_dist(0.0, 3.0);
  std::uniform_real_distribution<double> att_dist(0.05, 1.0);
  std::uniform_real_distribution<double> amp_dist(1.0, 1.6);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double mu = mu_dist(rng);
    const double ka = att_dist(rng);
    const double kb = amp_dist(rng);
    worst = std::max(worst, std::abs(numeric_gaussian_threshold(ChannelKind::Attenuator, mu, ka) -
                                     attenuator_gaussian_threshold(mu, ka)));
    worst = std::max(worst, std::abs(numeric_gaussian_threshold(ChannelKind::Amplifier, mu, kb) -
                                     amplifier_gaussian_threshold(mu, kb)));
  }
  return {"gaussian_threshold_numeric_vs_closed_form", "PPT flip of the evolved squeezed vacuum vs closed form",
          1e-6, worst, worst <= 1e-6};
}

CheckResult witness_soundness(const ValidationOptions& opt) {
  const int n = opt.quick ? 2 : 3;
  const int cutoff = opt.quick ? 10 : 24;
  const std::vector<double> noises = {0.0, 0.1, 0.3, 0.6, 1.0, 1.5};
  std::vector<ChannelParams> grid;
  for (double k : {0.2, 0.5, 0.8, 0.95, 1.0})
    for (double a : noises) grid.push_back(ChannelParams::attenuator(k, a));
  for (double k : {1.1, 1.25, 1.4})
    for (double a : noises) grid.push_back(ChannelParams::amplifier(k, a));

  double counterexamples = 0.0;
  for (const ChannelParams& p : grid) {
    for (StateFamily family : {StateFamily::Noon, StateFamily::Pnes}) {
      const WitnessResult w = evaluate_witness(witness_index(family, p.kind()), family, n, p);
      if (!w.entangled) continue;
      const TwoSidedOutput out = evolve_two_sided(make_state(family, n), p, cutoff);
      if (!(full_ppt_min_eigenvalue(out.rho) < 0.0)) counterexamples += 1.0;
    }
  }
  return {"witness_soundness", "delta < 0 implies a negative eigenvalue of the full partial transpose "
                               "(observed = number of counterexamples)",
          0.0, counterexamples, counterexamples == 0.0};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  return {kraus_oracle(options), x_elements_vs_evolution(options), delta_vs_projection(options),
          gaussian_thresholds(options), witness_soundness(options)};
}

}  // namespace fockchan::cli
