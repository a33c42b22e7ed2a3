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

#include "fockchan/gaussian.hpp"

#include <cmath>
#include <string>

#include "fockchan/fock_core.hpp"

namespace fockchan {

namespace {

constexpr double kPhysicalTol = 1e-9;

void require_physical(const VarianceMatrix& v, const char* what) {
  if (!is_physical(v)) throw DomainError(std::string(what) + ": variance matrix violates V + i Omega >= 0");
}

}  // namespace

SqueezeParam::SqueezeParam(double mu) : mu_(mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("SqueezeParam: mu must be finite and >= 0");
}

double SqueezeParam::c2mu() const { return std::cosh(2.0 * mu_); }
double SqueezeParam::s2mu() const { return std::sinh(2.0 * mu_); }

double uncertainty_min_eigenvalue(const VarianceMatrix& v) {
  return min_eigenvalue_symmetric(uncertainty_embedding(v));
}

bool is_physical(const VarianceMatrix& v) {
  if (!v.allFinite()) return false;
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, v.norm())) return false;
  return uncertainty_min_eigenvalue(v) >= -kPhysicalTol;
}

VarianceMatrix tmsv_variance(const SqueezeParam& mu) {
  const double c = mu.c2mu();
  const double s = mu.s2mu();
  VarianceMatrix v;
  // clang-format off
  v << c, 0, s,  0,
       0, c, 0, -s,
       s, 0, c,  0,
       0, -s, 0, c;
  // clang-format on
  return v;
}

VarianceMatrix evolve_variance(const VarianceMatrix& v, const ChannelParams& params) {
  require_physical(v, "evolve_variance");
  const double k2 = params.kappa() * params.kappa();
  return k2 * v + (std::abs(1.0 - k2) + params.noise()) * VarianceMatrix::Identity();
}

bool ppt_separable(const VarianceMatrix& v) {
  require_physical(v, "ppt_separable");
  const Eigen::Vector4d lambda(1.0, 1.0, 1.0, -1.0);
  const VarianceMatrix flipped = lambda.asDiagonal() * v * lambda.asDiagonal();
  return uncertainty_min_eigenvalue(flipped) >= -kPhysicalTol;
}

double attenuator_gaussian_threshold(double mu, double kappa) {
  if (!(mu >= 0.0)) throw DomainError("attenuator_gaussian_threshold: mu must be >= 0");
  if (!(kappa > 0.0 && kappa <= 1.0)) throw DomainError("attenuator_gaussian_threshold: require 0 < kappa <= 1");
  return std::max(0.0, kappa * kappa * (1.0 - std::exp(-2.0 * mu)));
}

double amplifier_gaussian_threshold(double mu, double kappa) {
  if (!(mu >= 0.0)) throw DomainError("amplifier_gaussian_threshold: mu must be >= 0");
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) throw DomainError("amplifier_gaussian_threshold: require kappa >= 1");
  return std::max(0.0, 2.0 - kappa * kappa * (1.0 + std::exp(-2.0 * mu)));
}

double breaking_line(ChannelKind kind, double kappa) {
  // Validates kappa against the channel kind.
  const ChannelParams params(kind, kappa, 0.0);
  const double k2 = params.kappa() * params.kappa();
  return kind == ChannelKind::Attenuator ? k2 : std::max(0.0, 2.0 - k2);
}

double tmsv_ebits(double mu) {
  if (!(mu >= 0.0)) throw DomainError("tmsv_ebits: mu must be >= 0");
  if (mu == 0.0) return 0.0;
  const double c2 = std::cosh(mu) * std::cosh(mu);
  const double s2 = std::sinh(mu) * std::sinh(mu);
  // c2 log2 c2 - s2 log2 s2 with c2 = 1 + s2.
  return std::log2(c2) + s2 * std::log1p(1.0 / s2) / std::log(2.0);
}

double ebits_to_mu(double ebits) {
  if (!(ebits >= 0.0) || !std::isfinite(ebits)) throw DomainError("ebits_to_mu: entanglement must be >= 0");
  double lo = 0.0;
  double hi = 20.0;
  if (ebits > tmsv_ebits(hi)) throw DomainError("ebits_to_mu: entanglement exceeds the range mu <= 20");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (tmsv_ebits(mid) < ebits ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fockchan
