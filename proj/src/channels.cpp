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

#include "fockchan/channels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fockchan {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(base^exponent) with 0^0 = 1.
double log_pow(double base, double exponent) {
  if (exponent == 0.0) return 0.0;
  if (base <= 0.0) return kNegInf;
  return exponent * std::log(base);
}

void require_index(int m, int cutoff, const char* what) {
  if (m < 0 || m > cutoff) {
    throw DomainError(std::string(what) + ": Fock index " + std::to_string(m) + " outside [0, " +
                      std::to_string(cutoff) + "]");
  }
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  return kind == ChannelKind::Attenuator ? "attenuator" : "amplifier";
}

ChannelParams::ChannelParams(ChannelKind kind, double kappa, double noise)
    : kind_(kind), kappa_(kappa), noise_(noise) {
  if (!std::isfinite(kappa) || !std::isfinite(noise)) throw DomainError("ChannelParams: non-finite kappa or noise");
  if (noise < 0.0) throw DomainError("ChannelParams: additional noise a must be >= 0, got " + std::to_string(noise));
  if (kind == ChannelKind::Attenuator && !(kappa > 0.0 && kappa <= 1.0)) {
    throw DomainError("ChannelParams: attenuator requires 0 < kappa <= 1, got " + std::to_string(kappa));
  }
  if (kind == ChannelKind::Amplifier && !(kappa >= 1.0)) {
    throw DomainError("ChannelParams: amplifier requires kappa >= 1, got " + std::to_string(kappa));
  }
}

double ChannelParams::t() const {
  return (kind_ == ChannelKind::Attenuator ? 1.0 : kappa_ * kappa_) + noise_ / 2.0;
}

QuantumLimitedPair decompose(const ChannelParams& params) {
  const double kappa2 = std::sqrt(params.t());
  return {std::min(params.kappa() / kappa2, 1.0), kappa2};
}

ChannelParams compose_quantum_limited(double kappa1, double kappa2) {
  if (!(kappa1 > 0.0 && kappa1 <= 1.0)) throw DomainError("compose_quantum_limited: kappa1 must be in (0, 1]");
  if (!(kappa2 >= 1.0) || !std::isfinite(kappa2)) throw DomainError("compose_quantum_limited: kappa2 must be >= 1");
  const double kappa = kappa2 * kappa1;
  if (kappa <= 1.0) return ChannelParams::attenuator(kappa, 2.0 * (kappa2 * kappa2 - 1.0));
  return ChannelParams::amplifier(kappa, 2.0 * kappa2 * kappa2 * (1.0 - kappa1 * kappa1));
}

FockOperator kraus_attenuator(double kappa, int l, int cutoff) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw DomainError("kraus_attenuator: require 0 < kappa <= 1");
  if (cutoff < 0) throw DomainError("kraus_attenuator: cutoff must be >= 0");
  if (l < 0 || l > cutoff) throw DomainError("kraus_attenuator: require 0 <= l <= cutoff");
  FockOperator b(cutoff);
  const double log_loss = log_pow(1.0 - kappa * kappa, 0.5 * l);
  if (log_loss == kNegInf) return b;
  for (int m = 0; m + l <= cutoff; ++m) {
    b(m, m + l) = std::exp(0.5 * log_binomial(m + l, l) + log_loss + log_pow(kappa, m));
  }
  return b;
}

FockOperator kraus_amplifier(double kappa, int l, int cutoff) {
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) throw DomainError("kraus_amplifier: require kappa >= 1");
  if (cutoff < 0) throw DomainError("kraus_amplifier: cutoff must be >= 0");
  if (l < 0) throw DomainError("kraus_amplifier: require l >= 0");
  FockOperator a(cutoff);
  const double log_gain = log_pow(1.0 - 1.0 / (kappa * kappa), 0.5 * l);
  if (log_gain == kNegInf) return a;
  const double log_kappa = std::log(kappa);
  for (int m = 0; m + l <= cutoff; ++m) {
    a(m + l, m) = std::exp(-log_kappa + 0.5 * log_binomial(m + l, l) + log_gain - m * log_kappa);
  }
  return a;
}

ChannelOutput evolve_dyad(int m, int n, const ChannelParams& params, int cutoff, double tail_tol) {
  require_index(m, cutoff, "evolve_dyad");
  require_index(n, cutoff, "evolve_dyad");
  if (!(tail_tol > 0.0)) throw DomainError("evolve_dyad: tail_tol must be > 0");

  const double t = params.t();
  const double kappa1_sq = std::min(params.kappa() * params.kappa() / t, 1.0);
  const double gain = std::max(0.0, 1.0 - 1.0 / t);  // (1 - kappa2^{-2})
  const double loss = std::max(0.0, 1.0 - kappa1_sq);
  // kappa1 / kappa2 = kappa / t
  const double log_ratio = std::log(params.kappa()) - std::log(t);
  const double log_gain = gain > 0.0 ? std::log(gain) : kNegInf;
  const double log_t = std::log(t);

  ChannelOutput out{FockOperator(cutoff), 0.0};
  auto& e = out.op.entries();
  constexpr int kMaxGainTerms = 10'000'000;

  for (int l = 0; l <= std::min(m, n); ++l) {
    const double log_l = log_pow(loss, l);
    if (log_l == kNegInf) break;
    const int p = m - l;
    const int q = n - l;
    const double base =
        0.5 * (log_binomial(m, l) + log_binomial(n, l)) + (p + q) * log_ratio + log_l - log_t;

    // log C(p+j, j) + log C(q+j, j), accumulated along j.
    double log_binoms = 0.0;
    for (int j = 0;; ++j) {
      if (j > 0) {
        if (gain == 0.0) break;
        log_binoms += std::log(static_cast<double>(p + j) / j) + std::log(static_cast<double>(q + j) / j);
      }
      const double term = std::exp(base + 0.5 * log_binoms + (j > 0 ? j * log_gain : 0.0));
      const int row = p + j;
      const int col = q + j;
      if (row <= cutoff && col <= cutoff) {
        e(row, col) += term;
        continue;
      }
      out.dropped_weight += term;
      // Geometric bound on the unsummed tail from the current term ratio.
      const double ratio = std::sqrt((p + j + 1.0) * (q + j + 1.0)) / (j + 1.0) * gain;
      if (ratio < 1.0) {
        const double bound = term * ratio / (1.0 - ratio);
        if (bound < tail_tol) {
          out.dropped_weight += bound;
          break;
        }
      }
      if (j > kMaxGainTerms) throw NumericError("evolve_dyad: gain series did not reach tail tolerance");
    }
  }
  return out;
}

ChannelOutput evolve_density(const FockOperator& rho, const ChannelParams& params, int cutoff, double tail_tol) {
  check_density(rho);
  if (cutoff < 0) cutoff = rho.cutoff();
  if (cutoff < rho.cutoff()) throw DimensionError("evolve_density: output cutoff below input cutoff");
  ChannelOutput out{FockOperator(cutoff), 0.0};
  for (int m = 0; m <= rho.cutoff(); ++m) {
    for (int n = 0; n <= rho.cutoff(); ++n) {
      const double c = rho(m, n);
      if (c == 0.0) continue;
      const ChannelOutput piece = evolve_dyad(m, n, params, cutoff, tail_tol);
      out.op.entries() += c * piece.op.entries();
      out.dropped_weight += std::abs(c) * piece.dropped_weight;
    }
  }
  return out;
}

FockOperator kraus_sum_evolve(int m, int n, const ChannelParams& params, int cutoff) {
  require_index(m, cutoff, "kraus_sum_evolve");
  require_index(n, cutoff, "kraus_sum_evolve");
  const QuantumLimitedPair pair = decompose(params);

  // Attenuator stage: B_l |m><n| B_l^T = (B_l e_m)(B_l e_n)^T.
  Eigen::MatrixXd mid = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int l = 0; l <= cutoff; ++l) {
    const FockOperator b = kraus_attenuator(pair.kappa1, l, cutoff);
    mid.noalias() += b.entries().col(m) * b.entries().col(n).transpose();
  }
  // Amplifier stage.
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(cutoff + 1, cutoff + 1);
  for (int l = 0; l <= cutoff; ++l) {
    const FockOperator a = kraus_amplifier(pair.kappa2, l, cutoff);
    out.noalias() += a.entries() * mid * a.entries().transpose();
  }
  return FockOperator(std::move(out));
}

int adaptive_cutoff(int max_index, const ChannelParams& params, double tail_tol) {
  if (max_index < 0) throw DomainError("adaptive_cutoff: max_index must be >= 0");
  constexpr int kMaxCutoff = 4096;
  for (int cutoff = max_index + 20; cutoff <= kMaxCutoff; cutoff *= 2) {
    if (evolve_dyad(max_index, max_index, params, cutoff, tail_tol).op.trace() >= 1.0 - 1e-9) return cutoff;
  }
  throw NumericError("adaptive_cutoff: no cutoff <= 4096 retains trace 1 - 1e-9");
}

SingleModeElements x_elements_at(int n, double kappa, double t) {
  if (n < 1) throw DomainError("x_elements: photon number n must be >= 1");
  if (!(t >= 1.0) || !(kappa > 0.0) || kappa * kappa > t * (1.0 + 1e-15)) {
    throw DomainError("x_elements: require t >= max(1, kappa^2)");
  }
  SingleModeElements x{n,
                       kappa <= 1.0 ? ChannelParams::attenuator(kappa, std::max(0.0, 2.0 * (t - 1.0)))
                                    : ChannelParams::amplifier(kappa, std::max(0.0, 2.0 * (t - kappa * kappa)))};

  const double log_t = std::log(t);
  const double survive = std::max(0.0, 1.0 - kappa * kappa / t);  // 1 - kappa^2 t^{-1}
  const double gain = std::max(0.0, 1.0 - 1.0 / t);               // 1 - t^{-1}

  double x1 = 0.0;
  for (int l = 0; l <= n; ++l) {
    x1 += std::exp(2.0 * log_binomial(n, l) + log_pow(kappa * kappa / (t * t), l) +
                   log_pow(survive * gain, n - l) - log_t);
  }
  x.x1 = x1;
  x.x2 = std::exp(log_pow(survive, n) - log_t);
  x.x3 = 1.0 / t;
  x.x4 = std::exp(log_pow(gain, n) - log_t);
  x.x5 = std::exp(n * std::log(kappa) - (n + 1) * log_t);
  return x;
}

SingleModeElements x_elements(int n, const ChannelParams& params) {
  SingleModeElements x = x_elements_at(n, params.kappa(), params.t());
  x.channel = params;
  return x;
}

}  // namespace fockchan
