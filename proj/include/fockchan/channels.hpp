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

// Noisy bosonic attenuator and amplifier channels in the Fock basis.
//
// Every noisy channel (kind, kappa, a) is realized as a quantum-limited
// amplifier kappa2 >= 1 applied after a quantum-limited attenuator
// kappa1 <= 1. Both kinds are handled by one code path parameterized by
//
//   t = kappa2^2 = 1 + a/2        (attenuator)
//   t = kappa2^2 = kappa^2 + a/2  (amplifier)
//
// with kappa1^2 = kappa^2 / t.

#ifndef FOCKCHAN_CHANNELS_HPP_
#define FOCKCHAN_CHANNELS_HPP_

#include <optional>
#include <string_view>

#include "fockchan/fock_core.hpp"

namespace fockchan {

enum class ChannelKind { Attenuator, Amplifier };

std::string_view to_string(ChannelKind kind);

/// (kind, kappa, a). Attenuators need 0 < kappa <= 1, amplifiers kappa >= 1,
/// and the additional noise a is non-negative.
class ChannelParams {
 public:
  ChannelParams(ChannelKind kind, double kappa, double noise);

  static ChannelParams attenuator(double kappa, double noise) { return {ChannelKind::Attenuator, kappa, noise}; }
  static ChannelParams amplifier(double kappa, double noise) { return {ChannelKind::Amplifier, kappa, noise}; }
  static ChannelParams identity() { return {ChannelKind::Attenuator, 1.0, 0.0}; }

  ChannelKind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double noise() const { return noise_; }

  /// kappa2^2 of the quantum-limited decomposition.
  double t() const;

 private:
  ChannelKind kind_;
  double kappa_;
  double noise_;
};

struct QuantumLimitedPair {
  double kappa1;  // attenuator stage, in (0, 1]
  double kappa2;  // amplifier stage, >= 1
};

QuantumLimitedPair decompose(const ChannelParams& params);

/// Channel equivalent to amplifier(kappa2, 0) after attenuator(kappa1, 0).
/// kappa2*kappa1 <= 1 gives an attenuator, otherwise an amplifier.
ChannelParams compose_quantum_limited(double kappa1, double kappa2);

/// B_l(kappa) = sum_m sqrt(C(m+l, l)) (1-kappa^2)^{l/2} kappa^m |m><m+l|.
FockOperator kraus_attenuator(double kappa, int l, int cutoff);

/// A_l(kappa) = kappa^{-1} sum_m sqrt(C(m+l, l)) (1-kappa^{-2})^{l/2} kappa^{-m} |m+l><m|.
/// Entries whose row would exceed the cutoff are dropped.
FockOperator kraus_amplifier(double kappa, int l, int cutoff);

inline constexpr double kDefaultTailTol = 1e-12;

/// Channel output restricted to the truncated space together with the weight
/// that fell outside it. For diagonal inputs the weight is the lost trace; for
/// coherences it is the sum of magnitudes of the dropped entries. It includes
/// a rigorous geometric bound on the part of the series that was not summed.
struct ChannelOutput {
  FockOperator op;
  double dropped_weight = 0.0;
};

/// Image of |m><n| under the channel, from the closed-form double sum over
/// the attenuator loss index l and the amplifier gain index j:
///
///   t^{-1} sum_{j,l} [C(m-l+j, j) C(n-l+j, j) C(m, l) C(n, l)]^{1/2}
///       (kappa1/kappa2)^{m+n-2l} (1 - 1/t)^j (1 - kappa1^2)^l |m-l+j><n-l+j|
///
/// Each term is assembled in the log domain.
ChannelOutput evolve_dyad(int m, int n, const ChannelParams& params, int cutoff, double tail_tol = kDefaultTailTol);

/// Linear extension of evolve_dyad to a density operator.
ChannelOutput evolve_density(const FockOperator& rho, const ChannelParams& params, int cutoff = -1,
                             double tail_tol = kDefaultTailTol);

/// Reference evolution of |m><n| as an explicit Kraus sum
/// sum_{l, l'} A_{l'}(kappa2) B_l(kappa1) |m><n| B_l(kappa1)^T A_{l'}(kappa2)^T.
FockOperator kraus_sum_evolve(int m, int n, const ChannelParams& params, int cutoff);

/// Smallest cutoff N >= max_index + 20 (doubling) for which evolving
/// |max_index><max_index| keeps trace >= 1 - 1e-9.
int adaptive_cutoff(int max_index, const ChannelParams& params, double tail_tol = kDefaultTailTol);

/// Single-mode matrix elements for photon number n:
///   x1 = <n|C(|n><n|)|n>,  x2 = <0|C(|n><n|)|0>,  x3 = <0|C(|0><0|)|0>,
///   x4 = <n|C(|0><0|)|n>,  x5 = <n|C(|n><0|)|0> = <0|C(|0><n|)|n>.
struct SingleModeElements {
  int n = 0;
  ChannelParams channel = ChannelParams::identity();
  double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0, x5 = 0.0;
};

SingleModeElements x_elements(int n, const ChannelParams& params);

/// The same closed forms with the decomposition parameter t supplied directly.
/// x_elements(n, p) == x_elements_at(n, p.kappa(), p.t()).
SingleModeElements x_elements_at(int n, double kappa, double t);

}  // namespace fockchan

#endif  // FOCKCHAN_CHANNELS_HPP_
