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

// NOON and photon-number-entangled states under two identical channels, and
// the 2x2 NPT witnesses on span{|00>, |0n>, |n0>, |nn>}.

#ifndef FOCKCHAN_WITNESS_HPP_
#define FOCKCHAN_WITNESS_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "fockchan/channels.hpp"
#include "fockchan/gaussian.hpp"

namespace fockchan {

enum class StateFamily {
  Noon,  // (|n0> + |0n>)/sqrt(2)
  Pnes,  // (|00> + |nn>)/sqrt(2)
};

std::string_view to_string(StateFamily family);

/// coefficient * |row1><col1| (x) |row2><col2|
struct DyadTerm {
  int row1, col1;
  int row2, col2;
  double coefficient;
};

struct NonGaussianState {
  StateFamily family;
  int n;
  std::array<DyadTerm, 4> terms;

  /// Dense density matrix on the truncated space; requires cutoff >= n.
  TwoModeFockOperator assemble(int cutoff) const;
};

NonGaussianState make_state(StateFamily family, int n);

struct TwoSidedOutput {
  TwoModeFockOperator rho;
  double dropped_weight = 0.0;
};

/// (C (x) C)(rho) for two identical channels, accumulated dyad by dyad.
/// A missing cutoff selects adaptive_cutoff(n, params).
TwoSidedOutput evolve_two_sided(const NonGaussianState& state, const ChannelParams& params,
                                std::optional<int> cutoff = std::nullopt, double tail_tol = kDefaultTailTol);

/// Compression of rho onto the ordered basis {|00>, |0n>, |n0>, |nn>}.
/// Not renormalized.
Eigen::Matrix4d project_subspace(const TwoModeFockOperator& rho, int n);

enum class WitnessIndex {
  Delta1,  // NOON, attenuator
  Delta2,  // PNES, attenuator
  Delta3,  // NOON, amplifier
  Delta4,  // PNES, amplifier
};

std::string_view to_string(WitnessIndex index);

WitnessIndex witness_index(StateFamily family, ChannelKind kind);

/// delta < 0 certifies NPT entanglement of the channel output.
struct WitnessResult {
  double delta = 0.0;
  WitnessIndex index = WitnessIndex::Delta1;
  bool entangled = false;
  SingleModeElements elements;
};

/// Determinant-style witness from the x-elements:
///   NOON  x1 x2 x3 x4 - (x5^2 / 2)^2
///   PNES  ((x1 x2 + x3 x4) / 2)^2 - (x5^2 / 2)^2
double delta_from_elements(StateFamily family, const SingleModeElements& x);

/// The same witness read off a projected 4x4 block:
///   NOON  P[00,00] P[nn,nn] - P[0n,n0]^2
///   PNES  P[0n,0n] P[n0,n0] - P[00,nn]^2
double delta_from_projection(StateFamily family, const Eigen::Matrix4d& projected);

/// Throws UsageError if `index` does not belong to (family, params.kind()).
WitnessResult evaluate_witness(WitnessIndex index, StateFamily family, int n, const ChannelParams& params);

WitnessResult delta(StateFamily family, ChannelKind kind, int n, double kappa, double noise);

/// Smallest eigenvalue of the full partial transpose on mode 2.
double full_ppt_min_eigenvalue(const TwoModeFockOperator& rho);

/// Variance matrix (vacuum = identity) of a two-mode Fock-basis state. The
/// operator must be truncated at least two photons above its support for the
/// quadratic moments to be exact.
VarianceMatrix second_moments(const TwoModeFockOperator& rho);

}  // namespace fockchan

#endif  // FOCKCHAN_WITNESS_HPP_
