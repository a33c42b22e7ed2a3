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

// Two-mode Gaussian states at the level of the variance matrix.
//
// Quadrature ordering is (q1, p1, q2, p2) and the vacuum has the identity as
// its variance matrix, so the uncertainty principle reads V + i Omega >= 0.

#ifndef FOCKCHAN_GAUSSIAN_HPP_
#define FOCKCHAN_GAUSSIAN_HPP_

#include <Eigen/Dense>

#include "fockchan/channels.hpp"

namespace fockchan {

template <typename Scalar>
using BasicVarianceMatrix = Eigen::Matrix<Scalar, 4, 4>;

using VarianceMatrix = BasicVarianceMatrix<double>;

/// Two-mode squeeze parameter mu >= 0.
class SqueezeParam {
 public:
  explicit SqueezeParam(double mu);

  double mu() const { return mu_; }
  double c2mu() const;
  double s2mu() const;

 private:
  double mu_;
};

/// Omega = diag([[0, 1], [-1, 0]], [[0, 1], [-1, 0]]).
template <typename Scalar = double>
BasicVarianceMatrix<Scalar> symplectic_form() {
  BasicVarianceMatrix<Scalar> omega = BasicVarianceMatrix<Scalar>::Zero();
  omega(0, 1) = omega(2, 3) = Scalar(1);
  omega(1, 0) = omega(3, 2) = Scalar(-1);
  return omega;
}

/// Real symmetric 8x8 embedding [[V, -Omega], [Omega, V]] of the Hermitian
/// matrix V + i Omega; its spectrum is that of V + i Omega, doubled.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 8, 8> uncertainty_embedding(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const auto omega = symplectic_form<Scalar>();
  Eigen::Matrix<Scalar, 8, 8> h;
  h << v, -omega, omega, v;
  return h;
}

/// Smallest eigenvalue of V + i Omega.
double uncertainty_min_eigenvalue(const VarianceMatrix& v);

/// Symmetric to 1e-12 and V + i Omega >= -1e-9.
bool is_physical(const VarianceMatrix& v);

VarianceMatrix tmsv_variance(const SqueezeParam& mu);

/// kappa^2 V + (|1 - kappa^2| + a) I.
VarianceMatrix evolve_variance(const VarianceMatrix& v, const ChannelParams& params);

/// Peres-Simon criterion: separable iff Lambda V Lambda + i Omega >= 0 with
/// Lambda = diag(1, 1, 1, -1). Necessary and sufficient for two modes.
bool ppt_separable(const VarianceMatrix& v);

/// Smallest noise a at which a two-mode squeezed vacuum with squeeze mu
/// becomes separable behind two identical channels of the given kind:
///   attenuator  kappa^2 (1 - e^{-2 mu})
///   amplifier   max(0, 2 - kappa^2 (1 + e^{-2 mu}))
/// Both are clamped at 0; a negative value would mean the output is already
/// separable at a = 0.
double attenuator_gaussian_threshold(double mu, double kappa);
double amplifier_gaussian_threshold(double mu, double kappa);

/// Noise above which every Gaussian input is rendered separable: kappa^2 for
/// the attenuator, max(0, 2 - kappa^2) for the amplifier.
double breaking_line(ChannelKind kind, double kappa);

/// Entanglement entropy of a two-mode squeezed vacuum in ebits,
/// cosh^2 mu log2 cosh^2 mu - sinh^2 mu log2 sinh^2 mu.
double tmsv_ebits(double mu);

/// Inverse of tmsv_ebits by bisection on [0, 20] to 1e-10 in mu.
double ebits_to_mu(double ebits);

}  // namespace fockchan

#endif  // FOCKCHAN_GAUSSIAN_HPP_
