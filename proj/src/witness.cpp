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

#include "fockchan/witness.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace fockchan {

std::string_view to_string(StateFamily family) { return family == StateFamily::Noon ? "noon" : "pnes"; }

std::string_view to_string(WitnessIndex index) {
  switch (index) {
    case WitnessIndex::Delta1: return "delta1";
    case WitnessIndex::Delta2: return "delta2";
    case WitnessIndex::Delta3: return "delta3";
    case WitnessIndex::Delta4: return "delta4";
  }
  return "unknown";
}

NonGaussianState make_state(StateFamily family, int n) {
  if (n < 1) throw DomainError("make_state: photon number n must be >= 1");
  if (family == StateFamily::Noon) {
    return {family, n,
            {{{n, n, 0, 0, 0.5}, {n, 0, 0, n, 0.5}, {0, n, n, 0, 0.5}, {0, 0, n, n, 0.5}}}};
  }
  return {family, n, {{{0, 0, 0, 0, 0.5}, {0, n, 0, n, 0.5}, {n, 0, n, 0, 0.5}, {n, n, n, n, 0.5}}}};
}

TwoModeFockOperator NonGaussianState::assemble(int cutoff) const {
  if (cutoff < n) throw DimensionError("NonGaussianState::assemble: cutoff below photon number");
  TwoModeFockOperator rho(cutoff);
  for (const DyadTerm& d : terms) {
    rho.entries()(rho.index(d.row1, d.row2), rho.index(d.col1, d.col2)) += d.coefficient;
  }
  return rho;
}

TwoSidedOutput evolve_two_sided(const NonGaussianState& state, const ChannelParams& params,
                                std::optional<int> cutoff, double tail_tol) {
  const int c = cutoff.value_or(adaptive_cutoff(state.n, params, tail_tol));
  if (c < state.n) throw DimensionError("evolve_two_sided: cutoff below photon number");

  std::map<std::pair<int, int>, ChannelOutput> cache;
  auto single = [&](int m, int k) -> const ChannelOutput& {
    auto it = cache.find({m, k});
    if (it == cache.end()) it = cache.emplace(std::pair{m, k}, evolve_dyad(m, k, params, c, tail_tol)).first;
    return it->second;
  };

  TwoSidedOutput out{TwoModeFockOperator(c), 0.0};
  for (const DyadTerm& d : state.terms) {
    const ChannelOutput& first = single(d.row1, d.col1);
    const ChannelOutput& second = single(d.row2, d.col2);
    out.rho.entries() += d.coefficient * tensor_dyad(first.op, second.op).entries();
    out.dropped_weight += std::abs(d.coefficient) * (first.dropped_weight + second.dropped_weight);
  }
  return out;
}

Eigen::Matrix4d project_subspace(const TwoModeFockOperator& rho, int n) {
  if (n < 1 || n > rho.cutoff()) throw DimensionError("project_subspace: n outside [1, cutoff]");
  const std::array<Eigen::Index, 4> basis = {rho.index(0, 0), rho.index(0, n), rho.index(n, 0), rho.index(n, n)};
  Eigen::Matrix4d p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) p(i, j) = rho.entries()(basis[i], basis[j]);
  return p;
}

WitnessIndex witness_index(StateFamily family, ChannelKind kind) {
  if (kind == ChannelKind::Attenuator) return family == StateFamily::Noon ? WitnessIndex::Delta1 : WitnessIndex::Delta2;
  return family == StateFamily::Noon ? WitnessIndex::Delta3 : WitnessIndex::Delta4;
}

double delta_from_elements(StateFamily family, const SingleModeElements& x) {
  const double coherence = x.x5 * x.x5 / 2.0;
  if (family == StateFamily::Noon) return x.x1 * x.x2 * x.x3 * x.x4 - coherence * coherence;
  const double population = (x.x1 * x.x2 + x.x3 * x.x4) / 2.0;
  return population * population - coherence * coherence;
}

double delta_from_projection(StateFamily family, const Eigen::Matrix4d& p) {
  // ordering: 0 = |00>, 1 = |0n>, 2 = |n0>, 3 = |nn>
  if (family == StateFamily::Noon) return p(0, 0) * p(3, 3) - p(1, 2) * p(1, 2);
  return p(1, 1) * p(2, 2) - p(0, 3) * p(0, 3);
}

WitnessResult evaluate_witness(WitnessIndex index, StateFamily family, int n, const ChannelParams& params) {
  if (witness_index(family, params.kind()) != index) {
    throw UsageError("evaluate_witness: " + std::string(to_string(index)) + " does not apply to " +
                     std::string(to_string(family)) + " under an " + std::string(to_string(params.kind())));
  }
  WitnessResult r;
  r.index = index;
  r.elements = x_elements(n, params);
  r.delta = delta_from_elements(family, r.elements);
  r.entangled = r.delta < 0.0;
  return r;
}

WitnessResult delta(StateFamily family, ChannelKind kind, int n, double kappa, double noise) {
  return evaluate_witness(witness_index(family, kind), family, n, ChannelParams(kind, kappa, noise));
}

double full_ppt_min_eigenvalue(const TwoModeFockOperator& rho) {
  return min_eigenvalue_block_symmetric(partial_transpose(rho).entries());
}

VarianceMatrix second_moments(const TwoModeFockOperator& rho) {
  using Complex = std::complex<double>;
  using CMatrix = DenseMatrix<Complex>;
  const int d = rho.mode_dim();

  CMatrix lower = CMatrix::Zero(d, d);
  for (int k = 1; k < d; ++k) lower(k - 1, k) = std::sqrt(static_cast<double>(k));
  const CMatrix raise = lower.adjoint();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const CMatrix q = inv_sqrt2 * (lower + raise);
  const CMatrix p = Complex(0.0, -inv_sqrt2) * (lower - raise);
  const CMatrix id = CMatrix::Identity(d, d);

  auto kron = [d](const CMatrix& a, const CMatrix& b) {
    CMatrix out(d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.block(i * d, j * d, d, d) = a(i, j) * b;
    return out;
  };
  const std::array<CMatrix, 4> quad = {kron(q, id), kron(p, id), kron(id, q), kron(id, p)};
  const CMatrix state = rho.entries().cast<Complex>();

  std::array<double, 4> mean{};
  for (int i = 0; i < 4; ++i) mean[i] = (state * quad[i]).trace().real();
  VarianceMatrix v;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const Complex anti = (state * (quad[i] * quad[j] + quad[j] * quad[i])).trace();
      v(i, j) = v(j, i) = anti.real() - 2.0 * mean[i] * mean[j];
    }
  }
  return v;
}

}  // namespace fockchan
