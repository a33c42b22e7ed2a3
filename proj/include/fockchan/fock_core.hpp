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

// Truncated Fock-space linear algebra shared by every other module.
//
// Single-mode operators live on span{|0>, ..., |cutoff>} and are stored as
// dense (cutoff+1) x (cutoff+1) matrices with entry (r, c) = <r|O|c>.
// Two-mode operators use the mode-1-major index m * (cutoff+1) + p for |m,p>.

#ifndef FOCKCHAN_FOCK_CORE_HPP_
#define FOCKCHAN_FOCK_CORE_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fockchan/errors.hpp"

namespace fockchan {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// ln C(n, k), accumulated as a sum of logarithms of the ratios (n-k+i)/i.
double log_binomial(int n, int k);

/// Single-mode operator truncated at photon number `cutoff`.
template <typename Scalar>
class BasicFockOperator {
 public:
  using MatrixType = DenseMatrix<Scalar>;

  explicit BasicFockOperator(int cutoff) : entries_(MatrixType::Zero(dim_of(cutoff), dim_of(cutoff))) {}

  explicit BasicFockOperator(MatrixType entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
      throw DimensionError("FockOperator: entries must be a non-empty square matrix");
    }
  }

  /// |m><n| on the truncated space.
  static BasicFockOperator dyad(int m, int n, int cutoff) {
    if (m < 0 || n < 0 || m > cutoff || n > cutoff) {
      throw DomainError("FockOperator::dyad: index outside [0, cutoff]");
    }
    BasicFockOperator op(cutoff);
    op.entries_(m, n) = Scalar(1);
    return op;
  }

  static BasicFockOperator identity(int cutoff) {
    return BasicFockOperator(MatrixType::Identity(dim_of(cutoff), dim_of(cutoff)));
  }

  int cutoff() const { return static_cast<int>(entries_.rows()) - 1; }
  int dim() const { return static_cast<int>(entries_.rows()); }

  const MatrixType& entries() const { return entries_; }
  MatrixType& entries() { return entries_; }

  Scalar operator()(int row, int col) const { return entries_(row, col); }
  Scalar& operator()(int row, int col) { return entries_(row, col); }

  Scalar trace() const { return entries_.trace(); }

 private:
  static Eigen::Index dim_of(int cutoff) {
    if (cutoff < 0) throw DomainError("FockOperator: cutoff must be >= 0");
    return static_cast<Eigen::Index>(cutoff) + 1;
  }

  MatrixType entries_;
};

/// Two-mode operator with a common per-mode cutoff.
template <typename Scalar>
class BasicTwoModeFockOperator {
 public:
  using MatrixType = DenseMatrix<Scalar>;

  explicit BasicTwoModeFockOperator(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) throw DomainError("TwoModeFockOperator: cutoff must be >= 0");
    const Eigen::Index d = static_cast<Eigen::Index>(cutoff + 1) * (cutoff + 1);
    entries_ = MatrixType::Zero(d, d);
  }

  BasicTwoModeFockOperator(int cutoff, MatrixType entries) : cutoff_(cutoff), entries_(std::move(entries)) {
    const Eigen::Index d = static_cast<Eigen::Index>(cutoff + 1) * (cutoff + 1);
    if (cutoff < 0 || entries_.rows() != d || entries_.cols() != d) {
      throw DimensionError("TwoModeFockOperator: entries must be (cutoff+1)^2 square");
    }
  }

  int cutoff() const { return cutoff_; }
  int mode_dim() const { return cutoff_ + 1; }

  /// Flat index of |m, p>.
  Eigen::Index index(int m, int p) const { return static_cast<Eigen::Index>(m) * (cutoff_ + 1) + p; }

  /// <m1 m2| rho |n1 n2>
  Scalar element(int m1, int m2, int n1, int n2) const { return entries_(index(m1, m2), index(n1, n2)); }

  const MatrixType& entries() const { return entries_; }
  MatrixType& entries() { return entries_; }

  Scalar trace() const { return entries_.trace(); }

 private:
  int cutoff_;
  MatrixType entries_;
};

using FockOperator = BasicFockOperator<double>;
using TwoModeFockOperator = BasicTwoModeFockOperator<double>;

/// entries[(m,p),(n,q)] = A[m][n] * B[p][q].
template <typename Scalar>
BasicTwoModeFockOperator<Scalar> tensor_dyad(const BasicFockOperator<Scalar>& a, const BasicFockOperator<Scalar>& b) {
  if (a.cutoff() != b.cutoff()) {
    throw DimensionError("tensor_dyad: cutoff mismatch (" + std::to_string(a.cutoff()) + " vs " +
                         std::to_string(b.cutoff()) + ")");
  }
  const int d = a.dim();
  BasicTwoModeFockOperator<Scalar> out(a.cutoff());
  auto& e = out.entries();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const Scalar amn = a(m, n);
      if (amn == Scalar(0)) continue;
      e.block(static_cast<Eigen::Index>(m) * d, static_cast<Eigen::Index>(n) * d, d, d) = amn * b.entries();
    }
  }
  return out;
}

/// Transpose on mode 2: out[(m,q),(n,p)] = rho[(m,p),(n,q)].
template <typename Scalar>
BasicTwoModeFockOperator<Scalar> partial_transpose(const BasicTwoModeFockOperator<Scalar>& rho) {
  const int d = rho.mode_dim();
  BasicTwoModeFockOperator<Scalar> out(rho.cutoff());
  auto& e = out.entries();
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      e.block(static_cast<Eigen::Index>(m) * d, static_cast<Eigen::Index>(n) * d, d, d) =
          rho.entries().block(static_cast<Eigen::Index>(m) * d, static_cast<Eigen::Index>(n) * d, d, d).transpose();
    }
  }
  return out;
}

namespace detail {

template <typename Derived>
DenseMatrix<typename Derived::Scalar> checked_symmetric_copy(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("symmetric eigensolver: matrix is not square");
  if (!m.allFinite()) throw NumericError("symmetric eigensolver: non-finite entry");
  DenseMatrix<Scalar> a = m;
  const Scalar scale = std::max(Scalar(1), a.norm());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-9) * scale) {
    throw DomainError("symmetric eigensolver: matrix is not symmetric within 1e-9");
  }
  return (a + a.transpose()) / Scalar(2);
}

}  // namespace detail

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted ascending. Iterates until the off-diagonal Frobenius norm is below
/// 1e-12 * ||M||_F.
template <typename Derived>
DenseVector<typename Derived::Scalar> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = detail::checked_symmetric_copy(m);
  const Eigen::Index n = a.rows();
  const Scalar frob = a.norm();
  const Scalar target = Scalar(1e-12) * frob;
  constexpr int kMaxSweeps = 100;

  auto off_norm = [&a, n]() {
    Scalar s(0);
    for (Eigen::Index q = 1; q < n; ++q) s += a.col(q).head(q).squaredNorm();
    return std::sqrt(Scalar(2) * s);
  };

  int sweep = 0;
  while (frob > Scalar(0) && off_norm() > target) {
    if (++sweep > kMaxSweeps) throw NumericError("symmetric eigensolver: Jacobi sweeps did not converge");
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
        Scalar t;
        if (std::abs(theta) > Scalar(1e150)) {
          t = Scalar(1) / (Scalar(2) * theta);
        } else {
          t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        }
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        // A <- J^T A J with J = [[c, s], [-s, c]] in the (p, q) plane.
        const DenseVector<Scalar> colp = a.col(p);
        a.col(p) = c * colp - s * a.col(q);
        a.col(q) = s * colp + c * a.col(q);
        const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> rowp = a.row(p);
        a.row(p) = c * rowp - s * a.row(q);
        a.row(q) = s * rowp + c * a.row(q);
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);
      }
    }
  }

  DenseVector<Scalar> eig = a.diagonal();
  std::sort(eig.data(), eig.data() + eig.size());
  return eig;
}

template <typename Derived>
typename Derived::Scalar min_eigenvalue_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) throw DimensionError("min_eigenvalue_symmetric: empty matrix");
  return symmetric_eigenvalues(m)(0);
}

/// Groups indices into the connected components of the nonzero pattern of a
/// square matrix. Each component is returned sorted ascending.
template <typename Derived>
std::vector<std::vector<Eigen::Index>> nonzero_blocks(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&parent](Eigen::Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r != c && m(r, c) != typename Derived::Scalar(0)) {
        const Eigen::Index pr = find(r), pc = find(c);
        if (pr != pc) parent[std::max(pr, pc)] = std::min(pr, pc);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

/// Smallest eigenvalue of a symmetric matrix that is block diagonal up to a
/// permutation. Each block is handed to the Jacobi solver separately.
template <typename Derived>
typename Derived::Scalar min_eigenvalue_block_symmetric(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const DenseMatrix<Scalar> a = detail::checked_symmetric_copy(m);
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& block : nonzero_blocks(a)) {
    const auto k = static_cast<Eigen::Index>(block.size());
    DenseMatrix<Scalar> sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = a(block[i], block[j]);
    best = std::min(best, min_eigenvalue_symmetric(sub));
  }
  return best;
}

/// Throws unless `op` is a valid density operator: finite, symmetric to
/// 1e-12, trace <= 1 + 1e-9, smallest eigenvalue >= -1e-9.
void check_density(const FockOperator& op);
void check_density(const TwoModeFockOperator& op);

}  // namespace fockchan

#endif  // FOCKCHAN_FOCK_CORE_HPP_
