#ifndef LPMCHOL_CHOLESKY_HPP
#define LPMCHOL_CHOLESKY_HPP

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lpmchol/core.hpp"
#include "lpmchol/detail/ldl.hpp"

namespace lpmchol {

namespace detail {

template <typename Scalar>
void require_cone(const ConePoint<Scalar>& p, ConeKind cone, const char* what) {
  if (p.cone != cone) {
    throw Error(Errc::ConeKindMismatch, std::string(what) + " must be a " + to_string(cone) + " point");
  }
}

template <typename Scalar>
void require_same_pattern(const ConePoint<Scalar>& a, const ConePoint<Scalar>& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "cone points of different dimension");
  if (!(a.pattern == b.pattern)) {
    throw Error(Errc::PatternMismatch, "patterns " + a.pattern.to_string() + " and " + b.pattern.to_string() + " differ");
  }
}

}  // namespace detail

/// L B L^* for B in LPM(e). The result keeps B's pattern.
template <typename Scalar>
ConePoint<Scalar> compose(const LowerTriangular<Scalar>& l, const ConePoint<Scalar>& b) {
  detail::require_cone(b, ConeKind::LPM, "basis");
  if (l.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "factor and basis dimensions differ");
  const MatrixX<Scalar> m = l.matrix() * b.matrix.matrix() * l.matrix().adjoint();
  return ConePoint<Scalar>{SymmetricMatrix<Scalar>(m), ConeKind::LPM, b.pattern, b.tolerance_used};
}

/// The unique L with L B L^* = A, both A and B in LPM(e).
///
/// Row j is built from the pivots of unpivoted LDL^* factorizations of A and
/// B: l_jj^2 = dA_j / dB_j, and the strict row solves
/// B_{j-1} p = L_{j-1}^{-1} a_j - l_jj b_j.
template <typename Scalar>
LowerTriangular<Scalar> factor(const ConePoint<Scalar>& a, const ConePoint<Scalar>& b, double tol = kDefaultTol) {
  detail::require_cone(a, ConeKind::LPM, "matrix");
  detail::require_cone(b, ConeKind::LPM, "basis");
  detail::require_same_pattern(a, b);

  const MatrixX<Scalar>& am = a.matrix.matrix();
  const MatrixX<Scalar>& bm = b.matrix.matrix();
  const Eigen::Index n = a.dim();
  const detail::UnpivotedLdl<Scalar> lda(am);
  const detail::UnpivotedLdl<Scalar> ldb(bm);

  MatrixX<Scalar> l = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double radicand = lda.pivots(j) / ldb.pivots(j);
    if (!(radicand > tol * tol)) {
      throw Error(Errc::NegativeRadicand, "diagonal entry " + std::to_string(j + 1) + " has radicand " +
                                              std::to_string(radicand));
    }
    const double ljj = std::sqrt(radicand);
    l(j, j) = Scalar(ljj);
    if (j == 0) continue;
    const VectorX<Scalar> rhs =
        l.topLeftCorner(j, j).template triangularView<Eigen::Lower>().solve(am.col(j).head(j)) -
        ljj * bm.col(j).head(j);
    const VectorX<Scalar> p = ldb.solve_leading(j, rhs);
    l.row(j).head(j) = p.adjoint();
  }
  return LowerTriangular<Scalar>(l);
}

/// L^* C L for C in TPM(e).
template <typename Scalar>
ConePoint<Scalar> compose_tpm(const LowerTriangular<Scalar>& l, const ConePoint<Scalar>& c) {
  detail::require_cone(c, ConeKind::TPM, "basis");
  if (l.dim() != c.dim()) throw Error(Errc::DimensionMismatch, "factor and basis dimensions differ");
  const MatrixX<Scalar> m = l.matrix().adjoint() * c.matrix.matrix() * l.matrix();
  return ConePoint<Scalar>{SymmetricMatrix<Scalar>(m), ConeKind::TPM, c.pattern, c.tolerance_used};
}

/// Reverse Cholesky factorization: the unique L with L^* C L = A.
template <typename Scalar>
LowerTriangular<Scalar> factor_tpm(const ConePoint<Scalar>& a, const ConePoint<Scalar>& c, double tol = kDefaultTol) {
  detail::require_cone(a, ConeKind::TPM, "matrix");
  detail::require_cone(c, ConeKind::TPM, "basis");
  return reverse(factor(reverse(a), reverse(c), tol));
}

/// Factor against the canonical diagonal point of the cone.
template <typename Scalar>
LowerTriangular<Scalar> canonical_factor(const ConePoint<Scalar>& a, double tol = kDefaultTol) {
  const ConePoint<Scalar> basis = canonical_point<Scalar>(a.pattern, a.cone);
  return a.cone == ConeKind::LPM ? factor(a, basis, tol) : factor_tpm(a, basis, tol);
}

/// Inverse of canonical_factor.
template <typename Scalar>
ConePoint<Scalar> canonical_compose(const LowerTriangular<Scalar>& l, const SignPattern& eps,
                                    ConeKind cone = ConeKind::LPM) {
  const ConePoint<Scalar> basis = canonical_point<Scalar>(eps, cone);
  return cone == ConeKind::LPM ? compose(l, basis) : compose_tpm(l, basis);
}

/// Moves A = L D_e L^* to L D_d L^* without forming L, by the recursion
/// alpha_j^(k) = a_jk - sum_{i<k} alpha_j^(i) conj(alpha_k^(i)) d_i / l_ii^2.
template <typename Scalar>
ConePoint<Scalar> resign(const ConePoint<Scalar>& a, const SignPattern& target, double tol = kDefaultTol) {
  detail::require_cone(a, ConeKind::LPM, "matrix");
  const Eigen::Index n = a.dim();
  if (target.size() != std::size_t(n)) throw Error(Errc::DimensionMismatch, "target pattern has wrong length");

  const MatrixX<Scalar>& am = a.matrix.matrix();
  MatrixX<Scalar> alpha = MatrixX<Scalar>::Zero(n, n);  // alpha(j, k), j >= k
  Eigen::VectorXd lsq(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double dk = a.pattern.at_or_one(k - 1) * a.pattern[std::size_t(k)];
    for (Eigen::Index j = k; j < n; ++j) {
      Scalar s = am(j, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        const double di = a.pattern.at_or_one(i - 1) * a.pattern[std::size_t(i)];
        s -= alpha(j, i) * Eigen::numext::conj(alpha(k, i)) * (di / lsq(i));
      }
      alpha(j, k) = s;
    }
    lsq(k) = dk * std::real(alpha(k, k));
    if (!(lsq(k) > tol * tol)) {
      throw Error(Errc::NegativeRadicand, "diagonal entry " + std::to_string(k + 1) + " has radicand " +
                                              std::to_string(lsq(k)));
    }
  }

  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = k; j < n; ++j) {
      Scalar s(0);
      for (Eigen::Index i = 0; i <= k; ++i) {
        const double delta = target.at_or_one(i - 1) * target[std::size_t(i)];
        s += alpha(j, i) * Eigen::numext::conj(alpha(k, i)) * (delta / lsq(i));
      }
      out(j, k) = s;
    }
  }
  return ConePoint<Scalar>{SymmetricMatrix<Scalar>(out), ConeKind::LPM, target, a.tolerance_used};
}

}  // namespace lpmchol

#endif  // LPMCHOL_CHOLESKY_HPP
