#ifndef LPMCHOL_CORE_HPP
#define LPMCHOL_CORE_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "lpmchol/detail/ldl.hpp"
#include "lpmchol/error.hpp"
#include "lpmchol/matrix_types.hpp"
#include "lpmchol/sign_pattern.hpp"

namespace lpmchol {

/// diag(e_1, e_1 e_2, ..., e_{n-1} e_n).
template <typename Scalar = double>
SymmetricMatrix<Scalar> canonical_diagonal(const SignPattern& eps) {
  const auto n = static_cast<Eigen::Index>(eps.size());
  MatrixX<Scalar> d = MatrixX<Scalar>::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) d(k, k) = Scalar(double(eps.at_or_one(k - 1) * eps[std::size_t(k)]));
  return SymmetricMatrix<Scalar>(d);
}

/// (P A P)^* with P the anti-diagonal permutation.
template <typename Scalar>
SymmetricMatrix<Scalar> reverse_matrix(const SymmetricMatrix<Scalar>& a) {
  return SymmetricMatrix<Scalar>(a.matrix().reverse().adjoint());
}

/// Factor reversal (P L P)^*, again lower triangular.
template <typename Scalar>
LowerTriangular<Scalar> reverse(const LowerTriangular<Scalar>& l) {
  return LowerTriangular<Scalar>(l.matrix().reverse().adjoint());
}

/// Reversal swaps LPM(e) and TPM(e) and keeps the pattern.
template <typename Scalar>
ConePoint<Scalar> reverse(const ConePoint<Scalar>& a) {
  return ConePoint<Scalar>{reverse_matrix(a.matrix), flip(a.cone), a.pattern, a.tolerance_used};
}

/// The unit-modulus diagonal point of the cone: D_e for LPM(e), D_{rev e} for TPM(e).
template <typename Scalar = double>
ConePoint<Scalar> canonical_point(const SignPattern& eps, ConeKind cone = ConeKind::LPM) {
  const SignPattern p = cone == ConeKind::LPM ? eps : reverse_pattern(eps);
  return ConePoint<Scalar>{canonical_diagonal<Scalar>(p), cone, eps, kDefaultTol};
}

/// Leading principal minors det A_[k][k], k = 1..n, from one unpivoted LDL^*.
/// Entries after an exact breakdown are zero.
template <typename Scalar>
Eigen::VectorXd leading_minors(const SymmetricMatrix<Scalar>& a) {
  const detail::UnpivotedLdl<Scalar> ldl(a.matrix());
  const Eigen::Index n = a.dim();
  Eigen::VectorXd minors = Eigen::VectorXd::Zero(n);
  double prod = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (!ldl.ok() && k >= ldl.breakdown) break;
    prod *= ldl.pivots(k);
    minors(k) = prod;
  }
  return minors;
}

template <typename Scalar>
Eigen::VectorXd trailing_minors(const SymmetricMatrix<Scalar>& a) {
  return leading_minors(reverse_matrix(a));
}

template <typename Scalar>
Eigen::VectorXd cone_minors(const SymmetricMatrix<Scalar>& a, ConeKind cone) {
  return cone == ConeKind::LPM ? leading_minors(a) : trailing_minors(a);
}

/// Threshold below which the k-th (1-based) minor counts as zero.
inline double minor_threshold(double tol, double scale, int k) {
  return tol * std::pow(std::max(1.0, scale), k);
}

/// Sign pattern of the leading (LPM) or trailing (TPM) minors.
template <typename Scalar>
ConePoint<Scalar> classify(const SymmetricMatrix<Scalar>& a, ConeKind cone = ConeKind::LPM,
                           double tol = kDefaultTol) {
  if (!(tol >= 0.0)) throw Error(Errc::SpecInvalid, "tolerance must be nonnegative");
  const Eigen::VectorXd minors = cone_minors(a, cone);
  const double scale = a.scale();
  std::vector<int> signs(std::size_t(a.dim()));
  for (Eigen::Index k = 0; k < a.dim(); ++k) {
    const int kk = int(k) + 1;
    if (!(std::abs(minors(k)) > minor_threshold(tol, scale, kk))) {
      throw Error::minor_near_zero(kk, std::string(cone == ConeKind::LPM ? "leading" : "trailing") +
                                           " minor " + std::to_string(kk) + " is numerically zero");
    }
    signs[std::size_t(k)] = minors(k) > 0 ? 1 : -1;
  }
  return ConePoint<Scalar>{a, cone, SignPattern(std::move(signs)), tol};
}

/// A^{-1}; lies in the opposite cone with the reversed pattern.
template <typename Scalar>
ConePoint<Scalar> invert_cone_point(const ConePoint<Scalar>& a) {
  const Eigen::FullPivLU<MatrixX<Scalar>> lu(a.matrix.matrix());
  if (!lu.isInvertible()) throw Error(Errc::SingularMatrix, "matrix is numerically singular");
  return ConePoint<Scalar>{SymmetricMatrix<Scalar>(lu.inverse()), flip(a.cone), reverse_pattern(a.pattern),
                           a.tolerance_used};
}

struct Perturbation {
  double t;
  SignPattern pattern;
};

/// Smallest modulus of a nonzero eigenvalue over all leading blocks, and the
/// pattern of A + t Id for t in (0, t_A). The zero matrix gives (1, all plus).
Perturbation lpm_perturbation(const RealSymmetric& a);

}  // namespace lpmchol

#endif  // LPMCHOL_CORE_HPP
