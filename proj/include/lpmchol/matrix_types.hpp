#ifndef LPMCHOL_MATRIX_TYPES_HPP
#define LPMCHOL_MATRIX_TYPES_HPP

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>

#include <Eigen/Dense>

#include "lpmchol/error.hpp"
#include "lpmchol/sign_pattern.hpp"

namespace lpmchol {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;

template <typename Scalar>
using RealOf = typename Eigen::NumTraits<Scalar>::Real;

template <typename Scalar>
inline constexpr bool is_complex_v = Eigen::NumTraits<Scalar>::IsComplex;

enum class FieldTag { real, complex };
enum class ConeKind { LPM, TPM };

inline const char* to_string(ConeKind cone) { return cone == ConeKind::LPM ? "lpm" : "tpm"; }

inline ConeKind flip(ConeKind cone) { return cone == ConeKind::LPM ? ConeKind::TPM : ConeKind::LPM; }

inline constexpr double kDefaultTol = 1e-10;

/// Dense self-adjoint matrix. Only the lower triangle of the input is read;
/// the stored matrix is its Hermitian completion with a real diagonal.
template <typename Scalar>
class SymmetricMatrix {
 public:
  using Dense = MatrixX<Scalar>;
  static constexpr FieldTag field_tag = is_complex_v<Scalar> ? FieldTag::complex : FieldTag::real;

  SymmetricMatrix() = default;

  template <typename Derived>
  explicit SymmetricMatrix(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
      throw Error(Errc::DimensionMismatch, "symmetric matrix must be square and nonempty");
    }
    const Dense lower = a;
    m_ = lower.template selfadjointView<Eigen::Lower>();
    for (Eigen::Index j = 0; j < m_.rows(); ++j) m_(j, j) = Scalar(std::real(m_(j, j)));
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Dense& matrix() const noexcept { return m_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Largest absolute entry.
  double scale() const { return m_.rows() == 0 ? 0.0 : static_cast<double>(m_.cwiseAbs().maxCoeff()); }

 private:
  Dense m_;
};

/// Element of Cholesky space: lower triangular with strictly positive real
/// diagonal. Entries above the diagonal are dropped on construction.
template <typename Scalar>
class LowerTriangular {
 public:
  using Dense = MatrixX<Scalar>;

  LowerTriangular() = default;

  template <typename Derived>
  explicit LowerTriangular(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
      throw Error(Errc::DimensionMismatch, "Cholesky factor must be square and nonempty");
    }
    m_ = a.template triangularView<Eigen::Lower>();
    for (Eigen::Index j = 0; j < m_.rows(); ++j) {
      const Scalar d = m_(j, j);
      const double re = std::real(d);
      const double im = std::imag(d);
      if (!(re > 0.0) || !std::isfinite(re) || std::abs(im) > 1e-12 * re) {
        throw Error(Errc::NotCholesky, "diagonal entry " + std::to_string(j + 1) + " is not a positive real");
      }
      m_(j, j) = Scalar(re);
    }
  }

  static LowerTriangular identity(Eigen::Index n) { return LowerTriangular(Dense::Identity(n, n)); }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Dense& matrix() const noexcept { return m_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double diag(Eigen::Index j) const { return std::real(m_(j, j)); }

 private:
  Dense m_;
};

/// A symmetric matrix known to lie in LPM(pattern) or TPM(pattern).
template <typename Scalar>
struct ConePoint {
  SymmetricMatrix<Scalar> matrix;
  ConeKind cone = ConeKind::LPM;
  SignPattern pattern;
  double tolerance_used = kDefaultTol;

  Eigen::Index dim() const noexcept { return matrix.dim(); }
};

using RealSymmetric = SymmetricMatrix<double>;
using RealLower = LowerTriangular<double>;
using RealConePoint = ConePoint<double>;

}  // namespace lpmchol

#endif  // LPMCHOL_MATRIX_TYPES_HPP
