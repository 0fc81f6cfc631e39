#ifndef LPMCHOL_DETAIL_LDL_HPP
#define LPMCHOL_DETAIL_LDL_HPP

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace lpmchol::detail {

// Unpivoted A = U diag(d) U^* with U unit lower triangular. Pivot k is the
// ratio of the k-th and (k-1)-th leading principal minors. Only the lower
// triangle of A is read. If a pivot vanishes exactly, the factorization stops
// and `breakdown` holds its 0-based index; later pivots are NaN.
template <typename Scalar>
struct UnpivotedLdl {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Matrix unit;
  Eigen::VectorXd pivots;
  Eigen::Index breakdown = -1;

  UnpivotedLdl() = default;

  template <typename Derived>
  explicit UnpivotedLdl(const Eigen::MatrixBase<Derived>& a) {
    compute(a);
  }

  template <typename Derived>
  void compute(const Eigen::MatrixBase<Derived>& a) {
    const Eigen::Index n = a.rows();
    unit = Matrix::Identity(n, n);
    pivots = Eigen::VectorXd::Constant(n, std::nan(""));
    breakdown = -1;
    // w(j, i) = unit(j, i) * pivots(i), kept to avoid recomputing products.
    Matrix w = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      double dk = std::real(a(k, k));
      for (Eigen::Index i = 0; i < k; ++i) dk -= std::real(w(k, i) * Eigen::numext::conj(unit(k, i)));
      pivots(k) = dk;
      if (dk == 0.0 || !std::isfinite(dk)) {
        breakdown = k;
        return;
      }
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar s = a(j, k);
        for (Eigen::Index i = 0; i < k; ++i) s -= w(j, i) * Eigen::numext::conj(unit(k, i));
        w(j, k) = s;
        unit(j, k) = s / dk;
      }
    }
  }

  bool ok() const { return breakdown < 0; }

  // Solves the leading m x m block system A_m x = b.
  Vector solve_leading(Eigen::Index m, const Vector& b) const {
    Vector y = unit.topLeftCorner(m, m).template triangularView<Eigen::UnitLower>().solve(b);
    for (Eigen::Index i = 0; i < m; ++i) y(i) /= pivots(i);
    return unit.topLeftCorner(m, m).adjoint().template triangularView<Eigen::UnitUpper>().solve(y);
  }
};

}  // namespace lpmchol::detail

#endif  // LPMCHOL_DETAIL_LDL_HPP
