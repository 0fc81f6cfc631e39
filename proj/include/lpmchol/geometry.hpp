#ifndef LPMCHOL_GEOMETRY_HPP
#define LPMCHOL_GEOMETRY_HPP

#include <vector>

#include <Eigen/Dense>

#include "lpmchol/matrix_types.hpp"
#include "lpmchol/sign_pattern.hpp"

namespace lpmchol {

/// Tangent vector at a point of Cholesky space: any lower triangular matrix.
class TangentVector {
 public:
  TangentVector() = default;
  template <typename Derived>
  explicit TangentVector(const Eigen::MatrixBase<Derived>& x) : m_(x.template triangularView<Eigen::Lower>()) {
    if (m_.rows() != m_.cols()) throw Error(Errc::DimensionMismatch, "tangent vector must be square");
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Eigen::MatrixXd& matrix() const noexcept { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Coordinates (log l_11, ..., log l_nn, strict lower entries row by row).
using EtaVector = Eigen::VectorXd;

/// Strict lower part of L.
Eigen::MatrixXd strict_lower(const Eigen::MatrixXd& l);

RealLower group_op(const RealLower& l, const RealLower& k);
RealLower group_inv(const RealLower& l);
RealLower scalar_mul(double alpha, const RealLower& l);

EtaVector eta(const RealLower& l);
RealLower eta_inv(const EtaVector& v);
/// n with n(n+1)/2 = size, or DimensionMismatch.
Eigen::Index eta_dim(Eigen::Index size);

double distance(const RealLower& l, const RealLower& k);
/// Euclidean inner product of eta coordinates.
double inner_product(const RealLower& l, const RealLower& k);
double metric_tensor(const RealLower& l, const TangentVector& x, const TangentVector& y);

RealLower geodesic(const RealLower& l, const TangentVector& x, double t);
/// Initial velocity of the unit-time geodesic from L to K.
TangentVector geodesic_direction(const RealLower& l, const RealLower& k);
RealLower geodesic_between(const RealLower& l, const RealLower& k, double t);

/// Derivative of L -> L D_e L^T at L in direction X.
RealSymmetric differential(const RealLower& l, const TangentVector& x, const SignPattern& eps);
TangentVector differential_inv(const RealLower& l, const RealSymmetric& w, const SignPattern& eps);

// Transfers to a single cone through its canonical factorization. Both
// arguments must share cone kind and pattern (PatternMismatch otherwise).
double lpm_distance(const RealConePoint& a, const RealConePoint& b);
RealConePoint lpm_geodesic(const RealConePoint& a, const RealConePoint& b, double t);
RealConePoint star_op(const RealConePoint& a, const RealConePoint& b);
RealConePoint star_inv(const RealConePoint& a);
RealConePoint log_cholesky_mean(const std::vector<RealConePoint>& points);

enum class KleinMap { identity, group_inverse, reversal, reversal_inverse };

RealLower klein_apply(KleinMap map, const RealLower& l);

}  // namespace lpmchol

#endif  // LPMCHOL_GEOMETRY_HPP
