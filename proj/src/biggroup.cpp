#include "lpmchol/biggroup.hpp"

#include <algorithm>
#include <cmath>

#include "lpmchol/cholesky.hpp"
#include "lpmchol/geometry.hpp"

namespace lpmchol {

namespace {

void require_compatible(const BigGroupElement& a, const BigGroupElement& b) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "group elements of different dimension");
  if (a.cone() != b.cone()) throw Error(Errc::ConeKindMismatch, "cannot mix LPM and TPM group elements");
}

}  // namespace

BigGroupElement::BigGroupElement(const RealConePoint& point, double tol)
    : point_(point), factor_(canonical_factor(point, tol)) {}

BigGroupElement::BigGroupElement(const RealLower& factor, const SignPattern& eps, ConeKind cone)
    : point_(canonical_compose(factor, eps, cone)), factor_(factor) {}

BigGroupElement BigGroupElement::identity(Eigen::Index n, ConeKind cone) {
  return BigGroupElement(RealLower::identity(n), SignPattern::ones(std::size_t(n)), cone);
}

BigGroupElement box_op(const BigGroupElement& a, const BigGroupElement& b) {
  require_compatible(a, b);
  return BigGroupElement(group_op(a.factor(), b.factor()), schur_product(a.pattern(), b.pattern()), a.cone());
}

BigGroupElement box_inv(const BigGroupElement& a) {
  return BigGroupElement(group_inv(a.factor()), a.pattern(), a.cone());
}

double dp_distance(const BigGroupElement& a, const BigGroupElement& b, double p) {
  require_compatible(a, b);
  if (!(p >= 1.0)) throw Error(Errc::SpecInvalid, "d_p requires p >= 1");
  const double d = distance(a.factor(), b.factor());
  const double delta = a.pattern() == b.pattern() ? 0.0 : 1.0;
  if (std::isinf(p)) return std::max(d, delta);
  if (delta == 0.0) return d;
  return std::pow(std::pow(d, p) + 1.0, 1.0 / p);
}

std::optional<int> torsion_order(const BigGroupElement& a, double tol) {
  const Eigen::MatrixXd diff = a.factor().matrix() - Eigen::MatrixXd::Identity(a.dim(), a.dim());
  if (diff.cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return a.pattern().all_positive() ? 1 : 2;
}

}  // namespace lpmchol
