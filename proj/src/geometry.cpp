#include "lpmchol/geometry.hpp"

#include <cmath>

#include "lpmchol/cholesky.hpp"
#include "lpmchol/core.hpp"

namespace lpmchol {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b) {
  if (a != b) throw Error(Errc::DimensionMismatch, "operands have different dimensions");
}

void require_same_cone(const RealConePoint& a, const RealConePoint& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.cone != b.cone) throw Error(Errc::ConeKindMismatch, "points lie in different cone kinds");
  if (!(a.pattern == b.pattern)) {
    throw Error(Errc::PatternMismatch, "patterns " + a.pattern.to_string() + " and " + b.pattern.to_string() + " differ");
  }
}

Eigen::VectorXd diag_of(const RealLower& l) { return l.matrix().diagonal(); }

}  // namespace

Eigen::MatrixXd strict_lower(const Eigen::MatrixXd& l) { return l.triangularView<Eigen::StrictlyLower>(); }

RealLower group_op(const RealLower& l, const RealLower& k) {
  require_same_dim(l.dim(), k.dim());
  Eigen::MatrixXd m = strict_lower(l.matrix()) + strict_lower(k.matrix());
  m.diagonal() = diag_of(l).cwiseProduct(diag_of(k));
  return RealLower(m);
}

RealLower group_inv(const RealLower& l) {
  Eigen::MatrixXd m = -strict_lower(l.matrix());
  m.diagonal() = diag_of(l).cwiseInverse();
  return RealLower(m);
}

RealLower scalar_mul(double alpha, const RealLower& l) {
  Eigen::MatrixXd m = alpha * strict_lower(l.matrix());
  m.diagonal() = diag_of(l).array().pow(alpha).matrix();
  return RealLower(m);
}

EtaVector eta(const RealLower& l) {
  const Eigen::Index n = l.dim();
  EtaVector v(n * (n + 1) / 2);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = std::log(l.diag(j));
  Eigen::Index pos = n;
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) v(pos++) = l(i, j);
  return v;
}

Eigen::Index eta_dim(Eigen::Index size) {
  Eigen::Index n = 0;
  while (n * (n + 1) / 2 < size) ++n;
  if (n == 0 || n * (n + 1) / 2 != size) {
    throw Error(Errc::DimensionMismatch, "eta vector length " + std::to_string(size) + " is not triangular");
  }
  return n;
}

RealLower eta_inv(const EtaVector& v) {
  const Eigen::Index n = eta_dim(v.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = std::exp(v(j));
  Eigen::Index pos = n;
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < i; ++j) m(i, j) = v(pos++);
  return RealLower(m);
}

double distance(const RealLower& l, const RealLower& k) {
  require_same_dim(l.dim(), k.dim());
  return (eta(l) - eta(k)).norm();
}

double inner_product(const RealLower& l, const RealLower& k) {
  require_same_dim(l.dim(), k.dim());
  return eta(l).dot(eta(k));
}

double metric_tensor(const RealLower& l, const TangentVector& x, const TangentVector& y) {
  require_same_dim(l.dim(), x.dim());
  require_same_dim(l.dim(), y.dim());
  double g = strict_lower(x.matrix()).cwiseProduct(strict_lower(y.matrix())).sum();
  for (Eigen::Index j = 0; j < l.dim(); ++j) g += x.matrix()(j, j) * y.matrix()(j, j) / (l.diag(j) * l.diag(j));
  return g;
}

RealLower geodesic(const RealLower& l, const TangentVector& x, double t) {
  require_same_dim(l.dim(), x.dim());
  Eigen::MatrixXd m = strict_lower(l.matrix()) + t * strict_lower(x.matrix());
  for (Eigen::Index j = 0; j < l.dim(); ++j) m(j, j) = l.diag(j) * std::exp(t * x.matrix()(j, j) / l.diag(j));
  return RealLower(m);
}

TangentVector geodesic_direction(const RealLower& l, const RealLower& k) {
  require_same_dim(l.dim(), k.dim());
  Eigen::MatrixXd x = strict_lower(k.matrix()) - strict_lower(l.matrix());
  for (Eigen::Index j = 0; j < l.dim(); ++j) x(j, j) = (std::log(k.diag(j)) - std::log(l.diag(j))) * l.diag(j);
  return TangentVector(x);
}

RealLower geodesic_between(const RealLower& l, const RealLower& k, double t) {
  return geodesic(l, geodesic_direction(l, k), t);
}

RealSymmetric differential(const RealLower& l, const TangentVector& x, const SignPattern& eps) {
  require_same_dim(l.dim(), x.dim());
  const Eigen::MatrixXd d = canonical_diagonal(eps).matrix();
  const Eigen::MatrixXd a = l.matrix() * d * x.matrix().transpose();
  return RealSymmetric(Eigen::MatrixXd(a + a.transpose()));
}

TangentVector differential_inv(const RealLower& l, const RealSymmetric& w, const SignPattern& eps) {
  require_same_dim(l.dim(), w.dim());
  const Eigen::MatrixXd d = canonical_diagonal(eps).matrix();
  const auto tri = l.matrix().triangularView<Eigen::Lower>();
  // L^{-1} W L^{-T}
  const Eigen::MatrixXd left = tri.solve(w.matrix());
  const Eigen::MatrixXd inner = tri.solve(left.transpose()).transpose();
  Eigen::MatrixXd half = strict_lower(inner);
  half.diagonal() = 0.5 * inner.diagonal();
  return TangentVector(Eigen::MatrixXd(l.matrix() * half * d));
}

double lpm_distance(const RealConePoint& a, const RealConePoint& b) {
  require_same_cone(a, b);
  return distance(canonical_factor(a), canonical_factor(b));
}

RealConePoint lpm_geodesic(const RealConePoint& a, const RealConePoint& b, double t) {
  require_same_cone(a, b);
  return canonical_compose(geodesic_between(canonical_factor(a), canonical_factor(b), t), a.pattern, a.cone);
}

RealConePoint star_op(const RealConePoint& a, const RealConePoint& b) {
  require_same_cone(a, b);
  return canonical_compose(group_op(canonical_factor(a), canonical_factor(b)), a.pattern, a.cone);
}

RealConePoint star_inv(const RealConePoint& a) {
  return canonical_compose(group_inv(canonical_factor(a)), a.pattern, a.cone);
}

RealConePoint log_cholesky_mean(const std::vector<RealConePoint>& points) {
  if (points.empty()) throw Error(Errc::SpecInvalid, "mean of an empty list");
  EtaVector sum = EtaVector::Zero(points.front().dim() * (points.front().dim() + 1) / 2);
  for (const auto& p : points) {
    require_same_cone(points.front(), p);
    sum += eta(canonical_factor(p));
  }
  sum /= double(points.size());
  return canonical_compose(eta_inv(sum), points.front().pattern, points.front().cone);
}

RealLower klein_apply(KleinMap map, const RealLower& l) {
  switch (map) {
    case KleinMap::identity:
      return l;
    case KleinMap::group_inverse:
      return group_inv(l);
    case KleinMap::reversal:
      return reverse(l);
    case KleinMap::reversal_inverse:
      return reverse(group_inv(l));
  }
  return l;
}

}  // namespace lpmchol
