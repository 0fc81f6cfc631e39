#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpmchol/cholesky.hpp"
#include "lpmchol/geometry.hpp"
#include "support/oracles.hpp"

using namespace lpmchol;

namespace {

RealLower lower2(double a, double b, double c, double d) {
  Eigen::Matrix2d m;
  m << a, b, c, d;
  return RealLower(m);
}

TangentVector random_tangent(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> z;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) x(i, j) = z(g);
  return TangentVector(x);
}

double diff(const RealLower& a, const RealLower& b) { return oracle::max_abs(a.matrix() - b.matrix()); }

}  // namespace

TEST_CASE("group operation examples") {
  const RealLower l = lower2(1, 0, 2, 2);
  CHECK(group_op(l, RealLower::identity(2)).matrix() == l.matrix());
  CHECK(group_op(l, l).matrix() == lower2(1, 0, 4, 4).matrix());
  CHECK(group_inv(RealLower::identity(3)).matrix() == Eigen::MatrixXd::Identity(3, 3));
  CHECK(group_inv(l).matrix() == lower2(1, 0, -2, 0.5).matrix());
  CHECK(oracle::max_abs(group_inv(l).matrix().inverse() - lower2(1, 0, 4, 2).matrix()) < 1e-15);
}

TEST_CASE("matrix inverse is not the group inverse") {
  const RealLower l = lower2(1, 0, 2, 2);
  const RealLower a = group_inv(RealLower(Eigen::MatrixXd(l.matrix().inverse())));
  const RealLower b(Eigen::MatrixXd(group_inv(l).matrix().inverse()));
  CHECK(diff(a, b) > 0.5);
}

TEST_CASE("abelian group laws") {
  std::mt19937_64 g(1);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const RealLower l(oracle::random_lower(g, n)), k(oracle::random_lower(g, n)), j(oracle::random_lower(g, n));
    CHECK(diff(group_op(l, k), group_op(k, l)) < 1e-14);
    CHECK(diff(group_op(group_op(l, k), j), group_op(l, group_op(k, j))) < 1e-12);
    CHECK(diff(group_op(l, group_inv(l)), RealLower::identity(n)) < 1e-14);
  }
}

TEST_CASE("scalar action") {
  std::mt19937_64 g(2);
  const RealLower l(oracle::random_lower(g, 3));
  CHECK(diff(scalar_mul(1.0, l), l) < 1e-15);
  CHECK(diff(scalar_mul(0.0, l), RealLower::identity(3)) < 1e-15);
  Eigen::Matrix2d d = Eigen::Vector2d(4, 9).asDiagonal();
  CHECK(diff(scalar_mul(0.5, RealLower(d)), lower2(2, 0, 0, 3)) < 1e-15);
  CHECK((eta(scalar_mul(-1.7, l)) - (-1.7) * eta(l)).norm() < 1e-13);
  CHECK(diff(scalar_mul(-1.0, l), group_inv(l)) < 1e-14);
}

TEST_CASE("eta coordinates") {
  CHECK(eta(RealLower::identity(4)).isZero());
  const EtaVector v = eta(lower2(1, 0, 2, 2));
  CHECK(v.size() == 3);
  CHECK(v(0) == 0.0);
  CHECK(v(1) == doctest::Approx(std::log(2.0)));
  CHECK(v(2) == 2.0);
  Eigen::Matrix3d m;
  m << 1, 0, 0, 2, 1, 0, 3, 4, 1;
  CHECK(eta(RealLower(m)).tail(3) == Eigen::Vector3d(2, 3, 4));

  std::mt19937_64 g(3);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 1 + rep % 6;
    const RealLower l(oracle::random_lower(g, n)), k(oracle::random_lower(g, n));
    CHECK(diff(eta_inv(eta(l)), l) < 1e-14);
    CHECK((eta(group_op(l, k)) - eta(l) - eta(k)).norm() < 1e-13);
    CHECK((eta(group_inv(l)) + eta(l)).norm() < 1e-14);
    CHECK(inner_product(l, k) == doctest::Approx(eta(l).dot(eta(k))));
  }
  CHECK_THROWS_AS(eta_inv(EtaVector::Zero(4)), Error);
}

TEST_CASE("distance values") {
  const RealLower id = RealLower::identity(2);
  CHECK(std::abs(distance(lower2(1, 0, 2, 2), id) - std::sqrt(4.0 + std::log(2.0) * std::log(2.0))) < 1e-12);
  CHECK(std::abs(distance(lower2(1, 0, -1, 0.5), id) - std::sqrt(1.0 + std::log(2.0) * std::log(2.0))) < 1e-12);
  std::mt19937_64 g(4);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const RealLower l(oracle::random_lower(g, n)), k(oracle::random_lower(g, n)), j(oracle::random_lower(g, n));
    CHECK(distance(l, l) == 0.0);
    CHECK(distance(l, k) == doctest::Approx(distance(k, l)));
    CHECK(distance(l, j) <= distance(l, k) + distance(k, j) + 1e-12);
    // Direct formula on entries.
    double s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      s += std::pow(std::log(l(i, i)) - std::log(k(i, i)), 2);
      for (Eigen::Index c = 0; c < i; ++c) s += std::pow(l(i, c) - k(i, c), 2);
    }
    CHECK(distance(l, k) == doctest::Approx(std::sqrt(s)).epsilon(1e-12));
    CHECK(std::abs(distance(group_op(j, l), group_op(j, k)) - distance(l, k)) < 1e-12);
    CHECK(std::abs(distance(group_op(l, j), group_op(k, j)) - distance(l, k)) < 1e-12);
  }
}

TEST_CASE("metric tensor") {
  std::mt19937_64 g(5);
  const TangentVector x = random_tangent(g, 3), y = random_tangent(g, 3);
  const Eigen::MatrixXd xl = x.matrix(), yl = y.matrix();
  CHECK(metric_tensor(RealLower::identity(3), x, y) == doctest::Approx(xl.cwiseProduct(yl).sum()));
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 1 + rep % 4;
    const RealLower l(oracle::random_lower(g, n));
    const TangentVector u = random_tangent(g, n), v = random_tangent(g, n);
    CHECK(metric_tensor(l, u, u) > 0.0);
    CHECK(metric_tensor(l, u, v) == doctest::Approx(metric_tensor(l, v, u)));
    // Speed along the geodesic by finite differences.
    const double t = 1e-4;
    const double speed = distance(l, geodesic(l, u, t)) / t;
    CHECK(speed == doctest::Approx(std::sqrt(metric_tensor(l, u, u))).epsilon(1e-5));
  }
}

TEST_CASE("geodesics") {
  std::mt19937_64 g(6);
  const RealLower l(oracle::random_lower(g, 3));
  const TangentVector x = random_tangent(g, 3);
  CHECK(diff(geodesic(l, x, 0.0), l) < 1e-15);
  const RealLower e = geodesic(RealLower::identity(3), TangentVector(Eigen::MatrixXd::Identity(3, 3)), 1.0);
  CHECK(oracle::max_abs(e.matrix() - std::exp(1.0) * Eigen::MatrixXd::Identity(3, 3)) < 1e-14);
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const RealLower a(oracle::random_lower(g, n)), b(oracle::random_lower(g, n));
    const TangentVector u = random_tangent(g, n);
    const double unit = distance(a, geodesic(a, u, 1.0));
    for (double t : {0.25, 0.5, 2.0}) CHECK(std::abs(distance(a, geodesic(a, u, t)) - t * unit) < 1e-10);
    CHECK(diff(geodesic_between(a, b, 1.0), b) < 1e-12);
    CHECK(diff(geodesic_between(a, b, 0.0), a) < 1e-15);
    CHECK(diff(geodesic_between(a, a, 0.5), a) < 1e-15);
    CHECK(std::abs(distance(a, geodesic_between(a, b, 0.3)) - 0.3 * distance(a, b)) < 1e-10);
    // One-parameter subgroups through the identity.
    const RealLower id = RealLower::identity(n);
    CHECK(diff(geodesic(id, u, 0.7 + 1.1), group_op(geodesic(id, u, 0.7), geodesic(id, u, 1.1))) < 1e-10);
  }
  Eigen::Matrix2d four = 4.0 * Eigen::Matrix2d::Identity();
  CHECK(diff(geodesic_between(RealLower::identity(2), RealLower(four), 0.5), lower2(2, 0, 0, 2)) < 1e-14);
}

TEST_CASE("differential of the composition map") {
  std::mt19937_64 g(7);
  const TangentVector x = random_tangent(g, 3);
  const Eigen::MatrixXd expect = x.matrix() + x.matrix().transpose();
  CHECK(oracle::max_abs(differential(RealLower::identity(3), x, SignPattern::ones(3)).matrix() - expect) < 1e-15);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const auto pats = all_patterns(std::size_t(n));
    const SignPattern eps = pats[std::size_t(rep) % pats.size()];
    const RealLower l(oracle::random_lower(g, n));
    const TangentVector u = random_tangent(g, n);
    const RealSymmetric w = differential(l, u, eps);
    CHECK(oracle::max_abs(differential_inv(l, w, eps).matrix() - u.matrix()) < 1e-10);
    const double h = 1e-6;
    const Eigen::MatrixXd d = canonical_diagonal(eps).matrix();
    const Eigen::MatrixXd lh = l.matrix() + h * u.matrix();
    const Eigen::MatrixXd fd = (lh * d * lh.transpose() - l.matrix() * d * l.matrix().transpose()) / h;
    CHECK(oracle::max_abs(fd - w.matrix()) < 1e-4 * (1.0 + oracle::max_abs(w.matrix())));
  }
}

TEST_CASE("transfer to cones") {
  std::mt19937_64 g(8);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    for (const auto& eps : all_patterns(std::size_t(n))) {
      for (ConeKind cone : {ConeKind::LPM, ConeKind::TPM}) {
        const RealLower l(oracle::random_lower(g, n)), k(oracle::random_lower(g, n)), j(oracle::random_lower(g, n));
        const RealConePoint a = canonical_compose(l, eps, cone);
        const RealConePoint b = canonical_compose(k, eps, cone);
        const RealConePoint c = canonical_compose(j, eps, cone);
        const RealConePoint id = canonical_point(eps, cone);
        CHECK(std::abs(lpm_distance(a, b) - distance(l, k)) < 1e-10);
        CHECK(oracle::max_abs(star_op(id, a).matrix.matrix() - a.matrix.matrix()) < 1e-10);
        CHECK(oracle::max_abs(star_op(a, b).matrix.matrix() - star_op(b, a).matrix.matrix()) < 1e-10);
        CHECK(oracle::max_abs(star_op(a, star_inv(a)).matrix.matrix() - id.matrix.matrix()) < 1e-10);
        CHECK(std::abs(lpm_distance(star_op(c, a), star_op(c, b)) - lpm_distance(a, b)) < 1e-10);
        CHECK(oracle::max_abs(lpm_geodesic(a, b, 1.0).matrix.matrix() - b.matrix.matrix()) <
              1e-10 * (1.0 + oracle::max_abs(b.matrix.matrix())));
        CHECK(classify(star_op(a, b).matrix, cone).pattern == eps);
      }
    }
  }
  const RealConePoint lpm_point = canonical_point(SignPattern{1, -1});
  CHECK_THROWS_AS(lpm_distance(lpm_point, canonical_point(SignPattern{1, 1})), Error);
}

TEST_CASE("log-Cholesky mean") {
  std::mt19937_64 g(9);
  const SignPattern eps{1, -1, 1};
  const RealLower l(oracle::random_lower(g, 3)), k(oracle::random_lower(g, 3));
  const RealConePoint a = canonical_compose(l, eps), b = canonical_compose(k, eps);
  CHECK(oracle::max_abs(log_cholesky_mean({a}).matrix.matrix() - a.matrix.matrix()) < 1e-10);
  Eigen::MatrixXd half = Eigen::MatrixXd::Zero(3, 3);
  for (Eigen::Index i = 0; i < 3; ++i) {
    half(i, i) = std::sqrt(l(i, i) * k(i, i));
    for (Eigen::Index j = 0; j < i; ++j) half(i, j) = 0.5 * (l(i, j) + k(i, j));
  }
  CHECK(oracle::max_abs(log_cholesky_mean({a, b}).matrix.matrix() - canonical_compose(RealLower(half), eps).matrix.matrix()) < 1e-10);
  CHECK(oracle::max_abs(log_cholesky_mean({a, star_inv(a)}).matrix.matrix() - canonical_diagonal(eps).matrix()) < 1e-10);
  CHECK_THROWS_AS(log_cholesky_mean({}), Error);
}

TEST_CASE("Klein four maps") {
  CHECK(klein_apply(KleinMap::reversal, lower2(1, 0, 2, 2)).matrix() == lower2(2, 0, 2, 1).matrix());
  std::mt19937_64 g(10);
  const KleinMap maps[] = {KleinMap::identity, KleinMap::group_inverse, KleinMap::reversal, KleinMap::reversal_inverse};
  for (int rep = 0; rep < 50; ++rep) {
    const Eigen::Index n = 1 + rep % 5;
    const RealLower l(oracle::random_lower(g, n)), k(oracle::random_lower(g, n));
    for (KleinMap s : maps) {
      CHECK(diff(klein_apply(s, klein_apply(s, l)), l) < 1e-14);
      CHECK(std::abs(distance(klein_apply(s, l), klein_apply(s, k)) - distance(l, k)) < 1e-12);
      CHECK(diff(klein_apply(s, group_op(l, k)), group_op(klein_apply(s, l), klein_apply(s, k))) < 1e-12);
      for (KleinMap r : maps) {
        CHECK(diff(klein_apply(s, klein_apply(r, l)), klein_apply(r, klein_apply(s, l))) < 1e-14);
      }
    }
  }
}
