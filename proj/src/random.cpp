#include "lpmchol/random.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lpmchol/cholesky.hpp"
#include "lpmchol/core.hpp"
#include "lpmchol/geometry.hpp"

namespace lpmchol {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void invalid(const std::string& what) { throw Error(Errc::SpecInvalid, what); }

bool is_pd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  return llt.info() == Eigen::Success && (llt.matrixLLT().diagonal().array() > 0.0).all();
}

void validate_wishart(const WishartSpec& s) {
  const Eigen::Index n = s.sigma.dim();
  if (n < 1) invalid("Wishart scale matrix is empty");
  if (!is_pd(s.sigma.matrix())) invalid("Wishart scale matrix is not positive definite");
  if (s.dof < n) invalid("Wishart degrees of freedom " + std::to_string(s.dof) + " < dimension " + std::to_string(n));
  if (s.pattern.size() != std::size_t(n)) invalid("Wishart pattern length differs from dimension");
}

void validate_normal(const CholeskyNormalSpec& s) {
  const Eigen::Index n = s.center.dim();
  const Eigen::Index m = n * (n + 1) / 2;
  if (n < 1) invalid("Cholesky-normal center is empty");
  if (s.cov.rows() != m || s.cov.cols() != m) {
    invalid("Cholesky-normal covariance must be " + std::to_string(m) + " x " + std::to_string(m));
  }
  if (!s.cov.isApprox(s.cov.transpose())) invalid("Cholesky-normal covariance is not symmetric");
  if (!is_pd(s.cov)) invalid("Cholesky-normal covariance is not positive definite");
}

// Factor of Sigma with Sigma = L L^T (LPM) or Sigma = L^T L (TPM).
RealLower scale_factor(const RealSymmetric& sigma, ConeKind cone) {
  const Eigen::Index n = sigma.dim();
  const SignPattern ones = SignPattern::ones(std::size_t(n));
  if (cone == ConeKind::LPM) return RealLower(Eigen::MatrixXd(Eigen::LLT<Eigen::MatrixXd>(sigma.matrix()).matrixL()));
  return factor_tpm(RealConePoint{sigma, ConeKind::TPM, ones, kDefaultTol}, canonical_point(ones, ConeKind::TPM));
}

// The positive definite matrix with the same canonical factor.
Eigen::MatrixXd pd_image(const RealLower& l, ConeKind cone) {
  return cone == ConeKind::LPM ? Eigen::MatrixXd(l.matrix() * l.matrix().transpose())
                               : Eigen::MatrixXd(l.matrix().transpose() * l.matrix());
}

double cone_jacobian_logdet(const RealLower& l, ConeKind cone, const SignPattern& eps) {
  return cone == ConeKind::LPM ? jacobian_logdet(l, eps) : jacobian_logdet(reverse(l), eps);
}

void require_support(const RealConePoint& m, ConeKind cone, const SignPattern& eps) {
  if (m.cone != cone) throw Error(Errc::ConeKindMismatch, std::string("point must lie in a ") + to_string(cone) + " cone");
  if (m.dim() != Eigen::Index(eps.size())) throw Error(Errc::DimensionMismatch, "point and spec dimensions differ");
  if (!(m.pattern == eps)) {
    throw Error(Errc::PatternMismatch, "point pattern " + m.pattern.to_string() + " differs from spec pattern " +
                                           eps.to_string());
  }
}

RealLower pd_factor(const Eigen::MatrixXd& p, ConeKind cone) {
  return scale_factor(RealSymmetric(p), cone);
}

SignPattern clone_pattern(RngStream& rng, const InertialCloneSpec& s, std::size_t n) {
  if (s.k) {
    const auto cones = cones_with_inertia(n, std::size_t(*s.k));
    return cones[rng.index(cones.size())];
  }
  return SignPattern::from_bits(n, rng.index(std::size_t{1} << n));
}

FactorDraw wishart_factor(RngStream& rng, const WishartSpec& s) {
  const int n = int(s.sigma.dim());
  const RealLower scale = scale_factor(s.sigma, s.cone);
  if (s.cone == ConeKind::LPM) {
    const RealLower k = bartlett_sample(rng, n, s.dof);
    return {RealLower(Eigen::MatrixXd(scale.matrix() * k.matrix())), s.pattern, ConeKind::LPM};
  }
  const RealLower k = reverse_bartlett_sample(rng, n, s.dof);
  return {RealLower(Eigen::MatrixXd(k.matrix() * scale.matrix())), s.pattern, ConeKind::TPM};
}

FactorDraw normal_factor(RngStream& rng, const CholeskyNormalSpec& s) {
  const EtaVector mu = eta(canonical_factor(s.center));
  const Eigen::MatrixXd c = Eigen::LLT<Eigen::MatrixXd>(s.cov).matrixL();
  EtaVector z(mu.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
  return {eta_inv(EtaVector(mu + c * z)), s.center.pattern, s.center.cone};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream), std::uint32_t(stream >> 32)};
  engine_.seed(seq);
}

double RngStream::normal() { return normal_(engine_); }

double RngStream::chi_squared(double dof) { return std::chi_squared_distribution<double>(dof)(engine_); }

std::size_t RngStream::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

DistributionSpec make_clone(DistributionSpec base, std::optional<int> k, ConeKind cone) {
  return std::make_shared<const InertialCloneSpec>(InertialCloneSpec{std::move(base), k, cone});
}

Eigen::Index spec_dim(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const WishartSpec& s) { return s.sigma.dim(); },
                        [](const InverseWishartSpec& s) { return s.base.sigma.dim(); },
                        [](const CholeskyNormalSpec& s) { return s.center.dim(); },
                        [](const std::shared_ptr<const InertialCloneSpec>& s) { return spec_dim(s->base); },
                        [](const PointMassSpec& s) { return s.point.dim(); },
                    },
                    spec);
}

Support support(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const WishartSpec& s) { return Support{s.cone, s.pattern}; },
                        [](const InverseWishartSpec& s) {
                          return Support{flip(s.base.cone), reverse_pattern(s.base.pattern)};
                        },
                        [](const CholeskyNormalSpec& s) { return Support{s.center.cone, s.center.pattern}; },
                        [](const std::shared_ptr<const InertialCloneSpec>& s) {
                          const auto n = std::size_t(spec_dim(s->base));
                          if (s->k && *s->k == 0) return Support{s->cone, SignPattern::ones(n)};
                          if (n == 1 && s->k) return Support{s->cone, SignPattern{-1}};
                          return Support{s->cone, std::nullopt};
                        },
                        [](const PointMassSpec& s) { return Support{s.point.cone, s.point.pattern}; },
                    },
                    spec);
}

void validate(const DistributionSpec& spec) {
  std::visit(overloaded{
                 [](const WishartSpec& s) { validate_wishart(s); },
                 [](const InverseWishartSpec& s) { validate_wishart(s.base); },
                 [](const CholeskyNormalSpec& s) { validate_normal(s); },
                 [](const std::shared_ptr<const InertialCloneSpec>& s) {
                   if (!s) invalid("missing clone spec");
                   validate(s->base);
                   const Support base = support(s->base);
                   if (!base.pattern || !base.pattern->all_positive()) invalid("clone base must be positive definite");
                   const int n = int(spec_dim(s->base));
                   if (s->k && (*s->k < 0 || *s->k > n)) invalid("clone inertia k must lie in [0, n]");
                   if (!s->k && n > 62) invalid("clone dimension too large");
                 },
                 [](const PointMassSpec&) {},
             },
             spec);
}

RealLower bartlett_sample(RngStream& rng, int n, int dof) {
  if (n < 1 || dof < n) invalid("Bartlett factor requires dof >= n >= 1");
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = std::sqrt(rng.chi_squared(double(dof - i)));
    for (int j = 0; j < i; ++j) k(i, j) = rng.normal();
  }
  return RealLower(k);
}

RealLower reverse_bartlett_sample(RngStream& rng, int n, int dof) {
  if (n < 1 || dof < n) invalid("Bartlett factor requires dof >= n >= 1");
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    k(i, i) = std::sqrt(rng.chi_squared(double(dof - n + 1 + i)));
    for (int j = 0; j < i; ++j) k(i, j) = rng.normal();
  }
  return RealLower(k);
}

FactorDraw sample_factor(RngStream& rng, const DistributionSpec& spec) {
  return std::visit(
      overloaded{
          [&](const WishartSpec& s) { return wishart_factor(rng, s); },
          [&](const InverseWishartSpec& s) {
            const FactorDraw d = wishart_factor(rng, s.base);
            const Eigen::MatrixXd inv = d.factor.matrix().triangularView<Eigen::Lower>().solve(
                Eigen::MatrixXd::Identity(d.factor.dim(), d.factor.dim()));
            return FactorDraw{RealLower(inv), reverse_pattern(d.pattern), flip(d.cone)};
          },
          [&](const CholeskyNormalSpec& s) { return normal_factor(rng, s); },
          [&](const std::shared_ptr<const InertialCloneSpec>& s) {
            const FactorDraw base = sample_factor(rng, s->base);
            const SignPattern eps = clone_pattern(rng, *s, std::size_t(base.factor.dim()));
            if (base.cone == s->cone) return FactorDraw{base.factor, eps, s->cone};
            return FactorDraw{pd_factor(pd_image(base.factor, base.cone), s->cone), eps, s->cone};
          },
          [&](const PointMassSpec& s) { return FactorDraw{canonical_factor(s.point), s.point.pattern, s.point.cone}; },
      },
      spec);
}

RealConePoint wishart_sample(RngStream& rng, const WishartSpec& spec) {
  const FactorDraw d = wishart_factor(rng, spec);
  return canonical_compose(d.factor, d.pattern, d.cone);
}

RealConePoint inverse_wishart_sample(RngStream& rng, const InverseWishartSpec& spec) {
  return invert_cone_point(wishart_sample(rng, spec.base));
}

RealConePoint cholesky_normal_sample(RngStream& rng, const CholeskyNormalSpec& spec) {
  const FactorDraw d = normal_factor(rng, spec);
  return canonical_compose(d.factor, d.pattern, d.cone);
}

RealConePoint inertial_clone_sample(RngStream& rng, const InertialCloneSpec& spec) {
  const FactorDraw base = sample_factor(rng, spec.base);
  const SignPattern eps = clone_pattern(rng, spec, std::size_t(base.factor.dim()));
  const RealLower l = base.cone == spec.cone ? base.factor : pd_factor(pd_image(base.factor, base.cone), spec.cone);
  return canonical_compose(l, eps, spec.cone);
}

RealConePoint sample(RngStream& rng, const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [&](const WishartSpec& s) { return wishart_sample(rng, s); },
                        [&](const InverseWishartSpec& s) { return inverse_wishart_sample(rng, s); },
                        [&](const CholeskyNormalSpec& s) { return cholesky_normal_sample(rng, s); },
                        [&](const std::shared_ptr<const InertialCloneSpec>& s) {
                          return inertial_clone_sample(rng, *s);
                        },
                        [&](const PointMassSpec& s) { return s.point; },
                    },
                    spec);
}

double log_multivariate_gamma(int n, double a) {
  double out = 0.25 * n * (n - 1) * std::log(std::numbers::pi);
  for (int j = 1; j <= n; ++j) out += std::lgamma(a + 0.5 * (1 - j));
  return out;
}

double wishart_pd_log_density(const Eigen::MatrixXd& m, const Eigen::MatrixXd& sigma, int dof) {
  const double n = double(m.rows());
  const double big_n = double(dof);
  const Eigen::LLT<Eigen::MatrixXd> lm(m);
  const Eigen::LLT<Eigen::MatrixXd> ls(sigma);
  if (lm.info() != Eigen::Success) throw Error(Errc::NotCholesky, "Wishart argument is not positive definite");
  if (ls.info() != Eigen::Success) invalid("Wishart scale matrix is not positive definite");
  const double logdet_m = 2.0 * lm.matrixLLT().diagonal().array().log().sum();
  const double logdet_s = 2.0 * ls.matrixLLT().diagonal().array().log().sum();
  const double trace = ls.solve(m).trace();
  return 0.5 * (big_n - n - 1.0) * logdet_m - 0.5 * trace - 0.5 * n * big_n * std::log(2.0) -
         log_multivariate_gamma(int(n), 0.5 * big_n) - 0.5 * big_n * logdet_s;
}

double inverse_wishart_pd_log_density(const Eigen::MatrixXd& x, const Eigen::MatrixXd& omega, int dof) {
  const double n = double(x.rows());
  const double big_n = double(dof);
  const Eigen::LLT<Eigen::MatrixXd> lx(x);
  const Eigen::LLT<Eigen::MatrixXd> lo(omega);
  if (lx.info() != Eigen::Success) throw Error(Errc::NotCholesky, "inverse Wishart argument is not positive definite");
  if (lo.info() != Eigen::Success) invalid("inverse Wishart scale matrix is not positive definite");
  const double logdet_x = 2.0 * lx.matrixLLT().diagonal().array().log().sum();
  const double logdet_o = 2.0 * lo.matrixLLT().diagonal().array().log().sum();
  const double trace = (omega * lx.solve(Eigen::MatrixXd::Identity(x.rows(), x.cols()))).trace();
  return 0.5 * big_n * logdet_o - 0.5 * n * big_n * std::log(2.0) - log_multivariate_gamma(int(n), 0.5 * big_n) -
         0.5 * (big_n + n + 1.0) * logdet_x - 0.5 * trace;
}

double jacobian_logdet(const RealLower& l, const SignPattern& eps) {
  const Eigen::Index n = l.dim();
  if (eps.size() != std::size_t(n)) throw Error(Errc::DimensionMismatch, "pattern length differs from dimension");
  double out = double(n) * std::log(2.0);
  for (Eigen::Index j = 0; j < n; ++j) out += double(n - j) * std::log(l.diag(j));
  return out;
}

double wishart_log_density(const RealConePoint& m, const WishartSpec& spec) {
  validate_wishart(spec);
  require_support(m, spec.cone, spec.pattern);
  const RealLower l = canonical_factor(m);
  return wishart_pd_log_density(pd_image(l, spec.cone), spec.sigma.matrix(), spec.dof);
}

double inverse_wishart_log_density(const RealConePoint& x, const InverseWishartSpec& spec) {
  validate_wishart(spec.base);
  const ConeKind cone = flip(spec.base.cone);
  const SignPattern eps = reverse_pattern(spec.base.pattern);
  const RealConePoint y = x.cone == cone ? x : reverse(x);
  require_support(y, cone, eps);
  const RealLower l = canonical_factor(y);
  const Eigen::MatrixXd omega = spec.base.sigma.matrix().inverse();
  return inverse_wishart_pd_log_density(pd_image(l, cone), omega, spec.base.dof);
}

double cholesky_normal_log_density(const RealConePoint& m, const CholeskyNormalSpec& spec, bool matrix_measure) {
  validate_normal(spec);
  require_support(m, spec.center.cone, spec.center.pattern);
  const RealLower l = canonical_factor(m);
  const EtaVector r = eta(l) - eta(canonical_factor(spec.center));
  const Eigen::LLT<Eigen::MatrixXd> lc(spec.cov);
  const double logdet = 2.0 * lc.matrixLLT().diagonal().array().log().sum();
  const double quad = r.dot(lc.solve(r));
  double out = -0.5 * (double(r.size()) * std::log(2.0 * std::numbers::pi) + logdet + quad);
  if (matrix_measure) {
    out -= l.matrix().diagonal().array().log().sum();
    out -= cone_jacobian_logdet(l, m.cone, m.pattern);
  }
  return out;
}

double inertial_clone_log_density(const RealConePoint& m, const InertialCloneSpec& spec) {
  validate(std::make_shared<const InertialCloneSpec>(spec));
  if (m.cone != spec.cone) throw Error(Errc::ConeKindMismatch, "point lies in the wrong cone kind");
  const std::size_t n = std::size_t(spec_dim(spec.base));
  if (m.dim() != Eigen::Index(n)) throw Error(Errc::DimensionMismatch, "point and spec dimensions differ");
  double log_weight = -double(n) * std::log(2.0);
  if (spec.k) {
    if (negative_inertia(m.pattern) != *spec.k) {
      throw Error(Errc::PatternMismatch, "pattern " + m.pattern.to_string() + " has the wrong inertia");
    }
    log_weight = -std::log(double(cones_with_inertia(n, std::size_t(*spec.k)).size()));
  }
  const RealLower l = canonical_factor(m);
  const ConeKind base_cone = support(spec.base).cone;
  const Eigen::MatrixXd p = pd_image(l, spec.cone);
  const RealConePoint base_point{RealSymmetric(p), base_cone, SignPattern::ones(n), m.tolerance_used};
  return log_weight + log_density(base_point, spec.base, true);
}

double log_density(const RealConePoint& m, const DistributionSpec& spec, bool matrix_measure) {
  return std::visit(overloaded{
                        [&](const WishartSpec& s) { return wishart_log_density(m, s); },
                        [&](const InverseWishartSpec& s) { return inverse_wishart_log_density(m, s); },
                        [&](const CholeskyNormalSpec& s) { return cholesky_normal_log_density(m, s, matrix_measure); },
                        [&](const std::shared_ptr<const InertialCloneSpec>& s) {
                          return inertial_clone_log_density(m, *s);
                        },
                        [&](const PointMassSpec&) -> double {
                          throw Error(Errc::NotApplicable, "a point mass has no density");
                        },
                    },
                    spec);
}

}  // namespace lpmchol
