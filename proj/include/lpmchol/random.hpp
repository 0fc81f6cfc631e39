#ifndef LPMCHOL_RANDOM_HPP
#define LPMCHOL_RANDOM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <variant>

#include "lpmchol/matrix_types.hpp"

namespace lpmchol {

/// Seeded generator. The same (seed, stream) pair reproduces the same draws
/// within one build.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  double normal();
  double chi_squared(double dof);
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// W_n(Sigma, N) transferred to LPM(e) or TPM(e) by the signed Bartlett
/// construction.
struct WishartSpec {
  RealSymmetric sigma;
  int dof = 0;
  SignPattern pattern;
  ConeKind cone = ConeKind::LPM;
};

/// Law of M^{-1} for M drawn from `base`. Supported on the opposite cone kind
/// with the reversed pattern.
struct InverseWishartSpec {
  WishartSpec base;
};

/// eta(canonical factor) ~ N(eta(canonical factor of center), cov); the
/// support is the cone of `center`.
struct CholeskyNormalSpec {
  RealConePoint center;
  Eigen::MatrixXd cov;
};

struct InertialCloneSpec;

/// Always returns the same point.
struct PointMassSpec {
  RealConePoint point;
};

using DistributionSpec =
    std::variant<WishartSpec, InverseWishartSpec, CholeskyNormalSpec, std::shared_ptr<const InertialCloneSpec>,
                 PointMassSpec>;

/// Transfers a positive definite draw to a pattern chosen uniformly among the
/// C(n, k) cones with k negative eigenvalues, or among all 2^n patterns when k
/// is empty.
struct InertialCloneSpec {
  DistributionSpec base;
  std::optional<int> k;
  ConeKind cone = ConeKind::LPM;
};

DistributionSpec make_clone(DistributionSpec base, std::optional<int> k, ConeKind cone = ConeKind::LPM);

/// Raises SpecInvalid with the offending condition.
void validate(const DistributionSpec& spec);
Eigen::Index spec_dim(const DistributionSpec& spec);

/// Cone kind and pattern of the support, if it is a single cone.
struct Support {
  ConeKind cone;
  std::optional<SignPattern> pattern;
};
Support support(const DistributionSpec& spec);

/// A draw given by its canonical factor and cone.
struct FactorDraw {
  RealLower factor;
  SignPattern pattern;
  ConeKind cone;
};

/// Bartlett factor: diagonal sqrt(chi2_{N-j+1}), strict lower N(0, 1).
RealLower bartlett_sample(RngStream& rng, int n, int dof);
/// Reversed Bartlett factor: diagonal sqrt(chi2_{N-n+j}), strict lower N(0, 1).
RealLower reverse_bartlett_sample(RngStream& rng, int n, int dof);

RealConePoint wishart_sample(RngStream& rng, const WishartSpec& spec);
RealConePoint inverse_wishart_sample(RngStream& rng, const InverseWishartSpec& spec);
RealConePoint cholesky_normal_sample(RngStream& rng, const CholeskyNormalSpec& spec);
RealConePoint inertial_clone_sample(RngStream& rng, const InertialCloneSpec& spec);

FactorDraw sample_factor(RngStream& rng, const DistributionSpec& spec);
RealConePoint sample(RngStream& rng, const DistributionSpec& spec);

/// log Gamma_n(a).
double log_multivariate_gamma(int n, double a);

/// log of the W_n(Sigma, N) density at a positive definite matrix.
double wishart_pd_log_density(const Eigen::MatrixXd& m, const Eigen::MatrixXd& sigma, int dof);
/// log of the W_n^{-1}(Omega, N) density at a positive definite matrix.
double inverse_wishart_pd_log_density(const Eigen::MatrixXd& x, const Eigen::MatrixXd& omega, int dof);

/// log|det| of the derivative of L -> L D_e L^T; independent of e.
double jacobian_logdet(const RealLower& l, const SignPattern& eps);

double wishart_log_density(const RealConePoint& m, const WishartSpec& spec);
double inverse_wishart_log_density(const RealConePoint& x, const InverseWishartSpec& spec);
/// Density in eta coordinates, or against Lebesgue measure on symmetric
/// matrices when `matrix_measure` is set.
double cholesky_normal_log_density(const RealConePoint& m, const CholeskyNormalSpec& spec,
                                   bool matrix_measure = false);
double inertial_clone_log_density(const RealConePoint& m, const InertialCloneSpec& spec);

double log_density(const RealConePoint& m, const DistributionSpec& spec, bool matrix_measure = false);

}  // namespace lpmchol

#endif  // LPMCHOL_RANDOM_HPP
