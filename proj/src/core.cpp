#include "lpmchol/core.hpp"

#include <limits>

namespace lpmchol {

Perturbation lpm_perturbation(const RealSymmetric& a) {
  const Eigen::Index n = a.dim();
  const double scale = a.scale();
  if (scale == 0.0) return {1.0, SignPattern::ones(std::size_t(n))};

  // Eigenvalues below this are treated as exact zeros.
  const double zero = 1e-12 * scale * double(n);
  double t = std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  for (Eigen::Index k = 1; k <= n; ++k) {
    es.compute(a.matrix().topLeftCorner(k, k), Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < k; ++i) {
      const double lam = std::abs(es.eigenvalues()(i));
      if (lam > zero) t = std::min(t, lam);
    }
  }
  const Eigen::MatrixXd shifted = a.matrix() + 0.5 * t * Eigen::MatrixXd::Identity(n, n);
  return {t, classify(RealSymmetric(shifted), ConeKind::LPM, 0.0).pattern};
}

}  // namespace lpmchol
