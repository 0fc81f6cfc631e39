// Independent reference computations used only by tests. None of these call
// into the library.
#ifndef LPMCHOL_TESTS_ORACLES_HPP
#define LPMCHOL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

// Laplace expansion along the first row.
template <typename Scalar>
Scalar cofactor_det(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return a(0, 0);
  Scalar det(0);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index cc = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = a(i, j);
      }
    }
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    det += Scalar(sign) * a(0, c) * cofactor_det(minor);
  }
  return det;
}

inline double leading_minor(const Eigen::MatrixXd& a, Eigen::Index k) {
  return k == 0 ? 1.0 : cofactor_det<double>(a.topLeftCorner(k, k));
}

// Cholesky-Banachiewicz, row by row.
inline Eigen::MatrixXd textbook_cholesky(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = i == j ? std::sqrt(s) : s / l(j, j);
    }
  }
  return l;
}

// Lower-triangle entries (i >= j) in row-major order.
inline std::vector<double> lower_entries(const Eigen::MatrixXd& m) {
  std::vector<double> v;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j) v.push_back(m(i, j));
  return v;
}

// log|det| of the Jacobian of L -> L D L^T by central differences, in the
// lower-triangle coordinates on both sides.
inline double fd_jacobian_logdet(const Eigen::MatrixXd& l, const Eigen::VectorXd& d, double h) {
  const Eigen::Index n = l.rows();
  const Eigen::Index m = n * (n + 1) / 2;
  auto phi = [&](const Eigen::MatrixXd& x) { return lower_entries(x * d.asDiagonal() * x.transpose()); };
  Eigen::MatrixXd jac(m, m);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j, ++col) {
      Eigen::MatrixXd up = l, dn = l;
      up(i, j) += h;
      dn(i, j) -= h;
      const auto fu = phi(up);
      const auto fd = phi(dn);
      for (Eigen::Index r = 0; r < m; ++r) jac(r, col) = (fu[std::size_t(r)] - fd[std::size_t(r)]) / (2.0 * h);
    }
  }
  return std::log(std::abs(jac.fullPivLu().determinant()));
}

inline int negative_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return int((es.eigenvalues().array() < 0.0).count());
}

// Kolmogorov survival function Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 lambda^2).
inline double kolmogorov_q(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 ? 1.0 : -1.0) * term;
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

inline double ks_statistic(std::vector<double> x, const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = double(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, double(i + 1) / n - f, f - double(i) / n});
  }
  return d;
}

inline double ks_pvalue(double d, double n_eff) {
  const double s = std::sqrt(n_eff);
  return kolmogorov_q((s + 0.12 + 0.11 / s) * d);
}

inline double ks_two_sample_statistic(std::vector<double> x, std::vector<double> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(double(i) / double(x.size()) - double(j) / double(y.size())));
  }
  return d;
}

inline double chi2_cdf(double x, double dof) { return x <= 0.0 ? 0.0 : boost::math::gamma_p(0.5 * dof, 0.5 * x); }

// Upper tail of chi-square with k degrees of freedom.
inline double chi2_sf(double x, double dof) { return x <= 0.0 ? 1.0 : boost::math::gamma_q(0.5 * dof, 0.5 * x); }

// Random lower triangular with diagonal in [0.5, 2] and N(0, 1/4) strict part.
// A unit-variance strict part makes products of two factors at n = 6 so badly
// conditioned that a 1e-16 change in the product moves the factor by 1e-10.
inline Eigen::MatrixXd random_lower(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> z(0.0, 0.5);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    l(i, i) = u(g);
    for (Eigen::Index j = 0; j < i; ++j) l(i, j) = z(g);
  }
  return l;
}

inline Eigen::MatrixXcd random_lower_complex(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> z(0.0, 0.35);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    l(i, i) = u(g);
    for (Eigen::Index j = 0; j < i; ++j) l(i, j) = std::complex<double>(z(g), z(g));
  }
  return l;
}

inline Eigen::MatrixXd random_symmetric(std::mt19937_64& g, Eigen::Index n) {
  std::normal_distribution<double> z;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = z(g);
  return a;
}

inline Eigen::MatrixXd random_pd(std::mt19937_64& g, Eigen::Index n) {
  const Eigen::MatrixXd l = random_lower(g, n);
  return l * l.transpose();
}

// Count of sign changes in 1, e_1, ..., e_n by direct comparison.
inline int sign_changes(const std::vector<int>& eps) {
  int count = 0;
  for (std::size_t k = 0; k < eps.size(); ++k) count += (k == 0 ? 1 : eps[k - 1]) != eps[k];
  return count;
}

inline double max_abs(const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace oracle

#endif  // LPMCHOL_TESTS_ORACLES_HPP
