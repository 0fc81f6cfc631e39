#include "lpmchol/ssrpm.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "lpmchol/core.hpp"

namespace lpmchol {

namespace {

double principal_minor(const Eigen::MatrixXd& a, std::uint32_t subset, int k) {
  std::vector<Eigen::Index> idx;
  idx.reserve(std::size_t(k));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (subset & (std::uint32_t{1} << i)) idx.push_back(i);
  if (k == 1) return a(idx[0], idx[0]);
  Eigen::MatrixXd sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = a(idx[std::size_t(r)], idx[std::size_t(c)]);
  return Eigen::PartialPivLU<Eigen::MatrixXd>(sub).determinant();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::optional<SignPattern> is_ssrpm(const RealSymmetric& a, double tol, int cap) {
  const Eigen::Index n = a.dim();
  if (n > cap) {
    throw Error(Errc::DimensionCap, "dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const double scale = a.scale();
  std::vector<int> signs(std::size_t(n), 0);
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    const int k = std::popcount(subset);
    const double m = principal_minor(a.matrix(), subset, k);
    if (!(std::abs(m) > minor_threshold(tol, scale, k))) return std::nullopt;
    const int s = m > 0 ? 1 : -1;
    int& slot = signs[std::size_t(k - 1)];
    if (slot == 0) {
      slot = s;
    } else if (slot != s) {
      return std::nullopt;
    }
  }
  return SignPattern(std::move(signs));
}

double toeplitz_principal_minor(double a, double b, int k) {
  return (a + (k - 1) * b) * std::pow(a - b, k - 1);
}

ExampleMatrix toeplitz_example(double a, double b, int n) {
  if (n < 1) throw Error(Errc::SpecInvalid, "dimension must be positive");
  if (a == b && n > 1) throw Error(Errc::DegenerateParameters, "a equals b");
  std::vector<int> signs;
  for (int k = 1; k <= n; ++k) {
    if (a + (k - 1) * b == 0.0) {
      throw Error(Errc::DegenerateParameters, "a + (k-1) b vanishes at k = " + std::to_string(k));
    }
    signs.push_back(toeplitz_principal_minor(a, b, k) > 0 ? 1 : -1);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, b);
  m.diagonal().setConstant(a);
  return {RealSymmetric(m), SignPattern(std::move(signs))};
}

double almost_n_minor(double a, double b, double c, int k) {
  return std::pow(a - b, k - 2) * (c * a - b * b + (k - 2) * b * (c - b));
}

RealSymmetric almost_n_example(double a, double b, double c, int n) {
  if (n < 3) throw Error(Errc::ConstraintViolation, "n >= 3 violated");
  if (!(a < 0.0)) throw Error(Errc::ConstraintViolation, "0 > a violated");
  if (!(a > b)) throw Error(Errc::ConstraintViolation, "a > b violated");
  const double lower = (n - 2) * b * b / (a + (n - 3) * b);
  const double upper = (n - 1) * b * b / (a + (n - 2) * b);
  if (!(upper < 0.0)) throw Error(Errc::ConstraintViolation, "(n-1)b^2/(a+(n-2)b) < 0 violated");
  if (!(lower < c)) {
    throw Error(Errc::ConstraintViolation, "(n-2)b^2/(a+(n-3)b) = " + fmt(lower) + " < c violated");
  }
  if (!(c < upper)) {
    throw Error(Errc::ConstraintViolation, "c < (n-1)b^2/(a+(n-2)b) = " + fmt(upper) + " violated");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, b);
  m.diagonal().setConstant(a);
  m(n - 1, n - 1) = c;
  return RealSymmetric(m);
}

}  // namespace lpmchol
