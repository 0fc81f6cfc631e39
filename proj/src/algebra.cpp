#include "lpmchol/algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "lpmchol/core.hpp"

namespace lpmchol {

namespace {

Eigen::MatrixXd block_diag(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

void require_same_kind(const RealConePoint& a, const RealConePoint& b) {
  if (a.cone != b.cone) throw Error(Errc::ConeKindMismatch, "cannot combine LPM and TPM points");
}

}  // namespace

SignPattern dsum_pattern(const SignPattern& a, const SignPattern& b) {
  std::vector<int> out = a.signs();
  const int last = a[a.size() - 1];
  for (int s : b.signs()) out.push_back(last * s);
  return SignPattern(std::move(out));
}

RealConePoint dsum_matrix(const RealConePoint& a, const RealConePoint& b) {
  require_same_kind(a, b);
  const SignPattern eps =
      a.cone == ConeKind::LPM ? dsum_pattern(a.pattern, b.pattern) : dsum_pattern(b.pattern, a.pattern);
  return RealConePoint{RealSymmetric(block_diag(a.matrix.matrix(), b.matrix.matrix())), a.cone, eps,
                       std::max(a.tolerance_used, b.tolerance_used)};
}

RealLower dsum(const RealLower& a, const RealLower& b) { return RealLower(block_diag(a.matrix(), b.matrix())); }

SignPattern tensor_pattern(const SignPattern& a, const SignPattern& b) {
  const Eigen::VectorXd da = canonical_diagonal(a).matrix().diagonal();
  const Eigen::VectorXd db = canonical_diagonal(b).matrix().diagonal();
  std::vector<int> out;
  out.reserve(a.size() * b.size());
  int prev = 1;
  for (Eigen::Index i = 0; i < da.size(); ++i) {
    for (Eigen::Index j = 0; j < db.size(); ++j) {
      prev *= da(i) * db(j) > 0 ? 1 : -1;
      out.push_back(prev);
    }
  }
  return SignPattern(std::move(out));
}

RealConePoint tensor_matrix(const RealConePoint& a, const RealConePoint& b) {
  require_same_kind(a, b);
  const Eigen::MatrixXd k = Eigen::kroneckerProduct(a.matrix.matrix(), b.matrix.matrix());
  return RealConePoint{RealSymmetric(k), a.cone, tensor_pattern(a.pattern, b.pattern),
                       std::max(a.tolerance_used, b.tolerance_used)};
}

RealLower tensor(const RealLower& a, const RealLower& b) {
  return RealLower(Eigen::MatrixXd(Eigen::kroneckerProduct(a.matrix(), b.matrix())));
}

}  // namespace lpmchol
