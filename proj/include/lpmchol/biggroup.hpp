#ifndef LPMCHOL_BIGGROUP_HPP
#define LPMCHOL_BIGGROUP_HPP

#include <limits>
#include <optional>

#include "lpmchol/matrix_types.hpp"

namespace lpmchol {

/// A point of the union of all LPM_n (or all TPM_n) cones with its canonical
/// Cholesky factor cached.
class BigGroupElement {
 public:
  explicit BigGroupElement(const RealConePoint& point, double tol = kDefaultTol);
  BigGroupElement(const RealLower& factor, const SignPattern& eps, ConeKind cone = ConeKind::LPM);

  static BigGroupElement identity(Eigen::Index n, ConeKind cone = ConeKind::LPM);

  const RealConePoint& point() const noexcept { return point_; }
  const RealLower& factor() const noexcept { return factor_; }
  const SignPattern& pattern() const noexcept { return point_.pattern; }
  ConeKind cone() const noexcept { return point_.cone; }
  Eigen::Index dim() const noexcept { return point_.dim(); }

 private:
  RealConePoint point_;
  RealLower factor_;
};

/// Multiplies factors in Cholesky space and patterns coordinatewise.
BigGroupElement box_op(const BigGroupElement& a, const BigGroupElement& b);
BigGroupElement box_inv(const BigGroupElement& a);

/// ||(d(L, K), [e != e'])||_p for p in [1, inf].
double dp_distance(const BigGroupElement& a, const BigGroupElement& b, double p = 2.0);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// 1 for the identity, 2 for D_e with e not all plus, empty (infinite) otherwise.
std::optional<int> torsion_order(const BigGroupElement& a, double tol = kDefaultTol);

}  // namespace lpmchol

#endif  // LPMCHOL_BIGGROUP_HPP
