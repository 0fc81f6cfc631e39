#ifndef LPMCHOL_ALGEBRA_HPP
#define LPMCHOL_ALGEBRA_HPP

#include "lpmchol/matrix_types.hpp"

namespace lpmchol {

/// (e_1, ..., e_n, e_n e'_1, ..., e_n e'_m).
SignPattern dsum_pattern(const SignPattern& a, const SignPattern& b);

/// Block diagonal A (+) B. For LPM points the pattern is dsum(e, e'); for TPM
/// points it is dsum(e', e). Mixed cone kinds raise ConeKindMismatch.
RealConePoint dsum_matrix(const RealConePoint& a, const RealConePoint& b);
RealLower dsum(const RealLower& a, const RealLower& b);

/// Pattern whose canonical diagonal is D_e (x) D_e'.
SignPattern tensor_pattern(const SignPattern& a, const SignPattern& b);

/// Kronecker product; the pattern is tensor_pattern for either cone kind.
RealConePoint tensor_matrix(const RealConePoint& a, const RealConePoint& b);
RealLower tensor(const RealLower& a, const RealLower& b);

}  // namespace lpmchol

#endif  // LPMCHOL_ALGEBRA_HPP
