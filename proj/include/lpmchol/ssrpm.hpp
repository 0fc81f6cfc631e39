#ifndef LPMCHOL_SSRPM_HPP
#define LPMCHOL_SSRPM_HPP

#include <optional>

#include "lpmchol/matrix_types.hpp"

namespace lpmchol {

inline constexpr int kSsrpmDimensionCap = 14;

/// The pattern e such that every k x k principal minor of A is nonzero with
/// sign e_k, or empty if none exists. Checks all 2^n - 1 principal minors.
std::optional<SignPattern> is_ssrpm(const RealSymmetric& a, double tol = kDefaultTol,
                                    int cap = kSsrpmDimensionCap);

struct ExampleMatrix {
  RealSymmetric matrix;
  SignPattern pattern;
};

/// Any k x k principal minor of the matrix with a on the diagonal and b elsewhere.
double toeplitz_principal_minor(double a, double b, int k);

/// M(a, b, n) with its minor sign pattern from the closed form.
ExampleMatrix toeplitz_example(double a, double b, int n);

/// det of M(a, b, k) with the last diagonal entry replaced by c.
double almost_n_minor(double a, double b, double c, int k);

/// M(a, b, n) + (c - a) E_nn, whose proper principal minors are negative and
/// whose determinant is positive. Raises ConstraintViolation unless
/// 0 > a > b and (n-2)b^2/(a+(n-3)b) < c < (n-1)b^2/(a+(n-2)b) < 0, n >= 3.
RealSymmetric almost_n_example(double a, double b, double c, int n);

}  // namespace lpmchol

#endif  // LPMCHOL_SSRPM_HPP
