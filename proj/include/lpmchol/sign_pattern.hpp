#ifndef LPMCHOL_SIGN_PATTERN_HPP
#define LPMCHOL_SIGN_PATTERN_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lpmchol {

/// A cone label: a nonempty tuple over {+1, -1}. Entry k (0-based) is the
/// required sign of the (k+1)-th leading or trailing principal minor.
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(std::initializer_list<int> signs);
  explicit SignPattern(std::vector<int> signs);

  static SignPattern ones(std::size_t n);
  /// Parses "+-+" style strings.
  static SignPattern parse(std::string_view text);
  /// Pattern whose k-th entry is -1 iff bit k of `bits` is set.
  static SignPattern from_bits(std::size_t n, std::uint64_t bits);

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t k) const { return signs_[k]; }
  const std::vector<int>& signs() const noexcept { return signs_; }

  /// Sign with the convention that entry "0" (before the first) is +1.
  int at_or_one(std::ptrdiff_t k) const { return k < 0 ? 1 : signs_[static_cast<std::size_t>(k)]; }

  bool all_positive() const;
  std::string to_string() const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> signs_;
};

/// (e_n e_{n-1}, ..., e_n e_1, e_n); identity for n = 1.
SignPattern reverse_pattern(const SignPattern& eps);

/// Coordinatewise product.
SignPattern schur_product(const SignPattern& a, const SignPattern& b);

/// Number of sign changes in 1, e_1, ..., e_n. Equals the number of negative
/// eigenvalues of every matrix in the cone.
int negative_inertia(const SignPattern& eps);

/// All 2^n patterns of length n, ordered by from_bits.
std::vector<SignPattern> all_patterns(std::size_t n);

/// Patterns with exactly k sign changes, ordered lexicographically by the
/// positions of the changes. Has binomial(n, k) elements.
std::vector<SignPattern> cones_with_inertia(std::size_t n, std::size_t k);

}  // namespace lpmchol

#endif  // LPMCHOL_SIGN_PATTERN_HPP
