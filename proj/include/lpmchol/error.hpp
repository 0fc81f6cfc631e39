#ifndef LPMCHOL_ERROR_HPP
#define LPMCHOL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpmchol {

// Domain error codes. The CLI prints name(code) and exits with status 1.
enum class Errc {
  MinorNearZero,
  SingularMatrix,
  PatternMismatch,
  NegativeRadicand,
  ConeKindMismatch,
  DimensionMismatch,
  NotCholesky,
  SpecInvalid,
  GroupMismatch,
  NotApplicable,
  DimensionCap,
  DegenerateParameters,
  ConstraintViolation,
  ParseError,
};

std::string_view name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

  // 1-based index of the offending minor for MinorNearZero, 0 otherwise.
  int index() const noexcept { return index_; }

  static Error minor_near_zero(int k, const std::string& detail);

 private:
  Errc code_;
  int index_ = 0;
};

}  // namespace lpmchol

#endif  // LPMCHOL_ERROR_HPP
