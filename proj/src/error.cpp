#include "lpmchol/error.hpp"

namespace lpmchol {

std::string_view name(Errc code) noexcept {
  switch (code) {
    case Errc::MinorNearZero: return "MinorNearZero";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::NegativeRadicand: return "NegativeRadicand";
    case Errc::ConeKindMismatch: return "ConeKindMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotCholesky: return "NotCholesky";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::DimensionCap: return "DimensionCap";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::ConstraintViolation: return "ConstraintViolation";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(name(code)) + ": " + what), code_(code) {}

Error Error::minor_near_zero(int k, const std::string& detail) {
  Error e(Errc::MinorNearZero, "minor " + std::to_string(k) + " " + detail);
  e.index_ = k;
  return e;
}

}  // namespace lpmchol
