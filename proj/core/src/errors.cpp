#include "cideal/errors.hpp"

namespace cideal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownParent: return "UnknownParent";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::IllegalSatellite: return "IllegalSatellite";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::InvalidConstellation: return "InvalidConstellation";
    case ErrorCode::ConstellationMismatch: return "ConstellationMismatch";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NegativeExcess: return "NegativeExcess";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotPrimary: return "NotPrimary";
    case ErrorCode::NotAdjointPower: return "NotAdjointPower";
    case ErrorCode::UnitIdeal: return "UnitIdeal";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::EqualIdeals: return "EqualIdeals";
    case ErrorCode::NonTrivialDegrees: return "NonTrivialDegrees";
    case ErrorCode::NotOrderOne: return "NotOrderOne";
    case ErrorCode::NotMinimalMultiplicity: return "NotMinimalMultiplicity";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  }
  return out;
}

}  // namespace cideal
