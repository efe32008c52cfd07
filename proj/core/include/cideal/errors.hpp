#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cideal {

enum class ErrorCode {
  UnknownParent,
  UnknownPoint,
  IllegalSatellite,
  ZeroDegree,
  InvalidConstellation,
  ConstellationMismatch,
  NegativeEntry,
  NegativeExcess,
  NotComplete,
  NotPrimary,
  NotAdjointPower,
  UnitIdeal,
  NotSimple,
  EqualIdeals,
  NonTrivialDegrees,
  NotOrderOne,
  NotMinimalMultiplicity,
  NotClosed,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorCode code);

/// Precondition or domain failure of a library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Two independent computation routes gave different answers. Always a bug.
class RouteDisagreement : public std::logic_error {
 public:
  explicit RouteDisagreement(const std::string& what) : std::logic_error(what) {}
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace cideal
