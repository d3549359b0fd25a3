#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crosscap {

enum class ErrorCode {
  InvalidInput,
  NotSymmetric,
  NonUnimodular,
  ZeroDeterminant,
  SquareDiscriminant,
  NonPlanar,
  Splittable,
  TooFewRegions,
  NotTwoComponents,
  SingularMatrix,
  NonCyclic,
  OrderMismatch,
  OddEuler,
  InfiniteH1,
  UnlinkExcluded,
  EmptyInterval,
  UnknownName,
  InvariantViolation,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace crosscap
