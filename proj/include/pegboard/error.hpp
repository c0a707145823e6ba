#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pegboard {

enum class ErrorCode {
  NotUnimodular,
  DegenerateInput,
  VerticalClass,
  NotSymmetric,
  NoCrossings,
  NonIntegralGrading,
  ParallelComponents,
  NotLoopType,
  UnsupportedPattern,
  InvalidOrder,
  NotACrossing,
  AsymmetricPair,
  NotExtremal,
  NotWrapped,
  NotFlattened,
  Stuck,
  MissingSector,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pegboard
