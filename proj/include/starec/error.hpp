#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starec {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  LoopEdge,
  PartialColoring,
  NotBipartite,
  DegreeViolation,
  NotBiregular,
  NotEvenRegular,
  NotATree,
  Degree2InternalVertex,
  CycleOrderMismatch,
  NotCubic,
  NotHalin,
  UnknownFixture,
  OddCycle,
  NotCycleFamily,
  ListTooSmall,
  NoTwoFactorFound,
  InternalCaseExhaustion,
  NotPerfectMatching,
  GirthTooSmall,
  ThreeColoringNotFound,
  RTooLarge,
  Infeasible,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starec
