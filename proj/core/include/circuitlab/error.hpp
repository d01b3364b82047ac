#pragma once

#include <stdexcept>
#include <string>

namespace circuitlab {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotInPolytope,
  ZeroVector,
  Unbounded,
  NotACircuit,
  NoStep,
  BudgetExceeded,
  IncompleteDescription,
  DepthLimit,
  InvariantViolated,
  ConstructionFailed,
  Parse,
};

const char *to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above; the CLI
// maps them onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace circuitlab
