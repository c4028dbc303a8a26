#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgc {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  IndexOutOfRange,
  BadSign,
  UnknownEdge,
  EmptyGraph,
  BadCode,
  UnknownFixture,
  NegativeIndex,
  BadRange,
  BadIndex,
  NegativeParameter,
  BudgetExceeded,
  NonIntegralCoefficient,
  NotComplete,
  ParseError,
  UsageError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// C API maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sgc
