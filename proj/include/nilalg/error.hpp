#pragma once

#include <stdexcept>
#include <string>

namespace nilalg {

enum class Errc {
  DimensionMismatch,
  FieldMismatch,
  SingularMatrix,
  NotPrime,
  TooLarge,
  NotNilpotentInput,
  NotNilpotentOperator,
  BudgetExceeded,
  InvalidDimension,
  InvalidParameter,
  DegenerateChange,
  NotGenerated,
  ParseError,
};

/// Single exception type for the library; `code()` drives CLI exit codes.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace nilalg
