#pragma once

#include <stdexcept>
#include <string>

namespace ehrhart {

enum class Errc {
  EmptyInput,
  DimensionDeficient,
  DimensionMismatch,
  DimensionCap,
  DivisionByZero,
  OriginNotInterior,
  ZeroDilation,
  BudgetExceeded,
  DualNotLattice,
  NonIntegerNormal,
  NonIntegerDelta,
  GenerationExhausted,
  ParseError,
  InvalidArgument,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ehrhart
