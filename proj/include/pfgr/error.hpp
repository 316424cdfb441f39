#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfgr {

enum class ErrorKind {
  NonExactDivision,
  NegativeCoefficient,
  InvalidParameter,
  AmbientMismatch,
  NonIntegralGenus,
  InconsistentEuler,
  IdentityFailure,
  OutOfSmoothRange,
  NegativeDimension,
  NotInLemmaRange,
  ParseError,
  EvalError,
  CacheError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a machine-readable kind; the CLI maps kinds
// onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// True for kinds that indicate a broken internal identity rather than bad input.
bool is_internal_inconsistency(ErrorKind kind);

}  // namespace pfgr
