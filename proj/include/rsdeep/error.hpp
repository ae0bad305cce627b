#ifndef RSDEEP_ERROR_HPP
#define RSDEEP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsdeep {

enum class Errc {
  NotPrime,
  NotIrreducible,
  DivisionByZero,
  ContextMismatch,
  DegreeTooHigh,
  CapExceeded,
  InvalidParams,
  ProductMismatch,
  NoFactorization,
  Singular,
  Exhausted,
  ConstraintUnsatisfiable,
  SubfieldGenerationFailure,
  InvalidArgument,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this type; `code()` identifies
/// the failure class so callers (and the CLI exit-code mapping) can branch.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rsdeep

#endif  // RSDEEP_ERROR_HPP
