#ifndef PERDYN_ERROR_HPP
#define PERDYN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace perdyn {

enum class ErrorCode {
  DegenerateInput,
  ModulusMismatch,
  RamifiedSpecialization,
  Syntax,
  NotDynamical,
  Resource,
  InvalidCurve,
  Domain,
  UnsupportedPoint,
  Inseparable,
  InvariantViolation,
  UnknownPreset,
  Io,
};

const char *to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failures also carry the 0-based character offset.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string &what)
      : Error(ErrorCode::Syntax,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace perdyn

#endif
