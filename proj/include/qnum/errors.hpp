#pragma once

#include <stdexcept>
#include <string>

namespace qnum {

enum class errc {
  invalid_argument,
  not_coprime,
  zero_denominator,
  zero_inverse,
  malformed_expansion,
  truncation_beyond_finite,
  stabilization_not_reached,
  degenerate_quadratic,
  non_convergence,
  denominator_vanishes,
  insufficient_coefficients,
  parse_error,
  internal_error,
};

const char* errc_name(errc code) noexcept;

/// Library-wide exception; carries a machine-readable code next to the message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qnum
