#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

enum class Errc {
  dimension_mismatch,
  non_curve_class,
  inconsistent_sequence,
  invalid_rank,
  invalid_family,
  h0_not_justified,
  vanishing_not_justified,
  empty_grassmannian,
  not_k3,
  out_of_range,
  not_admissible,
  chi_unknown,
  bad_input,
};

const char* errc_name(Errc code) noexcept;

/// Error raised by every library operation; `code()` identifies the violated
/// precondition so callers can branch without parsing the message.
class ModuliError : public std::runtime_error {
 public:
  ModuliError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace moduli
