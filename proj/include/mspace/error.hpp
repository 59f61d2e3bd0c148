#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mspace {

/// Failure categories raised by the library. Every operation that can fail
/// throws `mspace::Error` carrying one of these codes.
enum class Errc {
  invalid_ground_set,
  unknown_point,
  space_mismatch,
  not_measurable,
  not_in_positive_cone,
  decomposition_impossible,
  side_mismatch,
  improper_filter,
  not_cancellative,
  not_z_congruence,
  not_maximal,
  not_t_measurable,
  not_homeomorphism,
  not_representable,
  not_invertible,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mspace
