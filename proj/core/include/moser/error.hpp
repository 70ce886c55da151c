#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace moser {

enum class errc {
  invalid_profile,
  value_overflow,
  domain_error,
  precondition,
  parse_error,
};

const char* to_string(errc code) noexcept;

/// Every failure in the library is reported through this exception.
/// `knot()` is set for errors tied to a specific knot of a profile
/// (an invalid knot, or the knot whose exponent overflowed).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, std::optional<std::size_t> knot = std::nullopt);

  errc code() const noexcept { return code_; }
  std::optional<std::size_t> knot() const noexcept { return knot_; }

 private:
  errc code_;
  std::optional<std::size_t> knot_;
};

}  // namespace moser
