#include "moser/error.hpp"

#include <string>

namespace moser {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_profile: return "invalid-profile";
    case errc::value_overflow: return "value-overflow";
    case errc::domain_error: return "domain-error";
    case errc::precondition: return "precondition";
    case errc::parse_error: return "parse-error";
  }
  return "unknown";
}

error::error(errc code, const std::string& what, std::optional<std::size_t> knot)
    : std::runtime_error(std::string(to_string(code)) + ": " + what +
                         (knot ? " (knot " + std::to_string(*knot) + ")" : "")),
      code_(code),
      knot_(knot) {}

}  // namespace moser
