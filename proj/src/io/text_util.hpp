#pragma once

#include <optional>
#include <string_view>

namespace swm::io::detail {

/// Strict decimal parse of the whole (trimmed) token.
std::optional<double> parse_double(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace swm::io::detail
