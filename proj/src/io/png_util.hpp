#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace swm::io::detail {

/// Encodes top-down rows (1 or 3 channels, 8 bits each) as PNG bytes.
std::string encode_png(const std::vector<std::uint8_t>& top_down, std::size_t width,
                       std::size_t height, int channels);

}  // namespace swm::io::detail
