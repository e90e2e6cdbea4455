#include "png_util.hpp"
#include "swm/error.hpp"
#include "swm/io.hpp"

namespace swm::io {

void write_pattern_image(const image::SignPattern2D& pattern, const std::filesystem::path& path,
                         unsigned scale) {
  if (scale == 0) throw InvalidArgument("pattern scale must be at least 1");
  const std::size_t w = pattern.width() * scale;
  const std::size_t h = pattern.height() * scale;
  std::vector<std::uint8_t> rgb(w * h * 3);
  for (std::size_t r = 0; r < h; ++r) {
    const std::size_t y = pattern.height() - 1 - r / scale;  // top-down output
    for (std::size_t c = 0; c < w; ++c) {
      const int v = pattern.at(c / scale, y);
      std::uint8_t* px = rgb.data() + (r * w + c) * 3;
      if (v > 0) {
        px[0] = 0, px[1] = 0, px[2] = 255;
      } else if (v < 0) {
        px[0] = 255, px[1] = 0, px[2] = 0;
      } else {
        px[0] = 255, px[1] = 255, px[2] = 255;
      }
    }
  }
  write_file(path, detail::encode_png(rgb, w, h, 3));
}

}  // namespace swm::io
