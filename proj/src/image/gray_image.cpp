#include <algorithm>
#include <string>

#include "swm/error.hpp"
#include "swm/image.hpp"

namespace swm::image {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
  if (width == 0 || height == 0) throw InvalidArgument("image dimensions must be positive");
}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) throw InvalidArgument("image dimensions must be positive");
  if (pixels_.size() != width * height) {
    throw InvalidArgument("pixel buffer holds " + std::to_string(pixels_.size()) +
                          " values, expected " + std::to_string(width * height));
  }
}

GrayImage GrayImage::crop(std::size_t x0, std::size_t y0, std::size_t w, std::size_t h) const {
  if (w == 0 || h == 0 || x0 + w > width_ || y0 + h > height_) {
    throw InvalidArgument("crop rectangle lies outside the image");
  }
  std::vector<std::uint8_t> out(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    const std::uint8_t* src = pixels_.data() + (y0 + y) * width_ + x0;
    std::copy(src, src + w, out.begin() + static_cast<std::ptrdiff_t>(y * w));
  }
  return GrayImage(w, h, std::move(out));
}

CoefficientGrid::CoefficientGrid(std::size_t nx, std::size_t ny)
    : nx_(nx), ny_(ny), values_(nx * ny, 0.0) {}

CoefficientGrid::CoefficientGrid(std::size_t nx, std::size_t ny, std::vector<double> values)
    : nx_(nx), ny_(ny), values_(std::move(values)) {
  if (values_.size() != nx * ny) throw InvalidArgument("coefficient buffer has wrong size");
}

SignPattern2D::SignPattern2D(std::size_t width, std::size_t height,
                             std::vector<std::int8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (values_.size() != width * height) throw InvalidArgument("pattern buffer has wrong size");
}

}  // namespace swm::image
