#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <string>

#include "png_util.hpp"
#include "swm/error.hpp"
#include "swm/io.hpp"

namespace swm::io {

namespace {

using image::GrayImage;

constexpr unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

bool has_png_signature(const std::string& bytes) {
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

// Header and P2 payload tokenizer; '#' starts a comment running to end of line.
class PgmTokenizer {
 public:
  explicit PgmTokenizer(const std::string& bytes) : bytes_(bytes) {}

  std::string next(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
           bytes_[pos_] != '#') {
      ++pos_;
    }
    if (start == pos_) throw FormatError(std::string("PGM: truncated data, missing ") + what);
    return bytes_.substr(start, pos_ - start);
  }

  std::size_t next_number(const char* what) {
    const std::string token = next(what);
    if (token.size() > 9 || !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw FormatError(std::string("PGM: invalid ") + what + " '" + token + "'");
    }
    return static_cast<std::size_t>(std::stoul(token));
  }

  std::size_t position() const { return pos_; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  const std::string& bytes_;
  std::size_t pos_ = 0;
};

GrayImage decode_png(const std::string& bytes) {
  // IHDR is always the first chunk: width, height, bit depth, colour type.
  if (bytes.size() < 33 || std::memcmp(bytes.data() + 12, "IHDR", 4) != 0) {
    throw FormatError("PNG: truncated or missing IHDR chunk");
  }
  const int bit_depth = static_cast<unsigned char>(bytes[24]);
  const int color_type = static_cast<unsigned char>(bytes[25]);
  if (color_type != 0) {
    throw FormatError("unsupported PNG: colour type " + std::to_string(color_type) +
                      " (only 8-bit grayscale is supported)");
  }
  if (bit_depth != 8) {
    throw FormatError("unsupported PNG: bit depth " + std::to_string(bit_depth) +
                      " (only 8-bit grayscale is supported)");
  }

  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    throw FormatError(std::string("PNG: ") + img.message);
  }
  img.format = PNG_FORMAT_GRAY;
  const std::size_t width = img.width;
  const std::size_t height = img.height;
  std::vector<std::uint8_t> top_down(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, top_down.data(), 0, nullptr)) {
    const std::string message = img.message;
    png_image_free(&img);
    throw FormatError("PNG: " + message);
  }
  if (width == 0 || height == 0) throw FormatError("PNG: empty image");
  std::vector<std::uint8_t> pixels(width * height);
  for (std::size_t r = 0; r < height; ++r) {
    std::copy_n(top_down.begin() + static_cast<std::ptrdiff_t>(r * width), width,
                pixels.begin() + static_cast<std::ptrdiff_t>((height - 1 - r) * width));
  }
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> top_down_rows(const GrayImage& image) {
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  std::vector<std::uint8_t> rows(w * h);
  const auto px = image.pixels();
  for (std::size_t r = 0; r < h; ++r) {
    std::copy_n(px.begin() + static_cast<std::ptrdiff_t>((h - 1 - r) * w), w,
                rows.begin() + static_cast<std::ptrdiff_t>(r * w));
  }
  return rows;
}

}  // namespace

namespace detail {

std::string encode_png(const std::vector<std::uint8_t>& top_down, std::size_t width,
                       std::size_t height, int channels) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(width);
  img.height = static_cast<png_uint_32>(height);
  img.format = channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, top_down.data(), 0, nullptr)) {
    throw FormatError(std::string("PNG encode: ") + img.message);
  }
  std::string out(size, '\0');
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, top_down.data(), 0, nullptr)) {
    throw FormatError(std::string("PNG encode: ") + img.message);
  }
  out.resize(size);
  return out;
}

}  // namespace detail

GrayImage parse_pgm(const std::string& bytes) {
  PgmTokenizer tokens(bytes);
  const std::string magic = tokens.next("magic number");
  if (magic != "P2" && magic != "P5") {
    throw FormatError("unsupported image format (expected P2/P5 graymap or PNG)");
  }
  const std::size_t width = tokens.next_number("width");
  const std::size_t height = tokens.next_number("height");
  const std::size_t maxval = tokens.next_number("maxval");
  if (width == 0 || height == 0) throw FormatError("PGM: empty image");
  if (maxval != 255) {
    throw FormatError("unsupported PGM: maxval " + std::to_string(maxval) +
                      " (only 8-bit, maxval 255, is supported)");
  }
  const std::size_t count = width * height;
  std::vector<std::uint8_t> file_order(count);
  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = tokens.next_number("pixel value");
      if (v > 255) throw FormatError("PGM: pixel value " + std::to_string(v) + " exceeds 255");
      file_order[i] = static_cast<std::uint8_t>(v);
    }
  } else {
    const std::size_t start = tokens.position() + 1;  // single whitespace after maxval
    if (start > bytes.size() || bytes.size() - start < count) {
      throw FormatError("PGM: truncated payload, expected " + std::to_string(count) +
                        " bytes");
    }
    std::memcpy(file_order.data(), bytes.data() + start, count);
  }
  std::vector<std::uint8_t> pixels(count);
  for (std::size_t r = 0; r < height; ++r) {
    std::copy_n(file_order.begin() + static_cast<std::ptrdiff_t>(r * width), width,
                pixels.begin() + static_cast<std::ptrdiff_t>((height - 1 - r) * width));
  }
  return GrayImage(width, height, std::move(pixels));
}

GrayImage read_gray_image(const std::filesystem::path& path) {
  const std::string bytes = read_file(path);
  if (has_png_signature(bytes)) return decode_png(bytes);
  return parse_pgm(bytes);
}

void write_gray_image(const GrayImage& image, const std::filesystem::path& path,
                      ImageFormat format) {
  if (image.empty()) throw InvalidArgument("cannot write an empty image");
  const auto rows = top_down_rows(image);
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  std::string out;
  switch (format) {
    case ImageFormat::kPng:
      out = detail::encode_png(rows, w, h, 1);
      break;
    case ImageFormat::kPgmBinary:
      out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
      out.append(reinterpret_cast<const char*>(rows.data()), rows.size());
      break;
    case ImageFormat::kPgmAscii:
      out = "P2\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
      for (std::size_t r = 0; r < h; ++r) {
        for (std::size_t x = 0; x < w; ++x) {
          if (x) out += ' ';
          out += std::to_string(rows[r * w + x]);
        }
        out += '\n';
      }
      break;
  }
  write_file(path, out);
}

void write_gray_image(const GrayImage& image, const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".png") return write_gray_image(image, path, ImageFormat::kPng);
  if (ext == ".pgm") return write_gray_image(image, path, ImageFormat::kPgmBinary);
  if (ext == ".pgma") return write_gray_image(image, path, ImageFormat::kPgmAscii);
  throw InvalidArgument("cannot infer image format from '" + path.string() +
                        "' (use .png, .pgm or .pgma)");
}

}  // namespace swm::io
