#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swm/image.hpp"
#include "swm/signal.hpp"

namespace swm::io {

// Signals ------------------------------------------------------------------

/// Reads one decimal value per line; '#' lines and blank lines are skipped.
/// Exactly one of duration / sampling_rate must be given unless both agree
/// with the line count.
SampledSignal read_signal_csv(const std::filesystem::path& path,
                              std::optional<double> duration,
                              std::optional<double> sampling_rate);

/// Writes a '#' header followed by one shortest round-trip value per line.
void write_signal_csv(const SampledSignal& signal, const std::filesystem::path& path);

// Images -------------------------------------------------------------------

enum class ImageFormat { kPgmAscii, kPgmBinary, kPng };

/// Reads 8-bit grayscale PGM (P2 or P5, maxval 255) or PNG. Rows are flipped
/// so that row 0 of the result is the bottom of the picture.
image::GrayImage read_gray_image(const std::filesystem::path& path);

void write_gray_image(const image::GrayImage& image, const std::filesystem::path& path,
                      ImageFormat format);
/// Chooses the format from the extension: .png, .pgm (binary) or .pgma.
void write_gray_image(const image::GrayImage& image, const std::filesystem::path& path);

/// Parses PGM text/bytes already in memory.
image::GrayImage parse_pgm(const std::string& bytes);

// Square wave transform documents -----------------------------------------

enum class SwtFormat { kJson, kCsv };

inline constexpr int kSwtVersion = 1;

struct SwtDocument {
  std::variant<Spectrum1D, image::Spectrum2D> content;

  bool is_1d() const noexcept { return content.index() == 0; }
  const Spectrum1D& spectrum_1d() const { return std::get<Spectrum1D>(content); }
  const image::Spectrum2D& spectrum_2d() const { return std::get<image::Spectrum2D>(content); }
};

/// JSON is lossless. CSV prints frequencies with exactly 7 decimals plus
/// full-precision columns so it also reads back losslessly.
std::string format_swt(const SwtDocument& document, SwtFormat format);
void write_swt(const SwtDocument& document, const std::filesystem::path& path,
               SwtFormat format);
SwtDocument parse_swt(const std::string& text);
SwtDocument read_swt(const std::filesystem::path& path);

// Coefficient archives -----------------------------------------------------

inline constexpr int kArchiveVersion = 1;

std::string format_coefficients(const image::TiledCoefficients& tiles);
image::TiledCoefficients parse_coefficients(const std::string& text);
void write_coefficients(const image::TiledCoefficients& tiles, const std::filesystem::path& path);
image::TiledCoefficients read_coefficients(const std::filesystem::path& path);

// Patterns and plots -------------------------------------------------------

/// RGB PNG: +1 blue, -1 red, 0 white; each cell becomes scale x scale pixels.
void write_pattern_image(const image::SignPattern2D& pattern, const std::filesystem::path& path,
                         unsigned scale = 1);

struct PlotSeries {
  enum class Style { kStem, kLine };

  std::vector<std::pair<double, double>> points;  // ordered by x
  Style style = Style::kStem;
  std::string title;
  std::string x_label = "frequency";
  std::string y_label = "coefficient";
};

PlotSeries spectrum_plot(const Spectrum1D& spectrum);

/// Deterministic SVG text for the series (fixed canvas, fixed number format).
std::string render_svg(const PlotSeries& series);
void emit_plot(const PlotSeries& series, const std::filesystem::path& path);

// Shared helpers -----------------------------------------------------------

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_exact(double value);
/// Fixed-point text with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

}  // namespace swm::io
