#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swm/frequency.hpp"
#include "swm/solver.hpp"

namespace swm::image {

/// 8-bit grayscale raster, y-up: row 0 is the BOTTOM row of the picture and
/// pixel (x, y) is the pixel in column x, row y (0-based). File readers and
/// writers flip to and from the usual top-down storage order.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  /// `pixels` is row-major, bottom row first.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }
  std::uint8_t& at(std::size_t x, std::size_t y) noexcept { return pixels_[y * width_ + x]; }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  /// Copy of the block whose bottom-left pixel is (x0, y0).
  GrayImage crop(std::size_t x0, std::size_t y0, std::size_t w, std::size_t h) const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Coefficients C(p, q) of one analyzed block; p indexes x-axis trains and
/// q indexes y-axis trains (0-based). Gray values satisfy
///     g(x, y) = sum_{p,q} Ax(x, p) Ay(y, q) C(p, q)
/// with Ax = SignMatrix(nx), Ay = SignMatrix(ny).
class CoefficientGrid {
 public:
  CoefficientGrid() = default;
  CoefficientGrid(std::size_t nx, std::size_t ny);
  CoefficientGrid(std::size_t nx, std::size_t ny, std::vector<double> values);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }

  double operator()(std::size_t p, std::size_t q) const noexcept { return values_[p * ny_ + q]; }
  double& operator()(std::size_t p, std::size_t q) noexcept { return values_[p * ny_ + q]; }

  /// Row-major by p.
  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const CoefficientGrid&, const CoefficientGrid&) = default;

 private:
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::vector<double> values_;
};

/// Per-tile coefficient grids of a tiled analysis. Tile (k, l) is tile column
/// k counted from the left and tile row l counted from the bottom (0-based).
struct TiledCoefficients {
  std::size_t tile_width = 0;
  std::size_t tile_height = 0;
  std::size_t columns = 0;
  std::size_t rows = 0;
  /// Size of the analyzed image before any edge padding.
  std::size_t image_width = 0;
  std::size_t image_height = 0;
  std::vector<CoefficientGrid> tiles;  // index l * columns + k

  const CoefficientGrid& tile(std::size_t k, std::size_t l) const { return tiles.at(l * columns + k); }
  CoefficientGrid& tile(std::size_t k, std::size_t l) { return tiles.at(l * columns + k); }
};

struct TilingOptions {
  /// Replicate edge pixels so both dimensions become multiples of the tile
  /// size. Off by default: non-divisible images are rejected.
  bool pad_edges = false;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Signs of every coefficient in the equation of pixel (x, y):
/// sign(p, q) = Ax(x, p) * Ay(y, q). Result is nx x ny, row-major by p.
std::vector<std::int8_t> pixel_equation_signs(std::size_t x, std::size_t y, std::size_t nx,
                                              std::size_t ny);

/// Solves the n^2 pixel equations of a square block through the Kronecker
/// structure: one pass of solves along x, one along y.
CoefficientGrid analyze_tile(const GrayImage& tile, SolverCache& cache);

/// Whole-image analysis as a single block; nx = width, ny = height.
CoefficientGrid analyze_full(const GrayImage& image, SolverCache& cache);

TiledCoefficients analyze_image(const GrayImage& image, std::size_t tile_size,
                                SolverCache& cache, const TilingOptions& options = {});

/// Real-valued block reconstruction using coefficients with p < m_x, q < m_y.
/// Row-major by y (bottom row first), width nx.
std::vector<double> reconstruct_block(const CoefficientGrid& grid, std::size_t m_x,
                                      std::size_t m_y);

/// Approximation image keeping C(p, q) with p < m and q < m in every tile.
/// Values are clamped to [0, 255] and rounded half away from zero.
/// Throws InvalidArgument unless 1 <= m <= tile size.
GrayImage approximate(const TiledCoefficients& tiles, std::size_t m, unsigned threads = 0);

struct Triad {
  std::size_t p = 0;
  std::size_t q = 0;
  double fx = 0.0;
  double fy = 0.0;
  double coefficient = 0.0;
};

struct Spectrum2D {
  SpatialUnit unit = SpatialUnit::kTile;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<Triad> triads;  // q-major, then p
};

/// Emits (fx_p, fy_q, C(p, q)) for p < m_x, q < m_y, ordered by q then p.
/// A truncation of 0 means "keep all".
Spectrum2D triads(const CoefficientGrid& grid, SpatialUnit unit, std::size_t m_x = 0,
                  std::size_t m_y = 0);

/// Sign of the contribution of C(p, q) to every pixel of its block:
/// sign(C) * Ax(x, p) * Ay(y, q), 0 everywhere when C(p, q) == 0.
class SignPattern2D {
 public:
  SignPattern2D(std::size_t width, std::size_t height, std::vector<std::int8_t> values);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  int at(std::size_t x, std::size_t y) const noexcept { return values_[y * width_ + x]; }
  /// Row-major by y, bottom row first.
  std::span<const std::int8_t> values() const noexcept { return values_; }

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::int8_t> values_;
};

SignPattern2D contribution_pattern(const CoefficientGrid& grid, std::size_t p, std::size_t q);

/// Pattern of train pair (p, q) for a coefficient of the given sign.
SignPattern2D train_pattern(std::size_t nx, std::size_t ny, std::size_t p, std::size_t q,
                            int coefficient_sign = 1);

}  // namespace swm::image
