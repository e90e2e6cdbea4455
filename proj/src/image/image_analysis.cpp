#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "swm/error.hpp"
#include "swm/image.hpp"

namespace swm::image {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
// handled exactly once, so outputs written per index are schedule-independent.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Solves G = Ax C Ay^T for C, where G is row-major by y (the image layout).
CoefficientGrid solve_block(const GrayImage& image, std::size_t x0, std::size_t y0,
                            std::size_t nx, std::size_t ny, SolverCache& cache) {
  const auto ax = cache.get(nx);
  const auto ay = cache.get(ny);

  // Pass 1: each image row (fixed y) is a right-hand side for Ax.
  std::vector<double> rows(nx * ny);
  for (std::size_t y = 0; y < ny; ++y) {
    std::span<double> row(rows.data() + y * nx, nx);
    for (std::size_t x = 0; x < nx; ++x) row[x] = image.at(x0 + x, y0 + y);
    ax->solve_in_place(row);
  }

  // Pass 2: transpose, then each fixed-p line is a right-hand side for Ay.
  std::vector<double> coefficients(nx * ny);
  for (std::size_t p = 0; p < nx; ++p) {
    std::span<double> line(coefficients.data() + p * ny, ny);
    for (std::size_t y = 0; y < ny; ++y) line[y] = rows[y * nx + p];
    ay->solve_in_place(line);
  }
  return CoefficientGrid(nx, ny, std::move(coefficients));
}

GrayImage pad_to_multiple(const GrayImage& image, std::size_t tile) {
  const std::size_t w = (image.width() + tile - 1) / tile * tile;
  const std::size_t h = (image.height() + tile - 1) / tile * tile;
  if (w == image.width() && h == image.height()) return image;
  GrayImage out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t sy = std::min(y, image.height() - 1);
    for (std::size_t x = 0; x < w; ++x) {
      out.at(x, y) = image.at(std::min(x, image.width() - 1), sy);
    }
  }
  return out;
}

std::uint8_t to_gray(double v) noexcept {
  const double clamped = std::clamp(v, 0.0, 255.0);
  return static_cast<std::uint8_t>(std::round(clamped));
}

}  // namespace

std::vector<std::int8_t> pixel_equation_signs(std::size_t x, std::size_t y, std::size_t nx,
                                              std::size_t ny) {
  if (nx == 0 || ny == 0) throw InvalidArgument("block dimensions must be positive");
  if (x >= nx || y >= ny) {
    throw InvalidArgument("pixel (" + std::to_string(x + 1) + ", " + std::to_string(y + 1) +
                          ") lies outside a " + std::to_string(nx) + "x" +
                          std::to_string(ny) + " block");
  }
  std::vector<std::int8_t> signs(nx * ny);
  for (std::size_t p = 0; p < nx; ++p) {
    const int sx = SignMatrix::sign(nx, x, p);
    for (std::size_t q = 0; q < ny; ++q) {
      signs[p * ny + q] = static_cast<std::int8_t>(sx * SignMatrix::sign(ny, y, q));
    }
  }
  return signs;
}

CoefficientGrid analyze_tile(const GrayImage& tile, SolverCache& cache) {
  if (tile.empty()) throw InvalidArgument("tile is empty");
  if (tile.width() != tile.height()) {
    throw InvalidArgument("tile must be square, got " + std::to_string(tile.width()) + "x" +
                          std::to_string(tile.height()));
  }
  return solve_block(tile, 0, 0, tile.width(), tile.height(), cache);
}

CoefficientGrid analyze_full(const GrayImage& image, SolverCache& cache) {
  if (image.empty()) throw InvalidArgument("image is empty");
  return solve_block(image, 0, 0, image.width(), image.height(), cache);
}

TiledCoefficients analyze_image(const GrayImage& image, std::size_t tile_size,
                                SolverCache& cache, const TilingOptions& options) {
  if (image.empty()) throw InvalidArgument("image is empty");
  if (tile_size == 0) throw InvalidArgument("tile size must be at least 1");

  const GrayImage* source = &image;
  GrayImage padded;
  if (options.pad_edges) {
    padded = pad_to_multiple(image, tile_size);
    source = &padded;
  } else {
    if (image.width() % tile_size != 0) {
      throw InvalidArgument("image width " + std::to_string(image.width()) +
                            " is not divisible by tile size " + std::to_string(tile_size));
    }
    if (image.height() % tile_size != 0) {
      throw InvalidArgument("image height " + std::to_string(image.height()) +
                            " is not divisible by tile size " + std::to_string(tile_size));
    }
  }

  TiledCoefficients out;
  out.tile_width = tile_size;
  out.tile_height = tile_size;
  out.columns = source->width() / tile_size;
  out.rows = source->height() / tile_size;
  out.image_width = image.width();
  out.image_height = image.height();
  out.tiles.resize(out.columns * out.rows);

  cache.get(tile_size);  // factorize once before fanning out
  parallel_for(out.tiles.size(), options.threads, [&](std::size_t index) {
    const std::size_t k = index % out.columns;
    const std::size_t l = index / out.columns;
    out.tiles[index] =
        solve_block(*source, k * tile_size, l * tile_size, tile_size, tile_size, cache);
  });
  return out;
}

std::vector<double> reconstruct_block(const CoefficientGrid& grid, std::size_t m_x,
                                      std::size_t m_y) {
  const std::size_t nx = grid.nx();
  const std::size_t ny = grid.ny();
  if (m_x < 1 || m_x > nx || m_y < 1 || m_y > ny) {
    throw InvalidArgument("truncation must lie in [1, block size]");
  }
  // H(p, y) = sum_{q < m_y} Ay(y, q) C(p, q); g(x, y) = sum_{p < m_x} Ax(x, p) H(p, y).
  std::vector<double> partial(m_x * ny, 0.0);
  for (std::size_t p = 0; p < m_x; ++p) {
    for (std::size_t y = 0; y < ny; ++y) {
      double sum = 0.0;
      for (std::size_t q = 0; q < m_y; ++q) sum += SignMatrix::sign(ny, y, q) * grid(p, q);
      partial[p * ny + y] = sum;
    }
  }
  std::vector<double> out(nx * ny, 0.0);
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < nx; ++x) {
      double sum = 0.0;
      for (std::size_t p = 0; p < m_x; ++p) sum += SignMatrix::sign(nx, x, p) * partial[p * ny + y];
      out[y * nx + x] = sum;
    }
  }
  return out;
}

GrayImage approximate(const TiledCoefficients& tiles, std::size_t m, unsigned threads) {
  if (tiles.tiles.empty() || tiles.tiles.size() != tiles.columns * tiles.rows) {
    throw InvalidArgument("coefficient set is empty or inconsistent");
  }
  const std::size_t limit = std::min(tiles.tile_width, tiles.tile_height);
  if (m < 1 || m > limit) {
    throw InvalidArgument("keep must lie in [1, " + std::to_string(limit) + "], got " +
                          std::to_string(m));
  }
  const std::size_t tw = tiles.tile_width;
  const std::size_t th = tiles.tile_height;
  GrayImage full(tiles.columns * tw, tiles.rows * th);
  parallel_for(tiles.tiles.size(), threads, [&](std::size_t index) {
    const auto& grid = tiles.tiles[index];
    if (grid.nx() != tw || grid.ny() != th) {
      throw InvalidArgument("tile " + std::to_string(index) + " has mismatched dimensions");
    }
    const std::size_t k = index % tiles.columns;
    const std::size_t l = index / tiles.columns;
    const auto block = reconstruct_block(grid, m, m);
    for (std::size_t y = 0; y < th; ++y) {
      for (std::size_t x = 0; x < tw; ++x) {
        full.at(k * tw + x, l * th + y) = to_gray(block[y * tw + x]);
      }
    }
  });
  const std::size_t w = tiles.image_width ? tiles.image_width : full.width();
  const std::size_t h = tiles.image_height ? tiles.image_height : full.height();
  if (w == full.width() && h == full.height()) return full;
  return full.crop(0, 0, w, h);
}

Spectrum2D triads(const CoefficientGrid& grid, SpatialUnit unit, std::size_t m_x,
                  std::size_t m_y) {
  if (grid.nx() == 0 || grid.ny() == 0) throw InvalidArgument("coefficient grid is empty");
  if (m_x == 0) m_x = grid.nx();
  if (m_y == 0) m_y = grid.ny();
  if (m_x > grid.nx() || m_y > grid.ny()) {
    throw InvalidArgument("triad truncation exceeds the grid size");
  }
  const auto fx = spatial_frequencies(grid.nx(), unit);
  const auto fy = spatial_frequencies(grid.ny(), unit);
  Spectrum2D out;
  out.unit = unit;
  out.nx = grid.nx();
  out.ny = grid.ny();
  out.triads.reserve(m_x * m_y);
  for (std::size_t q = 0; q < m_y; ++q) {
    for (std::size_t p = 0; p < m_x; ++p) {
      out.triads.push_back(Triad{p, q, fx[p], fy[q], grid(p, q)});
    }
  }
  return out;
}

SignPattern2D train_pattern(std::size_t nx, std::size_t ny, std::size_t p, std::size_t q,
                            int coefficient_sign) {
  if (nx == 0 || ny == 0) throw InvalidArgument("block dimensions must be positive");
  if (p >= nx || q >= ny) {
    throw InvalidArgument("train pair (" + std::to_string(p + 1) + ", " +
                          std::to_string(q + 1) + ") lies outside a " + std::to_string(nx) +
                          "x" + std::to_string(ny) + " grid");
  }
  const int s = coefficient_sign > 0 ? 1 : (coefficient_sign < 0 ? -1 : 0);
  std::vector<std::int8_t> values(nx * ny);
  for (std::size_t y = 0; y < ny; ++y) {
    const int sy = SignMatrix::sign(ny, y, q);
    for (std::size_t x = 0; x < nx; ++x) {
      values[y * nx + x] = static_cast<std::int8_t>(s * SignMatrix::sign(nx, x, p) * sy);
    }
  }
  return SignPattern2D(nx, ny, std::move(values));
}

SignPattern2D contribution_pattern(const CoefficientGrid& grid, std::size_t p, std::size_t q) {
  if (p >= grid.nx() || q >= grid.ny()) {
    throw InvalidArgument("train pair (" + std::to_string(p + 1) + ", " +
                          std::to_string(q + 1) + ") lies outside the coefficient grid");
  }
  const double c = grid(p, q);
  return train_pattern(grid.nx(), grid.ny(), p, q, c > 0.0 ? 1 : (c < 0.0 ? -1 : 0));
}

}  // namespace swm::image
