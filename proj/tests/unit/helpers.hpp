#pragma once

#include <Eigen/Dense>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "swm/image.hpp"

namespace test {

// Sign of train i over sub-interval k, computed geometrically: train i is a
// square wave whose semi-waves span (n - i) sub-intervals of width 1/n, and
// the sign is read at the midpoint of sub-interval k.
inline int midpoint_sign(std::size_t n, std::size_t k, std::size_t i) {
  const double midpoint = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
  const double semi_wave = static_cast<double>(n - i) / static_cast<double>(n);
  const auto segment = static_cast<long>(std::floor(midpoint / semi_wave));
  return segment % 2 == 0 ? 1 : -1;
}

inline Eigen::MatrixXd oracle_matrix(std::size_t n) {
  Eigen::MatrixXd a(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) a(k, i) = midpoint_sign(n, k, i);
  }
  return a;
}

inline swm::image::GrayImage random_image(std::size_t w, std::size_t h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gray(0, 255);
  std::vector<std::uint8_t> pixels(w * h);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(gray(rng));
  return swm::image::GrayImage(w, h, std::move(pixels));
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("swm-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace test
