#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swm {

/// The n x n system matrix of the square wave method.
///
/// Entry (k, i) is the sign of train i over sub-interval k (both 0-based).
/// Train i has semi-waves spanning n - i sub-intervals, so column i is a
/// sequence of alternating constant blocks of that length starting at +1:
///
///     entry(k, i) = (-1)^floor(k / (n - i))
///
/// Row 0 and column 0 are all +1; column n - 1 alternates +1, -1, ...
class SignMatrix {
 public:
  /// Throws InvalidArgument for n == 0.
  explicit SignMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  int operator()(std::size_t k, std::size_t i) const noexcept {
    return entries_[k * n_ + i];
  }

  /// Signs of every train over sub-interval k.
  std::span<const std::int8_t> row(std::size_t k) const noexcept {
    return {entries_.data() + k * n_, n_};
  }

  /// Row-major copy as doubles, for factorization.
  std::vector<double> to_dense() const;

  /// Closed-form entry without materializing the matrix.
  static int sign(std::size_t n, std::size_t k, std::size_t i) noexcept {
    return ((k / (n - i)) % 2 == 0) ? 1 : -1;
  }

 private:
  std::size_t n_;
  std::vector<std::int8_t> entries_;
};

inline SignMatrix build_sign_matrix(std::size_t n) { return SignMatrix(n); }

}  // namespace swm
