#pragma once

#include <cstddef>
#include <vector>

namespace swm {

/// Frequencies attached to the n square-wave trains of an analysis interval.
///
/// values[i] = (n / (n - i)) / (2 * interval) for 0-based i, in inverse
/// interval units (s^-1 for time, cycles per unit length for space).
struct FrequencySchedule {
  double interval = 0.0;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// Throws InvalidArgument for n == 0 or a non-positive/non-finite interval.
FrequencySchedule frequencies_1d(std::size_t n, double interval);

/// n = sampling_rate * duration; throws InvalidArgument unless that product is
/// a positive integer (relative tolerance 1e-9).
std::size_t sample_count(double sampling_rate, double duration);

/// Same schedule as frequencies_1d(sample_count(fs, T), T). The endpoints are
/// 1/(2T) and fs/2.
FrequencySchedule frequencies_from_sampling(double sampling_rate, double duration);

enum class SpatialUnit {
  kTile,   ///< axis extent is the unit: cycles per tile side
  kPixel,  ///< pixel side is the unit: cycles per pixel
};

/// Spatial schedule for an axis of n pixels. Tile unit uses an extent of 1,
/// pixel unit an extent of n.
FrequencySchedule spatial_frequencies(std::size_t n, SpatialUnit unit);

}  // namespace swm
