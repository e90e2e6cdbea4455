#include "swm/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swm/error.hpp"

namespace swm {

FrequencySchedule frequencies_1d(std::size_t n, double interval) {
  if (n == 0) throw InvalidArgument("number of trains must be at least 1");
  if (!(interval > 0.0) || !std::isfinite(interval)) {
    throw InvalidArgument("interval must be a positive finite number");
  }
  FrequencySchedule schedule;
  schedule.interval = interval;
  schedule.values.resize(n);
  const double two_interval = 2.0 * interval;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    // The ratio is exact at both ends (1 and n), which pins f_1 and f_n.
    schedule.values[i] = (dn / static_cast<double>(n - i)) / two_interval;
  }
  return schedule;
}

std::size_t sample_count(double sampling_rate, double duration) {
  if (!(sampling_rate > 0.0) || !std::isfinite(sampling_rate)) {
    throw InvalidArgument("sampling rate must be a positive finite number");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgument("duration must be a positive finite number");
  }
  const double product = sampling_rate * duration;
  const double rounded = std::round(product);
  if (rounded < 1.0 || std::abs(product - rounded) > 1e-9 * std::max(1.0, product)) {
    throw InvalidArgument("inconsistent sampling rate and duration: fs * dt = " +
                          std::to_string(product) + " is not a positive integer");
  }
  return static_cast<std::size_t>(rounded);
}

FrequencySchedule frequencies_from_sampling(double sampling_rate, double duration) {
  return frequencies_1d(sample_count(sampling_rate, duration), duration);
}

FrequencySchedule spatial_frequencies(std::size_t n, SpatialUnit unit) {
  switch (unit) {
    case SpatialUnit::kTile:
      return frequencies_1d(n, 1.0);
    case SpatialUnit::kPixel:
      return frequencies_1d(n, static_cast<double>(n));
  }
  throw InvalidArgument("unknown spatial unit");
}

}  // namespace swm
