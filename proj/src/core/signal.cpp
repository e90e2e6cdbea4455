#include "swm/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "swm/error.hpp"
#include "swm/frequency.hpp"

namespace swm {

SampledSignal make_signal(std::vector<double> values, double duration,
                          std::optional<double> sampling_rate) {
  if (values.empty()) throw InvalidArgument("signal must contain at least one sample");
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgument("duration must be a positive finite number");
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw InvalidArgument("sample " + std::to_string(k + 1) + " is not finite");
    }
  }
  if (sampling_rate) {
    const std::size_t n = sample_count(*sampling_rate, duration);
    if (n != values.size()) {
      throw InvalidArgument("inconsistent sampling rate and duration: fs * dt = " +
                            std::to_string(n) + " but the signal has " +
                            std::to_string(values.size()) + " samples");
    }
  }
  return SampledSignal{std::move(values), duration, sampling_rate};
}

double reference_function(double t) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return (6.0 - t) * (2.0 * std::cos(two_pi * 4.0 * t) + 5.0 * std::cos(two_pi * 6.0 * t));
}

SampledSignal synth_reference_signal(std::size_t n, double duration, double origin) {
  if (n == 0) throw InvalidArgument("number of samples must be at least 1");
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw InvalidArgument("duration must be a positive finite number");
  }
  if (!std::isfinite(origin)) throw InvalidArgument("origin must be finite");
  std::vector<double> values(n);
  const double step = duration / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = reference_function(origin + (static_cast<double>(k) + 0.5) * step);
  }
  return SampledSignal{std::move(values), duration, std::nullopt};
}

double Dyad::amplitude() const noexcept { return std::abs(coefficient); }

Spectrum1D analyze_1d(const SampledSignal& signal, SolverCache& cache) {
  const std::size_t n = signal.size();
  if (n == 0) throw InvalidArgument("signal must contain at least one sample");
  const auto schedule = frequencies_1d(n, signal.duration);
  std::vector<double> coefficients = cache.get(n)->solve(signal.values);

  Spectrum1D spectrum;
  spectrum.order = n;
  spectrum.duration = signal.duration;
  spectrum.dyads.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    spectrum.dyads[i] = Dyad{i, schedule[i], coefficients[i]};
  }
  return spectrum;
}

Spectrum1D analyze_1d(const SampledSignal& signal) {
  return analyze_1d(signal, default_solver_cache());
}

std::vector<double> reconstruct_1d(const Spectrum1D& spectrum, std::size_t keep) {
  const std::size_t n = spectrum.order;
  if (keep < 1 || keep > n) {
    throw InvalidArgument("keep must lie in [1, " + std::to_string(n) + "], got " +
                          std::to_string(keep));
  }
  std::vector<double> out(n, 0.0);
  for (const Dyad& d : spectrum.dyads) {
    if (d.train >= keep) continue;
    if (d.train >= n) throw InvalidArgument("dyad train index exceeds spectrum order");
    for (std::size_t k = 0; k < n; ++k) {
      out[k] += SignMatrix::sign(n, k, d.train) * d.coefficient;
    }
  }
  return out;
}

Spectrum1D filter_by_frequency(const Spectrum1D& spectrum, double f_max) {
  if (!(f_max > 0.0)) throw InvalidArgument("f_max must be positive");
  Spectrum1D out;
  out.order = spectrum.order;
  out.duration = spectrum.duration;
  for (const Dyad& d : spectrum.dyads) {
    if (d.frequency <= f_max) out.dyads.push_back(d);
  }
  return out;
}

}  // namespace swm
