#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swm/solver.hpp"

namespace swm {

/// n samples taken at the midpoints of n equal sub-intervals of `duration`.
struct SampledSignal {
  std::vector<double> values;
  double duration = 0.0;
  std::optional<double> sampling_rate;

  std::size_t size() const noexcept { return values.size(); }
};

/// Validates and builds a signal. When a sampling rate is given it must
/// satisfy values.size() == sampling_rate * duration.
SampledSignal make_signal(std::vector<double> values, double duration,
                          std::optional<double> sampling_rate = std::nullopt);

/// The built-in test function (6 - t)(2 cos(8 pi t) + 5 cos(12 pi t)).
double reference_function(double t) noexcept;

/// Samples reference_function at origin + (k + 1/2) * duration / n.
SampledSignal synth_reference_signal(std::size_t n, double duration, double origin);

/// (frequency, coefficient) pair of train `train` (0-based).
struct Dyad {
  std::size_t train = 0;
  double frequency = 0.0;
  double coefficient = 0.0;

  double amplitude() const noexcept;
};

/// Square wave transform of a signal: dyads ordered by train index.
/// `order` is the number of trains of the analysis that produced it, which
/// stays fixed when the dyad list is filtered.
struct Spectrum1D {
  std::size_t order = 0;
  double duration = 0.0;
  std::vector<Dyad> dyads;

  std::size_t size() const noexcept { return dyads.size(); }
  bool empty() const noexcept { return dyads.empty(); }
};

/// Solves SignMatrix(n) C = V using the cached factorization for n.
Spectrum1D analyze_1d(const SampledSignal& signal, SolverCache& cache);
Spectrum1D analyze_1d(const SampledSignal& signal);

/// output[k] = sum over dyads with train < keep of sign(k, train) * C.
/// Throws InvalidArgument unless 1 <= keep <= order.
std::vector<double> reconstruct_1d(const Spectrum1D& spectrum, std::size_t keep);

/// Dyads with frequency <= f_max, order preserved.
Spectrum1D filter_by_frequency(const Spectrum1D& spectrum, double f_max);

/// Neighbourhood used to judge whether a coefficient stands out.
struct ProminenceRule {
  enum class Neighborhood {
    kIndexWindow,     ///< dyads at list distance 1..window
    kFrequencyRatio,  ///< dyads with f / ratio < f_j < f * ratio
  };

  Neighborhood neighborhood = Neighborhood::kFrequencyRatio;
  std::size_t window = 25;
  double ratio = 1.2;
  double dominance = 3.5;

  static ProminenceRule index_window(std::size_t window, double dominance);
  static ProminenceRule frequency_ratio(double ratio, double dominance);
};

/// Dyads whose modulus is nonzero and at least `dominance` times every
/// neighbour's modulus. Result is ordered by frequency.
/// Throws InvalidArgument for an empty spectrum or an invalid rule.
std::vector<Dyad> find_prominent(const Spectrum1D& spectrum,
                                 const ProminenceRule& rule = {});

}  // namespace swm
