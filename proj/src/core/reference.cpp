#include "swm/reference.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "swm/error.hpp"
#include "swm/frequency.hpp"
#include "swm/image.hpp"
#include "swm/signal.hpp"
#include "swm/solver.hpp"

namespace swm::reference {

const std::array<double, kSignalOrder> kSignalSamples = {
    -34.5484836, 30.6666667, -16.0256827, -6.9904692, 49.0,        -6.5602864,
    -14.1121683, 25.3333333, -26.7629098, -25.7897131, 22.6666667, -11.7202754,
    -5.0546469,  35.0,       -4.6244642,  -9.8067610,  17.3333333, -18.0041393};

const std::array<double, kSignalOrder> kSignalCoefficients = {
    117.12980, 50.27631, -210.98830, -53.27896, 9.35088,   12.58025,
    61.27212,  49.80105, 12.81335,   4.03101,   -85.68506, 12.88482,
    8.51973,   60.38772, -69.86421,  28.08997,  -9.26140,  -32.60758};

const std::array<double, kSignalOrder> kSignalFrequencies = {
    0.1250000, 0.1323529, 0.1406250, 0.1500000, 0.1607143, 0.1730769,
    0.1875000, 0.2045455, 0.2250000, 0.2500000, 0.2812500, 0.3214286,
    0.3750000, 0.4500000, 0.5625000, 0.7500000, 1.1250000, 2.2500000};

const std::array<IndexedValue, 3> kEmgFrequencies = {{
    {1, 0.1000000},
    {2, 0.1000801},
    {209, 0.1199616},
}};

const std::array<std::array<int, 4>, 4> kPseudoImageTopDown = {{
    {55, 4, 69, 81},
    {195, 6, 249, 255},
    {98, 3, 77, 12},
    {100, 38, 25, 214},
}};

const std::array<std::array<double, 4>, 4> kPseudoImageListedCoefficients = {{
    {112.5, -78.5, 15.25, 28.25},
    {27.5, 22.25, -23.5, 42.75},
    {-34.0, -14.0, 32.25, -31.75},
    {51.0, -55.25, 13.5, -8.25},
}};

const std::array<std::array<double, 2>, 64> kTriadFrequencies = {{
    {0.5000000, 0.5000000}, {0.5161290, 0.5000000}, {0.5333333, 0.5000000}, {0.5517241, 0.5000000},
    {0.5714286, 0.5000000}, {0.5925926, 0.5000000}, {0.6153846, 0.5000000}, {0.6400000, 0.5000000},
    {0.5000000, 0.5161290}, {0.5161290, 0.5161290}, {0.5333333, 0.5161290}, {0.5517241, 0.5161290},
    {0.5714286, 0.5161290}, {0.5925926, 0.5161290}, {0.6153846, 0.5161290}, {0.6400000, 0.5161290},
    {0.5000000, 0.5333333}, {0.5161290, 0.5333333}, {0.5333333, 0.5333333}, {0.5517241, 0.5333333},
    {0.5714286, 0.5333333}, {0.5925926, 0.5333333}, {0.6153846, 0.5333333}, {0.6400000, 0.5333333},
    {0.5000000, 0.5517241}, {0.5161290, 0.5517241}, {0.5333333, 0.5517241}, {0.5517241, 0.5517241},
    {0.5714286, 0.5517241}, {0.5925926, 0.5517241}, {0.6153846, 0.5517241}, {0.6400000, 0.5517241},
    {0.5000000, 0.5714286}, {0.5161290, 0.5714286}, {0.5333333, 0.5714286}, {0.5517241, 0.5714286},
    {0.5714286, 0.5714286}, {0.5925926, 0.5714286}, {0.6153846, 0.5714286}, {0.6400000, 0.5714286},
    {0.5000000, 0.5925926}, {0.5161290, 0.5925926}, {0.5333333, 0.5925926}, {0.5517241, 0.5925926},
    {0.5714286, 0.5925926}, {0.5925926, 0.5925926}, {0.6153846, 0.5925926}, {0.6400000, 0.5925926},
    {0.5000000, 0.6153846}, {0.5161290, 0.6153846}, {0.5333333, 0.6153846}, {0.5517241, 0.6153846},
    {0.5714286, 0.6153846}, {0.5925926, 0.6153846}, {0.6153846, 0.6153846}, {0.6400000, 0.6153846},
    {0.5000000, 0.6400000}, {0.5161290, 0.6400000}, {0.5333333, 0.6400000}, {0.5517241, 0.6400000},
    {0.5714286, 0.6400000}, {0.5925926, 0.6400000}, {0.6153846, 0.6400000}, {0.6400000, 0.6400000},
}};

const std::array<ProminenceFixture, 2> kProminence = {{
    {1000,
     {{{'A', 0.2441410, 541.50054, true},
       {'B', 0.4882812, 270.06817, false},
       {'C', 0.9765633, 134.80741, true},
       {'D', 1.9531250, 66.39768, true}}}},
    {2000,
     {{{'A', 0.2441410, 342.97162, true},
       {'B', 0.4882812, 171.42003, true},
       {'C', 0.9765633, 85.45887, true},
       {'D', 1.9531250, 42.22607, true}}}},
}};

namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

template <typename Body>
CheckResult guarded(std::string name, Body&& body) {
  CheckResult result;
  result.name = std::move(name);
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  return result;
}

SampledSignal sample_signal() {
  return synth_reference_signal(kSignalOrder, kSignalDuration, kSignalOrigin);
}

CheckResult check_samples() {
  return guarded("signal samples (n=18)", [](CheckResult& r) {
    const auto signal = sample_signal();
    double worst = 0.0;
    for (std::size_t k = 0; k < kSignalOrder; ++k) {
      worst = std::max(worst, std::abs(signal.values[k] - kSignalSamples[k]));
    }
    r.passed = worst <= 1e-6;
    r.detail = fmt("max |V - listed| = %.3g (limit 1e-6)", worst);
  });
}

// Solves with a matrix built from `rule`, so a wrong rule shows up here.
CheckResult check_coefficients(const SignRule& rule) {
  return guarded("coefficients (n=18)", [&](CheckResult& r) {
    const std::size_t n = kSignalOrder;
    std::vector<double> dense(n * n);
    double residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double row_sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        dense[k * n + i] = rule(n, k, i);
        row_sum += dense[k * n + i] * kSignalCoefficients[i];
      }
      residual = std::max(residual, std::abs(row_sum - kSignalSamples[k]));
    }
    const LuFactorization lu(n, std::move(dense));
    const auto solved = lu.solve(sample_signal().values);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(solved[i] - kSignalCoefficients[i]));
    }
    r.passed = worst <= 5e-5 && residual <= 1e-4;
    r.detail = fmt("max |C - listed| = %.3g (limit 5e-5), listed-system residual %.3g", worst,
                   residual);
  });
}

CheckResult check_frequency_table() {
  return guarded("frequency table (n=18, duration 4)", [](CheckResult& r) {
    const auto f = frequencies_1d(kSignalOrder, kSignalDuration);
    double worst = 0.0;
    for (std::size_t i = 0; i < kSignalOrder; ++i) {
      worst = std::max(worst, std::abs(f[i] - kSignalFrequencies[i]));
    }
    r.passed = worst <= 1e-7;
    r.detail = fmt("max |f - listed| = %.3g (limit 1e-7)", worst);
  });
}

CheckResult check_emg_schedule() {
  return guarded("EMG schedule (fs=250, duration 5)", [](CheckResult& r) {
    const auto f = frequencies_from_sampling(kEmgSamplingRate, kEmgDuration);
    double worst = 0.0;
    for (const auto& [index, value] : kEmgFrequencies) {
      worst = std::max(worst, std::abs(f[index - 1] - value));
    }
    const bool endpoints = f[0] == 1.0 / (2.0 * kEmgDuration) &&
                           f[f.size() - 1] == kEmgSamplingRate / 2.0;
    r.passed = worst <= 1e-7 && endpoints && f.size() == 1250;
    r.detail = fmt("n = %.0f, max |f - listed| = %.3g (limit 1e-7)",
                   static_cast<double>(f.size()), worst);
    if (!endpoints) r.detail += ", endpoint identity broken";
  });
}

image::GrayImage pseudo_image() {
  std::vector<std::uint8_t> pixels(16);
  for (std::size_t y = 0; y < 4; ++y) {
    for (std::size_t x = 0; x < 4; ++x) {
      pixels[y * 4 + x] = static_cast<std::uint8_t>(kPseudoImageTopDown[3 - y][x]);
    }
  }
  return image::GrayImage(4, 4, std::move(pixels));
}

CheckResult check_pseudo_image(SolverCache& cache) {
  return guarded("pseudo-image coefficients (4x4)", [&](CheckResult& r) {
    const auto grid = image::analyze_tile(pseudo_image(), cache);
    double worst = 0.0;
    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = 0; q < 4; ++q) {
        worst = std::max(worst, std::abs(grid(p, q) - kPseudoImageListedCoefficients[q][p]));
      }
    }
    r.passed = worst <= 1e-9;
    r.detail = fmt("max |C - listed (transposed)| = %.3g (limit 1e-9)", worst);
  });
}

CheckResult check_pseudo_round_trip(SolverCache& cache) {
  return guarded("pseudo-image round trip (m=4)", [&](CheckResult& r) {
    const auto img = pseudo_image();
    const auto tiles = image::analyze_image(img, 4, cache, {false, 1});
    const auto back = image::approximate(tiles, 4, 1);
    r.passed = back == img;
    r.detail = r.passed ? "all 16 grays restored" : "restored grays differ";
  });
}

CheckResult check_spatial_examples() {
  return guarded("spatial frequencies (n=32, tile unit)", [](CheckResult& r) {
    const auto f = spatial_frequencies(32, SpatialUnit::kTile);
    const bool ok = f[16] == 1.0 && f[24] == 2.0 && f[28] == 4.0 && f[0] == 0.5;
    r.passed = ok;
    r.detail = fmt("f17 = %.7f, f29 = %.7f", f[16], f[28]);
  });
}

CheckResult check_triad_grid() {
  return guarded("triad frequency grid (8x8 of 32)", [](CheckResult& r) {
    image::CoefficientGrid grid(32, 32);
    const auto spectrum = image::triads(grid, SpatialUnit::kTile, 8, 8);
    double worst = 0.0;
    for (std::size_t t = 0; t < 64; ++t) {
      worst = std::max(worst, std::abs(spectrum.triads[t].fx - kTriadFrequencies[t][0]));
      worst = std::max(worst, std::abs(spectrum.triads[t].fy - kTriadFrequencies[t][1]));
    }
    r.passed = spectrum.triads.size() == 64 && worst <= 1e-7;
    r.detail = fmt("max |f - listed| = %.3g over 64 pairs (limit 1e-7)", worst);
  });
}

CheckResult check_prominence(const ProminenceFixture& fixture, SolverCache& cache) {
  const std::string name = "prominent dyads (n=" + std::to_string(fixture.order) + ")";
  return guarded(name, [&](CheckResult& r) {
    const auto start = std::chrono::steady_clock::now();
    const auto signal = synth_reference_signal(fixture.order, kSignalDuration, kSignalOrigin);
    const auto spectrum = filter_by_frequency(analyze_1d(signal, cache), 2.0);
    const auto found = find_prominent(spectrum);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = found.size() == fixture.dyads.size() && seconds < 60.0;
    std::string notes;
    for (std::size_t d = 0; ok && d < found.size(); ++d) {
      const auto& want = fixture.dyads[d];
      const double df = std::abs(found[d].frequency - want.frequency);
      const double rel = std::abs(found[d].coefficient - want.coefficient) / std::abs(want.coefficient);
      if (df > 1e-6) ok = false;
      if (want.gated && rel > 1e-3) ok = false;
      if (!want.gated) {
        notes += std::string(", ") + want.label + " coefficient not gated: " +
                 fmt("computed %.5f vs listed %.5f", found[d].coefficient, want.coefficient);
      }
    }
    r.passed = ok;
    r.detail = std::to_string(found.size()) + " prominent dyads in " + fmt("%.2f s", seconds) + notes;
  });
}

}  // namespace

std::vector<CheckResult> run_checks(const CheckOptions& options) {
  const SignRule rule = options.sign_rule
                            ? options.sign_rule
                            : SignRule([](std::size_t n, std::size_t k, std::size_t i) {
                                return SignMatrix::sign(n, k, i);
                              });
  SolverCache cache;
  std::vector<CheckResult> results;
  results.push_back(check_samples());
  results.push_back(check_coefficients(rule));
  results.push_back(check_frequency_table());
  results.push_back(check_emg_schedule());
  results.push_back(check_pseudo_image(cache));
  results.push_back(check_pseudo_round_trip(cache));
  results.push_back(check_spatial_examples());
  results.push_back(check_triad_grid());
  if (options.heavy) {
    for (const auto& fixture : kProminence) results.push_back(check_prominence(fixture, cache));
  }
  return results;
}

}  // namespace swm::reference
