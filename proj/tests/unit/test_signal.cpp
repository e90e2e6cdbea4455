#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "swm/error.hpp"
#include "swm/reference.hpp"
#include "swm/signal.hpp"

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

swm::Spectrum1D make_spectrum(const std::vector<double>& moduli) {
  swm::Spectrum1D s;
  s.order = moduli.size();
  s.duration = 1.0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    s.dyads.push_back({i, 1.0 + static_cast<double>(i), moduli[i]});
  }
  return s;
}

}  // namespace

TEST_CASE("test function values") {
  const double pi = std::numbers::pi;
  for (double t : {-2.0, -0.3, 0.0, 0.125, 1.7, 2.0}) {
    const double expected = (6.0 - t) * (2.0 * std::cos(2.0 * pi * 4.0 * t) +
                                         5.0 * std::cos(2.0 * pi * 6.0 * t));
    CHECK(swm::reference_function(t) == doctest::Approx(expected).epsilon(1e-14));
  }
  CHECK(swm::reference_function(2.0) == doctest::Approx(28.0));
  CHECK(swm::reference_function(0.125) == doctest::Approx(-11.75));
}

TEST_CASE("midpoint sampling of the 18-sample example") {
  const auto s = swm::synth_reference_signal(18, 4.0, -2.0);
  REQUIRE(s.size() == 18);
  CHECK(s.duration == 4.0);
  for (std::size_t k = 0; k < 18; ++k) {
    CHECK(std::abs(s.values[k] - swm::reference::kSignalSamples[k]) <= 1e-6);
  }
  const auto single = swm::synth_reference_signal(1, 4.0, 0.0);
  CHECK(single.values[0] == doctest::Approx(28.0));
  CHECK_THROWS_AS(swm::synth_reference_signal(0, 4.0, 0.0), swm::InvalidArgument);
}

TEST_CASE("18-sample coefficients and frequencies") {
  const auto spectrum = swm::analyze_1d(swm::synth_reference_signal(18, 4.0, -2.0));
  REQUIRE(spectrum.size() == 18);
  CHECK(spectrum.order == 18);
  for (std::size_t i = 0; i < 18; ++i) {
    CHECK(spectrum.dyads[i].train == i);
    CHECK(std::abs(spectrum.dyads[i].coefficient - swm::reference::kSignalCoefficients[i]) <= 5e-5);
    CHECK(std::abs(spectrum.dyads[i].frequency - swm::reference::kSignalFrequencies[i]) <= 1e-7);
  }
}

TEST_CASE("two-sample closed form") {
  const auto s = swm::analyze_1d(swm::make_signal({7.0, 3.0}, 1.0));
  CHECK(s.dyads[0].coefficient == doctest::Approx(5.0));
  CHECK(s.dyads[1].coefficient == doctest::Approx(2.0));
}

TEST_CASE("round trip against an independent solve for n <= 256") {
  swm::SolverCache cache;
  for (std::size_t n : {1u, 2u, 3u, 5u, 17u, 64u, 100u, 256u}) {
    const auto v = random_values(n, 100 + n);
    const auto spectrum = swm::analyze_1d(swm::make_signal(v, 2.0), cache);
    const auto back = swm::reconstruct_1d(spectrum, n);
    const double bound = 1e-9 * max_abs(v);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(back[k] - v[k]) <= bound);

    const Eigen::VectorXd oracle =
        test::oracle_matrix(n).fullPivLu().solve(Eigen::Map<const Eigen::VectorXd>(v.data(), n));
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(spectrum.dyads[i].coefficient - oracle[i]) <= 1e-8 * (1.0 + std::abs(oracle[i])));
    }
  }
}

TEST_CASE("the transform is linear") {
  const std::size_t n = 80;
  const auto v = random_values(n, 1);
  const auto w = random_values(n, 2);
  const double a = 2.5;
  const double b = -0.75;
  std::vector<double> mix(n);
  for (std::size_t k = 0; k < n; ++k) mix[k] = a * v[k] + b * w[k];
  const auto cv = swm::analyze_1d(swm::make_signal(v, 1.0));
  const auto cw = swm::analyze_1d(swm::make_signal(w, 1.0));
  const auto cm = swm::analyze_1d(swm::make_signal(mix, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = a * cv.dyads[i].coefficient + b * cw.dyads[i].coefficient;
    CHECK(std::abs(cm.dyads[i].coefficient - expected) <= 1e-9 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("a constant signal collapses onto the first train") {
  for (std::size_t n : {1u, 7u, 50u}) {
    const auto s = swm::analyze_1d(swm::make_signal(std::vector<double>(n, 3.25), 1.0));
    CHECK(s.dyads[0].coefficient == doctest::Approx(3.25));
    for (std::size_t i = 1; i < n; ++i) CHECK(std::abs(s.dyads[i].coefficient) <= 1e-12);
  }
}

TEST_CASE("truncated reconstruction uses only the leading trains") {
  const std::vector<double> v = {4.0, -1.0, 2.5, 8.0, 0.0};
  const auto s = swm::analyze_1d(swm::make_signal(v, 1.0));
  const auto two = swm::reconstruct_1d(s, 2);
  const swm::SignMatrix a(5);
  for (std::size_t k = 0; k < 5; ++k) {
    const double expected = a(k, 0) * s.dyads[0].coefficient + a(k, 1) * s.dyads[1].coefficient;
    CHECK(two[k] == doctest::Approx(expected));
  }
  CHECK_THROWS_AS(swm::reconstruct_1d(s, 0), swm::InvalidArgument);
  CHECK_THROWS_AS(swm::reconstruct_1d(s, 6), swm::InvalidArgument);
}

TEST_CASE("signal validation") {
  CHECK_THROWS_AS(swm::make_signal({}, 1.0), swm::InvalidArgument);
  CHECK_THROWS_AS(swm::make_signal({1.0}, 0.0), swm::InvalidArgument);
  CHECK_THROWS_AS(swm::make_signal({1.0, NAN}, 1.0), swm::InvalidArgument);
  CHECK_THROWS_AS(swm::make_signal({1.0, 2.0}, 1.0, 3.0), swm::InvalidArgument);
  CHECK_NOTHROW(swm::make_signal({1.0, 2.0}, 1.0, 2.0));
}

TEST_CASE("frequency filter keeps order and order count") {
  const auto s = swm::analyze_1d(swm::synth_reference_signal(18, 4.0, -2.0));
  const auto low = swm::filter_by_frequency(s, 0.2);
  CHECK(low.order == 18);
  REQUIRE(low.size() == 7);
  for (std::size_t i = 0; i < low.size(); ++i) CHECK(low.dyads[i].train == i);
  CHECK_THROWS_AS(swm::filter_by_frequency(s, 0.0), swm::InvalidArgument);
}

TEST_CASE("index-window prominence") {
  const auto found =
      swm::find_prominent(make_spectrum({1, 1, 10, 1, 1}), swm::ProminenceRule::index_window(2, 5));
  REQUIRE(found.size() == 1);
  CHECK(found[0].train == 2);
  CHECK(swm::find_prominent(make_spectrum({1, 1, 4, 1, 1}),
                            swm::ProminenceRule::index_window(2, 5))
            .empty());
  // Zero coefficients never qualify, even with no neighbours.
  CHECK(swm::find_prominent(make_spectrum({0}), swm::ProminenceRule::index_window(1, 2)).empty());
}

TEST_CASE("frequency-ratio prominence") {
  swm::Spectrum1D s;
  s.order = 6;
  s.duration = 1.0;
  // Neighbourhood for f = 1.0 with ratio 1.2 is (0.8333, 1.2).
  s.dyads = {{0, 0.80, 100.0}, {1, 0.90, 5.0}, {2, 1.00, 20.0},
             {3, 1.10, 4.0},   {4, 1.25, 90.0}, {5, 3.00, 1.0}};
  const auto found = swm::find_prominent(s, swm::ProminenceRule::frequency_ratio(1.2, 3.5));
  std::vector<std::size_t> trains;
  for (const auto& d : found) trains.push_back(d.train);
  CHECK(trains == std::vector<std::size_t>{0, 2, 4, 5});
}

TEST_CASE("prominence is invariant under scaling") {
  const auto spectrum = swm::analyze_1d(swm::make_signal(random_values(120, 9), 3.0));
  for (const auto& rule : {swm::ProminenceRule{}, swm::ProminenceRule::index_window(3, 2.0)}) {
    const auto base = swm::find_prominent(spectrum, rule);
    for (double alpha : {-3.0, 0.001, 1e6}) {
      auto scaled = spectrum;
      for (auto& d : scaled.dyads) d.coefficient *= alpha;
      const auto found = swm::find_prominent(scaled, rule);
      REQUIRE(found.size() == base.size());
      for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].train == base[i].train);
    }
  }
}

TEST_CASE("prominence argument checks") {
  CHECK_THROWS_AS(swm::find_prominent(swm::Spectrum1D{}), swm::InvalidArgument);
  const auto s = make_spectrum({1, 2, 3});
  CHECK_THROWS_AS(swm::find_prominent(s, swm::ProminenceRule::index_window(0, 5)),
                  swm::InvalidArgument);
  CHECK_THROWS_AS(swm::find_prominent(s, swm::ProminenceRule::index_window(2, 1.0)),
                  swm::InvalidArgument);
  CHECK_THROWS_AS(swm::find_prominent(s, swm::ProminenceRule::frequency_ratio(1.0, 3)),
                  swm::InvalidArgument);
}
