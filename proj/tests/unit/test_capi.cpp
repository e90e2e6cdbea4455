// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>
#include <unistd.h>

#include "swm/swm.h"

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("swm-capi-" + std::to_string(::getpid()) + "-" + name))
      .string();
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::string(swm_version()) == "1.0.0");
  CHECK(swm_signal_synth(0, 4.0, 0.0, nullptr) == SWM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(swm_last_error()).find("must not be null") != std::string::npos);
  swm_signal* s = nullptr;
  CHECK(swm_signal_synth(0, 4.0, 0.0, &s) == SWM_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(swm_signal_synth(3, 4.0, 0.0, &s) == SWM_OK);
  CHECK(std::string(swm_last_error()).empty());
  swm_signal_destroy(s);
  swm_signal_destroy(nullptr);
}

TEST_CASE("1D pipeline through handles") {
  swm_cache* cache = nullptr;
  REQUIRE(swm_cache_create(&cache) == SWM_OK);
  swm_signal* signal = nullptr;
  REQUIRE(swm_signal_synth(18, 4.0, -2.0, &signal) == SWM_OK);
  CHECK(swm_signal_size(signal) == 18);
  CHECK(std::abs(swm_signal_values(signal)[0] + 34.5484836) < 1e-6);

  swm_spectrum* spectrum = nullptr;
  REQUIRE(swm_analyze_signal(cache, signal, &spectrum) == SWM_OK);
  CHECK(swm_spectrum_size(spectrum) == 18);
  swm_dyad d{};
  REQUIRE(swm_spectrum_dyad(spectrum, 0, &d) == SWM_OK);
  CHECK(d.train == 0);
  CHECK(d.frequency == 0.125);
  CHECK(std::abs(d.coefficient - 117.12980) < 5e-5);
  CHECK(swm_spectrum_dyad(spectrum, 18, &d) == SWM_ERR_INVALID_ARGUMENT);

  std::vector<double> back(18);
  REQUIRE(swm_spectrum_reconstruct(spectrum, 18, back.data()) == SWM_OK);
  for (std::size_t k = 0; k < 18; ++k) CHECK(back[k] == doctest::Approx(swm_signal_values(signal)[k]));

  swm_spectrum* low = nullptr;
  REQUIRE(swm_spectrum_filter(spectrum, 0.2, &low) == SWM_OK);
  CHECK(swm_spectrum_size(low) == 7);
  CHECK(swm_spectrum_order(low) == 18);

  double condition = 0.0;
  CHECK(swm_cache_condition(cache, 18, &condition) == SWM_OK);
  CHECK(condition > 1.0);

  const auto path = temp_path("s.json");
  REQUIRE(swm_spectrum_write(spectrum, path.c_str(), SWM_SWT_JSON) == SWM_OK);
  swm_spectrum* read = nullptr;
  REQUIRE(swm_spectrum_read(path.c_str(), &read) == SWM_OK);
  swm_dyad r{};
  swm_spectrum_dyad(read, 0, &r);
  CHECK(r.coefficient == d.coefficient);
  std::filesystem::remove(path);

  swm_spectrum_destroy(read);
  swm_spectrum_destroy(low);
  swm_spectrum_destroy(spectrum);
  swm_signal_destroy(signal);
  swm_cache_destroy(cache);
}

TEST_CASE("prominent dyads with caller-sized buffers") {
  const double values[] = {0, 0, 0, 0, 0};
  swm_signal* signal = nullptr;
  REQUIRE(swm_signal_create(values, 5, 1.0, 0.0, &signal) == SWM_OK);
  swm_spectrum* spectrum = nullptr;
  REQUIRE(swm_analyze_signal(nullptr, signal, &spectrum) == SWM_OK);
  size_t count = 99;
  CHECK(swm_spectrum_find_prominent(spectrum, nullptr, nullptr, 0, &count) == SWM_OK);
  CHECK(count == 0);

  swm_signal* ref = nullptr;
  REQUIRE(swm_signal_synth(1000, 4.0, -2.0, &ref) == SWM_OK);
  swm_spectrum* full = nullptr;
  REQUIRE(swm_analyze_signal(nullptr, ref, &full) == SWM_OK);
  swm_spectrum* low = nullptr;
  REQUIRE(swm_spectrum_filter(full, 2.0, &low) == SWM_OK);
  swm_dyad found[2];
  REQUIRE(swm_spectrum_find_prominent(low, nullptr, found, 2, &count) == SWM_OK);
  CHECK(count == 4);
  CHECK(found[0].train == 488);
  CHECK(found[1].train == 744);

  swm_prominence_rule rule;
  swm_prominence_rule_default(&rule);
  CHECK(rule.neighborhood == SWM_NEIGHBORHOOD_FREQUENCY_RATIO);
  rule.dominance = 0.5;
  CHECK(swm_spectrum_find_prominent(low, &rule, found, 2, &count) == SWM_ERR_INVALID_ARGUMENT);

  swm_spectrum_destroy(low);
  swm_spectrum_destroy(full);
  swm_signal_destroy(ref);
  swm_spectrum_destroy(spectrum);
  swm_signal_destroy(signal);
}

TEST_CASE("image pipeline through handles") {
  const uint8_t pixels[16] = {100, 38, 25, 214, 98, 3, 77, 12, 195, 6, 249, 255, 55, 4, 69, 81};
  swm_image* image = nullptr;
  REQUIRE(swm_image_create(4, 4, pixels, &image) == SWM_OK);
  swm_coefficients* coeffs = nullptr;
  REQUIRE(swm_analyze_image(nullptr, image, 4, 0, 1, &coeffs) == SWM_OK);
  double c = 0.0;
  REQUIRE(swm_coefficients_get(coeffs, 0, 0, 1, 0, &c) == SWM_OK);
  CHECK(c == doctest::Approx(-78.5));
  CHECK(swm_coefficients_get(coeffs, 1, 0, 0, 0, &c) == SWM_ERR_INVALID_ARGUMENT);

  swm_image* back = nullptr;
  REQUIRE(swm_approximate(coeffs, 4, 0, &back) == SWM_OK);
  for (int i = 0; i < 16; ++i) CHECK(swm_image_pixels(back)[i] == pixels[i]);
  CHECK(swm_approximate(coeffs, 5, 0, &back) == SWM_ERR_INVALID_ARGUMENT);

  swm_coefficients* bad = nullptr;
  CHECK(swm_analyze_image(nullptr, image, 3, 0, 1, &bad) == SWM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(swm_last_error()).find("not divisible") != std::string::npos);

  swm_coefficients* full = nullptr;
  REQUIRE(swm_analyze_full(nullptr, image, &full) == SWM_OK);
  size_t tw = 0, th = 0, cols = 0, rows = 0;
  swm_coefficients_layout(full, &tw, &th, &cols, &rows);
  CHECK(tw == 4);
  CHECK(cols == 1);

  swm_pattern* pattern = nullptr;
  REQUIRE(swm_pattern_from_coefficients(coeffs, 0, 0, 1, 0, &pattern) == SWM_OK);
  int value = 0;
  REQUIRE(swm_pattern_value(pattern, 0, 0, &value) == SWM_OK);
  CHECK(value == -1);
  CHECK(swm_pattern_value(pattern, 4, 0, &value) == SWM_ERR_INVALID_ARGUMENT);

  const auto path = temp_path("missing-dir/x.json");
  CHECK(swm_coefficients_write(coeffs, path.c_str()) == SWM_ERR_IO);
  CHECK(swm_image_read(temp_path("nothing.pgm").c_str(), &back) == SWM_ERR_IO);

  swm_pattern_destroy(pattern);
  swm_coefficients_destroy(full);
  swm_coefficients_destroy(coeffs);
  swm_image_destroy(back);
  swm_image_destroy(image);
}

TEST_CASE("malformed archives map to the format status") {
  const auto path = temp_path("bad.json");
  FILE* f = std::fopen(path.c_str(), "w");
  std::fputs("{\"format\":\"swm-coefficients\",\"version\":1}", f);
  std::fclose(f);
  swm_coefficients* coeffs = nullptr;
  CHECK(swm_coefficients_read(path.c_str(), &coeffs) == SWM_ERR_FORMAT);
  std::filesystem::remove(path);
}

TEST_CASE("frequency helpers") {
  double f[32];
  REQUIRE(swm_spatial_frequencies(32, SWM_UNIT_TILE, f) == SWM_OK);
  CHECK(f[16] == 1.0);
  size_t n = 0;
  REQUIRE(swm_sample_count(250.0, 5.0, &n) == SWM_OK);
  CHECK(n == 1250);
  CHECK(swm_sample_count(250.0, 5.001, &n) == SWM_ERR_INVALID_ARGUMENT);
  int8_t signs[9];
  REQUIRE(swm_sign_matrix(3, signs) == SWM_OK);
  CHECK(signs[8] == 1);
  CHECK(signs[5] == -1);
}

TEST_CASE("fixture verification reports each check") {
  int calls = 0;
  int all = 0;
  auto callback = [](const char*, int passed, const char*, void* user) {
    ++*static_cast<int*>(user);
    CHECK(passed == 1);
  };
  REQUIRE(swm_verify_reference(0, callback, &calls, &all) == SWM_OK);
  CHECK(all == 1);
  CHECK(calls == 8);
}
