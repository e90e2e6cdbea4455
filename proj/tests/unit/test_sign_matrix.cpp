#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "swm/error.hpp"
#include "swm/reference.hpp"
#include "swm/sign_matrix.hpp"

TEST_CASE("sign rule agrees with the midpoint-segment oracle for n <= 64") {
  for (std::size_t n = 1; n <= 64; ++n) {
    const swm::SignMatrix a(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(a(k, i) == test::midpoint_sign(n, k, i));
        REQUIRE(swm::SignMatrix::sign(n, k, i) == a(k, i));
      }
    }
  }
}

TEST_CASE("first row and column are positive, last column alternates") {
  const swm::SignMatrix a(9);
  for (std::size_t j = 0; j < 9; ++j) {
    CHECK(a(0, j) == 1);
    CHECK(a(j, 0) == 1);
    CHECK(a(j, 8) == (j % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("row 15 of the 18-train system") {
  const std::array<int, 18> expected = {1, 1, 1, 1, -1, -1, -1, -1, -1,
                                        -1, -1, 1, 1, 1, -1, 1, -1, 1};
  const swm::SignMatrix a(18);
  const auto row = a.row(14);
  for (std::size_t i = 0; i < 18; ++i) CHECK(row[i] == expected[i]);
}

TEST_CASE("listed 18-sample coefficients satisfy the system only in this orientation") {
  namespace ref = swm::reference;
  const swm::SignMatrix a(18);
  double residual = 0.0;
  double transposed_residual = 0.0;
  for (std::size_t k = 0; k < 18; ++k) {
    double sum = 0.0;
    double sum_t = 0.0;
    for (std::size_t i = 0; i < 18; ++i) {
      sum += a(k, i) * ref::kSignalCoefficients[i];
      sum_t += a(i, k) * ref::kSignalCoefficients[i];
    }
    residual = std::max(residual, std::abs(sum - ref::kSignalSamples[k]));
    transposed_residual = std::max(transposed_residual, std::abs(sum_t - ref::kSignalSamples[k]));
  }
  CHECK(residual < 1e-4);
  CHECK(transposed_residual > 1.0);
}

TEST_CASE("dense copy matches entries and n = 0 is rejected") {
  const swm::SignMatrix a(5);
  const auto dense = a.to_dense();
  REQUIRE(dense.size() == 25);
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t i = 0; i < 5; ++i) CHECK(dense[k * 5 + i] == a(k, i));
  }
  CHECK_THROWS_AS(swm::SignMatrix(0), swm::InvalidArgument);
}
