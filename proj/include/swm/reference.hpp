#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace swm::reference {

// Published worked examples of the method, used as golden fixtures.

/// 18-sample example: the test signal on [-2, 2] (duration 4).
inline constexpr std::size_t kSignalOrder = 18;
inline constexpr double kSignalDuration = 4.0;
inline constexpr double kSignalOrigin = -2.0;
extern const std::array<double, kSignalOrder> kSignalSamples;
extern const std::array<double, kSignalOrder> kSignalCoefficients;
extern const std::array<double, kSignalOrder> kSignalFrequencies;

/// EMG-style schedule: 250 samples per second over 5 seconds.
inline constexpr double kEmgSamplingRate = 250.0;
inline constexpr double kEmgDuration = 5.0;
struct IndexedValue {
  std::size_t index;  // 1-based
  double value;
};
extern const std::array<IndexedValue, 3> kEmgFrequencies;

/// 4x4 pseudo-image, rows listed top to bottom as in a PGM file.
extern const std::array<std::array<int, 4>, 4> kPseudoImageTopDown;
/// Its coefficients as listed: entry [a][b] is listed C_{a+1,b+1}, whose first
/// subscript is the y-axis train. The library's C(p, q) equals entry [q][p].
extern const std::array<std::array<double, 4>, 4> kPseudoImageListedCoefficients;

/// Frequency pairs of the 8 x 8 truncation of a 32-pixel tile, tile unit,
/// ordered by y-train then x-train.
extern const std::array<std::array<double, 2>, 64> kTriadFrequencies;

struct ProminentDyad {
  char label;
  double frequency;
  double coefficient;
  bool gated;  // false for values that contradict the rest of the table
};
struct ProminenceFixture {
  std::size_t order;
  std::array<ProminentDyad, 4> dyads;
};
/// Prominent dyads of the test signal (duration 4, frequencies up to 2).
extern const std::array<ProminenceFixture, 2> kProminence;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Sign rule entry(n, k, i); replaceable so the checks can be shown to
/// catch a wrong rule.
using SignRule = std::function<int(std::size_t n, std::size_t k, std::size_t i)>;

struct CheckOptions {
  bool heavy = false;  // adds the n = 1000 and n = 2000 prominence checks
  SignRule sign_rule;  // empty: the library rule
};

/// Runs every fixture check in a fixed order.
std::vector<CheckResult> run_checks(const CheckOptions& options = {});

}  // namespace swm::reference
