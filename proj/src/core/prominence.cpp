#include <algorithm>
#include <cmath>

#include "swm/error.hpp"
#include "swm/signal.hpp"

namespace swm {

ProminenceRule ProminenceRule::index_window(std::size_t window, double dominance) {
  ProminenceRule rule;
  rule.neighborhood = Neighborhood::kIndexWindow;
  rule.window = window;
  rule.dominance = dominance;
  return rule;
}

ProminenceRule ProminenceRule::frequency_ratio(double ratio, double dominance) {
  ProminenceRule rule;
  rule.neighborhood = Neighborhood::kFrequencyRatio;
  rule.ratio = ratio;
  rule.dominance = dominance;
  return rule;
}

namespace {

void validate(const ProminenceRule& rule) {
  if (!(rule.dominance > 1.0) || !std::isfinite(rule.dominance)) {
    throw InvalidArgument("dominance must be a finite number greater than 1");
  }
  if (rule.neighborhood == ProminenceRule::Neighborhood::kIndexWindow) {
    if (rule.window < 1) throw InvalidArgument("prominence window must be at least 1");
  } else if (!(rule.ratio > 1.0) || !std::isfinite(rule.ratio)) {
    throw InvalidArgument("frequency ratio must be a finite number greater than 1");
  }
}

}  // namespace

std::vector<Dyad> find_prominent(const Spectrum1D& spectrum, const ProminenceRule& rule) {
  if (spectrum.empty()) throw InvalidArgument("cannot search an empty spectrum");
  validate(rule);

  const auto& dyads = spectrum.dyads;
  const std::size_t count = dyads.size();
  std::vector<Dyad> out;

  if (rule.neighborhood == ProminenceRule::Neighborhood::kIndexWindow) {
    for (std::size_t i = 0; i < count; ++i) {
      const double modulus = dyads[i].amplitude();
      if (modulus == 0.0) continue;
      const std::size_t lo = i >= rule.window ? i - rule.window : 0;
      const std::size_t hi = std::min(count - 1, i + rule.window);
      double neighbour = 0.0;
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j != i) neighbour = std::max(neighbour, dyads[j].amplitude());
      }
      if (modulus >= rule.dominance * neighbour) out.push_back(dyads[i]);
    }
  } else {
    // Frequencies are sorted, so the neighbourhood of each dyad is a
    // contiguous range that two cursors can track.
    std::vector<Dyad> sorted = dyads;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Dyad& a, const Dyad& b) {
      return a.frequency < b.frequency;
    });
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const double f = sorted[i].frequency;
      while (lo < i && !(sorted[lo].frequency > f / rule.ratio)) ++lo;
      if (hi < i) hi = i;
      while (hi + 1 < count && sorted[hi + 1].frequency < f * rule.ratio) ++hi;
      const double modulus = sorted[i].amplitude();
      if (modulus == 0.0) continue;
      double neighbour = 0.0;
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j != i) neighbour = std::max(neighbour, sorted[j].amplitude());
      }
      if (modulus >= rule.dominance * neighbour) out.push_back(sorted[i]);
    }
    return out;
  }

  std::stable_sort(out.begin(), out.end(), [](const Dyad& a, const Dyad& b) {
    return a.frequency < b.frequency;
  });
  return out;
}

}  // namespace swm
