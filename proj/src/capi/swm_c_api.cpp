#include "swm/swm.h"

#include <algorithm>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "swm/error.hpp"
#include "swm/frequency.hpp"
#include "swm/image.hpp"
#include "swm/io.hpp"
#include "swm/reference.hpp"
#include "swm/signal.hpp"
#include "swm/solver.hpp"

struct swm_cache {
  swm::SolverCache cache;
};
struct swm_signal {
  swm::SampledSignal signal;
};
struct swm_spectrum {
  swm::Spectrum1D spectrum;
};
struct swm_image {
  swm::image::GrayImage image;
};
struct swm_coefficients {
  swm::image::TiledCoefficients tiles;
};
struct swm_pattern {
  swm::image::SignPattern2D pattern;
};

namespace {

thread_local std::string last_error;

swm_status status_of(swm::ErrorCode code) {
  switch (code) {
    case swm::ErrorCode::kInvalidArgument: return SWM_ERR_INVALID_ARGUMENT;
    case swm::ErrorCode::kSingularSystem: return SWM_ERR_SINGULAR;
    case swm::ErrorCode::kIo: return SWM_ERR_IO;
    case swm::ErrorCode::kFormat: return SWM_ERR_FORMAT;
  }
  return SWM_ERR_INTERNAL;
}

template <typename Body>
swm_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return SWM_OK;
  } catch (const swm::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SWM_ERR_INTERNAL;
}

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) throw swm::InvalidArgument(std::string(what) + " must not be null");
}

swm::SolverCache& cache_of(swm_cache* cache) {
  return cache ? cache->cache : swm::default_solver_cache();
}

std::optional<double> positive(double value) {
  return value > 0.0 ? std::optional<double>(value) : std::nullopt;
}

swm::SpatialUnit unit_of(swm_unit unit) {
  if (unit == SWM_UNIT_TILE) return swm::SpatialUnit::kTile;
  if (unit == SWM_UNIT_PIXEL) return swm::SpatialUnit::kPixel;
  throw swm::InvalidArgument("unknown spatial unit");
}

swm::io::SwtFormat format_of(swm_swt_format format) {
  if (format == SWM_SWT_JSON) return swm::io::SwtFormat::kJson;
  if (format == SWM_SWT_CSV) return swm::io::SwtFormat::kCsv;
  throw swm::InvalidArgument("unknown SWT format");
}

swm_dyad to_c(const swm::Dyad& d) { return swm_dyad{d.train, d.frequency, d.coefficient}; }

const swm::image::CoefficientGrid& tile_of(const swm_coefficients* c, size_t k, size_t l) {
  require(c, "coefficients");
  if (k >= c->tiles.columns || l >= c->tiles.rows) {
    throw swm::InvalidArgument("tile (" + std::to_string(k) + ", " + std::to_string(l) +
                               ") is outside a " + std::to_string(c->tiles.columns) + "x" +
                               std::to_string(c->tiles.rows) + " grid");
  }
  return c->tiles.tile(k, l);
}

}  // namespace

extern "C" {

const char* swm_version(void) { return "1.0.0"; }
const char* swm_last_error(void) { return last_error.c_str(); }

swm_status swm_cache_create(swm_cache** out) {
  return guard([&] {
    require(out, "out");
    *out = new swm_cache();
  });
}

void swm_cache_destroy(swm_cache* cache) { delete cache; }

swm_status swm_cache_condition(swm_cache* cache, size_t n, double* out) {
  return guard([&] {
    require(out, "out");
    *out = cache_of(cache).condition_estimate(n);
  });
}

swm_status swm_sign_matrix(size_t n, int8_t* out) {
  return guard([&] {
    require(out, "out");
    const swm::SignMatrix signs(n);
    for (size_t k = 0; k < n; ++k) std::copy_n(signs.row(k).data(), n, out + k * n);
  });
}

swm_status swm_frequencies(size_t n, double interval, double* out) {
  return guard([&] {
    require(out, "out");
    const auto f = swm::frequencies_1d(n, interval);
    std::copy(f.values.begin(), f.values.end(), out);
  });
}

swm_status swm_sample_count(double sampling_rate, double duration, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = swm::sample_count(sampling_rate, duration);
  });
}

swm_status swm_spatial_frequencies(size_t n, swm_unit unit, double* out) {
  return guard([&] {
    require(out, "out");
    const auto f = swm::spatial_frequencies(n, unit_of(unit));
    std::copy(f.values.begin(), f.values.end(), out);
  });
}

swm_status swm_signal_create(const double* values, size_t n, double duration,
                             double sampling_rate, swm_signal** out) {
  return guard([&] {
    require(out, "out");
    if (n > 0) require(values, "values");
    std::vector<double> copy(values, values + n);
    auto signal = swm::make_signal(std::move(copy), duration, positive(sampling_rate));
    *out = new swm_signal{std::move(signal)};
  });
}

swm_status swm_signal_synth(size_t n, double duration, double origin, swm_signal** out) {
  return guard([&] {
    require(out, "out");
    *out = new swm_signal{swm::synth_reference_signal(n, duration, origin)};
  });
}

swm_status swm_signal_read_csv(const char* path, double duration, double sampling_rate,
                               swm_signal** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new swm_signal{swm::io::read_signal_csv(path, positive(duration), positive(sampling_rate))};
  });
}

swm_status swm_signal_write_csv(const swm_signal* signal, const char* path) {
  return guard([&] {
    require(signal, "signal");
    require(path, "path");
    swm::io::write_signal_csv(signal->signal, path);
  });
}

size_t swm_signal_size(const swm_signal* signal) { return signal ? signal->signal.size() : 0; }
const double* swm_signal_values(const swm_signal* signal) {
  return signal ? signal->signal.values.data() : nullptr;
}
double swm_signal_duration(const swm_signal* signal) {
  return signal ? signal->signal.duration : 0.0;
}
void swm_signal_destroy(swm_signal* signal) { delete signal; }

swm_status swm_analyze_signal(swm_cache* cache, const swm_signal* signal, swm_spectrum** out) {
  return guard([&] {
    require(signal, "signal");
    require(out, "out");
    *out = new swm_spectrum{swm::analyze_1d(signal->signal, cache_of(cache))};
  });
}

swm_status swm_spectrum_filter(const swm_spectrum* spectrum, double max_frequency,
                               swm_spectrum** out) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    *out = new swm_spectrum{swm::filter_by_frequency(spectrum->spectrum, max_frequency)};
  });
}

size_t swm_spectrum_size(const swm_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.size() : 0;
}
size_t swm_spectrum_order(const swm_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.order : 0;
}

swm_status swm_spectrum_dyad(const swm_spectrum* spectrum, size_t index, swm_dyad* out) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    if (index >= spectrum->spectrum.size()) throw swm::InvalidArgument("dyad index out of range");
    *out = to_c(spectrum->spectrum.dyads[index]);
  });
}

swm_status swm_spectrum_reconstruct(const swm_spectrum* spectrum, size_t keep, double* out) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(out, "out");
    const auto values = swm::reconstruct_1d(spectrum->spectrum, keep);
    std::copy(values.begin(), values.end(), out);
  });
}

void swm_prominence_rule_default(swm_prominence_rule* rule) {
  if (!rule) return;
  const swm::ProminenceRule defaults;
  rule->neighborhood = defaults.neighborhood == swm::ProminenceRule::Neighborhood::kIndexWindow
                           ? SWM_NEIGHBORHOOD_INDEX_WINDOW
                           : SWM_NEIGHBORHOOD_FREQUENCY_RATIO;
  rule->window = defaults.window;
  rule->ratio = defaults.ratio;
  rule->dominance = defaults.dominance;
}

swm_status swm_spectrum_find_prominent(const swm_spectrum* spectrum,
                                       const swm_prominence_rule* rule, swm_dyad* out,
                                       size_t capacity, size_t* count) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(count, "count");
    if (capacity > 0) require(out, "out");
    swm::ProminenceRule native;
    if (rule) {
      if (rule->neighborhood == SWM_NEIGHBORHOOD_INDEX_WINDOW) {
        native = swm::ProminenceRule::index_window(rule->window, rule->dominance);
      } else if (rule->neighborhood == SWM_NEIGHBORHOOD_FREQUENCY_RATIO) {
        native = swm::ProminenceRule::frequency_ratio(rule->ratio, rule->dominance);
      } else {
        throw swm::InvalidArgument("unknown prominence neighbourhood");
      }
    }
    const auto found = swm::find_prominent(spectrum->spectrum, native);
    *count = found.size();
    for (size_t i = 0; i < std::min(capacity, found.size()); ++i) out[i] = to_c(found[i]);
  });
}

swm_status swm_spectrum_write(const swm_spectrum* spectrum, const char* path,
                              swm_swt_format format) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(path, "path");
    swm::io::write_swt(swm::io::SwtDocument{spectrum->spectrum}, path, format_of(format));
  });
}

swm_status swm_spectrum_read(const char* path, swm_spectrum** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    auto document = swm::io::read_swt(path);
    if (!document.is_1d()) throw swm::FormatError(std::string(path) + ": not a 1D transform");
    *out = new swm_spectrum{document.spectrum_1d()};
  });
}

swm_status swm_spectrum_write_plot(const swm_spectrum* spectrum, const char* path) {
  return guard([&] {
    require(spectrum, "spectrum");
    require(path, "path");
    swm::io::emit_plot(swm::io::spectrum_plot(spectrum->spectrum), path);
  });
}

void swm_spectrum_destroy(swm_spectrum* spectrum) { delete spectrum; }

swm_status swm_image_create(size_t width, size_t height, const uint8_t* pixels, swm_image** out) {
  return guard([&] {
    require(out, "out");
    require(pixels, "pixels");
    std::vector<std::uint8_t> copy(pixels, pixels + width * height);
    *out = new swm_image{swm::image::GrayImage(width, height, std::move(copy))};
  });
}

swm_status swm_image_read(const char* path, swm_image** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new swm_image{swm::io::read_gray_image(path)};
  });
}

swm_status swm_image_write(const swm_image* image, const char* path) {
  return guard([&] {
    require(image, "image");
    require(path, "path");
    swm::io::write_gray_image(image->image, path);
  });
}

size_t swm_image_width(const swm_image* image) { return image ? image->image.width() : 0; }
size_t swm_image_height(const swm_image* image) { return image ? image->image.height() : 0; }
const uint8_t* swm_image_pixels(const swm_image* image) {
  return image ? image->image.pixels().data() : nullptr;
}
void swm_image_destroy(swm_image* image) { delete image; }

swm_status swm_analyze_image(swm_cache* cache, const swm_image* image, size_t tile,
                             int pad_edges, unsigned threads, swm_coefficients** out) {
  return guard([&] {
    require(image, "image");
    require(out, "out");
    swm::image::TilingOptions options;
    options.pad_edges = pad_edges != 0;
    options.threads = threads;
    *out = new swm_coefficients{
        swm::image::analyze_image(image->image, tile, cache_of(cache), options)};
  });
}

swm_status swm_analyze_full(swm_cache* cache, const swm_image* image, swm_coefficients** out) {
  return guard([&] {
    require(image, "image");
    require(out, "out");
    swm::image::TiledCoefficients tiles;
    tiles.tile_width = tiles.image_width = image->image.width();
    tiles.tile_height = tiles.image_height = image->image.height();
    tiles.columns = tiles.rows = 1;
    tiles.tiles.push_back(swm::image::analyze_full(image->image, cache_of(cache)));
    *out = new swm_coefficients{std::move(tiles)};
  });
}

swm_status swm_coefficients_read(const char* path, swm_coefficients** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new swm_coefficients{swm::io::read_coefficients(path)};
  });
}

swm_status swm_coefficients_write(const swm_coefficients* coefficients, const char* path) {
  return guard([&] {
    require(coefficients, "coefficients");
    require(path, "path");
    swm::io::write_coefficients(coefficients->tiles, path);
  });
}

swm_status swm_coefficients_layout(const swm_coefficients* coefficients, size_t* tile_width,
                                   size_t* tile_height, size_t* columns, size_t* rows) {
  return guard([&] {
    require(coefficients, "coefficients");
    const auto& t = coefficients->tiles;
    if (tile_width) *tile_width = t.tile_width;
    if (tile_height) *tile_height = t.tile_height;
    if (columns) *columns = t.columns;
    if (rows) *rows = t.rows;
  });
}

swm_status swm_coefficients_get(const swm_coefficients* coefficients, size_t k, size_t l,
                                size_t p, size_t q, double* out) {
  return guard([&] {
    require(out, "out");
    const auto& grid = tile_of(coefficients, k, l);
    if (p >= grid.nx() || q >= grid.ny()) throw swm::InvalidArgument("train pair out of range");
    *out = grid(p, q);
  });
}

swm_status swm_approximate(const swm_coefficients* coefficients, size_t keep, unsigned threads,
                           swm_image** out) {
  return guard([&] {
    require(coefficients, "coefficients");
    require(out, "out");
    *out = new swm_image{swm::image::approximate(coefficients->tiles, keep, threads)};
  });
}

swm_status swm_triads_write(const swm_coefficients* coefficients, size_t k, size_t l, size_t keep,
                            swm_unit unit, const char* path, swm_swt_format format) {
  return guard([&] {
    require(path, "path");
    const auto& grid = tile_of(coefficients, k, l);
    const auto spectrum = swm::image::triads(grid, unit_of(unit), keep, keep);
    swm::io::write_swt(swm::io::SwtDocument{spectrum}, path, format_of(format));
  });
}

void swm_coefficients_destroy(swm_coefficients* coefficients) { delete coefficients; }

swm_status swm_pattern_from_coefficients(const swm_coefficients* coefficients, size_t k, size_t l,
                                         size_t p, size_t q, swm_pattern** out) {
  return guard([&] {
    require(out, "out");
    *out = new swm_pattern{swm::image::contribution_pattern(tile_of(coefficients, k, l), p, q)};
  });
}

swm_status swm_pattern_train(size_t nx, size_t ny, size_t p, size_t q, swm_pattern** out) {
  return guard([&] {
    require(out, "out");
    *out = new swm_pattern{swm::image::train_pattern(nx, ny, p, q)};
  });
}

size_t swm_pattern_width(const swm_pattern* pattern) {
  return pattern ? pattern->pattern.width() : 0;
}
size_t swm_pattern_height(const swm_pattern* pattern) {
  return pattern ? pattern->pattern.height() : 0;
}

swm_status swm_pattern_value(const swm_pattern* pattern, size_t x, size_t y, int* out) {
  return guard([&] {
    require(pattern, "pattern");
    require(out, "out");
    if (x >= pattern->pattern.width() || y >= pattern->pattern.height()) {
      throw swm::InvalidArgument("pattern position out of range");
    }
    *out = pattern->pattern.at(x, y);
  });
}

swm_status swm_pattern_write_png(const swm_pattern* pattern, const char* path, unsigned scale) {
  return guard([&] {
    require(pattern, "pattern");
    require(path, "path");
    swm::io::write_pattern_image(pattern->pattern, path, scale);
  });
}

void swm_pattern_destroy(swm_pattern* pattern) { delete pattern; }

swm_status swm_verify_reference(int heavy, swm_check_callback callback, void* user,
                                int* all_passed) {
  return guard([&] {
    require(all_passed, "all_passed");
    swm::reference::CheckOptions options;
    options.heavy = heavy != 0;
    bool ok = true;
    for (const auto& check : swm::reference::run_checks(options)) {
      ok = ok && check.passed;
      if (callback) callback(check.name.c_str(), check.passed ? 1 : 0, check.detail.c_str(), user);
    }
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
