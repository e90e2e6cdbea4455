/* C interface to the square wave method library.
 *
 * Every object is an opaque handle released with its *_destroy function
 * (NULL is accepted). Functions that can fail return swm_status; on failure
 * swm_last_error() describes the problem for the calling thread. Indices in
 * this interface are 0-based. Functions taking an swm_cache* accept NULL to
 * use a process-wide cache.
 */
#ifndef SWM_SWM_H
#define SWM_SWM_H

#include <stddef.h>
#include <stdint.h>

#if defined(SWM_BUILDING_LIBRARY)
#define SWM_API __attribute__((visibility("default")))
#else
#define SWM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swm_status {
  SWM_OK = 0,
  SWM_ERR_INVALID_ARGUMENT = 1,
  SWM_ERR_SINGULAR = 2,
  SWM_ERR_IO = 3,
  SWM_ERR_FORMAT = 4,
  SWM_ERR_INTERNAL = 5
} swm_status;

typedef enum swm_unit { SWM_UNIT_TILE = 0, SWM_UNIT_PIXEL = 1 } swm_unit;
typedef enum swm_swt_format { SWM_SWT_JSON = 0, SWM_SWT_CSV = 1 } swm_swt_format;
typedef enum swm_neighborhood {
  SWM_NEIGHBORHOOD_INDEX_WINDOW = 0,
  SWM_NEIGHBORHOOD_FREQUENCY_RATIO = 1
} swm_neighborhood;

typedef struct swm_cache swm_cache;
typedef struct swm_signal swm_signal;
typedef struct swm_spectrum swm_spectrum;
typedef struct swm_image swm_image;
typedef struct swm_coefficients swm_coefficients;
typedef struct swm_pattern swm_pattern;

typedef struct swm_dyad {
  size_t train;
  double frequency;
  double coefficient;
} swm_dyad;

typedef struct swm_prominence_rule {
  swm_neighborhood neighborhood;
  size_t window;
  double ratio;
  double dominance;
} swm_prominence_rule;

SWM_API const char* swm_version(void);
/* Message of the last failure on this thread; empty string if none. */
SWM_API const char* swm_last_error(void);

/* Solver cache */
SWM_API swm_status swm_cache_create(swm_cache** out);
SWM_API void swm_cache_destroy(swm_cache* cache);
SWM_API swm_status swm_cache_condition(swm_cache* cache, size_t n, double* out);

/* Sign matrix and frequency schedules. Output buffers hold n (or n*n) items. */
SWM_API swm_status swm_sign_matrix(size_t n, int8_t* out);
SWM_API swm_status swm_frequencies(size_t n, double interval, double* out);
SWM_API swm_status swm_sample_count(double sampling_rate, double duration, size_t* out);
SWM_API swm_status swm_spatial_frequencies(size_t n, swm_unit unit, double* out);

/* Signals. A non-positive duration or sampling rate means "not given". */
SWM_API swm_status swm_signal_create(const double* values, size_t n, double duration,
                                     double sampling_rate, swm_signal** out);
SWM_API swm_status swm_signal_synth(size_t n, double duration, double origin, swm_signal** out);
SWM_API swm_status swm_signal_read_csv(const char* path, double duration, double sampling_rate,
                                       swm_signal** out);
SWM_API swm_status swm_signal_write_csv(const swm_signal* signal, const char* path);
SWM_API size_t swm_signal_size(const swm_signal* signal);
SWM_API const double* swm_signal_values(const swm_signal* signal);
SWM_API double swm_signal_duration(const swm_signal* signal);
SWM_API void swm_signal_destroy(swm_signal* signal);

/* One-dimensional spectra */
SWM_API swm_status swm_analyze_signal(swm_cache* cache, const swm_signal* signal,
                                      swm_spectrum** out);
SWM_API swm_status swm_spectrum_filter(const swm_spectrum* spectrum, double max_frequency,
                                       swm_spectrum** out);
SWM_API size_t swm_spectrum_size(const swm_spectrum* spectrum);
SWM_API size_t swm_spectrum_order(const swm_spectrum* spectrum);
SWM_API swm_status swm_spectrum_dyad(const swm_spectrum* spectrum, size_t index, swm_dyad* out);
/* Writes swm_spectrum_order() values using trains 0 .. keep-1. */
SWM_API swm_status swm_spectrum_reconstruct(const swm_spectrum* spectrum, size_t keep,
                                            double* out);
SWM_API void swm_prominence_rule_default(swm_prominence_rule* rule);
/* Copies up to `capacity` dyads; *count receives the total number found.
 * A NULL rule uses the default. */
SWM_API swm_status swm_spectrum_find_prominent(const swm_spectrum* spectrum,
                                               const swm_prominence_rule* rule, swm_dyad* out,
                                               size_t capacity, size_t* count);
SWM_API swm_status swm_spectrum_write(const swm_spectrum* spectrum, const char* path,
                                      swm_swt_format format);
SWM_API swm_status swm_spectrum_read(const char* path, swm_spectrum** out);
SWM_API swm_status swm_spectrum_write_plot(const swm_spectrum* spectrum, const char* path);
SWM_API void swm_spectrum_destroy(swm_spectrum* spectrum);

/* Grayscale images; pixel rows are stored bottom row first. */
SWM_API swm_status swm_image_create(size_t width, size_t height, const uint8_t* pixels,
                                    swm_image** out);
SWM_API swm_status swm_image_read(const char* path, swm_image** out);
/* Format from the extension: .png, .pgm (binary) or .pgma (ASCII). */
SWM_API swm_status swm_image_write(const swm_image* image, const char* path);
SWM_API size_t swm_image_width(const swm_image* image);
SWM_API size_t swm_image_height(const swm_image* image);
SWM_API const uint8_t* swm_image_pixels(const swm_image* image);
SWM_API void swm_image_destroy(swm_image* image);

/* Image coefficients. threads == 0 uses every hardware thread. */
SWM_API swm_status swm_analyze_image(swm_cache* cache, const swm_image* image, size_t tile,
                                     int pad_edges, unsigned threads, swm_coefficients** out);
/* Single block covering the whole image, which may be rectangular. */
SWM_API swm_status swm_analyze_full(swm_cache* cache, const swm_image* image,
                                    swm_coefficients** out);
SWM_API swm_status swm_coefficients_read(const char* path, swm_coefficients** out);
SWM_API swm_status swm_coefficients_write(const swm_coefficients* coefficients, const char* path);
SWM_API swm_status swm_coefficients_layout(const swm_coefficients* coefficients,
                                           size_t* tile_width, size_t* tile_height,
                                           size_t* columns, size_t* rows);
/* C(p, q) of tile (k, l); tile rows count from the bottom. */
SWM_API swm_status swm_coefficients_get(const swm_coefficients* coefficients, size_t k, size_t l,
                                        size_t p, size_t q, double* out);
SWM_API swm_status swm_approximate(const swm_coefficients* coefficients, size_t keep,
                                   unsigned threads, swm_image** out);
/* Triads of tile (k, l) truncated to keep x keep (0 keeps all). */
SWM_API swm_status swm_triads_write(const swm_coefficients* coefficients, size_t k, size_t l,
                                    size_t keep, swm_unit unit, const char* path,
                                    swm_swt_format format);
SWM_API void swm_coefficients_destroy(swm_coefficients* coefficients);

/* Contribution patterns: +1, -1 or 0 per pixel. */
SWM_API swm_status swm_pattern_from_coefficients(const swm_coefficients* coefficients, size_t k,
                                                 size_t l, size_t p, size_t q, swm_pattern** out);
SWM_API swm_status swm_pattern_train(size_t nx, size_t ny, size_t p, size_t q, swm_pattern** out);
SWM_API size_t swm_pattern_width(const swm_pattern* pattern);
SWM_API size_t swm_pattern_height(const swm_pattern* pattern);
SWM_API swm_status swm_pattern_value(const swm_pattern* pattern, size_t x, size_t y, int* out);
SWM_API swm_status swm_pattern_write_png(const swm_pattern* pattern, const char* path,
                                         unsigned scale);
SWM_API void swm_pattern_destroy(swm_pattern* pattern);

/* Runs the built-in fixture checks; the callback sees one call per check. */
typedef void (*swm_check_callback)(const char* name, int passed, const char* detail, void* user);
SWM_API swm_status swm_verify_reference(int heavy, swm_check_callback callback, void* user,
                                        int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SWM_SWM_H */
