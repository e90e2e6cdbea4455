// swm: command-line front end for the square wave method library.
//
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 singular
// system, 4 file system error.

#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swm/swm.h"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSingular = 3;
constexpr int kExitIo = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_of(swm_status status) {
  switch (status) {
    case SWM_OK: return 0;
    case SWM_ERR_INVALID_ARGUMENT:
    case SWM_ERR_FORMAT: return kExitInvalid;
    case SWM_ERR_SINGULAR: return kExitSingular;
    case SWM_ERR_IO: return kExitIo;
    default: return 1;
  }
}

void check(swm_status status) {
  if (status != SWM_OK) throw Failure{exit_code_of(status), swm_last_error()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{kExitInvalid, message}; }

// RAII holder for a C handle.
template <typename T, void (*Destroy)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Destroy(ptr_); }
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using Signal = Handle<swm_signal, swm_signal_destroy>;
using Spectrum = Handle<swm_spectrum, swm_spectrum_destroy>;
using Image = Handle<swm_image, swm_image_destroy>;
using Coefficients = Handle<swm_coefficients, swm_coefficients_destroy>;
using Pattern = Handle<swm_pattern, swm_pattern_destroy>;

std::string shortest(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string fixed7(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7f", value);
  return buf;
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

swm_swt_format swt_format(const std::string& name, const std::string& path) {
  if (name == "json") return SWM_SWT_JSON;
  if (name == "csv") return SWM_SWT_CSV;
  if (name.empty()) return ends_with(path, ".csv") ? SWM_SWT_CSV : SWM_SWT_JSON;
  invalid("unknown format '" + name + "' (expected json or csv)");
}

swm_unit spatial_unit(const std::string& name) {
  if (name == "tile") return SWM_UNIT_TILE;
  if (name == "pixel") return SWM_UNIT_PIXEL;
  invalid("unknown unit '" + name + "' (expected tile or pixel)");
}

size_t one_based(long value, const char* flag) {
  if (value < 1) invalid(std::string(flag) + " must be at least 1");
  return static_cast<size_t>(value - 1);
}

// Subcommand options --------------------------------------------------------

struct SynthOptions {
  long n = 0;
  double dt = 4.0;
  double origin = 0.0;
  std::string out;
};

struct FrequencyOptions {
  long n = 0;
  double dt = 0.0;
  double fs = 0.0;
  std::string unit;
  long index = 0;
};

struct SignalOptions {
  std::string input;
  double dt = 0.0;
  double fs = 0.0;
  double fmax = 0.0;
  std::string out_swt;
  std::string format;
  std::string out_plot;
  bool prominent = false;
};

struct ImageOptions {
  std::string input;
  long tile = 0;
  bool full = false;
  bool pad = false;
  unsigned threads = 0;
  std::string out;
};

struct ApproximateOptions {
  std::string coeffs;
  long keep = 0;
  unsigned threads = 0;
  std::string out;
};

struct PatternOptions {
  std::string coeffs;
  long n = 0;
  long tile_column = 1;
  long tile_row = 1;
  long i = 0;
  long j = 0;
  unsigned scale = 1;
  std::string out;
};

struct TriadOptions {
  std::string coeffs;
  long tile_column = 1;
  long tile_row = 1;
  long keep = 0;
  std::string unit = "tile";
  std::string out;
  std::string format;
};

// Commands ------------------------------------------------------------------

int run_synth(const SynthOptions& o) {
  if (o.n < 1) invalid("--n must be at least 1");
  Signal signal;
  check(swm_signal_synth(static_cast<size_t>(o.n), o.dt, o.origin, signal.out()));
  if (o.out.empty()) {
    const double* values = swm_signal_values(signal.get());
    for (size_t k = 0; k < swm_signal_size(signal.get()); ++k) {
      std::printf("%s\n", shortest(values[k]).c_str());
    }
    return 0;
  }
  check(swm_signal_write_csv(signal.get(), o.out.c_str()));
  std::printf("wrote %ld samples to %s\n", o.n, o.out.c_str());
  return 0;
}

int run_frequencies(const FrequencyOptions& o) {
  const bool spatial = !o.unit.empty();
  size_t n = 0;
  std::vector<double> values;
  if (o.fs > 0.0) {
    if (spatial || o.n != 0) invalid("--fs combines with --dt only");
    if (!(o.dt > 0.0)) invalid("--fs requires --dt");
    check(swm_sample_count(o.fs, o.dt, &n));
    values.resize(n);
    check(swm_frequencies(n, o.dt, values.data()));
  } else {
    if (o.n < 1) invalid("--n must be at least 1");
    n = static_cast<size_t>(o.n);
    values.resize(n);
    if (spatial) {
      if (o.dt != 0.0) invalid("--unit and --dt are mutually exclusive");
      check(swm_spatial_frequencies(n, spatial_unit(o.unit), values.data()));
    } else {
      if (!(o.dt > 0.0)) invalid("--n requires --dt or --unit");
      check(swm_frequencies(n, o.dt, values.data()));
    }
  }
  if (o.index != 0) {
    const size_t i = one_based(o.index, "--i");
    if (i >= n) invalid("--i exceeds n = " + std::to_string(n));
    std::printf("%s\n", fixed7(values[i]).c_str());
    return 0;
  }
  for (size_t i = 0; i < n; ++i) std::printf("%zu %s\n", i + 1, fixed7(values[i]).c_str());
  return 0;
}

int run_analyze_signal(const SignalOptions& o) {
  if (o.dt <= 0.0 && o.fs <= 0.0) invalid("give --dt or --fs");
  Signal signal;
  check(swm_signal_read_csv(o.input.c_str(), o.dt, o.fs, signal.out()));
  Spectrum full;
  check(swm_analyze_signal(nullptr, signal.get(), full.out()));
  Spectrum filtered;
  const swm_spectrum* spectrum = full.get();
  if (o.fmax > 0.0) {
    check(swm_spectrum_filter(full.get(), o.fmax, filtered.out()));
    spectrum = filtered.get();
  }
  std::printf("analyzed %zu samples over %s s: %zu dyads\n", swm_signal_size(signal.get()),
              shortest(swm_signal_duration(signal.get())).c_str(), swm_spectrum_size(spectrum));
  if (!o.out_swt.empty()) {
    check(swm_spectrum_write(spectrum, o.out_swt.c_str(), swt_format(o.format, o.out_swt)));
    std::printf("transform written to %s\n", o.out_swt.c_str());
  }
  if (!o.out_plot.empty()) {
    check(swm_spectrum_write_plot(spectrum, o.out_plot.c_str()));
    std::printf("plot written to %s\n", o.out_plot.c_str());
  }
  if (o.prominent) {
    size_t count = 0;
    check(swm_spectrum_find_prominent(spectrum, nullptr, nullptr, 0, &count));
    std::vector<swm_dyad> dyads(count);
    check(swm_spectrum_find_prominent(spectrum, nullptr, dyads.data(), count, &count));
    for (const auto& d : dyads) {
      std::printf("prominent %zu %s %s\n", d.train + 1, fixed7(d.frequency).c_str(),
                  shortest(d.coefficient).c_str());
    }
  }
  return 0;
}

int run_analyze_image(const ImageOptions& o) {
  if (o.full == (o.tile != 0)) invalid("give exactly one of --tile and --full");
  if (o.tile < 0) invalid("--tile must be positive");
  Image image;
  check(swm_image_read(o.input.c_str(), image.out()));
  Coefficients coeffs;
  if (o.full) {
    check(swm_analyze_full(nullptr, image.get(), coeffs.out()));
  } else {
    check(swm_analyze_image(nullptr, image.get(), static_cast<size_t>(o.tile), o.pad ? 1 : 0,
                            o.threads, coeffs.out()));
  }
  size_t tw = 0, th = 0, columns = 0, rows = 0;
  check(swm_coefficients_layout(coeffs.get(), &tw, &th, &columns, &rows));
  check(swm_coefficients_write(coeffs.get(), o.out.c_str()));
  std::printf("analyzed %zux%zu image as %zu tiles of %zux%zu, written to %s\n",
              swm_image_width(image.get()), swm_image_height(image.get()), columns * rows, tw, th,
              o.out.c_str());
  return 0;
}

int run_approximate(const ApproximateOptions& o) {
  if (o.keep < 1) invalid("--keep must be at least 1");
  Coefficients coeffs;
  check(swm_coefficients_read(o.coeffs.c_str(), coeffs.out()));
  Image image;
  check(swm_approximate(coeffs.get(), static_cast<size_t>(o.keep), o.threads, image.out()));
  check(swm_image_write(image.get(), o.out.c_str()));
  std::printf("approximation keeping %ldx%ld trains per tile written to %s\n", o.keep, o.keep,
              o.out.c_str());
  return 0;
}

int run_pattern(const PatternOptions& o) {
  if (o.coeffs.empty() == (o.n == 0)) invalid("give exactly one of --coeffs and --n");
  const size_t p = one_based(o.i, "--i");
  const size_t q = one_based(o.j, "--j");
  Pattern pattern;
  if (!o.coeffs.empty()) {
    Coefficients coeffs;
    check(swm_coefficients_read(o.coeffs.c_str(), coeffs.out()));
    check(swm_pattern_from_coefficients(coeffs.get(), one_based(o.tile_column, "--tile-col"),
                                        one_based(o.tile_row, "--tile-row"), p, q,
                                        pattern.out()));
  } else {
    if (o.n < 1) invalid("--n must be at least 1");
    const auto n = static_cast<size_t>(o.n);
    check(swm_pattern_train(n, n, p, q, pattern.out()));
  }
  check(swm_pattern_write_png(pattern.get(), o.out.c_str(), o.scale));
  std::printf("pattern of trains (%ld, %ld) written to %s\n", o.i, o.j, o.out.c_str());
  return 0;
}

int run_triads(const TriadOptions& o) {
  if (o.keep < 0) invalid("--keep must not be negative");
  Coefficients coeffs;
  check(swm_coefficients_read(o.coeffs.c_str(), coeffs.out()));
  check(swm_triads_write(coeffs.get(), one_based(o.tile_column, "--tile-col"),
                         one_based(o.tile_row, "--tile-row"), static_cast<size_t>(o.keep),
                         spatial_unit(o.unit), o.out.c_str(), swt_format(o.format, o.out)));
  std::printf("triads written to %s\n", o.out.c_str());
  return 0;
}

void print_check(const char* name, int passed, const char* detail, void*) {
  std::printf("%s  %-40s %s\n", passed ? "PASS" : "FAIL", name, detail);
}

int run_verify(bool heavy) {
  int all_passed = 0;
  check(swm_verify_reference(heavy ? 1 : 0, print_check, nullptr, &all_passed));
  if (!all_passed) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: fixture verification failed\n");
    return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square wave method: transform signals and grayscale images"};
  app.require_subcommand(1);
  app.set_version_flag("--version", swm_version());

  SynthOptions synth;
  auto* cmd_synth = app.add_subcommand("synth", "Sample the built-in test signal");
  cmd_synth->add_option("--n", synth.n, "Number of samples")->required();
  cmd_synth->add_option("--dt", synth.dt, "Interval length in seconds")->capture_default_str();
  cmd_synth->add_option("--origin", synth.origin, "Start of the interval")->capture_default_str();
  cmd_synth->add_option("--out", synth.out, "Output CSV (default: standard output)");

  FrequencyOptions freq;
  auto* cmd_freq = app.add_subcommand("frequencies", "Print a frequency schedule");
  cmd_freq->add_option("--n", freq.n, "Number of trains");
  cmd_freq->add_option("--dt", freq.dt, "Interval length");
  cmd_freq->add_option("--fs", freq.fs, "Sampling rate (with --dt)");
  cmd_freq->add_option("--unit", freq.unit, "Spatial unit: tile or pixel");
  cmd_freq->add_option("--i", freq.index, "Print only train i (1-based)");

  SignalOptions sig;
  auto* cmd_sig = app.add_subcommand("analyze-signal", "Transform a sampled signal");
  cmd_sig->add_option("--input", sig.input, "CSV with one sample per line")->required();
  cmd_sig->add_option("--dt", sig.dt, "Interval length in seconds");
  cmd_sig->add_option("--fs", sig.fs, "Sampling rate in samples per second");
  cmd_sig->add_option("--fmax", sig.fmax, "Keep dyads up to this frequency");
  cmd_sig->add_option("--out-swt", sig.out_swt, "Transform document");
  cmd_sig->add_option("--format", sig.format, "json or csv (default from extension)");
  cmd_sig->add_option("--out-plot", sig.out_plot, "SVG stem plot");
  cmd_sig->add_flag("--prominent", sig.prominent, "List prominent dyads");

  ImageOptions img;
  auto* cmd_img = app.add_subcommand("analyze-image", "Compute tile coefficients of an image");
  cmd_img->add_option("--input", img.input, "PGM or 8-bit grayscale PNG")->required();
  cmd_img->add_option("--tile", img.tile, "Tile side in pixels");
  cmd_img->add_flag("--full", img.full, "Analyze the whole image as one block");
  cmd_img->add_flag("--pad", img.pad, "Replicate edges up to a tile multiple");
  cmd_img->add_option("--threads", img.threads, "Worker threads (0: all cores)");
  cmd_img->add_option("--out", img.out, "Coefficient archive (JSON)")->required();

  ApproximateOptions approx;
  auto* cmd_approx = app.add_subcommand("approximate", "Rebuild an image from low trains");
  cmd_approx->add_option("--coeffs", approx.coeffs, "Coefficient archive")->required();
  cmd_approx->add_option("--keep", approx.keep, "Trains kept per axis")->required();
  cmd_approx->add_option("--threads", approx.threads, "Worker threads (0: all cores)");
  cmd_approx->add_option("--out", approx.out, "Output image (.png, .pgm, .pgma)")->required();

  PatternOptions pat;
  auto* cmd_pat = app.add_subcommand("pattern", "Render a contribution pattern");
  cmd_pat->add_option("--coeffs", pat.coeffs, "Coefficient archive");
  cmd_pat->add_option("--tile-col", pat.tile_column, "Tile column (1-based)");
  cmd_pat->add_option("--tile-row", pat.tile_row, "Tile row from the bottom (1-based)");
  cmd_pat->add_option("--n", pat.n, "Block side, for a plain train pattern");
  cmd_pat->add_option("--i", pat.i, "x-axis train (1-based)")->required();
  cmd_pat->add_option("--j", pat.j, "y-axis train (1-based)")->required();
  cmd_pat->add_option("--scale", pat.scale, "Pixels per cell")->capture_default_str();
  cmd_pat->add_option("--out", pat.out, "Output PNG")->required();

  TriadOptions tri;
  auto* cmd_tri = app.add_subcommand("triads", "Write the triads of one tile");
  cmd_tri->add_option("--coeffs", tri.coeffs, "Coefficient archive")->required();
  cmd_tri->add_option("--tile-col", tri.tile_column, "Tile column (1-based)");
  cmd_tri->add_option("--tile-row", tri.tile_row, "Tile row from the bottom (1-based)");
  cmd_tri->add_option("--keep", tri.keep, "Trains kept per axis (0: all)");
  cmd_tri->add_option("--unit", tri.unit, "tile or pixel")->capture_default_str();
  cmd_tri->add_option("--out", tri.out, "Transform document")->required();
  cmd_tri->add_option("--format", tri.format, "json or csv (default from extension)");

  bool heavy = false;
  auto* cmd_verify = app.add_subcommand("verify", "Check the built-in worked examples");
  cmd_verify->add_flag("--heavy", heavy, "Include the n=1000 and n=2000 signal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }

  try {
    if (cmd_synth->parsed()) return run_synth(synth);
    if (cmd_freq->parsed()) return run_frequencies(freq);
    if (cmd_sig->parsed()) return run_analyze_signal(sig);
    if (cmd_img->parsed()) return run_analyze_image(img);
    if (cmd_approx->parsed()) return run_approximate(approx);
    if (cmd_pat->parsed()) return run_pattern(pat);
    if (cmd_tri->parsed()) return run_triads(tri);
    if (cmd_verify->parsed()) return run_verify(heavy);
  } catch (const Failure& f) {
    std::fflush(stdout);
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.exit_code;
  }
  return kExitInvalid;
}
