#include <string>
#include <string_view>

#include "swm/error.hpp"
#include "swm/io.hpp"
#include "text_util.hpp"

namespace swm::io {

SampledSignal read_signal_csv(const std::filesystem::path& path, std::optional<double> duration,
                              std::optional<double> sampling_rate) {
  if (!duration && !sampling_rate) {
    throw InvalidArgument("either the duration or the sampling rate must be given");
  }
  const std::string text = read_file(path);
  std::vector<double> values;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++line_number;
    const std::string_view line = detail::trim(std::string_view(text).substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto value = detail::parse_double(line);
    if (!value) {
      throw FormatError(path.string() + ": line " + std::to_string(line_number) +
                        ": cannot parse '" + std::string(line) + "' as a number");
    }
    values.push_back(*value);
  }
  if (values.empty()) throw FormatError(path.string() + ": no samples found");

  if (!duration) {
    if (!(*sampling_rate > 0.0)) throw InvalidArgument("sampling rate must be positive");
    duration = static_cast<double>(values.size()) / *sampling_rate;
  }
  return make_signal(std::move(values), *duration, sampling_rate);
}

void write_signal_csv(const SampledSignal& signal, const std::filesystem::path& path) {
  std::string out = "# samples=" + std::to_string(signal.size()) +
                    " duration=" + format_exact(signal.duration) + "\n";
  for (double v : signal.values) {
    out += format_exact(v);
    out += '\n';
  }
  write_file(path, out);
}

}  // namespace swm::io
