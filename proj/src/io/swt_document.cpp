#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "swm/error.hpp"
#include "swm/io.hpp"
#include "text_util.hpp"

namespace swm::io {

namespace {

using nlohmann::json;
using image::Spectrum2D;
using image::Triad;

constexpr int kFrequencyDecimals = 7;

const char* unit_name(SpatialUnit unit) {
  return unit == SpatialUnit::kPixel ? "pixel" : "tile";
}

SpatialUnit parse_unit(const std::string& name) {
  if (name == "tile") return SpatialUnit::kTile;
  if (name == "pixel") return SpatialUnit::kPixel;
  throw FormatError("unknown spatial unit '" + name + "'");
}

void check_not_empty(const SwtDocument& document) {
  const bool empty = document.is_1d() ? document.spectrum_1d().dyads.empty()
                                      : document.spectrum_2d().triads.empty();
  if (empty) throw InvalidArgument("cannot write an empty spectrum");
}

std::string to_json(const SwtDocument& document) {
  json j;
  j["format"] = "swt";
  j["version"] = kSwtVersion;
  if (document.is_1d()) {
    const auto& s = document.spectrum_1d();
    j["kind"] = "swt1d";
    j["order"] = s.order;
    j["duration"] = s.duration;
    json dyads = json::array();
    for (const Dyad& d : s.dyads) {
      dyads.push_back({{"i", d.train + 1}, {"frequency", d.frequency}, {"coefficient", d.coefficient}});
    }
    j["dyads"] = std::move(dyads);
  } else {
    const auto& s = document.spectrum_2d();
    j["kind"] = "swt2d";
    j["nx"] = s.nx;
    j["ny"] = s.ny;
    j["unit"] = unit_name(s.unit);
    json triads = json::array();
    for (const Triad& t : s.triads) {
      triads.push_back({{"i", t.p + 1},
                        {"j", t.q + 1},
                        {"fx", t.fx},
                        {"fy", t.fy},
                        {"coefficient", t.coefficient}});
    }
    j["triads"] = std::move(triads);
  }
  return j.dump(1) + "\n";
}

std::string to_csv(const SwtDocument& document) {
  std::string out;
  if (document.is_1d()) {
    const auto& s = document.spectrum_1d();
    out += "# swt1d version=" + std::to_string(kSwtVersion) + " order=" +
           std::to_string(s.order) + " duration=" + format_exact(s.duration) + "\n";
    out += "# i,frequency,coefficient,frequency_exact\n";
    for (const Dyad& d : s.dyads) {
      out += std::to_string(d.train + 1) + "," + format_fixed(d.frequency, kFrequencyDecimals) +
             "," + format_exact(d.coefficient) + "," + format_exact(d.frequency) + "\n";
    }
  } else {
    const auto& s = document.spectrum_2d();
    out += "# swt2d version=" + std::to_string(kSwtVersion) + " nx=" + std::to_string(s.nx) +
           " ny=" + std::to_string(s.ny) + " unit=" + unit_name(s.unit) + "\n";
    out += "# i,j,fx,fy,coefficient,fx_exact,fy_exact\n";
    for (const Triad& t : s.triads) {
      out += std::to_string(t.p + 1) + "," + std::to_string(t.q + 1) + "," +
             format_fixed(t.fx, kFrequencyDecimals) + "," +
             format_fixed(t.fy, kFrequencyDecimals) + "," + format_exact(t.coefficient) + "," +
             format_exact(t.fx) + "," + format_exact(t.fy) + "\n";
    }
  }
  return out;
}

std::size_t to_index(double v, const char* what) {
  if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw FormatError(std::string("SWT: invalid ") + what);
  }
  return static_cast<std::size_t>(v) - 1;
}

std::size_t json_index(const json& value) {
  const auto i = value.get<long long>();
  if (i < 1) throw FormatError("SWT: train indices start at 1");
  return static_cast<std::size_t>(i - 1);
}

void check_version(long long version) {
  if (version != kSwtVersion) {
    throw FormatError("SWT: unsupported document version " + std::to_string(version) +
                      " (expected " + std::to_string(kSwtVersion) + ")");
  }
}

SwtDocument from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    if (j.value("format", "") != "swt") throw FormatError("SWT: not an swt document");
    check_version(j.at("version").get<long long>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "swt1d") {
      Spectrum1D s;
      s.order = j.at("order").get<std::size_t>();
      s.duration = j.at("duration").get<double>();
      for (const auto& d : j.at("dyads")) {
        s.dyads.push_back(Dyad{json_index(d.at("i")), d.at("frequency").get<double>(),
                               d.at("coefficient").get<double>()});
      }
      if (s.dyads.empty()) throw FormatError("SWT: document has no dyads");
      return SwtDocument{std::move(s)};
    }
    if (kind == "swt2d") {
      Spectrum2D s;
      s.nx = j.at("nx").get<std::size_t>();
      s.ny = j.at("ny").get<std::size_t>();
      s.unit = parse_unit(j.at("unit").get<std::string>());
      for (const auto& t : j.at("triads")) {
        s.triads.push_back(Triad{json_index(t.at("i")), json_index(t.at("j")),
                                 t.at("fx").get<double>(), t.at("fy").get<double>(),
                                 t.at("coefficient").get<double>()});
      }
      if (s.triads.empty()) throw FormatError("SWT: document has no triads");
      return SwtDocument{std::move(s)};
    }
    throw FormatError("SWT: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("SWT: malformed JSON document: ") + e.what());
  }
}

std::vector<double> split_numbers(std::string_view line, std::size_t line_number,
                                  std::size_t expected) {
  std::vector<double> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const auto token = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    const auto value = detail::parse_double(token);
    if (!value) {
      throw FormatError("SWT: line " + std::to_string(line_number) + ": invalid field '" +
                        std::string(detail::trim(token)) + "'");
    }
    fields.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != expected) {
    throw FormatError("SWT: line " + std::to_string(line_number) + ": expected " +
                      std::to_string(expected) + " fields, found " +
                      std::to_string(fields.size()));
  }
  return fields;
}

SwtDocument from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string hash, kind;
  hs >> hash >> kind;
  if (hash != "#" || (kind != "swt1d" && kind != "swt2d")) {
    throw FormatError("SWT: missing '# swt1d' / '# swt2d' header line");
  }
  std::map<std::string, std::string> meta;
  for (std::string kv; hs >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw FormatError("SWT: malformed header field '" + kv + "'");
    meta[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto field = [&](const char* key) -> const std::string& {
    auto it = meta.find(key);
    if (it == meta.end()) throw FormatError(std::string("SWT: header lacks '") + key + "'");
    return it->second;
  };
  auto number = [&](const char* key) {
    const auto v = detail::parse_double(field(key));
    if (!v) throw FormatError(std::string("SWT: header field '") + key + "' is not a number");
    return *v;
  };
  check_version(static_cast<long long>(number("version")));

  std::string line;
  std::size_t line_number = 1;
  if (kind == "swt1d") {
    Spectrum1D s;
    s.order = to_index(number("order"), "order") + 1;
    s.duration = number("duration");
    while (std::getline(in, line)) {
      ++line_number;
      const auto t = detail::trim(line);
      if (t.empty() || t.front() == '#') continue;
      const auto f = split_numbers(t, line_number, 4);
      s.dyads.push_back(Dyad{to_index(f[0], "train index"), f[3], f[2]});
    }
    if (s.dyads.empty()) throw FormatError("SWT: document has no dyads");
    return SwtDocument{std::move(s)};
  }
  Spectrum2D s;
  s.nx = to_index(number("nx"), "nx") + 1;
  s.ny = to_index(number("ny"), "ny") + 1;
  s.unit = parse_unit(field("unit"));
  while (std::getline(in, line)) {
    ++line_number;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto f = split_numbers(t, line_number, 7);
    s.triads.push_back(Triad{to_index(f[0], "train index"), to_index(f[1], "train index"),
                             f[5], f[6], f[4]});
  }
  if (s.triads.empty()) throw FormatError("SWT: document has no triads");
  return SwtDocument{std::move(s)};
}

}  // namespace

std::string format_swt(const SwtDocument& document, SwtFormat format) {
  check_not_empty(document);
  return format == SwtFormat::kJson ? to_json(document) : to_csv(document);
}

void write_swt(const SwtDocument& document, const std::filesystem::path& path, SwtFormat format) {
  write_file(path, format_swt(document, format));
}

SwtDocument parse_swt(const std::string& text) {
  const auto t = detail::trim(text);
  if (t.empty()) throw FormatError("SWT: empty document");
  if (t.front() == '{') return from_json(text);
  return from_csv(text);
}

SwtDocument read_swt(const std::filesystem::path& path) { return parse_swt(read_file(path)); }

}  // namespace swm::io
