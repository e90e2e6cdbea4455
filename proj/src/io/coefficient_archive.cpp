#include <json.hpp>

#include <string>

#include "swm/error.hpp"
#include "swm/io.hpp"

namespace swm::io {

using nlohmann::json;
using image::CoefficientGrid;
using image::TiledCoefficients;

std::string format_coefficients(const TiledCoefficients& tiles) {
  if (tiles.tiles.empty() || tiles.tiles.size() != tiles.columns * tiles.rows) {
    throw InvalidArgument("coefficient set is empty or inconsistent");
  }
  json j;
  j["format"] = "swm-coefficients";
  j["version"] = kArchiveVersion;
  j["tile_width"] = tiles.tile_width;
  j["tile_height"] = tiles.tile_height;
  j["columns"] = tiles.columns;
  j["rows"] = tiles.rows;
  j["image_width"] = tiles.image_width;
  j["image_height"] = tiles.image_height;
  json list = json::array();
  for (std::size_t l = 0; l < tiles.rows; ++l) {
    for (std::size_t k = 0; k < tiles.columns; ++k) {
      const CoefficientGrid& grid = tiles.tile(k, l);
      json rows = json::array();
      for (std::size_t p = 0; p < grid.nx(); ++p) {
        json row = json::array();
        for (std::size_t q = 0; q < grid.ny(); ++q) row.push_back(grid(p, q));
        rows.push_back(std::move(row));
      }
      list.push_back({{"k", k + 1}, {"l", l + 1}, {"coefficients", std::move(rows)}});
    }
  }
  j["tiles"] = std::move(list);
  return j.dump() + "\n";
}

TiledCoefficients parse_coefficients(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != "swm-coefficients") {
      throw FormatError("not a coefficient archive");
    }
    const auto version = j.at("version").get<long long>();
    if (version != kArchiveVersion) {
      throw FormatError("unsupported coefficient archive version " + std::to_string(version));
    }
    TiledCoefficients out;
    out.tile_width = j.at("tile_width").get<std::size_t>();
    out.tile_height = j.at("tile_height").get<std::size_t>();
    out.columns = j.at("columns").get<std::size_t>();
    out.rows = j.at("rows").get<std::size_t>();
    out.image_width = j.at("image_width").get<std::size_t>();
    out.image_height = j.at("image_height").get<std::size_t>();
    if (out.tile_width == 0 || out.tile_height == 0 || out.columns == 0 || out.rows == 0) {
      throw FormatError("coefficient archive has zero dimensions");
    }
    out.tiles.resize(out.columns * out.rows);
    std::vector<bool> seen(out.tiles.size(), false);
    const auto& list = j.at("tiles");
    if (list.size() != out.tiles.size()) {
      throw FormatError("coefficient archive lists " + std::to_string(list.size()) +
                        " tiles, expected " + std::to_string(out.tiles.size()));
    }
    for (const auto& t : list) {
      const auto k = t.at("k").get<long long>();
      const auto l = t.at("l").get<long long>();
      if (k < 1 || l < 1 || static_cast<std::size_t>(k) > out.columns ||
          static_cast<std::size_t>(l) > out.rows) {
        throw FormatError("tile index out of range in coefficient archive");
      }
      const std::size_t index = static_cast<std::size_t>(l - 1) * out.columns +
                                static_cast<std::size_t>(k - 1);
      if (seen[index]) throw FormatError("duplicate tile in coefficient archive");
      seen[index] = true;
      const auto& rows = t.at("coefficients");
      if (rows.size() != out.tile_width) throw FormatError("tile has wrong number of rows");
      std::vector<double> values;
      values.reserve(out.tile_width * out.tile_height);
      for (const auto& row : rows) {
        if (row.size() != out.tile_height) throw FormatError("tile row has wrong length");
        for (const auto& v : row) values.push_back(v.get<double>());
      }
      out.tiles[index] = CoefficientGrid(out.tile_width, out.tile_height, std::move(values));
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed coefficient archive: ") + e.what());
  }
}

void write_coefficients(const TiledCoefficients& tiles, const std::filesystem::path& path) {
  write_file(path, format_coefficients(tiles));
}

TiledCoefficients read_coefficients(const std::filesystem::path& path) {
  return parse_coefficients(read_file(path));
}

}  // namespace swm::io
