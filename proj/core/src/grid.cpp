#include "terrarough/grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "terrarough/error.hpp"

namespace terrarough {

namespace {

void append_general(std::string& out, double v, int precision) {
  char buf[40];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
  out.append(buf, ptr);
}

void append_shortest(std::string& out, double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

bool parse_number(const std::string& token, double& value) {
  std::string_view s = token;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Grid::Grid(std::size_t nrows, std::size_t ncols, double x0, double y0, double cell,
           double fill)
    : nrows_(nrows), ncols_(ncols), x0_(x0), y0_(y0), cell_(cell),
      values_(nrows * ncols, fill) {
  if (!(cell > 0.0) || !std::isfinite(cell)) {
    throw Error(ErrorKind::invalid_argument, "cell size must be positive");
  }
}

std::size_t Grid::valid_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](double v) { return !is_nodata(v); }));
}

bool Grid::same_geometry(const Grid& other) const {
  return nrows_ == other.nrows_ && ncols_ == other.ncols_ && x0_ == other.x0_ &&
         y0_ == other.y0_ && cell_ == other.cell_;
}

void write_ascii_grid(std::ostream& out, const Grid& grid) {
  std::string text;
  text.reserve(grid.size() * 10 + 128);
  text += "ncols ";
  text += std::to_string(grid.ncols());
  text += "\nnrows ";
  text += std::to_string(grid.nrows());
  text += "\nxllcorner ";
  append_shortest(text, grid.x0());
  text += "\nyllcorner ";
  append_shortest(text, grid.y0());
  text += "\ncellsize ";
  append_shortest(text, grid.cell());
  text += "\nNODATA_value ";
  append_general(text, kAsciiNodata, 6);
  text += '\n';
  for (std::size_t r = 0; r < grid.nrows(); ++r) {
    for (std::size_t c = 0; c < grid.ncols(); ++c) {
      if (c > 0) text += ' ';
      const double v = grid(r, c);
      // Normalise -0 so identical rasters always serialise identically.
      append_general(text, is_nodata(v) ? kAsciiNodata : (v == 0.0 ? 0.0 : v), 6);
    }
    text += '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

Grid read_ascii_grid(std::istream& in) {
  long long ncols = -1, nrows = -1;
  double x0 = 0.0, y0 = 0.0, cell = 0.0, nodata = kAsciiNodata;
  bool have_x = false, have_y = false, have_cell = false;
  bool x_center = false, y_center = false;

  std::string key, token;
  // Header lines are "key value" pairs; data starts at the first numeric key.
  while (in >> key) {
    const auto k = lower(key);
    double probe = 0.0;
    if (parse_number(key, probe)) {
      token = key;
      break;
    }
    if (!(in >> token)) throw Error(ErrorKind::parse, "truncated ASCII grid header");
    double value = 0.0;
    if (!parse_number(token, value)) {
      throw Error(ErrorKind::parse, "bad value for header key '" + key + "'");
    }
    if (k == "ncols") {
      ncols = static_cast<long long>(value);
    } else if (k == "nrows") {
      nrows = static_cast<long long>(value);
    } else if (k == "xllcorner" || k == "xllcenter") {
      x0 = value;
      have_x = true;
      x_center = k == "xllcenter";
    } else if (k == "yllcorner" || k == "yllcenter") {
      y0 = value;
      have_y = true;
      y_center = k == "yllcenter";
    } else if (k == "cellsize") {
      cell = value;
      have_cell = true;
    } else if (k == "nodata_value") {
      nodata = value;
    } else {
      throw Error(ErrorKind::parse, "unknown ASCII grid header key '" + key + "'");
    }
    token.clear();
  }
  if (ncols <= 0 || nrows <= 0 || !have_x || !have_y || !have_cell) {
    throw Error(ErrorKind::parse, "incomplete ASCII grid header");
  }
  if (x_center) x0 -= 0.5 * cell;
  if (y_center) y0 -= 0.5 * cell;

  Grid grid(static_cast<std::size_t>(nrows), static_cast<std::size_t>(ncols), x0, y0, cell);
  auto values = grid.values();
  std::size_t i = 0;
  bool pending = !token.empty();
  while (i < values.size()) {
    if (!pending && !(in >> token)) break;
    pending = false;
    double v = 0.0;
    if (!parse_number(token, v)) {
      throw Error(ErrorKind::parse, "bad raster value '" + token + "'");
    }
    values[i++] = v == nodata ? kNodata : v;
  }
  if (i != values.size()) {
    throw Error(ErrorKind::parse, "ASCII grid has " + std::to_string(i) + " values, expected " +
                                      std::to_string(values.size()));
  }
  return grid;
}

void save_ascii_grid(const std::filesystem::path& path, const Grid& grid) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  write_ascii_grid(out, grid);
}

Grid load_ascii_grid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  return read_ascii_grid(in);
}

}  // namespace terrarough
