#include "terrarough/cli/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "terrarough/error.hpp"

namespace terrarough::cli {

namespace {

// Viridis sampled at nine evenly spaced stops.
constexpr std::array<std::array<double, 3>, 9> kViridis = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

}  // namespace

Palette parse_palette(std::string_view text) {
  if (text == "viridis") return Palette::viridis;
  if (text == "gray" || text == "grey") return Palette::gray;
  throw Error(ErrorKind::invalid_argument, "unknown palette: " + std::string(text));
}

Rgba palette_color(Palette palette, double t) {
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  if (palette == Palette::gray) {
    const auto g = to_byte(255.0 * t);
    return {g, g, g, 255};
  }
  const double pos = t * static_cast<double>(kViridis.size() - 1);
  const auto i = std::min(static_cast<std::size_t>(pos), kViridis.size() - 2);
  const double f = pos - static_cast<double>(i);
  Rgba c{0, 0, 0, 255};
  for (int k = 0; k < 3; ++k) {
    c[k] = to_byte(kViridis[i][k] + f * (kViridis[i + 1][k] - kViridis[i][k]));
  }
  return c;
}

Rgba Image::pixel(std::size_t x, std::size_t y) const {
  const std::size_t o = (y * width + x) * 4;
  return {rgba[o], rgba[o + 1], rgba[o + 2], rgba[o + 3]};
}

Image render(const Grid& map, Palette palette, int scale) {
  if (scale < 1) throw Error(ErrorKind::invalid_argument, "scale must be at least 1");
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (double v : map.values()) {
    if (is_nodata(v)) continue;
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  }
  const auto s = static_cast<std::size_t>(scale);
  Image img{map.ncols() * s, map.nrows() * s, {}};
  img.rgba.assign(img.width * img.height * 4, 0);
  const double range = hi - lo;
  for (std::size_t r = 0; r < map.nrows(); ++r) {
    for (std::size_t c = 0; c < map.ncols(); ++c) {
      const double v = map(r, c);
      if (is_nodata(v)) continue;
      const Rgba color = palette_color(palette, range > 0.0 ? (v - lo) / range : 0.0);
      for (std::size_t dy = 0; dy < s; ++dy) {
        std::uint8_t* row = &img.rgba[((r * s + dy) * img.width + c * s) * 4];
        for (std::size_t dx = 0; dx < s; ++dx) std::copy(color.begin(), color.end(), row + dx * 4);
      }
    }
  }
  return img;
}

void save_png(const std::filesystem::path& path, const Image& image) {
  if (image.width == 0 || image.height == 0) throw Error(ErrorKind::empty_map, "empty map");
  std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.c_str(), "wb"), &std::fclose);
  if (!file) throw Error(ErrorKind::io, "cannot open " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorKind::io, "png initialisation failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorKind::io, "png write failed: " + path.string());
  }
  png_init_io(png, file.get());
  png_set_compression_level(png, 9);
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_NONE);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width),
               static_cast<png_uint_32>(image.height), 8, PNG_COLOR_TYPE_RGBA, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t y = 0; y < image.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(&image.rgba[y * image.width * 4]));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace terrarough::cli
