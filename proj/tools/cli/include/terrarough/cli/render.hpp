#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "terrarough/grid.hpp"

namespace terrarough::cli {

enum class Palette { viridis, gray };

Palette parse_palette(std::string_view text);

using Rgba = std::array<std::uint8_t, 4>;

/// Colour for t in [0, 1].
Rgba palette_color(Palette palette, double t);

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> rgba;  // row-major, 4 bytes per pixel

  Rgba pixel(std::size_t x, std::size_t y) const;
};

/// Min-max stretched heatmap, each cell drawn as a scale x scale block;
/// nodata cells are fully transparent.
Image render(const Grid& map, Palette palette, int scale);

void save_png(const std::filesystem::path& path, const Image& image);

}  // namespace terrarough::cli
