#pragma once

#include <cstdint>
#include <string_view>

#include "terrarough/pointcloud.hpp"

namespace terrarough {

enum class Archetype { hilly_rough, flat_rough, flat_smooth };

std::string_view name(Archetype a);
/// Accepts `hilly_rough` or `hilly-rough` style names.
Archetype parse_archetype(std::string_view text);

struct TerrainSpec {
  Archetype archetype = Archetype::hilly_rough;
  double extent = 350.0;       // side length, m
  double spacing = 0.64;       // mean point spacing, m
  std::uint64_t seed = 1;
  double hill_height = 0.0;    // Gaussian bump peak, m
  int bump_count = 0;
  double bump_sigma_min = 0.0; // as a fraction of extent
  double bump_sigma_max = 0.0;
  double noise_sigma = 0.0;    // m
  /// Log-amplitude standard deviation of a smooth field that scales the
  /// noise locally; 0 gives stationary noise.
  double patchiness = 0.0;
  double patch_scale = 25.0;   // dominant wavelength of that field, m
  /// Spatially correlated roughness on top of the white noise, with its own
  /// independent patchiness field.
  double texture_sigma = 0.0;  // m
  double texture_scale = 4.0;  // lattice spacing, m

  /// Defaults for the archetype; extent, spacing and seed stay at their defaults.
  static TerrainSpec defaults(Archetype a);
  void validate() const;
};

/// Jittered-grid cloud: one point per spacing x spacing cell, z = bumps + noise.
PointCloud generate(const TerrainSpec& spec);

}  // namespace terrarough
