#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "terrarough/grid.hpp"
#include "terrarough/pointcloud.hpp"

namespace terrarough {

enum class Descriptor { rmsh, ldre, rt, slope_sd, curvature_sd };

inline constexpr std::array<Descriptor, 5> kAllDescriptors = {
    Descriptor::rmsh, Descriptor::ldre, Descriptor::rt, Descriptor::slope_sd,
    Descriptor::curvature_sd};

std::string_view name(Descriptor d);
std::string_view units(Descriptor d);
/// Canonical names plus the short CLI forms `slope` and `curv`.
std::optional<Descriptor> parse_descriptor(std::string_view text);

/// Side length of a square analysis window in cells; odd and >= 3.
class WindowSpec {
 public:
  explicit WindowSpec(int size);
  int size() const { return size_; }
  std::size_t cells() const { return static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_); }
  friend bool operator==(WindowSpec, WindowSpec) = default;

 private:
  int size_;
};

inline constexpr std::array<int, 5> kDefaultWindows = {3, 5, 7, 9, 11};

/// One value per non-overlapping w x w tile of the source DEM.
struct RoughnessMap {
  Grid grid;
  Descriptor descriptor;
  WindowSpec window;
  double source_cell;
};

/// Sample standard deviation (n - 1 denominator); nullopt for n < 2.
std::optional<double> rmsh_window(std::span<const double> cells);

/// Standard deviation (n - 1) of residuals from the least-squares plane
/// through the cells; nullopt when the cell centres are collinear.
std::optional<double> ldre_window(std::span<const Point3> cells);

/// 3x3 focal window laid out row-major from the north-west corner:
///   z1 z2 z3 / z4 z5 z6 / z7 z8 z9
struct Stencil3x3 {
  std::array<double, 9> z{};
  double cell = 1.0;

  /// Missing neighbours (outside the grid or nodata) take the centre value.
  static Stencil3x3 gather(const Grid& dem, std::size_t row, std::size_t col);

  double dzdx() const;
  /// Third row minus first row, i.e. southward; only its magnitude matters.
  double dzdy() const;
  double slope_degrees() const;
  /// Zevenbergen-Thorne curvature 2D + 2E.
  double curvature() const;
};

/// Centred 5x5 mean over valid cells, shrinking at the grid edges.
Grid smooth_dem(const Grid& dem);
/// dem - smooth_dem(dem).
Grid residual_topography(const Grid& dem);
Grid slope_map(const Grid& dem);
Grid curvature_map(const Grid& dem);

/// Tiles the DEM from its north-west corner into w x w blocks and reduces
/// each one with descriptor `d`. Trailing partial tiles are dropped and tiles
/// touching nodata in the relevant field are nodata.
RoughnessMap roughness_map(const Grid& dem, Descriptor d, WindowSpec w);

}  // namespace terrarough
