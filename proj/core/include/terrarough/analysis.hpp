#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terrarough/descriptors.hpp"
#include "terrarough/grid.hpp"
#include "terrarough/pointcloud.hpp"
#include "terrarough/rasterize.hpp"

namespace terrarough {

/// (v - min) / (max - min) over valid cells; a constant map becomes all zeros.
Grid normalize01(const Grid& map);
RoughnessMap normalize01(const RoughnessMap& map);

struct Correlation {
  double r = 0.0;
  std::size_t n_pixels = 0;
};

/// Pearson correlation over the pixels valid in both maps.
Correlation pearson(const Grid& a, const Grid& b);
inline Correlation pearson(const RoughnessMap& a, const RoughnessMap& b) {
  return pearson(a.grid, b.grid);
}

struct ReportContext {
  std::string terrain;
  std::optional<int> window;
  std::string method;
  std::string descriptor;

  /// `key=value` pairs joined by ';' (CSV-safe), empty fields omitted.
  std::string to_string() const;
};

struct CorrelationEntry {
  std::string label_a;
  std::string label_b;
  double r = 0.0;
  std::size_t n_pixels = 0;
};

struct CorrelationReport {
  ReportContext context;
  std::vector<CorrelationEntry> entries;

  /// Mean r of every label against all the others it was paired with.
  std::map<std::string, double> mean_by_label() const;
  double mean_r() const;
  const CorrelationEntry* find(std::string_view a, std::string_view b) const;
};

struct LabelledMap {
  std::string label;
  const Grid* grid;
};

/// All unordered pairs (i < j) in input order.
CorrelationReport correlate_all(std::span<const LabelledMap> maps, ReportContext context = {});

/// Five roughness maps of `dem` at window `w` and their ten pairwise
/// correlations, ordered lexicographically by descriptor name.
CorrelationReport descriptor_comparison(const Grid& dem, WindowSpec w, ReportContext context = {});

struct PairRange {
  std::string label_a;
  std::string label_b;
  double min_r = 0.0;
  double max_r = 0.0;
  double range() const { return max_r - min_r; }
};

struct SweepReport {
  std::vector<CorrelationReport> reports;  // ascending window
  std::vector<PairRange> ranges;           // per descriptor pair, across windows

  double mean_range() const;
};

SweepReport scale_sweep(const Grid& dem, std::span<const WindowSpec> windows,
                        ReportContext context = {});

/// Rasterises `cloud` once per method on a shared grid and correlates the
/// descriptor maps between methods.
CorrelationReport interpolation_comparison(const PointCloud& cloud,
                                           std::span<const InterpMethod> methods,
                                           Descriptor d, WindowSpec w, double cell,
                                           ReportContext context = {});

/// CSV with header `context,label_a,label_b,r,n_pixels`, r to 6 decimals.
void write_csv(std::ostream& out, const CorrelationReport& report, bool header = true);
void write_csv(std::ostream& out, const SweepReport& report);

}  // namespace terrarough
