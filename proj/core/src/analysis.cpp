#include "terrarough/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "terrarough/error.hpp"

namespace terrarough {

Grid normalize01(const Grid& map) {
  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (double v : map.values()) {
    if (is_nodata(v)) continue;
    lo = any ? std::min(lo, v) : v;
    hi = any ? std::max(hi, v) : v;
    any = true;
  }
  if (!any) throw Error(ErrorKind::empty_map, "empty map");
  Grid out = map;
  const double range = hi - lo;
  for (double& v : out.values()) {
    if (is_nodata(v)) continue;
    v = range > 0.0 ? (v - lo) / range : 0.0;
  }
  return out;
}

RoughnessMap normalize01(const RoughnessMap& map) {
  return RoughnessMap{normalize01(map.grid), map.descriptor, map.window, map.source_cell};
}

Correlation pearson(const Grid& a, const Grid& b) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols()) {
    throw Error(ErrorKind::dimension_mismatch, "dimension mismatch");
  }
  const auto av = a.values();
  const auto bv = b.values();
  double sa = 0.0, sb = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (is_nodata(av[i]) || is_nodata(bv[i])) continue;
    sa += av[i];
    sb += bv[i];
    ++n;
  }
  if (n < 2) throw Error(ErrorKind::undefined_correlation, "undefined correlation");
  const double ma = sa / static_cast<double>(n);
  const double mb = sb / static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (is_nodata(av[i]) || is_nodata(bv[i])) continue;
    const double da = av[i] - ma;
    const double db = bv[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (!(saa > 0.0) || !(sbb > 0.0)) {
    throw Error(ErrorKind::undefined_correlation, "undefined correlation");
  }
  const double r = sab / std::sqrt(saa * sbb);
  return {std::clamp(r, -1.0, 1.0), n};
}

std::string ReportContext::to_string() const {
  std::string out;
  const auto add = [&out](std::string_view key, const std::string& value) {
    if (value.empty()) return;
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  };
  add("terrain", terrain);
  add("w", window ? std::to_string(*window) : std::string{});
  add("method", method);
  add("descriptor", descriptor);
  return out;
}

std::map<std::string, double> CorrelationReport::mean_by_label() const {
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& e : entries) {
    acc[e.label_a].first += e.r;
    acc[e.label_a].second += 1;
    acc[e.label_b].first += e.r;
    acc[e.label_b].second += 1;
  }
  std::map<std::string, double> out;
  for (const auto& [label, sum] : acc) out[label] = sum.first / sum.second;
  return out;
}

double CorrelationReport::mean_r() const {
  if (entries.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& e : entries) sum += e.r;
  return sum / static_cast<double>(entries.size());
}

const CorrelationEntry* CorrelationReport::find(std::string_view a, std::string_view b) const {
  for (const auto& e : entries) {
    if ((e.label_a == a && e.label_b == b) || (e.label_a == b && e.label_b == a)) return &e;
  }
  return nullptr;
}

CorrelationReport correlate_all(std::span<const LabelledMap> maps, ReportContext context) {
  CorrelationReport report{std::move(context), {}};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      const auto c = pearson(*maps[i].grid, *maps[j].grid);
      report.entries.push_back({maps[i].label, maps[j].label, c.r, c.n_pixels});
    }
  }
  return report;
}

CorrelationReport descriptor_comparison(const Grid& dem, WindowSpec w, ReportContext context) {
  std::vector<Descriptor> order(kAllDescriptors.begin(), kAllDescriptors.end());
  std::sort(order.begin(), order.end(),
            [](Descriptor l, Descriptor r) { return name(l) < name(r); });
  std::vector<RoughnessMap> maps;
  maps.reserve(order.size());
  for (auto d : order) maps.push_back(roughness_map(dem, d, w));
  std::vector<LabelledMap> labelled;
  for (const auto& m : maps) labelled.push_back({std::string(name(m.descriptor)), &m.grid});
  context.window = w.size();
  return correlate_all(labelled, std::move(context));
}

double SweepReport::mean_range() const {
  if (ranges.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : ranges) sum += r.range();
  return sum / static_cast<double>(ranges.size());
}

SweepReport scale_sweep(const Grid& dem, std::span<const WindowSpec> windows,
                        ReportContext context) {
  std::vector<WindowSpec> sorted(windows.begin(), windows.end());
  std::sort(sorted.begin(), sorted.end(),
            [](WindowSpec l, WindowSpec r) { return l.size() < r.size(); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SweepReport sweep;
  for (auto w : sorted) sweep.reports.push_back(descriptor_comparison(dem, w, context));
  if (sweep.reports.empty()) return sweep;
  for (const auto& e : sweep.reports.front().entries) {
    sweep.ranges.push_back({e.label_a, e.label_b, e.r, e.r});
  }
  for (const auto& report : sweep.reports) {
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      auto& range = sweep.ranges[i];
      range.min_r = std::min(range.min_r, report.entries[i].r);
      range.max_r = std::max(range.max_r, report.entries[i].r);
    }
  }
  return sweep;
}

CorrelationReport interpolation_comparison(const PointCloud& cloud,
                                           std::span<const InterpMethod> methods,
                                           Descriptor d, WindowSpec w, double cell,
                                           ReportContext context) {
  if (methods.size() < 2) {
    throw Error(ErrorKind::invalid_argument, "at least two interpolation methods are required");
  }
  std::vector<RoughnessMap> maps;
  maps.reserve(methods.size());
  for (auto m : methods) maps.push_back(roughness_map(rasterize(cloud, m, cell), d, w));
  std::vector<LabelledMap> labelled;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    labelled.push_back({std::string(name(methods[i])), &maps[i].grid});
  }
  context.window = w.size();
  context.descriptor = std::string(name(d));
  return correlate_all(labelled, std::move(context));
}

namespace {

void append_fixed6(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
  out.append(buf, ptr);
}

}  // namespace

void write_csv(std::ostream& out, const CorrelationReport& report, bool header) {
  std::string text;
  if (header) text += "context,label_a,label_b,r,n_pixels\n";
  const std::string context = report.context.to_string();
  for (const auto& e : report.entries) {
    text += context;
    text += ',';
    text += e.label_a;
    text += ',';
    text += e.label_b;
    text += ',';
    append_fixed6(text, e.r);
    text += ',';
    text += std::to_string(e.n_pixels);
    text += '\n';
  }
  out << text;
}

void write_csv(std::ostream& out, const SweepReport& report) {
  out << "context,label_a,label_b,r,n_pixels\n";
  for (const auto& r : report.reports) write_csv(out, r, false);
}

}  // namespace terrarough
