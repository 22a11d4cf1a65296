#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "terrarough/analysis.hpp"
#include "terrarough/cli/render.hpp"
#include "terrarough/cli/run.hpp"
#include "terrarough/descriptors.hpp"
#include "terrarough/error.hpp"
#include "terrarough/grid.hpp"
#include "terrarough/pointcloud.hpp"
#include "terrarough/rasterize.hpp"
#include "terrarough/synthterrain.hpp"

namespace terrarough::cli {

namespace {

namespace fs = std::filesystem;

// Flag values that parse but are not acceptable.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto usage_checked(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::io, "write failed: " + path.string());
}

XyzFormat resolve_format(const std::string& format, const fs::path& path) {
  if (format == "csv") return XyzFormat::csv;
  if (format == "whitespace" || format == "xyz") return XyzFormat::whitespace;
  if (format != "auto") throw UsageError("unknown format: " + format);
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" ? XyzFormat::csv : XyzFormat::whitespace;
}

fs::path meta_path(fs::path out) { return out.replace_extension(".meta"); }

struct SynthOptions {
  std::string terrain;
  std::uint64_t seed = 1;
  std::optional<double> extent;
  std::optional<double> spacing;
  fs::path out;
};

struct RasterizeOptions {
  fs::path in;
  std::string method = "natural";
  std::string format = "auto";
  double cell = 1.0;
  bool detrend = false;
  fs::path out;
};

struct RoughnessOptions {
  fs::path dem;
  std::string descriptor;
  int window = 5;
  bool normalize = false;
  fs::path out;
};

struct CompareOptions {
  std::vector<fs::path> maps;
  fs::path out;
};

struct SweepOptions {
  fs::path dem;
  std::vector<int> windows{kDefaultWindows.begin(), kDefaultWindows.end()};
  std::string terrain;
  fs::path out;
};

struct RenderOptions {
  fs::path map;
  std::string palette = "viridis";
  int scale = 4;
  fs::path out;
};

void cmd_synth(const SynthOptions& o, std::ostream& err) {
  TerrainSpec spec = usage_checked([&] {
    TerrainSpec s = TerrainSpec::defaults(parse_archetype(o.terrain));
    s.seed = o.seed;
    if (o.extent) s.extent = *o.extent;
    if (o.spacing) s.spacing = *o.spacing;
    s.validate();
    return s;
  });
  const PointCloud cloud = generate(spec);
  auto out = open_output(o.out);
  write_xyz(out, cloud, resolve_format("auto", o.out));
  finish(out, o.out);
  err << "wrote " << cloud.size() << " points to " << o.out.string() << '\n';
}

void cmd_rasterize(const RasterizeOptions& o, std::ostream& err) {
  const auto method_opt = parse_interp_method(o.method);
  if (!method_opt) throw UsageError("unknown method: " + o.method);
  const InterpMethod method = *method_opt;
  if (!(o.cell > 0.0)) throw UsageError("cell must be positive");
  const XyzFormat format = resolve_format(o.format, o.in);

  PointCloud cloud = load_xyz(o.in, format);
  if (o.detrend) cloud = detrend(cloud, fit_plane(cloud));
  const Grid dem = rasterize(cloud, method, o.cell);
  auto out = open_output(o.out);
  write_ascii_grid(out, dem);
  finish(out, o.out);
  err << "wrote " << dem.nrows() << "x" << dem.ncols() << " DEM (" << name(method) << ") to "
      << o.out.string() << '\n';
}

void cmd_roughness(const RoughnessOptions& o, std::ostream& err) {
  const auto d_opt = parse_descriptor(o.descriptor);
  if (!d_opt) throw UsageError("unknown descriptor: " + o.descriptor);
  const Descriptor d = *d_opt;
  const WindowSpec w = usage_checked([&] { return WindowSpec(o.window); });

  const Grid dem = load_ascii_grid(o.dem);
  RoughnessMap map = roughness_map(dem, d, w);
  if (o.normalize) map = normalize01(map);

  auto out = open_output(o.out);
  write_ascii_grid(out, map.grid);
  finish(out, o.out);

  const fs::path meta = meta_path(o.out);
  auto sidecar = open_output(meta);
  const nlohmann::ordered_json lines[] = {
      {{"descriptor", name(d)}},
      {{"window", w.size()}},
      {{"source_cell", map.source_cell}},
      {{"units", o.normalize ? std::string_view("1") : units(d)}},
      {{"normalize", o.normalize}},
  };
  for (const auto& line : lines) sidecar << line.dump() << '\n';
  finish(sidecar, meta);
  err << "wrote " << map.grid.nrows() << "x" << map.grid.ncols() << " " << name(d) << " map to "
      << o.out.string() << '\n';
}

void write_report(const fs::path& path, std::ostream& stdout_stream,
                  const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(stdout_stream);
    return;
  }
  auto out = open_output(path);
  write(out);
  finish(out, path);
}

void cmd_compare(const CompareOptions& o, std::ostream& out) {
  if (o.maps.size() < 2) throw UsageError("--maps needs at least two files");
  std::vector<Grid> grids;
  grids.reserve(o.maps.size());
  for (const auto& p : o.maps) grids.push_back(load_ascii_grid(p));
  std::vector<LabelledMap> labelled;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    labelled.push_back({o.maps[i].stem().string(), &grids[i]});
  }
  const CorrelationReport report = correlate_all(labelled);
  write_report(o.out, out, [&](std::ostream& s) { write_csv(s, report); });
}

void cmd_sweep(const SweepOptions& o, std::ostream& out) {
  std::vector<WindowSpec> windows = usage_checked([&] {
    std::vector<WindowSpec> ws;
    for (int w : o.windows) ws.emplace_back(w);
    return ws;
  });
  if (windows.empty()) throw UsageError("--windows must not be empty");
  const Grid dem = load_ascii_grid(o.dem);
  ReportContext context;
  context.terrain = o.terrain;
  const SweepReport sweep = scale_sweep(dem, windows, context);
  write_report(o.out, out, [&](std::ostream& s) { write_csv(s, sweep); });
}

void cmd_render(const RenderOptions& o, std::ostream& err) {
  const Palette palette = usage_checked([&] { return parse_palette(o.palette); });
  if (o.scale < 1) throw UsageError("scale must be at least 1");
  const Grid map = load_ascii_grid(o.map);
  const Image image = render(map, palette, o.scale);
  save_png(o.out, image);
  err << "wrote " << image.width << "x" << image.height << " image to " << o.out.string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Terrain roughness from scattered elevation points", "terrarough"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "terrarough 0.1.0");

  SynthOptions synth;
  auto* s = app.add_subcommand("synth", "Generate a synthetic point cloud");
  s->add_option("--terrain", synth.terrain, "hilly-rough | flat-rough | flat-smooth")->required();
  s->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  s->add_option("--extent", synth.extent, "Side length in metres (default 350)");
  s->add_option("--spacing", synth.spacing, "Mean point spacing in metres (default 0.64)");
  s->add_option("--out", synth.out, "Output point file (.csv is comma-separated)")->required();

  RasterizeOptions raster;
  auto* r = app.add_subcommand("rasterize", "Interpolate a point cloud onto a regular grid");
  r->add_option("--in", raster.in, "Input XYZ or CSV file")->required();
  r->add_option("--method", raster.method, "natural | nearest | tin")->capture_default_str();
  r->add_option("--format", raster.format, "auto | csv | whitespace")->capture_default_str();
  r->add_option("--cell", raster.cell, "Cell size in metres")->capture_default_str();
  r->add_flag("--detrend", raster.detrend, "Remove the best-fit plane before interpolating");
  r->add_option("--out", raster.out, "Output ASCII grid")->required();

  RoughnessOptions rough;
  auto* g = app.add_subcommand("roughness", "Compute a roughness map from a DEM");
  g->add_option("--dem", rough.dem, "Input ASCII grid")->required();
  g->add_option("--descriptor", rough.descriptor, "rmsh | ldre | rt | slope | curv")->required();
  g->add_option("--window", rough.window, "Odd window size in cells")->capture_default_str();
  g->add_flag("--normalize", rough.normalize, "Rescale the map to [0, 1]");
  g->add_option("--out", rough.out, "Output ASCII grid; a .meta sidecar is written next to it")
      ->required();

  CompareOptions compare;
  auto* c = app.add_subcommand("compare", "Pearson correlation between every pair of maps");
  c->add_option("--maps", compare.maps, "Two or more ASCII grids")->required();
  c->add_option("--out", compare.out, "Output CSV (default stdout)");

  SweepOptions sweep;
  auto* w = app.add_subcommand("sweep", "Descriptor correlations across window sizes");
  w->add_option("--dem", sweep.dem, "Input ASCII grid")->required();
  w->add_option("--windows", sweep.windows, "Comma-separated odd window sizes")
      ->delimiter(',')
      ->capture_default_str();
  w->add_option("--terrain", sweep.terrain, "Terrain label for the context column");
  w->add_option("--out", sweep.out, "Output CSV (default stdout)");

  RenderOptions render_opts;
  auto* p = app.add_subcommand("render", "Render a map as a PNG heatmap");
  p->add_option("--map", render_opts.map, "Input ASCII grid")->required();
  p->add_option("--palette", render_opts.palette, "viridis | gray")->capture_default_str();
  p->add_option("--scale", render_opts.scale, "Pixels per cell")->capture_default_str();
  p->add_option("--out", render_opts.out, "Output PNG")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "terrarough 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (s->parsed()) cmd_synth(synth, err);
    if (r->parsed()) cmd_rasterize(raster, err);
    if (g->parsed()) cmd_roughness(rough, err);
    if (c->parsed()) cmd_compare(compare, out);
    if (w->parsed()) cmd_sweep(sweep, out);
    if (p->parsed()) cmd_render(render_opts, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace terrarough::cli
