#include "terrarough/synthterrain.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "terrarough/error.hpp"

namespace terrarough {

std::string_view name(Archetype a) {
  switch (a) {
    case Archetype::hilly_rough: return "hilly_rough";
    case Archetype::flat_rough: return "flat_rough";
    case Archetype::flat_smooth: return "flat_smooth";
  }
  return "unknown";
}

Archetype parse_archetype(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '-') c = '_';
  }
  for (auto a : {Archetype::hilly_rough, Archetype::flat_rough, Archetype::flat_smooth}) {
    if (s == name(a)) return a;
  }
  throw Error(ErrorKind::invalid_argument, "unknown terrain: " + std::string(text));
}

TerrainSpec TerrainSpec::defaults(Archetype a) {
  TerrainSpec s;
  s.archetype = a;
  switch (a) {
    case Archetype::hilly_rough:
      s.hill_height = 8.0;
      s.bump_count = 5;
      s.bump_sigma_min = 0.08;
      s.bump_sigma_max = 0.16;
      s.noise_sigma = 0.4;
      s.patchiness = 0.35;
      s.texture_sigma = 0.3;
      break;
    case Archetype::flat_rough:
      s.noise_sigma = 0.4;
      s.patchiness = 0.35;
      s.texture_sigma = 0.3;
      break;
    case Archetype::flat_smooth:
      s.hill_height = 0.3;
      s.bump_count = 5;
      s.bump_sigma_min = 0.08;
      s.bump_sigma_max = 0.16;
      s.noise_sigma = 0.03;
      break;
  }
  return s;
}

void TerrainSpec::validate() const {
  const auto fail = [](const char* what) { throw Error(ErrorKind::invalid_argument, what); };
  if (!(extent > 0.0) || !std::isfinite(extent)) fail("extent must be positive");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) fail("spacing must be positive");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) fail("noise sigma must be non-negative");
  if (bump_count < 0) fail("bump count must be non-negative");
  if (bump_count > 0 && !(bump_sigma_min > 0.0 && bump_sigma_max >= bump_sigma_min)) {
    fail("invalid bump width range");
  }
  if (!std::isfinite(hill_height)) fail("hill height must be finite");
  if (!(patchiness >= 0.0) || !std::isfinite(patchiness)) fail("patchiness must be non-negative");
  if (patchiness > 0.0 && !(patch_scale > 0.0)) fail("patch scale must be positive");
  if (!(texture_sigma >= 0.0) || !std::isfinite(texture_sigma)) fail("texture sigma must be non-negative");
  if (texture_sigma > 0.0 && !(texture_scale > 0.0)) fail("texture scale must be positive");
}

namespace {

struct Bump {
  double x, y, sigma;
};

// Sum of random plane waves: approximately a unit-variance Gaussian field.
class WaveField {
 public:
  WaveField() = default;
  WaveField(std::mt19937_64& rng, double scale) {
    constexpr double kTwoPi = 6.283185307179586;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < kWaves; ++i) {
      const double k = kTwoPi / (scale * (0.5 + unit(rng)));
      const double angle = kTwoPi * unit(rng);
      kx_[i] = k * std::cos(angle);
      ky_[i] = k * std::sin(angle);
      phase_[i] = kTwoPi * unit(rng);
    }
  }

  double operator()(double x, double y) const {
    double s = 0.0;
    for (int i = 0; i < kWaves; ++i) s += std::cos(kx_[i] * x + ky_[i] * y + phase_[i]);
    return s * std::sqrt(2.0 / kWaves);
  }

 private:
  static constexpr int kWaves = 48;
  double kx_[kWaves]{}, ky_[kWaves]{}, phase_[kWaves]{};
};

// Gaussian values on a square lattice, blended with a smoothstep kernel.
class LatticeNoise {
 public:
  LatticeNoise() = default;
  LatticeNoise(std::mt19937_64& rng, double extent, double scale)
      : scale_(scale), n_(static_cast<std::size_t>(std::ceil(extent / scale)) + 2) {
    std::normal_distribution<double> normal(0.0, 1.0);
    values_.resize(n_ * n_);
    for (double& v : values_) v = normal(rng);
  }

  double operator()(double x, double y) const {
    const double gx = std::clamp(x / scale_, 0.0, static_cast<double>(n_ - 1) - 1e-9);
    const double gy = std::clamp(y / scale_, 0.0, static_cast<double>(n_ - 1) - 1e-9);
    const auto i = static_cast<std::size_t>(gx);
    const auto j = static_cast<std::size_t>(gy);
    const double u = smooth(gx - static_cast<double>(i));
    const double v = smooth(gy - static_cast<double>(j));
    const auto at = [this](std::size_t a, std::size_t b) { return values_[b * n_ + a]; };
    const double w00 = (1 - u) * (1 - v), w10 = u * (1 - v), w01 = (1 - u) * v, w11 = u * v;
    const double s = w00 * at(i, j) + w10 * at(i + 1, j) + w01 * at(i, j + 1) + w11 * at(i + 1, j + 1);
    // Rescale so the field has unit variance everywhere.
    return s / std::sqrt(w00 * w00 + w10 * w10 + w01 * w01 + w11 * w11);
  }

 private:
  static double smooth(double t) { return t * t * (3.0 - 2.0 * t); }

  double scale_ = 1.0;
  std::size_t n_ = 0;
  std::vector<double> values_;
};

// exp(p g - p^2 / 2) has unit mean for a standard normal g.
double modulation(double p, double g) { return std::exp(p * g - 0.5 * p * p); }

}  // namespace

PointCloud generate(const TerrainSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Bump> bumps;
  for (int i = 0; i < spec.bump_count; ++i) {
    const double x = unit(rng) * spec.extent;
    const double y = unit(rng) * spec.extent;
    const double f = spec.bump_sigma_min + unit(rng) * (spec.bump_sigma_max - spec.bump_sigma_min);
    bumps.push_back({x, y, f * spec.extent});
  }

  const double p = spec.patchiness;
  const bool patchy = p > 0.0;
  const bool textured = spec.texture_sigma > 0.0;
  WaveField noise_patches, texture_patches;
  LatticeNoise texture;
  if (patchy) noise_patches = WaveField(rng, spec.patch_scale);
  if (textured) {
    texture = LatticeNoise(rng, spec.extent, spec.texture_scale);
    if (patchy) texture_patches = WaveField(rng, spec.patch_scale);
  }

  const auto side = static_cast<std::size_t>(std::max(1.0, std::round(spec.extent / spec.spacing)));
  if (side * side < 3) throw Error(ErrorKind::invalid_argument, "extent too small for spacing");
  const double step = spec.extent / static_cast<double>(side);
  std::normal_distribution<double> noise(0.0, 1.0);

  std::vector<Point3> pts;
  pts.reserve(side * side);
  for (std::size_t j = 0; j < side; ++j) {
    for (std::size_t i = 0; i < side; ++i) {
      const double x = (static_cast<double>(i) + unit(rng)) * step;
      const double y = (static_cast<double>(j) + unit(rng)) * step;
      double z = 0.0;
      for (const auto& b : bumps) {
        const double dx = x - b.x, dy = y - b.y;
        z += spec.hill_height * std::exp(-(dx * dx + dy * dy) / (2.0 * b.sigma * b.sigma));
      }
      if (textured) {
        double amp = spec.texture_sigma;
        if (patchy) amp *= modulation(p, texture_patches(x, y));
        z += amp * texture(x, y);
      }
      double amp = spec.noise_sigma;
      if (patchy) amp *= modulation(p, noise_patches(x, y));
      z += amp * noise(rng);
      pts.push_back({x, y, z});
    }
  }
  return PointCloud(std::move(pts));
}

}  // namespace terrarough
