#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rangekit/grid.hpp"

namespace rangekit {

// Per-cell location feature matrix, cell-major (cell_count x dim).
struct LocationFeatures {
  GridSpec spec;
  std::size_t dim = 0;
  std::vector<double> matrix;

  std::span<const double> row(std::size_t cell) const {
    return {matrix.data() + cell * dim, dim};
  }
  double at(std::size_t cell, std::size_t k) const {
    return matrix[cell * dim + k];
  }
};

// [sin(pi*lon/180), cos(pi*lon/180), sin(pi*lat/90), cos(pi*lat/90)]
std::array<double, 4> sincos_at(double latitude, double longitude);
LocationFeatures sincos_features(const GridSpec& spec);

// Associated Legendre value with the orthonormal spherical-harmonic
// normalization sqrt((2l+1)(l-m)!/(4pi (l+m)!)) folded in. Real basis,
// Condon-Shortley phase omitted. Requires 0 <= m <= l, |x| <= 1.
double legendre(int l, int m, double x);

// Real spherical-harmonic basis at one coordinate, all degrees 0..l_max,
// orders -l..l. Layout: (l, m) with l ascending and m ascending within l,
// so dim = (l_max + 1)^2. m > 0 pairs with cos(m*lon), m < 0 with
// sin(|m|*lon), both scaled by sqrt(2).
std::vector<double> sph_harm_point(int l_max, double latitude,
                                   double longitude);
LocationFeatures sph_harm_features(const GridSpec& spec, int l_max,
                                   unsigned threads = 0);

// Environmental covariate channels on the model grid. Channel-major storage
// (channels x cell_count); each channel standardized to mean 0 / sd 1 over
// valid cells. A cell is valid when every channel is finite there.
struct EnvStack {
  GridSpec spec;
  std::size_t channels = 0;
  std::vector<float> data;
  std::vector<std::uint8_t> valid_mask;
  std::vector<std::string> channel_names;
  std::vector<std::string> warnings;

  float at(std::size_t channel, std::size_t cell) const {
    return data[channel * static_cast<std::size_t>(spec.cell_count()) + cell];
  }
};

// Loads f32 RGRD rasters, bilinearly resampling when the source resolution
// differs from spec by an integer factor. NaN source cells are invalid.
EnvStack load_env(
    const std::vector<std::pair<std::string, std::filesystem::path>>& channels,
    const GridSpec& spec);

// Manifest form: an [env] section of `name = "path"` entries (paths are
// resolved relative to the manifest's directory).
EnvStack load_env_manifest(const std::filesystem::path& manifest,
                           const GridSpec& spec);

// Appends the standardized covariate channels to a feature matrix; invalid
// cells contribute zeros.
LocationFeatures with_env(const LocationFeatures& base, const EnvStack& env);

} // namespace rangekit
