#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rangekit/grid.hpp"

namespace rangekit {

// RGRD container, little-endian:
//   16-byte header: magic "RGRD", u32 rows, u32 cols, u32 dtype
//   dtype 0: rows*cols u8 payload          (binary presence)
//   dtype 1: rows*cols f32 payload         (probabilities / distances)
//   dtype 2: u32 plane_count, then plane_count row-major f32 planes
// Resolution is implied by rows (180 / rows).
enum class RgrdType : std::uint32_t { u8 = 0, f32 = 1, planes = 2 };

struct FloatGrid {
  GridSpec spec;
  std::vector<float> values;
};

struct PlaneStack {
  GridSpec spec;
  std::uint32_t planes = 0;
  std::vector<float> values; // plane-major, each plane row-major
};

void write_rgrd(const std::filesystem::path& path, const PresenceGrid& grid);
void write_rgrd(const std::filesystem::path& path, const GridSpec& spec,
                std::span<const float> values);
void write_rgrd_planes(const std::filesystem::path& path, const GridSpec& spec,
                       std::uint32_t planes, std::span<const float> values);

RgrdType peek_rgrd(const std::filesystem::path& path);
PresenceGrid read_rgrd_presence(const std::filesystem::path& path);
FloatGrid read_rgrd_f32(const std::filesystem::path& path);
PlaneStack read_rgrd_planes(const std::filesystem::path& path);

// Plain-text exports for inspection.
void write_grid_csv(const std::filesystem::path& path, const GridSpec& spec,
                    std::span<const float> values);
void write_grid_csv(const std::filesystem::path& path,
                    const PresenceGrid& grid);

// 8-bit binary PGM, values min/max scaled to 0..255 (flat grids map to 0).
void write_pgm(const std::filesystem::path& path, const GridSpec& spec,
               std::span<const float> values);

} // namespace rangekit
