#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rangekit {

// Global lat-lon raster. Row 0 is the northernmost band, column 0 starts at
// longitude -180, cell edges sit at multiples of the resolution.
struct GridSpec {
  double resolution_deg = 0.0;
  int rows = 0;
  int cols = 0;

  std::int64_t cell_count() const {
    return static_cast<std::int64_t>(rows) * cols;
  }
  bool same_shape(const GridSpec& other) const {
    return rows == other.rows && cols == other.cols;
  }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols) +
           static_cast<std::size_t>(col);
  }
  double center_lat(int row) const {
    return 90.0 - (row + 0.5) * resolution_deg;
  }
  double center_lon(int col) const {
    return -180.0 + (col + 0.5) * resolution_deg;
  }
};

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// resolution must lie in (0, 90] and divide 180 evenly (tolerance 1e-9).
GridSpec make_grid(double resolution_deg);

// Bins a coordinate. latitude in [-90, 90] (south pole clamps into the last
// row), longitude in [-180, 180] (180 wraps to column 0).
Cell cell_of(const GridSpec& spec, double latitude, double longitude);

// One presence-only observation. rank_labels carries the taxonomy
// (class/order/family/genus/species).
struct OccurrenceRecord {
  std::string species_id;
  double latitude = 0.0;
  double longitude = 0.0;
  std::map<std::string, std::string> rank_labels;
};

// Binary range map. no_records flags a grid produced from an empty filtered
// record set so batch callers can skip it without treating it as an error.
struct PresenceGrid {
  GridSpec spec;
  std::vector<std::uint8_t> values;
  bool no_records = false;

  std::uint8_t at(int row, int col) const { return values[spec.index(row, col)]; }
  std::int64_t count_positive() const;
  std::int64_t count_negative() const { return cell_count() - count_positive(); }
  std::int64_t cell_count() const { return spec.cell_count(); }
};

// Per-cell presence probability in [0, 1].
struct PredictionGrid {
  GridSpec spec;
  std::vector<float> values;

  float at(int row, int col) const { return values[spec.index(row, col)]; }
};

using RecordFilter = std::function<bool(const OccurrenceRecord&)>;

struct RasterizeOptions {
  unsigned threads = 0;                       // 0: default_thread_count()
  std::size_t parallel_threshold = 1u << 20;  // records before fan-out
};

// Histogram-bins the filtered records and clips every cell count to one.
// An empty filtered set yields an all-zero grid with no_records set.
PresenceGrid rasterize(const GridSpec& spec,
                       std::span<const OccurrenceRecord> records,
                       const RecordFilter& filter = {},
                       const RasterizeOptions& options = {});

struct RowError {
  std::size_t line = 0;
  std::string reason;
};

struct OccurrenceLoadResult {
  std::vector<OccurrenceRecord> records;
  std::vector<RowError> rejects;
};

// Reads the occurrence CSV (UTF-8, comma separated, mandatory header
//   species_id,latitude,longitude,class,order,family,genus,species).
// Malformed rows are collected in rejects, never silently dropped.
OccurrenceLoadResult load_occurrences(const std::string& path);
OccurrenceLoadResult parse_occurrences(std::string_view text);

} // namespace rangekit
