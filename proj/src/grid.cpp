#include "rangekit/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "rangekit/error.hpp"
#include "rangekit/parallel.hpp"

namespace rangekit {

GridSpec make_grid(double resolution_deg) {
  if (!(resolution_deg > 0.0) || resolution_deg > 90.0 ||
      !std::isfinite(resolution_deg)) {
    std::ostringstream msg;
    msg << "grid resolution must lie in (0, 90], got " << resolution_deg;
    throw ConfigError(msg.str());
  }
  double rows_exact = 180.0 / resolution_deg;
  double rows_round = std::round(rows_exact);
  if (std::abs(rows_exact - rows_round) > 1e-9 * rows_exact) {
    std::ostringstream msg;
    msg << "grid resolution " << resolution_deg
        << " does not divide 180 degrees evenly";
    throw ConfigError(msg.str());
  }
  GridSpec spec;
  spec.resolution_deg = resolution_deg;
  spec.rows = static_cast<int>(rows_round);
  spec.cols = static_cast<int>(std::round(360.0 / resolution_deg));
  return spec;
}

Cell cell_of(const GridSpec& spec, double latitude, double longitude) {
  if (!std::isfinite(latitude) || latitude < -90.0 || latitude > 90.0) {
    std::ostringstream msg;
    msg << "latitude out of range: " << latitude;
    throw InputError(msg.str());
  }
  if (!std::isfinite(longitude) || longitude < -180.0 || longitude > 180.0) {
    std::ostringstream msg;
    msg << "longitude out of range: " << longitude;
    throw InputError(msg.str());
  }
  int row = static_cast<int>(std::floor((90.0 - latitude) / spec.resolution_deg));
  int col = static_cast<int>(std::floor((longitude + 180.0) / spec.resolution_deg));
  // South pole clamps into the last band; the antimeridian wraps to column 0.
  row = std::clamp(row, 0, spec.rows - 1);
  if (col >= spec.cols) col -= spec.cols;
  col = std::clamp(col, 0, spec.cols - 1);
  return Cell{row, col};
}

std::int64_t PresenceGrid::count_positive() const {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

namespace {

void bin_records(const GridSpec& spec,
                 std::span<const OccurrenceRecord> records,
                 const RecordFilter& filter, std::size_t begin,
                 std::size_t end, std::vector<std::uint8_t>& out,
                 bool& any) {
  for (std::size_t i = begin; i < end; ++i) {
    const OccurrenceRecord& rec = records[i];
    if (filter && !filter(rec)) continue;
    Cell c = cell_of(spec, rec.latitude, rec.longitude);
    out[spec.index(c.row, c.col)] = 1;
    any = true;
  }
}

} // namespace

PresenceGrid rasterize(const GridSpec& spec,
                       std::span<const OccurrenceRecord> records,
                       const RecordFilter& filter,
                       const RasterizeOptions& options) {
  PresenceGrid grid;
  grid.spec = spec;
  grid.values.assign(static_cast<std::size_t>(spec.cell_count()), 0);

  unsigned threads = options.threads ? options.threads : default_thread_count();
  bool any = false;

  if (threads <= 1 || records.size() < options.parallel_threshold) {
    bin_records(spec, records, filter, 0, records.size(), grid.values, any);
  } else {
    // Per-thread partial grids, OR-merged; the merge is order-independent.
    std::vector<std::vector<std::uint8_t>> partial(
        threads, std::vector<std::uint8_t>(grid.values.size(), 0));
    std::vector<std::uint8_t> has_any(threads, 0);
    std::size_t per = (records.size() + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = std::min(records.size(), t * per);
      std::size_t end = std::min(records.size(), begin + per);
      pool.emplace_back([&, t, begin, end] {
        bool local_any = false;
        bin_records(spec, records, filter, begin, end, partial[t], local_any);
        has_any[t] = local_any ? 1 : 0;
      });
    }
    for (auto& t : pool) t.join();
    for (unsigned t = 0; t < threads; ++t) {
      if (!has_any[t]) continue;
      any = true;
      const auto& src = partial[t];
      for (std::size_t i = 0; i < src.size(); ++i) grid.values[i] |= src[i];
    }
  }

  grid.no_records = !any;
  return grid;
}

} // namespace rangekit
