#include "rangekit/proximity.hpp"

#include <cmath>
#include <limits>

#include "rangekit/error.hpp"
#include "rangekit/parallel.hpp"

namespace rangekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 1-D squared-distance transform: out[q] = min_p ((q-p)^2 + f[p]), the
// lower envelope of parabolas rooted at (p, f[p]).
void squared_dt_1d(const std::vector<double>& f, std::vector<double>& out,
                   std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    if (f[q] == kInf) continue;
    double s;
    for (;;) {
      int p = v[k];
      if (f[p] == kInf) {
        // A parabola at infinity never wins; drop it.
        if (k == 0) {
          v[0] = q;
          z[0] = -kInf;
          z[1] = kInf;
          s = -kInf;
          break;
        }
        --k;
        continue;
      }
      s = ((f[q] + static_cast<double>(q) * q) -
           (f[p] + static_cast<double>(p) * p)) /
          (2.0 * q - 2.0 * p);
      if (s <= z[k]) {
        --k;
        continue;
      }
      ++k;
      v[k] = q;
      z[k] = s;
      z[k + 1] = kInf;
      break;
    }
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    int p = v[k];
    double d = static_cast<double>(q) - p;
    out[static_cast<std::size_t>(q)] = f[p] == kInf ? kInf : d * d + f[p];
  }
}

} // namespace

ProximityField distance_transform(const PresenceGrid& presence,
                                  unsigned threads) {
  const GridSpec& spec = presence.spec;
  const int rows = spec.rows;
  const int cols = spec.cols;
  if (presence.count_positive() == 0)
    throw DomainError("distance transform: no presence cells");

  // Pass 1, per column: squared row-distance to the nearest presence cell
  // in that column (two linear scans).
  std::vector<double> colsq(static_cast<std::size_t>(spec.cell_count()), kInf);
  parallel_for(static_cast<std::size_t>(cols), threads, [&](std::size_t jz) {
    const int j = static_cast<int>(jz);
    double run = kInf;
    for (int i = 0; i < rows; ++i) {
      if (presence.values[spec.index(i, j)]) run = 0.0;
      else if (run != kInf) run += 1.0;
      colsq[spec.index(i, j)] = run == kInf ? kInf : run * run;
    }
    run = kInf;
    for (int i = rows - 1; i >= 0; --i) {
      if (presence.values[spec.index(i, j)]) run = 0.0;
      else if (run != kInf) run += 1.0;
      double cand = run == kInf ? kInf : run * run;
      std::size_t idx = spec.index(i, j);
      if (cand < colsq[idx]) colsq[idx] = cand;
    }
  });

  // Pass 2, per row: lower envelope across columns.
  ProximityField field;
  field.spec = spec;
  field.distances.resize(static_cast<std::size_t>(spec.cell_count()));
  parallel_for(static_cast<std::size_t>(rows), threads, [&](std::size_t iz) {
    const int i = static_cast<int>(iz);
    std::vector<double> f(static_cast<std::size_t>(cols));
    std::vector<double> out(static_cast<std::size_t>(cols));
    std::vector<int> v(static_cast<std::size_t>(cols));
    std::vector<double> z(static_cast<std::size_t>(cols) + 1);
    for (int j = 0; j < cols; ++j) f[static_cast<std::size_t>(j)] = colsq[spec.index(i, j)];
    squared_dt_1d(f, out, v, z);
    for (int j = 0; j < cols; ++j)
      field.distances[spec.index(i, j)] =
          static_cast<float>(std::sqrt(out[static_cast<std::size_t>(j)]));
  });

  return field;
}

ProximityField brute_force_nn(const PresenceGrid& presence,
                              std::size_t max_cells, const CellMetric& metric) {
  const GridSpec& spec = presence.spec;
  if (static_cast<std::size_t>(spec.cell_count()) > max_cells)
    throw InputError("brute_force_nn: grid of " +
                     std::to_string(spec.cell_count()) +
                     " cells exceeds the guard of " +
                     std::to_string(max_cells));

  std::vector<Cell> positives;
  for (int r = 0; r < spec.rows; ++r)
    for (int c = 0; c < spec.cols; ++c)
      if (presence.at(r, c)) positives.push_back({r, c});
  if (positives.empty())
    throw DomainError("brute_force_nn: no presence cells");

  ProximityField field;
  field.spec = spec;
  field.distances.resize(static_cast<std::size_t>(spec.cell_count()));
  for (int r = 0; r < spec.rows; ++r) {
    for (int c = 0; c < spec.cols; ++c) {
      double best = std::numeric_limits<double>::infinity();
      if (metric) {
        for (const Cell& p : positives)
          best = std::min(best, metric(spec, Cell{r, c}, p));
      } else {
        double best_sq = std::numeric_limits<double>::infinity();
        for (const Cell& p : positives) {
          double dr = r - p.row;
          double dc = c - p.col;
          best_sq = std::min(best_sq, dr * dr + dc * dc);
        }
        best = std::sqrt(best_sq);
      }
      field.distances[spec.index(r, c)] = static_cast<float>(best);
    }
  }
  return field;
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  constexpr double kEarthRadiusKm = 6371.0;
  constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
  double phi1 = lat1 * kDegToRad;
  double phi2 = lat2 * kDegToRad;
  double dphi = (lat2 - lat1) * kDegToRad;
  double dlam = (lon2 - lon1) * kDegToRad;
  double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
             std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) *
                 std::sin(dlam / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

CellMetric haversine_cell_metric() {
  return [](const GridSpec& spec, Cell a, Cell b) {
    return haversine_km(spec.center_lat(a.row), spec.center_lon(a.col),
                        spec.center_lat(b.row), spec.center_lon(b.col));
  };
}

} // namespace rangekit
