#pragma once

#include <functional>
#include <vector>

#include "rangekit/grid.hpp"

namespace rangekit {

// Per-cell distance to the nearest presence cell, in pixel-index units.
// Zero exactly at presence cells.
struct ProximityField {
  GridSpec spec;
  std::vector<float> distances;

  float at(int row, int col) const { return distances[spec.index(row, col)]; }
};

// Exact Euclidean distance transform (separable squared-distance lower
// envelope, two passes). Squared distances are held in f64 internally;
// since cell offsets are integers the squared minima are exact, so the
// result matches brute_force_nn bit for bit.
// Throws DomainError when the grid has no presence cell.
ProximityField distance_transform(const PresenceGrid& presence,
                                  unsigned threads = 0);

// Point-to-point distance between two cells, for the pluggable-metric hook.
using CellMetric = std::function<double(const GridSpec&, Cell, Cell)>;

// Exhaustive nearest-presence scan; the test oracle for distance_transform.
// Guarded to max_cells (default 10^4) against accidental large runs. An
// explicit metric overrides planar pixel Euclidean.
ProximityField brute_force_nn(const PresenceGrid& presence,
                              std::size_t max_cells = 10000,
                              const CellMetric& metric = {});

// Great-circle distance in kilometers between two coordinates.
double haversine_km(double lat1, double lon1, double lat2, double lon2);

// CellMetric measuring great-circle kilometers between cell centers.
CellMetric haversine_cell_metric();

} // namespace rangekit
