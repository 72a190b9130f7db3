#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "primewave/series.hpp"

namespace primewave {

// Shared point -> grid mapping. Cells are half-open [i,i+1) x [j,j+1) in these
// coordinates, with the top row/column closed so every point owns one cell.
inline double grid_coord(double v, double lo, double hi, uint32_t n) {
  double u = (v - lo) / (hi - lo) * double(n);
  if (!(u > 0.0)) return 0.0;
  if (u > double(n)) return double(n);
  return u;
}

inline uint32_t cell_index(double u, uint32_t n) {
  double f = std::floor(u);
  uint32_t i = (f <= 0.0) ? 0u : uint32_t(f);
  return (i >= n) ? n - 1 : i;
}

struct BoxCountResult {
  std::vector<uint32_t> grid_sizes;
  std::vector<uint64_t> occupied;
  double dimension = 0.0;
  double fit_r2 = 0.0;
  double box_t0 = 0.0, box_t1 = 0.0, box_y0 = 0.0, box_y1 = 0.0;
  bool resolution_warning = false;  // samples fewer than 4x the finest grid
  bool range_flag = false;          // fitted dimension outside [1,2]
};

// Number of cells of the N x N grid over the graph's bounding rectangle met
// by the polyline through consecutive samples (real part). Incremental grid
// walking, O(segments + cells crossed).
uint64_t box_count(const SampledGraph& graph, uint32_t n);

// Least-squares slope of ln M(N) against ln N. Defaults to 2^4..2^11; the two
// coarsest grids are dropped from the fit when the full-set r^2 < 0.99.
BoxCountResult box_dimension(const SampledGraph& graph,
                             std::vector<uint32_t> grid_sizes = {});

}  // namespace primewave
