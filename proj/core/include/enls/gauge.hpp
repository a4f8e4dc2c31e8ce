#pragma once

#include "enls/grid.hpp"
#include "enls/solver.hpp"

namespace enls {

/// Coefficients of u(x,t) = v(x - d1 t, -t) exp(i (d2 x + d3 t)).
struct GaugeParams {
  double alpha = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

/// d1 = -alpha^2/3, d2 = alpha/3, d3 = 2 alpha^3/27: the choice that maps the full
/// equation with coefficient alpha onto the reduced one.
GaugeParams reduction_params(double alpha);

struct AlphaSnap {
  double alpha;
  int carrier_mode;  ///< d2 = alpha/3 = 2 pi carrier_mode / L.
};

/// Nearest alpha such that alpha/3 is a lattice frequency of the grid.
AlphaSnap snap_alpha(double alpha, const GridSpec& grid);

/// Maps a reduced-equation trajectory v, sampled at times -t_i, onto the full-equation
/// trajectory u at times t_i. The shift x - d1 t is applied as an exact spectral phase;
/// d2 must be a lattice frequency. Throws MissingDataError when a needed time is absent.
Trajectory apply_gauge(const Trajectory& v, const GaugeParams& params);

/// Inverse of apply_gauge: v(y, -t) = u(y + d1 t, t) exp(-i (d2 (y + d1 t) + d3 t)).
Trajectory invert_gauge(const Trajectory& u, const GaugeParams& params);

/// Gauge applied to a single time slice; `time` is the full-equation time.
FieldSample gauge_slice(const FieldSample& v_at_minus_t, double time, const GaugeParams& params);
FieldSample invert_gauge_slice(const FieldSample& u_at_t, const GaugeParams& params);

}  // namespace enls
