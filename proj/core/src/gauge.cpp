#include "enls/gauge.hpp"

#include <algorithm>
#include <cmath>

#include "enls/errors.hpp"
#include "enls/fft.hpp"

namespace enls {

namespace {

void require_lattice_carrier(double d2, const GridSpec& grid) {
  const double k = d2 / grid.dxi();
  if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, std::abs(k))) {
    throw ConfigError("gauge: d2 = alpha/3 is not a lattice frequency of the grid; use snap_alpha");
  }
}

// Samples of u(x + shift) computed as an exact spectral phase.
FieldSample translate(const FieldSample& u, double shift) {
  Spectrum c = to_spectrum(u);
  for (int i = 0; i < c.grid.num_modes(); ++i) {
    c.coeffs[i] *= std::polar(1.0, c.grid.frequency_at_index(i) * shift);
  }
  FieldSample out = to_field(c);
  out.time = u.time;
  return out;
}

}  // namespace

GaugeParams reduction_params(double alpha) {
  return {alpha, -alpha * alpha / 3.0, alpha / 3.0, 2.0 * alpha * alpha * alpha / 27.0};
}

AlphaSnap snap_alpha(double alpha, const GridSpec& grid) {
  const int k = static_cast<int>(std::lround(alpha / 3.0 / grid.dxi()));
  return {3.0 * grid.frequency(k), k};
}

FieldSample gauge_slice(const FieldSample& v_at_minus_t, double time, const GaugeParams& params) {
  require_lattice_carrier(params.d2, v_at_minus_t.grid);
  FieldSample u = translate(v_at_minus_t, -params.d1 * time);
  const GridSpec& g = u.grid;
  for (int j = 0; j < g.num_modes(); ++j) {
    u.values[j] *= std::polar(1.0, params.d2 * g.node(j) + params.d3 * time);
  }
  u.time = time;
  return u;
}

FieldSample invert_gauge_slice(const FieldSample& u_at_t, const GaugeParams& params) {
  require_lattice_carrier(params.d2, u_at_t.grid);
  const double t = u_at_t.time;
  FieldSample w = u_at_t;
  const GridSpec& g = w.grid;
  for (int j = 0; j < g.num_modes(); ++j) {
    w.values[j] *= std::polar(1.0, -(params.d2 * g.node(j) + params.d3 * t));
  }
  FieldSample v = translate(w, params.d1 * t);
  v.time = -t;
  return v;
}

Trajectory apply_gauge(const Trajectory& v, const GaugeParams& params) {
  if (v.snapshots.empty()) throw MissingDataError("apply_gauge: trajectory has no snapshots");
  Trajectory u;
  u.config = v.config;
  u.config.equation = Equation{EquationForm::kFull, params.alpha, v.config.equation.beta};
  u.config.time_direction = -v.config.time_direction;
  u.steps = v.steps;
  u.l2_norms = v.l2_norms;
  u.snapshots.reserve(v.snapshots.size());
  for (const auto& s : v.snapshots) u.snapshots.push_back(gauge_slice(s, -s.time, params));
  return u;
}

Trajectory invert_gauge(const Trajectory& u, const GaugeParams& params) {
  if (u.snapshots.empty()) throw MissingDataError("invert_gauge: trajectory has no snapshots");
  Trajectory v;
  v.config = u.config;
  v.config.equation = Equation{EquationForm::kReduced, 0.0, u.config.equation.beta};
  v.config.time_direction = -u.config.time_direction;
  v.steps = u.steps;
  v.l2_norms = u.l2_norms;
  v.snapshots.reserve(u.snapshots.size());
  for (const auto& s : u.snapshots) v.snapshots.push_back(invert_gauge_slice(s, params));
  return v;
}

}  // namespace enls
