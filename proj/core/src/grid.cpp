#include "enls/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "enls/errors.hpp"

namespace enls {

GridSpec::GridSpec(double box_length, int num_modes)
    : box_length_(box_length), num_modes_(num_modes) {
  if (!(box_length > 0.0) || !std::isfinite(box_length)) {
    throw ConfigError("grid: box length must be positive, got " + std::to_string(box_length));
  }
  if (num_modes < 2 || num_modes % 2 != 0) {
    throw ConfigError("grid: number of modes must be a positive even integer, got " +
                      std::to_string(num_modes));
  }
}

FieldSample::FieldSample(GridSpec g, ComplexVector v, double t)
    : grid(g), values(std::move(v)), time(t) {
  if (values.size() != static_cast<std::size_t>(grid.num_modes())) {
    throw ConfigError("field sample: expected " + std::to_string(grid.num_modes()) +
                      " values, got " + std::to_string(values.size()));
  }
}

FieldSample::FieldSample(GridSpec g, double t)
    : grid(g), values(static_cast<std::size_t>(g.num_modes())), time(t) {}

Spectrum::Spectrum(GridSpec g, ComplexVector c, double t)
    : grid(g), coeffs(std::move(c)), time(t) {
  if (coeffs.size() != static_cast<std::size_t>(grid.num_modes())) {
    throw ConfigError("spectrum: expected " + std::to_string(grid.num_modes()) +
                      " coefficients, got " + std::to_string(coeffs.size()));
  }
}

Spectrum::Spectrum(GridSpec g, double t)
    : grid(g), coeffs(static_cast<std::size_t>(g.num_modes())), time(t) {}

int Spectrum::bandwidth(double tol) const {
  double peak = 0.0;
  for (const auto& c : coeffs) peak = std::max(peak, std::abs(c));
  if (peak == 0.0) return -1;
  int band = 0;
  for (int i = 0; i < grid.num_modes(); ++i) {
    if (std::abs(coeffs[i]) > tol * peak) band = std::max(band, std::abs(grid.mode_of(i)));
  }
  return band;
}

SpaceTimeField::SpaceTimeField(GridSpec g, int nt, double span)
    : SpaceTimeField(g, nt, span,
                     ComplexVector(static_cast<std::size_t>(g.num_modes()) * std::max(nt, 0))) {}

SpaceTimeField::SpaceTimeField(GridSpec g, int nt, double span, ComplexVector v)
    : grid(g), num_time_samples(nt), time_span(span), values(std::move(v)) {
  if (nt < 1) throw ConfigError("space-time field: need at least one time sample");
  if (!(span > 0.0)) throw ConfigError("space-time field: time span must be positive");
  if (values.size() != static_cast<std::size_t>(g.num_modes()) * nt) {
    throw ConfigError("space-time field: value count does not match M x num_time_samples");
  }
}

}  // namespace enls
