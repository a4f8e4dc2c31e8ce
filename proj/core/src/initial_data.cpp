#include "enls/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "enls/errors.hpp"
#include "enls/norms.hpp"

namespace enls {

FieldSample gaussian_bump(const GridSpec& grid, double amplitude, double width, int carrier_mode) {
  if (!(width > 0.0)) throw ConfigError("gaussian_bump: width must be positive");
  FieldSample f(grid);
  const double center = 0.5 * grid.box_length();
  const double carrier = grid.frequency(carrier_mode);
  for (int j = 0; j < grid.num_modes(); ++j) {
    const double x = grid.node(j);
    const double r = (x - center) / width;
    f.values[j] = amplitude * std::exp(-r * r) * std::polar(1.0, carrier * x);
  }
  return f;
}

Spectrum random_band_limited(const GridSpec& grid, int band, std::uint64_t seed, double l2) {
  if (band < 0 || band > grid.max_mode()) throw ConfigError("random_band_limited: band off grid");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Spectrum s(grid);
  for (int k = -band; k <= band; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    s[k] = Complex(re, im);
  }
  const double norm = l2_norm(s);
  if (norm > 0.0) {
    for (auto& c : s.coeffs) c *= l2 / norm;
  }
  return s;
}

Spectrum wave_packet(const GridSpec& grid, int center_mode, double width_modes, int lo, int hi,
                     std::uint64_t seed, double l2) {
  if (lo < 1 || hi < lo || hi > grid.max_mode()) {
    throw ConfigError("wave_packet: need 1 <= lo <= hi < M/2");
  }
  if (!(width_modes > 0.0)) throw ConfigError("wave_packet: width must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  Spectrum s(grid);
  for (int k = lo; k <= hi; ++k) {
    const double r = (k - center_mode) / width_modes;
    s[k] = std::polar(std::exp(-0.5 * r * r), phase(rng));
  }
  const double norm = l2_norm(s);
  for (auto& c : s.coeffs) c *= l2 / norm;
  return s;
}

Spectrum split_band_data(const GridSpec& grid, int low_hi, int hi, double low_share,
                         std::uint64_t seed, double l2, bool two_sided) {
  if (low_hi < 1 || hi <= low_hi || hi > grid.max_mode()) {
    throw ConfigError("split_band_data: need 1 <= low_hi < hi < M/2");
  }
  if (!(low_share > 0.0 && low_share < 1.0)) {
    throw ConfigError("split_band_data: low_share must lie in (0, 1)");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  Spectrum low(grid), high(grid);
  for (int k = 1; k <= hi; ++k) {
    Spectrum& block = k <= low_hi ? low : high;
    block[k] = std::polar(1.0, phase(rng));
    if (two_sided) block[-k] = std::polar(1.0, phase(rng));
  }
  const double wl = l2 * std::sqrt(low_share) / l2_norm(low);
  const double wh = l2 * std::sqrt(1.0 - low_share) / l2_norm(high);
  Spectrum s(grid);
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    s.coeffs[i] = wl * low.coeffs[i] + wh * high.coeffs[i];
  }
  return s;
}

double boundary_amplitude(const FieldSample& f, int edge_points) {
  const int M = f.grid.num_modes();
  double amp = 0.0;
  for (int j = 0; j < std::min(edge_points, M); ++j) {
    amp = std::max({amp, std::abs(f.values[j]), std::abs(f.values[M - 1 - j])});
  }
  return amp;
}

}  // namespace enls
