#pragma once

#include <cstdint>

#include "enls/grid.hpp"

namespace enls {

/// A exp(-(x - c)^2 / sigma^2) exp(i xi_carrier x), centered at c = L/2 unless given.
/// carrier_mode selects xi_carrier = 2 pi carrier_mode / L so the modulation is grid-exact.
FieldSample gaussian_bump(const GridSpec& grid, double amplitude, double width,
                          int carrier_mode = 0);

/// Independent complex Gaussian coefficients on modes 0 < |k| <= band (and k = 0),
/// scaled so that the L2 norm equals `l2`.
Spectrum random_band_limited(const GridSpec& grid, int band, std::uint64_t seed,
                             double l2 = 1.0);

/// One-sided packet: modes lo <= k <= hi with Gaussian envelope around center_mode and
/// random phases, scaled to the given L2 norm. Negative modes are empty, so
/// c(k) c(-k) = 0 for every k.
Spectrum wave_packet(const GridSpec& grid, int center_mode, double width_modes, int lo, int hi,
                     std::uint64_t seed, double l2 = 1.0);

/// Flat random-phase spectrum on modes 1..hi, split into a low block 1..low_hi carrying
/// the fraction low_share of the squared L2 norm and a high block carrying the rest.
/// Negative modes are filled too when two_sided is set.
Spectrum split_band_data(const GridSpec& grid, int low_hi, int hi, double low_share,
                         std::uint64_t seed, double l2 = 1.0, bool two_sided = false);

/// Largest |u| at the two ends of the box, used to monitor the periodic-box proxy.
double boundary_amplitude(const FieldSample& f, int edge_points = 2);

}  // namespace enls
