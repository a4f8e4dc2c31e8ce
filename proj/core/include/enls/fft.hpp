#pragma once

#include <span>

#include "enls/grid.hpp"

namespace enls {

/// Unnormalized DFT, out[k] = sum_j in[j] exp(-2 pi i jk/n).
ComplexVector dft_forward(std::span<const Complex> in);
/// Unnormalized inverse DFT, out[j] = sum_k in[k] exp(+2 pi i jk/n).
ComplexVector dft_inverse(std::span<const Complex> in);

Spectrum to_spectrum(const FieldSample& f);
FieldSample to_field(const Spectrum& s);

/// Samples of the trigonometric interpolant of s on a finer grid with the same box
/// (zero padding). num_points must be even and at least s.grid.num_modes().
FieldSample to_field_padded(const Spectrum& s, int num_points);

/// Spectrum of the pointwise product u * conj(v) * w of band-limited spectra, computed
/// without aliasing on a padded grid and returned on `out_grid` (modes outside it dropped).
Spectrum cubic_product(const Spectrum& u, const Spectrum& v, const Spectrum& w,
                       const GridSpec& out_grid);

}  // namespace enls
