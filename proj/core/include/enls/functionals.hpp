#pragma once

#include <functional>

#include "enls/frequency_tuple.hpp"
#include "enls/grid.hpp"
#include "enls/multiplier.hpp"

namespace enls {

/// Quartic multiplier evaluated at lattice frequencies (xi_1, ..., xi_4) on the hyperplane.
using Multiplier4 = std::function<double(double, double, double, double)>;

/// Lattice n-linear functional
///   Lambda_n(M; u) = L * sum_{k_1 + ... + k_n = 0} M(xi) prod_j h_j(k_j),
/// with h_j = c(k) on odd slots and h_j = conj(c(-k)) on even slots, which is the
/// discrete form of the integral over the hyperplane applied to (u, conj u, u, ...).
/// For a constant multiplier this equals the physical moment of |u|^n exactly.
///
/// All sums run over the occupied band of u, are split into blocks over the first
/// index and reduced in block order with compensated summation, so results are
/// independent of the worker count.
Complex lambda2(const Spectrum& u, const std::function<double(double, double)>& mult);
Complex lambda4(const Spectrum& u, const Multiplier4& mult);
Complex lambda6_constant(const Spectrum& u, double value = 1.0);

/// Quartic functional with one slot replaced by a cubic elongation. `slot` is 1-based;
/// odd slots receive the coefficients of w itself, even slots conj(w(-k)).
Complex lambda4_elongated(const Spectrum& u, const Spectrum& w, int slot, const Multiplier4& mult);

/// Lambda_4(delta4; u). Returns the real value; throws InvariantError if the
/// imaginary residue exceeds 1e-10 of the absolute term sum. Requires the occupied
/// band of u to lie within M/3 (ConfigError otherwise).
double lambda4_delta4(const Spectrum& u, const MultiplierParams& p, double beta = 1.0);

struct Lambda6Options {
  /// When >= 0, the cubic elongation is projected onto |k| <= band, which makes the
  /// functional the exact time derivative of E2 for the band-truncated flow.
  int nonlinear_band = -1;
  /// Largest grid allowed for the direct quintuple sum.
  int direct_max_modes = 64;
};

/// Lambda_6(delta6; u), evaluated through the elongation structure
///   beta * sum_{j=1..4} (-1)^{j-1} Lambda_4(delta4 with slot j replaced by |u|^2 u),
/// which equals the symmetrized sum because the product of coefficients is invariant
/// under the slot permutations being averaged. Cost is that of four quartic sums.
/// The functional is purely imaginary; the returned value is its imaginary part and
/// InvariantError is thrown if the real residue exceeds 1e-10 of the term sum.
double lambda6_delta6(const Spectrum& u, const MultiplierParams& p, double beta = 1.0,
                      const Lambda6Options& opts = {});
Complex lambda6_delta6_complex(const Spectrum& u, const MultiplierParams& p, double beta = 1.0,
                               const Lambda6Options& opts = {});

/// Direct quintuple sum of delta6 over the hyperplane. Only for M <= direct_max_modes
/// (ConfigError otherwise); used to cross-check the elongation route.
Complex lambda6_delta6_direct(const Spectrum& u, const MultiplierParams& p, double beta = 1.0,
                              const Lambda6Options& opts = {});

/// i * Lambda_4(sum_{j=1,2} (-1)^{j-1} beta X_j^2(M2); u), the rate of change of E1
/// along the reduced flow. Real.
double e1_rate_elongation(const Spectrum& u, const MultiplierParams& p, double beta = 1.0);

/// The part of dE2/dt that the sextic term misses on the lattice: the quartic sum over
/// the resonant set xi_13 = 0, where delta4 has a pole and is set to 0, so the linear
/// flow of Lambda_4(delta4) cannot cancel dE1/dt there. Real. Vanishes when
/// c(k) c(-k) = 0 for all k, e.g. for one-sided spectra.
double resonant_remainder(const Spectrum& u, const MultiplierParams& p, double beta = 1.0);

/// Largest |k| with a coefficient above 1e-13 of the peak; throws ConfigError above M/3.
int checked_band(const Spectrum& u);

}  // namespace enls
