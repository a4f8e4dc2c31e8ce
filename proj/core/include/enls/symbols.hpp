#pragma once

#include <span>

#include "enls/frequency_tuple.hpp"
#include "enls/multiplier.hpp"

namespace enls {

/// Relative size |xi_1j| < tol * N_s below which delta4 switches to a limit formula.
inline constexpr double kDelta4SingularTol = 1e-7;

/// Symmetrized quartic multiplier
///   delta4 = beta (m1^2 - m2^2 + m3^2 - m4^2) / (6 xi_12 xi_13 xi_14).
///
/// The zero sets of xi_12 and xi_14 are removable; there the first- or second-order
/// limit is returned. On xi_13 = 0 with xi_12 != 0 the symbol has a genuine pole
/// (the resonance xi_1^3 + ... + xi_4^3 vanishes while the numerator does not); the
/// value there is defined as 0, the lattice principal value. Arguments are assumed to
/// satisfy xi_1 + ... + xi_4 = 0.
double delta4(double x1, double x2, double x3, double x4, const MultiplierParams& p,
              double beta = 1.0);
double delta4(const FrequencyTuple& t, const MultiplierParams& p, double beta = 1.0);

/// Same as delta4 with f = m^2 already evaluated at the four arguments.
double delta4_with_values(double x1, double x2, double x3, double x4, double f1, double f2,
                          double f3, double f4, const MultiplierParams& p, double beta);

/// The unsymmetrized correction multiplier
///   M4 = -(sum_{j=1,2} (-1)^{j-1} beta X_j^2(M2)) / gamma_4,  M2 = m(xi_1) m(xi_2),
/// built literally from the elongation of M2. Returns 0 where gamma_4 vanishes.
double m4_unsymmetrized(double x1, double x2, double x3, double x4, const MultiplierParams& p,
                        double beta = 1.0);

/// Elongation X_j^k: replaces slots j..j+k by their sum (1-based j). Returns the
/// number of entries written to `out`.
int elongate(std::span<const double> xi, int j, int k, std::span<double> out);

/// Symmetrized sextic multiplier: beta/36 times the sum over permutations of the odd
/// slots {1,3,5} and of the even slots {2,4,6} of four grouped delta4 terms (144 calls).
double delta6(std::span<const double> xi, const MultiplierParams& p, double beta = 1.0);
double delta6(const FrequencyTuple& t, const MultiplierParams& p, double beta = 1.0);

}  // namespace enls
