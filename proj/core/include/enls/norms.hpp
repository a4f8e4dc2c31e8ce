#pragma once

#include <limits>

#include "enls/grid.hpp"

namespace enls {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

double l2_norm(const FieldSample& f);
double l2_norm(const Spectrum& s);

/// (L * sum_k <xi_k>^{2s} |c_k|^2)^{1/2}.
double sobolev_norm(const Spectrum& f, double s);

/// Which variable is integrated first in a mixed Lebesgue norm.
enum class NormOrder {
  kSpaceOuter,  ///< L^p_x L^q_t: inner integral over t, outer over x.
  kTimeOuter,   ///< L^q_t L^p_x: inner integral over x, outer over t.
};

/// Rectangle-rule mixed norm. The exponent p always acts on x and q on t;
/// pass kInfinity for a sup.
double mixed_norm(const SpaceTimeField& f, double p, double q,
                  NormOrder order = NormOrder::kSpaceOuter);

double spacetime_l2_norm(const SpaceTimeField& f);

/// Raised-cosine taper equal to 1 on the middle of [0, span) and rolling off to 0
/// over the outer `fraction` of the span at each end.
double time_taper(double t, double span, double fraction = 0.1);

struct XsbOptions {
  bool taper = true;
  double taper_fraction = 0.1;
};

/// Discrete X^{s,b} norm with weight <xi>^s <tau - xi^3>^b.
///
/// Each spatial mode is first demodulated by the free Airy phase exp(-i xi^3 t),
/// so the time transform directly produces the modulation variable tau - xi^3.
/// Free waves then sit exactly on tau - xi^3 = 0 regardless of the time lattice.
double xsb_norm(const SpaceTimeField& f, double s, double b, const XsbOptions& opts = {});

}  // namespace enls
