#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enls/grid.hpp"
#include "enls/multiplier.hpp"
#include "enls/solver.hpp"

namespace enls {

struct EnergyReport {
  double t = 0.0;
  double E1 = 0.0;
  double Lambda4 = 0.0;
  double E2 = 0.0;
  double drift_E2 = 0.0;
};

/// E1 = ||Iu||^2.
double energy_E1(const Spectrum& u, const MultiplierParams& p);
/// E1 as the two-slot hyperplane functional Lambda_2(m1 m2; u).
double energy_E1_hyperplane(const Spectrum& u, const MultiplierParams& p);

/// E2 = E1 + Lambda_4(delta4). drift_E2 is left at 0.
EnergyReport energy_E2(const Spectrum& u, const MultiplierParams& p, double beta = 1.0);

/// Energy reports along a trajectory, drift measured against the first snapshot.
std::vector<EnergyReport> energy_series(const Trajectory& traj, const MultiplierParams& p,
                                        double beta);

/// CSV "t,E1,Lambda4,E2,drift_E2".
std::string energy_csv(const std::vector<EnergyReport>& reports);

struct DerivativeCheckOptions {
  /// Use this constant instead of fitting one on the first interior snapshot.
  std::optional<double> fixed_c;
  /// Project the elongated slot on the solver band (see Lambda6Options).
  bool match_solver_band = true;
};

struct DerivativeCheck {
  double c_fit = 0.0;
  /// max_i |dE2/dt(t_i) - c Lambda6(t_i)| / max_i |c Lambda6(t_i)| over held-out snapshots.
  double max_rel_mismatch = 0.0;
  /// Same for dE1/dt against the quartic elongation expression (no fitted constant).
  double e1_max_rel_mismatch = 0.0;
  int held_out = 0;
  std::vector<double> times;
  std::vector<double> dE2dt;
  std::vector<double> lambda6;
  std::vector<double> resonant;  ///< resonant_remainder at each interior time
  std::vector<double> dE1dt;
  std::vector<double> e1_rate;
};

/// Compares centered-difference derivatives of E2 and E1 along a reduced-equation
/// trajectory with the sextic and quartic functionals. Needs >= 5 uniformly spaced
/// snapshots and M <= 64.
DerivativeCheck ddt_energy_check(const Trajectory& traj, const MultiplierParams& p,
                                 const DerivativeCheckOptions& opts = {});

}  // namespace enls
