#pragma once

#include <filesystem>
#include <vector>

#include "enls/grid.hpp"

namespace enls {

/// Which member of the cubic third-order NLS family is integrated.
///
///   kFull:    u_t + i alpha u_xx - u_xxx + i beta |u|^2 u = 0
///   kReduced: u_t + u_xxx - i beta |u|^2 u = 0      (alpha ignored)
///
/// In Fourier variables both read c_t = i omega(xi) c + i sigma beta (|u|^2 u)^,
/// with omega = alpha xi^2 - xi^3, sigma = -1 for the full form and
/// omega = xi^3, sigma = +1 for the reduced form. The reduced linear group is
/// exp(i xi^3 t), i.e. the free waves exp(i(xi x + xi^3 t)).
enum class EquationForm { kFull, kReduced };

struct Equation {
  EquationForm form = EquationForm::kReduced;
  double alpha = 0.0;
  double beta = 1.0;

  double linear_symbol(double xi) const {
    return form == EquationForm::kFull ? alpha * xi * xi - xi * xi * xi : xi * xi * xi;
  }
  double nonlinear_sign() const { return form == EquationForm::kFull ? -1.0 : 1.0; }
};

struct SolverConfig {
  Equation equation;
  double dt = 1e-3;
  double t_end = 1.0;
  /// Integrate toward negative times when -1.
  int time_direction = 1;
  /// 2/3-rule truncation with an alias-free padded evaluation of the cubic term.
  bool dealias = true;
  int snapshot_stride = 1;
  /// Abort when the sup norm of the state exceeds this value.
  double blowup_threshold = 1e8;
};

/// Empirical explicit-stage stability limit of the integrating-factor RK4 scheme:
/// dt * 3 |beta| max|u|^2 <= 2.8 (the linear part is integrated exactly).
double stability_dt_limit(const FieldSample& u0, const Equation& eq);

struct Trajectory {
  SolverConfig config;
  std::vector<FieldSample> snapshots;
  std::vector<long> steps;
  std::vector<double> l2_norms;
};

/// Exact linear flow of `eq` over elapsed time t: c_k -> exp(i omega(xi_k) t) c_k.
Spectrum linear_propagate(const Spectrum& u0, double t, const Equation& eq);
/// Linear flow of the full equation with second-order coefficient alpha.
Spectrum linear_propagate(const Spectrum& u0, double t, double alpha);

/// Highest mode kept by the 2/3 rule on a grid of M modes.
int dealias_cutoff(const GridSpec& grid);

/// Integrating-factor fourth-order Runge-Kutta integration.
/// Throws ConfigError for inconsistent configurations and BlowUpError when the
/// state becomes non-finite or exceeds the blow-up threshold.
Trajectory solve(const FieldSample& u0, const SolverConfig& config);

/// Max over interior snapshots of the discrete L2 norm of the PDE residual,
/// with centered differences in time and spectral derivatives in space.
double residual(const Trajectory& traj, const Equation& eq);
double residual(const Trajectory& traj, const SolverConfig& config);

/// Snapshot binaries snapshot_NNNNNN.bin plus manifest.csv (step,t,l2_norm).
void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj);
std::string trajectory_manifest_csv(const Trajectory& traj);

}  // namespace enls
