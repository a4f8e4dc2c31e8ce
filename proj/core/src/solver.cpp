#include "enls/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/field_io.hpp"
#include "enls/norms.hpp"

namespace enls {

namespace {

double sup_norm(const FieldSample& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

class NonlinearTerm {
 public:
  NonlinearTerm(const GridSpec& grid, const Equation& eq, bool dealias)
      : grid_(grid), factor_(Complex(0.0, eq.nonlinear_sign() * eq.beta)), dealias_(dealias),
        cutoff_(dealias_cutoff(grid)) {}

  // i sigma beta (|u|^2 u)^, band-projected when dealiasing.
  Spectrum operator()(const Spectrum& c) const {
    Spectrum out(grid_, c.time);
    if (dealias_) {
      out = cubic_product(c, c, c, grid_);
      for (int i = 0; i < grid_.num_modes(); ++i) {
        if (std::abs(grid_.mode_of(i)) > cutoff_) out.coeffs[i] = 0.0;
      }
    } else {
      FieldSample u = to_field(c);
      for (auto& v : u.values) v *= std::norm(v);
      out = to_spectrum(u);
    }
    for (auto& z : out.coeffs) z *= factor_;
    return out;
  }

 private:
  GridSpec grid_;
  Complex factor_;
  bool dealias_;
  int cutoff_;
};

}  // namespace

double stability_dt_limit(const FieldSample& u0, const Equation& eq) {
  const double amp = sup_norm(u0);
  const double rate = 3.0 * std::abs(eq.beta) * amp * amp;
  if (rate == 0.0) return std::numeric_limits<double>::infinity();
  return 2.8 / rate;
}

Spectrum linear_propagate(const Spectrum& u0, double t, const Equation& eq) {
  Spectrum out = u0;
  for (int i = 0; i < u0.grid.num_modes(); ++i) {
    out.coeffs[i] *= std::polar(1.0, eq.linear_symbol(u0.grid.frequency_at_index(i)) * t);
  }
  out.time = u0.time + t;
  return out;
}

Spectrum linear_propagate(const Spectrum& u0, double t, double alpha) {
  return linear_propagate(u0, t, Equation{EquationForm::kFull, alpha, 0.0});
}

int dealias_cutoff(const GridSpec& grid) { return grid.num_modes() / 3; }

Trajectory solve(const FieldSample& u0, const SolverConfig& config) {
  if (!(config.dt > 0.0)) throw ConfigError("solver: dt must be positive");
  if (!(config.t_end > 0.0)) throw ConfigError("solver: t_end must be positive");
  if (config.snapshot_stride < 1) throw ConfigError("solver: snapshot_stride must be >= 1");
  if (config.time_direction != 1 && config.time_direction != -1) {
    throw ConfigError("solver: time_direction must be +1 or -1");
  }
  const long num_steps = std::lround(config.t_end / config.dt);
  if (num_steps < 1 || std::abs(num_steps * config.dt - config.t_end) > 1e-9 * config.t_end) {
    throw ConfigError("solver: t_end must be an integer multiple of dt");
  }
  const double limit = stability_dt_limit(u0, config.equation);
  if (config.dt > limit) {
    throw ConfigError("solver: dt = " + format_double(config.dt) +
                      " exceeds the stability bound " + format_double(limit) +
                      " (dt * 3 |beta| max|u0|^2 <= 2.8)");
  }

  const GridSpec& grid = u0.grid;
  const int M = grid.num_modes();
  Spectrum c = to_spectrum(u0);
  if (config.dealias) {
    const int K = dealias_cutoff(grid);
    double peak = 0.0;
    for (const auto& z : c.coeffs) peak = std::max(peak, std::abs(z));
    for (int i = 0; i < M; ++i) {
      if (std::abs(grid.mode_of(i)) > K) {
        if (std::abs(c.coeffs[i]) > 1e-10 * peak) {
          throw ConfigError("solver: dealiasing requested but u0 has content above |k| = " +
                            std::to_string(K));
        }
        c.coeffs[i] = 0.0;
      }
    }
  }

  const double h = config.time_direction * config.dt;
  ComplexVector e_half(M), e_full(M);
  for (int i = 0; i < M; ++i) {
    const double w = config.equation.linear_symbol(grid.frequency_at_index(i));
    e_half[i] = std::polar(1.0, w * 0.5 * h);
    e_full[i] = std::polar(1.0, w * h);
  }
  const NonlinearTerm F(grid, config.equation, config.dealias);

  Trajectory traj;
  traj.config = config;
  auto record = [&](long step, const Spectrum& state) {
    FieldSample f = to_field(state);
    f.time = u0.time + step * h;
    traj.l2_norms.push_back(l2_norm(state));
    traj.snapshots.push_back(std::move(f));
    traj.steps.push_back(step);
  };
  record(0, c);

  Spectrum a(grid), b(grid), d(grid);
  for (long step = 1; step <= num_steps; ++step) {
    Spectrum k1 = F(c);
    for (auto& z : k1.coeffs) z *= h;
    for (int i = 0; i < M; ++i) a.coeffs[i] = e_half[i] * (c.coeffs[i] + 0.5 * k1.coeffs[i]);
    Spectrum k2 = F(a);
    for (auto& z : k2.coeffs) z *= h;
    for (int i = 0; i < M; ++i) b.coeffs[i] = e_half[i] * c.coeffs[i] + 0.5 * k2.coeffs[i];
    Spectrum k3 = F(b);
    for (auto& z : k3.coeffs) z *= h;
    for (int i = 0; i < M; ++i) d.coeffs[i] = e_full[i] * c.coeffs[i] + e_half[i] * k3.coeffs[i];
    Spectrum k4 = F(d);
    for (auto& z : k4.coeffs) z *= h;
    for (int i = 0; i < M; ++i) {
      c.coeffs[i] = e_full[i] * c.coeffs[i] +
                    (e_full[i] * k1.coeffs[i] + 2.0 * e_half[i] * (k2.coeffs[i] + k3.coeffs[i]) +
                     k4.coeffs[i]) / 6.0;
    }

    double bound = 0.0;
    for (const auto& z : c.coeffs) bound += std::abs(z);
    if (!std::isfinite(bound)) {
      throw BlowUpError("blow-up or instability: non-finite state at step " + std::to_string(step),
                        step);
    }
    if (bound > config.blowup_threshold) {
      const double sup = sup_norm(to_field(c));
      if (sup > config.blowup_threshold) {
        throw BlowUpError("blow-up or instability: sup norm " + format_double(sup) +
                              " exceeds threshold at step " + std::to_string(step),
                          step);
      }
    }
    if (step % config.snapshot_stride == 0) record(step, c);
  }
  return traj;
}

double residual(const Trajectory& traj, const Equation& eq) {
  const auto& snaps = traj.snapshots;
  if (snaps.size() < 3) throw MissingDataError("residual: need at least 3 snapshots");
  const double h = snaps[1].time - snaps[0].time;
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    const double hi = snaps[i].time - snaps[i - 1].time;
    if (std::abs(hi - h) > 1e-9 * std::abs(h)) {
      throw ConfigError("residual: snapshots are not uniformly spaced");
    }
  }
  const GridSpec& grid = snaps[0].grid;
  const int M = grid.num_modes();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < snaps.size(); ++i) {
    const FieldSample& u = snaps[i];
    const Spectrum c = to_spectrum(u);
    Spectrum cxx(grid), cxxx(grid);
    for (int k = 0; k < M; ++k) {
      const double xi = grid.frequency_at_index(k);
      cxx.coeffs[k] = -xi * xi * c.coeffs[k];
      cxxx.coeffs[k] = Complex(0.0, -xi * xi * xi) * c.coeffs[k];
    }
    const FieldSample uxx = to_field(cxx);
    const FieldSample uxxx = to_field(cxxx);
    FieldSample r(grid);
    const Complex I(0.0, 1.0);
    for (int j = 0; j < M; ++j) {
      const Complex ut = (snaps[i + 1].values[j] - snaps[i - 1].values[j]) / (2.0 * h);
      const Complex cubic = std::norm(u.values[j]) * u.values[j];
      if (eq.form == EquationForm::kFull) {
        r.values[j] = ut + I * eq.alpha * uxx.values[j] - uxxx.values[j] + I * eq.beta * cubic;
      } else {
        r.values[j] = ut + uxxx.values[j] - I * eq.beta * cubic;
      }
    }
    worst = std::max(worst, l2_norm(r));
  }
  return worst;
}

double residual(const Trajectory& traj, const SolverConfig& config) {
  return residual(traj, config.equation);
}

std::string trajectory_manifest_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << "step,t,l2_norm\n";
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    out << traj.steps[i] << ',' << format_double(traj.snapshots[i].time) << ','
        << format_double(traj.l2_norms[i]) << '\n';
  }
  return out.str();
}

void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%06ld.bin", traj.steps[i]);
    write_binary(dir / name, traj.snapshots[i]);
  }
  write_file_atomic(dir / "manifest.csv", trajectory_manifest_csv(traj));
}

}  // namespace enls
