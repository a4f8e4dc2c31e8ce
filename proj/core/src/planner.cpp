#include "enls/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "enls/energy.hpp"
#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/field_io.hpp"
#include "enls/parallel.hpp"

namespace enls {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double gwp_exponent(double s) {
  if (!(s > -1.0)) throw ConfigError("gwp_exponent: s must exceed -1");
  return (-7.0 - 19.0 * s) / (4.0 * (1.0 + s));
}

Rational gwp_exponent(Rational s) {
  if (!(Rational(-1) < s)) throw ConfigError("gwp_exponent: s must exceed -1");
  return (Rational(-7) - Rational(19) * s) / (Rational(4) * (Rational(1) + s));
}

bool gwp_feasible(double s) { return s > -1.0 && gwp_exponent(s) < 0.0; }
bool gwp_feasible(Rational s) { return Rational(-1) < s && gwp_exponent(s) < Rational(0); }

FieldSample rescale(const FieldSample& u0, double lambda) {
  if (!(lambda >= 1.0)) throw ConfigError("rescale: lambda must be >= 1");
  FieldSample out(GridSpec(lambda * u0.grid.box_length(), u0.grid.num_modes()), u0.values,
                  u0.time);
  const double amp = std::pow(lambda, -1.5);
  for (auto& v : out.values) v *= amp;
  return out;
}

double choose_lambda(double N, double s) {
  if (!(s > -1.0)) throw ConfigError("choose_lambda: s must exceed -1");
  if (!(N >= 1.0)) throw ConfigError("choose_lambda: N must be >= 1");
  return std::pow(N, -s / (1.0 + s));
}

GwpPlan plan(double T, double s, double c) {
  if (!(T > 0.0)) throw ConfigError("plan: T must be positive");
  if (!(c > 0.0)) throw ConfigError("plan: c must be positive");
  GwpPlan out;
  out.T = T;
  out.s = s;
  out.c = c;
  out.exponent = gwp_exponent(s);
  out.feasible = out.exponent < 0.0;
  if (!out.feasible) return out;
  // T N^e <= c with e < 0  <=>  N >= (c / T)^{1/e}.
  out.N = std::max(1.0, std::pow(c / T, 1.0 / out.exponent));
  out.lambda = choose_lambda(out.N, s);
  out.num_iterations = std::pow(out.N, 1.75);
  return out;
}

LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ConfigError("fit_loglog: need at least 2 points of equal-length data");
  }
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw ConfigError("fit_loglog: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::log(y[i]) - (fit.intercept + fit.slope * std::log(x[i]));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

SweepResult decay_sweep(const FieldSample& u0, const std::vector<double>& N_values, double s,
                        const SolverConfig& solver, double delta, const SweepOptions& opts) {
  if (N_values.empty()) throw ConfigError("decay_sweep: no N values");
  SolverConfig cfg = solver;
  cfg.t_end = delta;
  const Trajectory traj = solve(u0, cfg);
  const double beta = cfg.equation.beta;

  std::vector<Spectrum> spectra;
  for (const auto& snap : traj.snapshots) spectra.push_back(to_spectrum(snap));

  // Members are independent: each writes its own slot, so the result does not depend on
  // the worker count.
  const std::size_t n = N_values.size();
  SweepResult r;
  r.N_values = N_values;
  r.drift_values.assign(n, 0.0);
  r.e1_drift_values.assign(n, 0.0);
  std::vector<double> e1_peak(n, 0.0);
  for_each_block(n, [&](std::size_t m) {
    const MultiplierParams p(N_values[m], s);
    double e2_0 = 0.0, e1_0 = 0.0;
    for (std::size_t i = 0; i < spectra.size(); ++i) {
      const EnergyReport e = energy_E2(spectra[i], p, beta);
      e1_peak[m] = std::max(e1_peak[m], e.E1);
      if (i == 0) {
        e2_0 = e.E2;
        e1_0 = e.E1;
      }
      r.drift_values[m] = std::max(r.drift_values[m], std::abs(e.E2 - e2_0));
      r.e1_drift_values[m] = std::max(r.e1_drift_values[m], std::abs(e.E1 - e1_0));
    }
  });
  const double e1_scale = *std::max_element(e1_peak.begin(), e1_peak.end());
  r.floor = opts.floor_factor * std::numeric_limits<double>::epsilon() * e1_scale;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < r.N_values.size(); ++i) {
    const bool low = r.drift_values[i] <= r.floor;
    r.floor_dominated.push_back(low);
    if (!low) {
      xs.push_back(r.N_values[i]);
      ys.push_back(r.drift_values[i]);
    }
  }
  r.fit_points = static_cast<int>(xs.size());
  r.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  if (xs.size() >= 2) {
    const LinearFit fit = fit_loglog(xs, ys);
    r.fitted_slope = fit.slope;
    r.fit_intercept = fit.intercept;
    r.fit_residual = fit.residual;
  }
  return r;
}

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "N,drift,e1_drift,floor_dominated\n";
  for (std::size_t i = 0; i < r.N_values.size(); ++i) {
    out << format_double(r.N_values[i]) << ',' << format_double(r.drift_values[i]) << ','
        << format_double(r.e1_drift_values[i]) << ',' << (r.floor_dominated[i] ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace enls
