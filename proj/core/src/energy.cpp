#include "enls/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/field_io.hpp"
#include "enls/functionals.hpp"
#include "enls/kahan.hpp"

namespace enls {

double energy_E1(const Spectrum& u, const MultiplierParams& p) {
  CompensatedSum sum;
  for (int i = 0; i < u.grid.num_modes(); ++i) {
    sum.add(p.f(u.grid.frequency_at_index(i)) * std::norm(u.coeffs[i]));
  }
  return u.grid.box_length() * sum.value();
}

double energy_E1_hyperplane(const Spectrum& u, const MultiplierParams& p) {
  return lambda2(u, [&](double x1, double x2) { return p.m(x1) * p.m(x2); }).real();
}

EnergyReport energy_E2(const Spectrum& u, const MultiplierParams& p, double beta) {
  EnergyReport r;
  r.t = u.time;
  r.E1 = energy_E1(u, p);
  r.Lambda4 = lambda4_delta4(u, p, beta);
  r.E2 = r.E1 + r.Lambda4;
  return r;
}

std::vector<EnergyReport> energy_series(const Trajectory& traj, const MultiplierParams& p,
                                        double beta) {
  std::vector<EnergyReport> out;
  out.reserve(traj.snapshots.size());
  for (const auto& snap : traj.snapshots) {
    EnergyReport r = energy_E2(to_spectrum(snap), p, beta);
    r.t = snap.time;
    if (!out.empty()) r.drift_E2 = std::abs(r.E2 - out.front().E2);
    out.push_back(r);
  }
  return out;
}

std::string energy_csv(const std::vector<EnergyReport>& reports) {
  std::ostringstream out;
  out << "t,E1,Lambda4,E2,drift_E2\n";
  for (const auto& r : reports) {
    out << format_double(r.t) << ',' << format_double(r.E1) << ',' << format_double(r.Lambda4)
        << ',' << format_double(r.E2) << ',' << format_double(r.drift_E2) << '\n';
  }
  return out.str();
}

namespace {

// Fourth-order centered difference at interior index i (needs i-2 .. i+2).
double centered(const std::vector<double>& v, std::size_t i, double h) {
  return (-v[i + 2] + 8.0 * v[i + 1] - 8.0 * v[i - 1] + v[i - 2]) / (12.0 * h);
}

double max_abs(const std::vector<double>& v, std::size_t from) {
  double m = 0.0;
  for (std::size_t i = from; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

DerivativeCheck ddt_energy_check(const Trajectory& traj, const MultiplierParams& p,
                                 const DerivativeCheckOptions& opts) {
  const auto& snaps = traj.snapshots;
  if (snaps.size() < 5) {
    throw MissingDataError("ddt_energy_check: need at least 5 snapshots, got " +
                           std::to_string(snaps.size()));
  }
  if (traj.config.equation.form != EquationForm::kReduced) {
    throw ConfigError("ddt_energy_check: the identity holds for the reduced equation");
  }
  const GridSpec& grid = snaps[0].grid;
  if (grid.num_modes() > 64) {
    throw ConfigError("ddt_energy_check: M = " + std::to_string(grid.num_modes()) +
                      " exceeds the cost guard of 64");
  }
  const double h = snaps[1].time - snaps[0].time;
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    if (std::abs(snaps[i].time - snaps[i - 1].time - h) > 1e-9 * std::abs(h)) {
      throw ConfigError("ddt_energy_check: snapshots are not uniformly spaced");
    }
  }
  const double beta = traj.config.equation.beta;
  Lambda6Options l6;
  if (opts.match_solver_band && traj.config.dealias) l6.nonlinear_band = dealias_cutoff(grid);

  std::vector<Spectrum> spectra;
  std::vector<double> e1, e2;
  for (const auto& s : snaps) {
    spectra.push_back(to_spectrum(s));
    const EnergyReport r = energy_E2(spectra.back(), p, beta);
    e1.push_back(r.E1);
    e2.push_back(r.E2);
  }

  DerivativeCheck out;
  for (std::size_t i = 2; i + 2 < snaps.size(); ++i) {
    out.times.push_back(snaps[i].time);
    out.dE2dt.push_back(centered(e2, i, h));
    out.dE1dt.push_back(centered(e1, i, h));
    out.lambda6.push_back(lambda6_delta6(spectra[i], p, beta, l6));
    out.e1_rate.push_back(e1_rate_elongation(spectra[i], p, beta));
    out.resonant.push_back(resonant_remainder(spectra[i], p, beta));
  }
  const std::size_t n = out.times.size();
  out.held_out = static_cast<int>(opts.fixed_c ? n : n - 1);
  if (opts.fixed_c) {
    out.c_fit = *opts.fixed_c;
  } else {
    out.c_fit = out.lambda6[0] != 0.0 ? out.dE2dt[0] / out.lambda6[0] : 0.0;
  }
  const std::size_t from = opts.fixed_c ? 0 : 1;

  std::vector<double> predicted(n), diff(n), e1_diff(n);
  for (std::size_t i = 0; i < n; ++i) {
    predicted[i] = out.c_fit * out.lambda6[i];
    diff[i] = out.dE2dt[i] - predicted[i];
    e1_diff[i] = out.dE1dt[i] - out.e1_rate[i];
  }
  // When the sextic term vanishes identically the mismatch is reported in absolute terms.
  const double scale = max_abs(predicted, from);
  out.max_rel_mismatch = max_abs(diff, from) / (scale > 0.0 ? scale : 1.0);
  const double e1_scale = max_abs(out.e1_rate, 0);
  out.e1_max_rel_mismatch = max_abs(e1_diff, 0) / (e1_scale > 0.0 ? e1_scale : 1.0);
  return out;
}

}  // namespace enls
