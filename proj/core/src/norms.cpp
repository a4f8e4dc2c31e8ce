#include "enls/norms.hpp"

#include <algorithm>
#include <cmath>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/kahan.hpp"

namespace enls {

double l2_norm(const FieldSample& f) {
  CompensatedSum acc;
  for (const auto& v : f.values) acc.add(std::norm(v));
  return std::sqrt(f.grid.dx() * acc.value());
}

double l2_norm(const Spectrum& s) {
  CompensatedSum acc;
  for (const auto& c : s.coeffs) acc.add(std::norm(c));
  return std::sqrt(s.grid.box_length() * acc.value());
}

double sobolev_norm(const Spectrum& f, double s) {
  CompensatedSum acc;
  for (int i = 0; i < f.grid.num_modes(); ++i) {
    const double w = std::pow(bracket(f.grid.frequency_at_index(i)), 2.0 * s);
    acc.add(w * std::norm(f.coeffs[i]));
  }
  return std::sqrt(f.grid.box_length() * acc.value());
}

namespace {

// (sum_i w |a_i|^p)^{1/p}, or max |a_i| for p = inf.
double lp(std::span<const double> a, double p, double w) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : a) m = std::max(m, v);
    return m;
  }
  // Scale by the max to avoid overflow for large p.
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, v);
  if (peak == 0.0) return 0.0;
  CompensatedSum acc;
  for (double v : a) acc.add(std::pow(v / peak, p));
  return peak * std::pow(w * acc.value(), 1.0 / p);
}

}  // namespace

double mixed_norm(const SpaceTimeField& f, double p, double q, NormOrder order) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw ConfigError("mixed_norm: exponents must be >= 1");
  const int M = f.grid.num_modes();
  const int Nt = f.num_time_samples;
  const double dx = f.grid.dx();
  const double dt = f.dt();
  if (order == NormOrder::kSpaceOuter) {
    std::vector<double> inner(M);
    std::vector<double> column(Nt);
    for (int j = 0; j < M; ++j) {
      for (int n = 0; n < Nt; ++n) column[n] = std::abs(f.at(n, j));
      inner[j] = lp(column, q, dt);
    }
    return lp(inner, p, dx);
  }
  std::vector<double> inner(Nt);
  std::vector<double> row(M);
  for (int n = 0; n < Nt; ++n) {
    for (int j = 0; j < M; ++j) row[j] = std::abs(f.at(n, j));
    inner[n] = lp(row, p, dx);
  }
  return lp(inner, q, dt);
}

double spacetime_l2_norm(const SpaceTimeField& f) {
  CompensatedSum acc;
  for (const auto& v : f.values) acc.add(std::norm(v));
  return std::sqrt(f.grid.dx() * f.dt() * acc.value());
}

double time_taper(double t, double span, double fraction) {
  if (fraction <= 0.0) return 1.0;
  const double edge = fraction * span;
  const double d = std::min(t, span - t);
  if (d >= edge) return 1.0;
  if (d <= 0.0) return 0.0;
  return 0.5 * (1.0 - std::cos(kPi * d / edge));
}

double xsb_norm(const SpaceTimeField& f, double s, double b, const XsbOptions& opts) {
  const int M = f.grid.num_modes();
  const int Nt = f.num_time_samples;
  const double T = f.time_span;
  const double dt = f.dt();

  // Spatial coefficients per time slice, demodulated by the free phase.
  std::vector<ComplexVector> modes(M, ComplexVector(Nt));
  for (int n = 0; n < Nt; ++n) {
    const double t = n * dt;
    ComplexVector c = dft_forward(f.slice(n));
    const double w = opts.taper ? time_taper(t, T, opts.taper_fraction) : 1.0;
    for (int i = 0; i < M; ++i) {
      const double xi = f.grid.frequency_at_index(i);
      modes[i][n] = c[i] * (w / M) * std::polar(1.0, -xi * xi * xi * t);
    }
  }
  CompensatedSum acc;
  for (int i = 0; i < M; ++i) {
    const double space_weight = std::pow(bracket(f.grid.frequency_at_index(i)), 2.0 * s);
    const ComplexVector g = dft_forward(modes[i]);
    for (int n = 0; n < Nt; ++n) {
      const int mode = n < Nt / 2 ? n : n - Nt;
      const double tau = 2.0 * kPi * mode / T;
      const double c = std::norm(g[n]) / (static_cast<double>(Nt) * Nt);
      acc.add(space_weight * std::pow(bracket(tau), 2.0 * b) * c);
    }
  }
  return std::sqrt(f.grid.box_length() * T * acc.value());
}

}  // namespace enls
