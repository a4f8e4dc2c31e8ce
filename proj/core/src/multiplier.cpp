#include "enls/multiplier.hpp"

#include <limits>
#include <sstream>

#include "enls/errors.hpp"
#include "enls/field_io.hpp"

namespace enls {

PowerMultiplier::PowerMultiplier(double N, double s) : N_(N), s_(s) {}

double PowerMultiplier::m(double xi) const {
  const double a = std::abs(xi);
  return a < N_ ? 1.0 : std::pow(a / N_, s_);
}

double PowerMultiplier::f(double xi) const {
  const double a = std::abs(xi);
  return a < N_ ? 1.0 : std::pow(a / N_, 2.0 * s_);
}

double PowerMultiplier::df(double xi) const {
  const double a = std::abs(xi);
  if (a < N_) return 0.0;
  return 2.0 * s_ * f(xi) / xi;
}

double PowerMultiplier::d2f(double xi) const {
  const double a = std::abs(xi);
  if (a < N_) return 0.0;
  return 2.0 * s_ * (2.0 * s_ - 1.0) * f(xi) / (xi * xi);
}

MultiplierParams::MultiplierParams(double N, double s)
    : MultiplierParams(N, s, std::make_shared<PowerMultiplier>(N, s)) {}

MultiplierParams::MultiplierParams(double N, double s,
                                   std::shared_ptr<const MultiplierShape> shape)
    : N_(N), s_(s), shape_(std::move(shape)) {
  if (!(N >= 1.0) || !std::isfinite(N)) throw ConfigError("multiplier: N must be finite and >= 1");
  if (!(s <= 0.0)) throw ConfigError("multiplier: s must be <= 0");
  if (!shape_) throw ConfigError("multiplier: null shape");
}

MultiplierParams MultiplierParams::identity() {
  MultiplierParams p;
  p.N_ = std::numeric_limits<double>::infinity();
  p.s_ = 0.0;
  p.identity_ = true;
  return p;
}

Spectrum apply_I(const Spectrum& u, const MultiplierParams& p) {
  Spectrum out = u;
  for (int i = 0; i < u.grid.num_modes(); ++i) out.coeffs[i] *= p.m(u.grid.frequency_at_index(i));
  return out;
}

std::string multiplier_table_csv(const MultiplierParams& p, double xi_max, int points) {
  if (points < 2) throw ConfigError("multiplier table: need at least 2 points");
  std::ostringstream out;
  out << "xi,m,f,df\n";
  for (int i = 0; i < points; ++i) {
    const double xi = xi_max * i / (points - 1);
    out << format_double(xi) << ',' << format_double(p.m(xi)) << ',' << format_double(p.f(xi))
        << ',' << format_double(p.df(xi)) << '\n';
  }
  return out.str();
}

}  // namespace enls
