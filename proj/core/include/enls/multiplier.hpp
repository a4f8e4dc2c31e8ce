#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>

#include "enls/grid.hpp"

namespace enls {

/// Shape of the I-operator multiplier m above the threshold N.
class MultiplierShape {
 public:
  virtual ~MultiplierShape() = default;
  /// f = m^2 and its first two derivatives, as functions of xi (even in xi).
  virtual double m(double xi) const = 0;
  virtual double f(double xi) const = 0;
  virtual double df(double xi) const = 0;
  virtual double d2f(double xi) const = 0;
  virtual std::string name() const = 0;
};

/// m = 1 on |xi| < N and (|xi|/N)^s on |xi| >= N. Derivatives at the corner
/// |xi| = N are taken from the |xi| > N side.
class PowerMultiplier final : public MultiplierShape {
 public:
  PowerMultiplier(double N, double s);
  double m(double xi) const override;
  double f(double xi) const override;
  double df(double xi) const override;
  double d2f(double xi) const override;
  std::string name() const override { return "piecewise-power"; }

 private:
  double N_;
  double s_;
};

/// Threshold N, exponent s and the realized multiplier. Copies share the shape.
class MultiplierParams {
 public:
  /// Piecewise-power multiplier. Requires N >= 1 and s <= 0; s outside (-1/4, 0)
  /// is accepted for diagnostic sweeps.
  MultiplierParams(double N, double s);
  MultiplierParams(double N, double s, std::shared_ptr<const MultiplierShape> shape);

  /// Multiplier identically 1 (N = +infinity).
  static MultiplierParams identity();

  double N() const { return N_; }
  double s() const { return s_; }
  bool is_identity() const { return identity_; }

  double m(double xi) const { return identity_ ? 1.0 : shape_->m(xi); }
  double f(double xi) const { return identity_ ? 1.0 : shape_->f(xi); }
  double df(double xi) const { return identity_ ? 0.0 : shape_->df(xi); }
  double d2f(double xi) const { return identity_ ? 0.0 : shape_->d2f(xi); }
  /// True when |xi| is in the region where m == 1.
  bool flat(double xi) const { return identity_ || std::abs(xi) < N_; }

 private:
  MultiplierParams() = default;

  double N_ = 1.0;
  double s_ = 0.0;
  bool identity_ = false;
  std::shared_ptr<const MultiplierShape> shape_;
};

/// Fourier multiplier (Iu)^(xi) = m(xi) u^(xi).
Spectrum apply_I(const Spectrum& u, const MultiplierParams& p);

/// CSV "xi,m,f,df" on a uniform xi grid, for plotting.
std::string multiplier_table_csv(const MultiplierParams& p, double xi_max, int points);

}  // namespace enls
