#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "enls/grid.hpp"
#include "enls/solver.hpp"

namespace enls {

/// Exact rational number with 64-bit parts, always normalized (den > 0).
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    normalize();
  }
  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator<(Rational a, Rational b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  std::string str() const;

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t a = num_ < 0 ? -num_ : num_;
    std::int64_t b = den_;
    while (b != 0) {
      const std::int64_t r = a % b;
      a = b;
      b = r;
    }
    if (a > 1) {
      num_ /= a;
      den_ /= a;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

/// Growth exponent (-7 - 19 s) / (4 (1 + s)) of the iteration constraint T N^e <= c.
double gwp_exponent(double s);
Rational gwp_exponent(Rational s);

/// True iff the exponent is negative, i.e. s > -7/19.
bool gwp_feasible(double s);
bool gwp_feasible(Rational s);

struct GwpPlan {
  double T = 0.0;
  double s = 0.0;
  double c = 1.0;
  double N = std::numeric_limits<double>::infinity();
  double lambda = std::numeric_limits<double>::infinity();
  double local_step = 1.0;
  double num_iterations = std::numeric_limits<double>::infinity();
  bool feasible = false;
  double exponent = 0.0;
  /// Local existence time delta ~ ||Iu0||^{-theta}; theta is not fixed and kept symbolic.
  std::string theta = "unspecified";
};

/// u0^lambda(x) = lambda^{-3/2} u0(x / lambda) on the box of length lambda L with the same
/// number of nodes (the node samples are reused, only the amplitude and box change).
/// Throws ConfigError for lambda < 1.
FieldSample rescale(const FieldSample& u0, double lambda);

/// lambda = N^{-s/(1+s)} (constant 1). Throws ConfigError for s <= -1 or N < 1.
double choose_lambda(double N, double s);

/// Minimal N >= 1 with T N^e <= c, lambda = choose_lambda(N, s), N^{7/4} iterations.
/// Infeasible plans (s <= -7/19) carry N = lambda = +inf.
GwpPlan plan(double T, double s, double c = 1.0);

struct SweepResult {
  std::vector<double> N_values;
  std::vector<double> drift_values;
  std::vector<bool> floor_dominated;
  std::vector<double> e1_drift_values;
  double fitted_slope = 0.0;  ///< NaN when fewer than two points survive the floor
  double fit_intercept = 0.0;
  double fit_residual = 0.0;
  int fit_points = 0;
  double floor = 0.0;
};

struct SweepOptions {
  /// Points with drift below floor_factor * eps * max E1 are excluded from the fit.
  double floor_factor = 100.0;
};

/// Integrates the reduced equation once on [0, delta], then for each N records
/// sup_t |E2(t) - E2(0)| and fits log drift against log N by least squares.
SweepResult decay_sweep(const FieldSample& u0, const std::vector<double>& N_values, double s,
                        const SolverConfig& solver, double delta, const SweepOptions& opts = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  ///< root-mean-square residual in log space
};
LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// CSV "N,drift,e1_drift,floor_dominated".
std::string sweep_csv(const SweepResult& r);

}  // namespace enls
