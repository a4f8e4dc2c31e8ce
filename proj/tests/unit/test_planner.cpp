#include <cmath>

#include <gtest/gtest.h>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/initial_data.hpp"
#include "enls/norms.hpp"
#include "enls/planner.hpp"

using namespace enls;

TEST(Rational, NormalizedArithmetic) {
  EXPECT_EQ(Rational(6, -8), Rational(-3, 4));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 3) / Rational(-2), Rational(-1, 6));
  EXPECT_TRUE(Rational(-7, 19) < Rational(-1, 3));
  EXPECT_EQ(Rational(-37, 28).str(), "-37/28");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_DOUBLE_EQ(Rational(1, 8).to_double(), 0.125);
}

TEST(Planner, ExponentIsExact) {
  // (-7 - 19 s) / (4 (1 + s)) at s = -1/8: (-7 + 19/8) / (7/2) = -37/28.
  EXPECT_EQ(gwp_exponent(Rational(-1, 8)), Rational(-37, 28));
  EXPECT_EQ(gwp_exponent(Rational(0)), Rational(-7, 4));
  EXPECT_DOUBLE_EQ(gwp_exponent(-0.125), -37.0 / 28.0);
  EXPECT_THROW(gwp_exponent(Rational(-1)), ConfigError);
  EXPECT_THROW(gwp_exponent(-1.5), ConfigError);
}

TEST(Planner, FeasibilityFlipsAtMinusSevenNineteenths) {
  const Rational edge(-7, 19);
  EXPECT_EQ(gwp_exponent(edge), Rational(0));
  EXPECT_FALSE(gwp_feasible(edge));
  EXPECT_TRUE(gwp_feasible(edge + Rational(1, 1000000)));
  EXPECT_FALSE(gwp_feasible(edge - Rational(1, 1000000)));
  EXPECT_TRUE(gwp_feasible(-0.368));
  EXPECT_FALSE(gwp_feasible(-0.369));
  EXPECT_FALSE(gwp_feasible(-1.0));
}

TEST(Planner, ChooseLambda) {
  EXPECT_NEAR(choose_lambda(256.0, -0.125), std::pow(256.0, 1.0 / 7.0), 1e-14);
  EXPECT_DOUBLE_EQ(choose_lambda(1.0, -0.3), 1.0);
  EXPECT_DOUBLE_EQ(choose_lambda(50.0, 0.0), 1.0);
  EXPECT_THROW(choose_lambda(0.5, -0.1), ConfigError);
  EXPECT_THROW(choose_lambda(4.0, -1.0), ConfigError);
}

TEST(Planner, PlanSatisfiesConstraintWithEquality) {
  const GwpPlan p = plan(100.0, -0.125, 1.0);
  ASSERT_TRUE(p.feasible);
  EXPECT_NEAR(p.N, std::pow(100.0, 28.0 / 37.0), 1e-10 * p.N);
  EXPECT_NEAR(p.T * std::pow(p.N, p.exponent), p.c, 1e-12);
  EXPECT_GT(p.T * std::pow(p.N / 2, p.exponent), p.c);
  EXPECT_NEAR(p.lambda, std::pow(p.N, 1.0 / 7.0), 1e-12);
  EXPECT_NEAR(p.num_iterations, std::pow(p.N, 1.75), 1e-9);
  EXPECT_EQ(p.theta, "unspecified");
  EXPECT_GT(plan(200.0, -0.125).N, p.N);
  EXPECT_DOUBLE_EQ(plan(0.5, -0.125).N, 1.0);
}

TEST(Planner, InfeasiblePlanIsInfinite) {
  const GwpPlan p = plan(10.0, -0.4);
  EXPECT_FALSE(p.feasible);
  EXPECT_TRUE(std::isinf(p.N));
  EXPECT_TRUE(std::isinf(p.lambda));
  EXPECT_THROW(plan(0.0, -0.1), ConfigError);
  EXPECT_THROW(plan(1.0, -0.1, -1.0), ConfigError);
}

TEST(Rescale, NormScalings) {
  GridSpec g(16.0, 128);
  const FieldSample u0 = to_field(random_band_limited(g, 30, 3, 1.0));
  const double s = -0.3;
  const double hs0 = sobolev_norm(to_spectrum(u0), s);
  for (double lam : {2.0, 4.0, 8.0}) {
    const FieldSample u = rescale(u0, lam);
    EXPECT_DOUBLE_EQ(u.grid.box_length(), 16.0 * lam);
    EXPECT_NEAR(l2_norm(u), l2_norm(u0) / lam, 1e-10 * l2_norm(u0) / lam);
    // The inhomogeneous weight keeps the ratio to lambda^{-1-s} within a fixed band.
    const double k = sobolev_norm(to_spectrum(u), s) / (std::pow(lam, -1 - s) * hs0);
    EXPECT_GT(k, 0.5);
    EXPECT_LT(k, 2.0);
  }
  EXPECT_THROW(rescale(u0, 0.5), ConfigError);
}

TEST(Rescale, Composition) {
  GridSpec g(8.0, 32);
  const FieldSample u0 = gaussian_bump(g, 1.0, 1.0);
  const FieldSample a = rescale(rescale(u0, 2.0), 3.0), b = rescale(u0, 6.0);
  EXPECT_DOUBLE_EQ(a.grid.box_length(), b.grid.box_length());
  for (std::size_t j = 0; j < a.values.size(); ++j) EXPECT_NEAR(std::abs(a.values[j] - b.values[j]), 0.0, 1e-15);
}

TEST(Fit, RecoversExactPowerLaw) {
  const std::vector<double> x{8, 16, 32, 64};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -1.75));
  const LinearFit f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, -1.75, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-10);
  EXPECT_LT(f.residual, 1e-12);
  EXPECT_THROW(fit_loglog({1.0}, {1.0}), ConfigError);
  EXPECT_THROW(fit_loglog({1.0, 2.0}, {1.0, 0.0}), ConfigError);
}

TEST(Sweep, LinearFlowIsFloorDominated) {
  GridSpec g(2 * kPi / 4, 64);
  SolverConfig c;
  c.equation = Equation{EquationForm::kReduced, 0.0, 0.0};
  c.dt = 1e-6;
  c.snapshot_stride = 10;
  const SweepResult r = decay_sweep(to_field(split_band_data(g, 1, 21, 0.5, 1)), {8, 16}, -0.125, c, 5e-5);
  EXPECT_EQ(r.fit_points, 0);
  EXPECT_TRUE(std::isnan(r.fitted_slope));
  EXPECT_TRUE(r.floor_dominated[0] && r.floor_dominated[1]);
  EXPECT_EQ(sweep_csv(r).substr(0, sweep_csv(r).find('\n')), "N,drift,e1_drift,floor_dominated");
  EXPECT_THROW(decay_sweep(to_field(split_band_data(g, 1, 21, 0.5, 1)), {}, -0.125, c, 5e-5), ConfigError);
}

TEST(Sweep, DriftDecreasesWithN) {
  GridSpec g(2 * kPi / 4, 64);
  SolverConfig c;
  c.equation = Equation{EquationForm::kReduced, 0.0, 1.0};
  c.dt = 1e-6;
  c.snapshot_stride = 50;
  const SweepResult r = decay_sweep(to_field(split_band_data(g, 1, 21, 0.5, 2)), {8, 16, 32}, -0.125, c, 1e-3);
  ASSERT_EQ(r.drift_values.size(), 3u);
  EXPECT_GT(r.drift_values[0], r.drift_values[1]);
  EXPECT_GT(r.drift_values[1], r.drift_values[2]);
  EXPECT_LT(r.fitted_slope, -1.25);
}
