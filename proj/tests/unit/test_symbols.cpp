#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "enls/errors.hpp"
#include "enls/frequency_tuple.hpp"
#include "enls/kahan.hpp"
#include "enls/multiplier.hpp"
#include "enls/symbols.hpp"

using namespace enls;

namespace {

std::array<double, 4> random_gamma4(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> U(-scale, scale);
  const double a = U(rng), b = U(rng), c = U(rng);
  return {a, b, c, -(a + b + c)};
}

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace

TEST(Multiplier, PiecewisePowerValues) {
  const MultiplierParams p(10.0, -0.25);
  EXPECT_DOUBLE_EQ(p.m(9.99), 1.0);
  EXPECT_DOUBLE_EQ(p.m(-5.0), 1.0);
  EXPECT_NEAR(p.m(160.0), std::pow(16.0, -0.25), 1e-15);
  EXPECT_NEAR(p.m(-160.0), 0.5, 1e-15);
  EXPECT_NEAR(p.f(160.0), 0.25, 1e-15);
  EXPECT_TRUE(p.flat(9.0));
  EXPECT_FALSE(p.flat(10.0));
}

TEST(Multiplier, DerivativesMatchFiniteDifferences) {
  const MultiplierParams p(4.0, -0.4);
  for (double xi : {5.0, 13.0, -40.0, 300.0}) {
    const double h = 1e-4 * std::abs(xi);
    EXPECT_LT(rel(p.df(xi), (p.f(xi + h) - p.f(xi - h)) / (2 * h)), 1e-7);
    EXPECT_LT(rel(p.d2f(xi), (p.df(xi + h) - p.df(xi - h)) / (2 * h)), 1e-7);
  }
  EXPECT_EQ(p.df(3.0), 0.0);
  EXPECT_EQ(p.d2f(-3.0), 0.0);
}

TEST(Multiplier, Validation) {
  EXPECT_THROW(MultiplierParams(0.5, -0.1), ConfigError);
  EXPECT_THROW(MultiplierParams(4.0, 0.1), ConfigError);
  EXPECT_THROW(MultiplierParams(std::nan(""), -0.1), ConfigError);
  const MultiplierParams id = MultiplierParams::identity();
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.m(1e9), 1.0);
  EXPECT_EQ(id.df(1e9), 0.0);
}

TEST(Multiplier, ApplyAndTable) {
  GridSpec g(2 * kPi, 16);
  Spectrum u(g);
  u[1] = 1.0;
  u[-6] = 2.0;
  const Spectrum v = apply_I(u, MultiplierParams(3.0, -1.0));
  EXPECT_EQ(v.at(1), Complex(1.0));
  EXPECT_NEAR(std::abs(v.at(-6)), 1.0, 1e-15);
  const std::string csv = multiplier_table_csv(MultiplierParams(1.0, -0.5), 4.0, 3);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "xi,m,f,df");
  EXPECT_THROW(multiplier_table_csv(MultiplierParams(1.0, -0.5), 4.0, 1), ConfigError);
}

TEST(FrequencyTuple, ValidationAndMagnitudes) {
  EXPECT_THROW(FrequencyTuple({1.0, 2.0, -3.0}), ConfigError);
  EXPECT_THROW(FrequencyTuple({1.0, 2.0, 3.0, 4.0}), ConfigError);
  const FrequencyTuple t{5.0, -1.0, 2.0, -6.0};
  const auto m = t.magnitudes();
  EXPECT_EQ(m.Ns, 6.0);
  EXPECT_EQ(m.Na, 5.0);
  EXPECT_EQ(m.Nt, 2.0);
  EXPECT_EQ(m.Nb, 1.0);
  EXPECT_EQ(t.max_magnitude(), 6.0);
  EXPECT_THROW(FrequencyTuple({1, -1, 2, -2, 3, -3}).magnitudes(), ConfigError);
  EXPECT_EQ(FrequencyTuple::alternating(3, 2.0), 2.0);
  EXPECT_EQ(FrequencyTuple::alternating(4, 2.0), -2.0);
}

TEST(FrequencyTuple, Gamma4Factorization) {
  std::mt19937_64 rng(17);
  double worst = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto x = random_gamma4(rng, 1000.0);
    const FrequencyTuple t(x);
    const long double f = 3.0L * ((long double)x[0] + x[1]) * ((long double)x[0] + x[2]) *
                          ((long double)x[0] + x[3]);
    const double scale = std::pow(t.max_magnitude(), 3);
    worst = std::max(worst, double(std::abs(t.gamma() - f) / scale));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Elongate, ReplacesSlotRangeBySum) {
  const std::array<double, 6> xi{1, 2, 3, 4, 5, -15};
  std::array<double, 6> out{};
  EXPECT_EQ(elongate(xi, 2, 2, out), 4);
  EXPECT_EQ((std::array<double, 4>{out[0], out[1], out[2], out[3]}), (std::array<double, 4>{1, 9, 5, -15}));
  EXPECT_EQ(elongate(xi, 1, 0, out), 6);
  EXPECT_EQ(out[5], -15);
  EXPECT_THROW(elongate(xi, 5, 2, out), ConfigError);
  std::array<double, 2> tiny{};
  EXPECT_THROW(elongate(xi, 1, 2, tiny), ConfigError);
}

TEST(Delta4, VanishesAtLowFrequencyAndForIdentity) {
  const MultiplierParams p(50.0, -0.3);
  EXPECT_EQ(delta4(10, -30, 45, -25, p), 0.0);
  EXPECT_EQ(delta4(10, -30, 45, -25, MultiplierParams::identity()), 0.0);
  EXPECT_THROW(delta4(FrequencyTuple{1, -1, 2, -2, 3, -3}, p), ConfigError);
}

TEST(Delta4, EqualsGroupAverageOfUnsymmetrized) {
  // Average of M4 over the slot maps (13) and (24), which preserve the functional.
  const MultiplierParams p(8.0, -0.35);
  std::mt19937_64 rng(5);
  double worst = 0;
  int used = 0;
  while (used < 10000) {
    const auto x = random_gamma4(rng, 400.0);
    const FrequencyTuple t(x);
    if (t.max_magnitude() <= p.N()) continue;
    const double a = x[0] + x[1], b = x[0] + x[2], c = x[0] + x[3];
    if (std::min({std::abs(a), std::abs(b), std::abs(c)}) < 1e-3 * t.max_magnitude()) continue;
    CompensatedSum avg;
    for (int o = 0; o < 2; ++o)
      for (int e = 0; e < 2; ++e) {
        std::array<double, 4> y = x;
        if (o) std::swap(y[0], y[2]);
        if (e) std::swap(y[1], y[3]);
        avg.add(0.25 * m4_unsymmetrized(y[0], y[1], y[2], y[3], p, 1.3));
      }
    worst = std::max(worst, rel(delta4(x[0], x[1], x[2], x[3], p, 1.3), avg.value()));
    ++used;
  }
  EXPECT_LT(worst, 1e-9);
}

TEST(Delta4, SlotSymmetries) {
  const MultiplierParams p(5.0, -0.2);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_gamma4(rng, 100.0);
    const double d = delta4(x[0], x[1], x[2], x[3], p);
    const double tol = 1e-12 * std::max(std::abs(d), 1e-300) + 1e-300;
    EXPECT_NEAR(delta4(x[2], x[1], x[0], x[3], p), d, tol + 1e-12 * std::abs(d));
    EXPECT_NEAR(delta4(x[0], x[3], x[2], x[1], p), d, tol + 1e-12 * std::abs(d));
    EXPECT_NEAR(delta4(-x[0], -x[1], -x[2], -x[3], p), -d, tol + 1e-12 * std::abs(d));
    EXPECT_NEAR(delta4(x[1], x[0], x[3], x[2], p), -d, tol + 1e-12 * std::abs(d));
  }
}

TEST(Delta4, ResonantPoleIsSetToZero) {
  const MultiplierParams p(4.0, -0.3);
  // xi_13 = 0: the numerator f1 - f2 + f3 - f4 = 2 (f1 - f2) does not vanish.
  EXPECT_EQ(delta4(40, -10, -40, 10, p), 0.0);
  auto near = [&](double e) { return delta4(40, -10, -40 + e, 10 - e, p); };
  EXPECT_NEAR(near(1e-4) / near(1e-3), 10.0, 1e-2);
}

TEST(Delta4, FirstOrderLimitMatchesExtrapolation) {
  const MultiplierParams p(10.0, -0.3);
  const double x1 = 200.0, x3 = -70.0;
  auto at = [&](double a) { return delta4(x1, -x1 + a, x3, -x3 - a, p); };
  auto at14 = [&](double c) { return delta4(x1, x3, -x3 - c, -x1 + c, p); };
  // Symmetric averages remove the linear term, Richardson the quadratic one.
  auto extrapolate = [](auto&& g, double h) {
    const double s1 = 0.5 * (g(h) + g(-h)), s2 = 0.5 * (g(2 * h) + g(-2 * h));
    return (4 * s1 - s2) / 3;
  };
  const double h = 0.2;
  const double lim = extrapolate(at, h);
  EXPECT_LT(rel(at(0.0), lim), 1e-9);
  EXPECT_LT(rel(at(1e-9 * x1), lim), 1e-8);  // carries the O(a) slope
  const double lim14 = extrapolate(at14, h);
  EXPECT_LT(rel(at14(0.0), lim14), 1e-9);
  // Continuity across the switch between the limit and the direct formula.
  const double edge = kDelta4SingularTol * x1;
  EXPECT_LT(rel(at(0.99 * edge), at(1.01 * edge)), 1e-6);
}

TEST(Delta4, SecondOrderLimitMatchesExtrapolation) {
  const MultiplierParams p(10.0, -0.3);
  const double x1 = 200.0;
  // xi_12 = a, xi_14 = c; the numerator is f''(x1) a c + O(3).
  auto at = [&](double a, double c) { return delta4(x1, -x1 + a, x1 - a - c, -x1 + c, p); };
  auto diag = [&](double e) { return 0.5 * (at(e, e) + at(-e, -e)); };
  const double h = 0.2;
  const double lim = (4 * diag(h) - diag(2 * h)) / 3;
  EXPECT_LT(rel(at(0.0, 0.0), lim), 1e-7);
  EXPECT_LT(rel(at(0.0, 0.0), p.d2f(x1) / (12 * x1)), 1e-12);
}

namespace {

// Independent sextic symmetrization: all 720 slot permutations filtered to those that
// keep odd slots odd and even slots even, with delta4 re-derived in its generic form.
double delta4_generic(double a1, double a2, double a3, double a4, const MultiplierParams& p) {
  if (std::max({std::abs(a1), std::abs(a2), std::abs(a3), std::abs(a4)}) <= p.N()) return 0.0;
  return (p.f(a1) - p.f(a2) + p.f(a3) - p.f(a4)) / (6 * (a1 + a2) * (a1 + a3) * (a1 + a4));
}

double delta6_reference(const std::array<double, 6>& xi, const MultiplierParams& p, double beta) {
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
  CompensatedSum acc;
  do {
    bool parity_kept = true;
    for (int j = 0; j < 6; ++j) parity_kept = parity_kept && (perm[j] % 2 == j % 2);
    if (!parity_kept) continue;
    const double k = xi[perm[0]], l = xi[perm[1]], m = xi[perm[2]];
    const double n = xi[perm[3]], o = xi[perm[4]], q = xi[perm[5]];
    acc.add(-delta4_generic(k, l, m, n + o + q, p));
    acc.add(delta4_generic(k, l, m + n + o, q, p));
    acc.add(-delta4_generic(k, l + m + n, o, q, p));
    acc.add(delta4_generic(k + l + m, n, o, q, p));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return beta * beta * acc.value() / 36.0;
}

}  // namespace

TEST(Delta6, MatchesIndependentSymmetrization) {
  const MultiplierParams p(6.0, -0.2);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> U(-60.0, 60.0);
  for (int i = 0; i < 50; ++i) {
    std::array<double, 6> xi{};
    double s = 0;
    for (int j = 0; j < 5; ++j) s += (xi[j] = U(rng));
    xi[5] = -s;
    const double d = delta6(xi, p, 0.7);
    EXPECT_LT(rel(d, delta6_reference(xi, p, 0.7)), 1e-10) << "sample " << i;
  }
}

TEST(Delta6, InvariantUnderOddAndEvenPermutations) {
  const MultiplierParams p(6.0, -0.2);
  const std::array<double, 6> xi{31.5, -12.25, 7.0, 44.0, -50.5, -19.75};
  const double d = delta6(xi, p);
  std::array<double, 6> y = xi;
  std::swap(y[0], y[4]);
  std::swap(y[1], y[3]);
  EXPECT_LT(rel(delta6(y, p), d), 1e-12);
  EXPECT_EQ(delta6(xi, MultiplierParams::identity()), 0.0);
  EXPECT_EQ(delta6(std::array<double, 6>{1, -1, 0.5, -0.5, 0.25, -0.25}, p), 0.0);
  EXPECT_THROW(delta6(std::array<double, 4>{1, -1, 2, -2}, p), ConfigError);
}
