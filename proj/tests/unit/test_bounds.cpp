#include <cmath>

#include <gtest/gtest.h>

#include "enls/bounds.hpp"
#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/initial_data.hpp"
#include "enls/norms.hpp"
#include "enls/solver.hpp"
#include "enls/symbols.hpp"

using namespace enls;

TEST(Classify, HandBuiltTuples) {
  const double N = 10;
  EXPECT_EQ(classify_case(FrequencyTuple{1000, -500, -10, -490}, N), CaseLabel::kCase1);
  EXPECT_EQ(classify_case(FrequencyTuple{1000, -990, 300, -310}, N), CaseLabel::kCase2);
  EXPECT_EQ(classify_case(FrequencyTuple{1000, -990, -995, 985}, N), CaseLabel::kCase3);
  EXPECT_EQ(classify_case(FrequencyTuple{1000, -600, -300, -100}, N), CaseLabel::kCase4);
  EXPECT_EQ(to_string(CaseLabel::kCase3), "Case3");
}

TEST(Classify, RegimeConstantsMatter) {
  // xi_12 = 40 is "small" only once c_small exceeds 0.04.
  const FrequencyTuple t{1000, -960, 300, -340};
  EXPECT_EQ(classify_case(t, 10), CaseLabel::kCase4);
  EXPECT_EQ(classify_case(t, 10, RegimeConstants{0.25, 0.05}), CaseLabel::kCase2);
}

TEST(Classify, Preconditions) {
  EXPECT_THROW(classify_case(FrequencyTuple{10, -20, 5, 5}, 1), ConfigError);
  EXPECT_THROW(classify_case(FrequencyTuple{10, -10, 3, -3, 1, -1}, 1), ConfigError);
}

TEST(Canonicalize, MovesMaximumAndOrdersPairs) {
  const MultiplierParams p(4.0, -0.3);
  const FrequencyTuple cases[] = {{-5, 90, -30, -55}, {12, -7, -80, 75}, {20, 33, -9, -44}, {60, -2, -50, -8}};
  for (const auto& t : cases) {
    const FrequencyTuple c = canonicalize(t);
    EXPECT_EQ(std::abs(c.xi(1)), t.max_magnitude());
    EXPECT_LE(std::abs(c.sum(1, 2)), std::abs(c.sum(1, 4)));
    EXPECT_NEAR(std::abs(delta4(c, p)), std::abs(delta4(t, p)), 1e-12 * std::abs(delta4(t, p)));
  }
  EXPECT_TRUE(is_normalized(FrequencyTuple{100, -60, -30, -10}));
  EXPECT_FALSE(is_normalized(FrequencyTuple{100, -30, -60, -10}));
}

TEST(Bounds, CaseBoundFormulas) {
  const MultiplierParams p(10.0, -0.25);
  const FrequencyTuple t{1000, -500, -10, -490};  // Ns = 1000, Nb = 10
  EXPECT_DOUBLE_EQ(delta4_bound(t, CaseLabel::kCase1, p), p.f(10) / 1e9);
  EXPECT_DOUBLE_EQ(delta4_bound(t, CaseLabel::kCase4, p), p.f(1000) / 1e9);
  const FrequencyTuple r{1000, -990, -995, 985};
  EXPECT_DOUBLE_EQ(delta4_bound(r, CaseLabel::kCase3, p, 1, 0), p.f(1000) / (1e6 * 10));
  EXPECT_DOUBLE_EQ(delta4_bound(r, CaseLabel::kCase3, p, 0, 1), p.f(1000) / (1e6 * 5));
  EXPECT_TRUE(std::isinf(delta4_bound(FrequencyTuple{1000, -1000, -995, 995}, CaseLabel::kCase3, p, 1, 0)));
}

TEST(Bounds, RemarkFixturesClassifyAsNamed) {
  for (double N : {4.0, 16.0, 64.0}) {
    for (double s : {-0.125, -0.3}) {
      for (const auto& f : remark_fixtures(MultiplierParams(N, s))) {
        EXPECT_EQ(f.classified, f.expected) << f.name << " at N=" << N;
        EXPECT_TRUE(std::isfinite(f.ratio)) << f.name;
      }
    }
  }
}

TEST(Bounds, SamplerIsDeterministicAndComplete) {
  const MultiplierParams p(16.0, -0.125);
  const auto a = verify_delta4_bounds(p, 300, 7);
  const auto b = verify_delta4_bounds(p, 300, 7);
  ASSERT_EQ(a.size(), 6u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].samples, 300) << to_string(a[i].label);
    EXPECT_EQ(a[i].max_ratio, b[i].max_ratio);
    EXPECT_EQ(a[i].argmax, b[i].argmax);
    EXPECT_TRUE(std::isfinite(a[i].max_ratio));
    EXPECT_LE(a[i].min_ratio, a[i].max_ratio);
    ASSERT_EQ(a[i].argmax.size(), 4u);
    const FrequencyTuple t(a[i].argmax);
    EXPECT_EQ(classify_case(t, p.N()), a[i].label);
    EXPECT_TRUE(is_normalized(t));
  }
  EXPECT_NE(verify_delta4_bounds(p, 300, 8)[0].max_ratio, a[0].max_ratio);
}

TEST(Bounds, KeepRatiosAndZeroSamples) {
  const MultiplierParams p(16.0, -0.125);
  BoundsOptions o;
  o.keep_all_ratios = true;
  const auto r = verify_delta4_bounds(p, 50, 1, o);
  for (const auto& x : r) EXPECT_EQ(x.ratios.size(), 50u);
  for (const auto& x : verify_delta4_bounds(p, 0, 1)) {
    EXPECT_EQ(x.samples, 0);
    EXPECT_EQ(x.max_ratio, 0.0);
  }
}

TEST(Dmvt, PurePowerSmallStepLimit) {
  // As eta, lambda -> 0 the second difference is f''(xi) eta lambda while the sup of |f''|
  // over [|xi|/2, 2|xi|] sits at |xi|/2, so the ratio tends to 2^{2s-2}.
  for (double s : {-0.125, -0.3}) {
    const MultiplierParams p(8.0, s);
    const double xi = 400;
    EXPECT_NEAR(dmvt_ratio(p, xi, 1e-3 * xi, 2e-3 * xi), std::pow(2.0, 2 * s - 2), 2e-3);
    EXPECT_EQ(dmvt_ratio(p, xi, 0.0, 1.0), 0.0);
  }
  const DmvtReport r = verify_dmvt(MultiplierParams(8.0, -0.125), 2000, 3);
  EXPECT_EQ(r.samples, 2000);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_ratio, 1.0 + 1e-9);
  EXPECT_EQ(r.argmax.size(), 3u);
}

TEST(FreeWave, SnapshotsFollowTheAiryGroup) {
  GridSpec g(2 * kPi, 32);
  const Spectrum u0 = random_band_limited(g, 6, 2);
  const SpaceTimeField f = free_wave(u0, 0.3, 10);
  const FieldSample at = to_field(linear_propagate(u0, 7 * f.dt(), Equation{EquationForm::kReduced, 0, 0}));
  for (int j = 0; j < 32; ++j) EXPECT_NEAR(std::abs(f.at(7, j) - at.values[j]), 0.0, 1e-14);
  EXPECT_THROW(free_wave(u0, 0.3, 0), ConfigError);
}

TEST(Strichartz, SingleModeHasClosedFormNorms) {
  GridSpec g(2 * kPi, 32);
  Spectrum u0(g);
  u0[3] = 0.5;
  const double T = 0.4;
  const SpaceTimeField f = free_wave(u0, T, 64);
  EXPECT_NEAR(mixed_norm(f, 5, 10), 0.5 * std::pow(2 * kPi, 0.2) * std::pow(T, 0.1), 1e-12);
  EXPECT_NEAR(mixed_norm(f, 20.0 / 3.0, 5), 0.5 * std::pow(2 * kPi, 0.15) * std::pow(T, 0.2), 1e-12);
}

TEST(Strichartz, ReportIsFiniteAndDeterministic) {
  GridSpec g(2 * kPi, 64);
  FreeWaveSampling fw;
  fw.band_hi = 8;
  fw.time_span = 0.1;
  fw.seed = 4;
  const StrichartzReport a = verify_strichartz(g, 5, fw);
  const StrichartzReport b = verify_strichartz(g, 5, fw);
  EXPECT_EQ(a.samples, 5);
  EXPECT_GT(a.sup_ratio_l5l10, 0.0);
  EXPECT_TRUE(std::isfinite(a.sup_ratio_l203l5));
  EXPECT_EQ(a.sup_ratio_l5l10, b.sup_ratio_l5l10);
}

TEST(Trilinear, RatioBasicsAndGuards) {
  GridSpec g(2 * kPi, 64);
  const Spectrum a = random_band_limited(g, 4, 1), zero(g);
  const SpaceTimeField u = free_wave(a, 0.1, 32), z = free_wave(zero, 0.1, 32);
  EXPECT_EQ(trilinear_ratio(u, u, z, -0.125, 0.6, -0.06), 0.0);
  EXPECT_GT(trilinear_ratio(u, u, u, -0.125, 0.6, -0.06), 0.0);

  FreeWaveSampling fw;
  fw.band_lo = 2;
  fw.band_hi = 6;
  fw.time_span = 0.05;
  const TrilinearReport r = verify_trilinear(g, -0.125, 0.45, -0.06, 3, fw);
  EXPECT_TRUE(r.warning_b);
  EXPECT_EQ(r.samples, 3);
  EXPECT_TRUE(std::isfinite(r.sup_ratio));
  fw.band_hi = 11;
  EXPECT_THROW(verify_trilinear(g, -0.125, 0.6, -0.06, 1, fw), ConfigError);
}
