#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enls/frequency_tuple.hpp"
#include "enls/grid.hpp"
#include "enls/multiplier.hpp"

namespace enls {

enum class CaseLabel { kCase1, kCase2, kCase3, kCase4 };
std::string to_string(CaseLabel c);

/// Discretization of "comparable to" and "much smaller than" N_s.
struct RegimeConstants {
  double c_big = 0.25;
  double c_small = 1.0 / 32.0;
};

/// Requires n = 4 and |xi_1| = N_s (ConfigError otherwise). First match wins:
///   Case1: |xi_1j| >= c_big N_s for j = 2,3,4 and N_b <= c_small N_s
///   Case2: |xi_13|, |xi_14| >= c_big N_s and |xi_12| <= c_small N_s
///   Case3: |xi_12|, |xi_13| <= c_small N_s
///   Case4: everything else
CaseLabel classify_case(const FrequencyTuple& t, double N, const RegimeConstants& rc = {});

/// Moves a maximal-magnitude frequency into slot 1 and orders |xi_12| <= |xi_14|,
/// using only slot maps under which |delta4| is invariant.
FrequencyTuple canonicalize(const FrequencyTuple& t);

/// True when slot 1 carries N_s and slot 2 carries N_a. This is the labelling under
/// which the case bounds are derived; delta4 is not invariant under the transposition
/// of slots 2 and 3, so it cannot always be reached from canonicalize.
bool is_normalized(const FrequencyTuple& t);

/// Right-hand side of the pointwise bound for the given case. For Case3 the exponents
/// (a, b), a + b = 1, weight |xi_12|^a |xi_13|^b. Returns +inf where the bound degenerates.
double delta4_bound(const FrequencyTuple& t, CaseLabel c, const MultiplierParams& p,
                    double a = 1.0, double b = 0.0);

struct BoundReport {
  CaseLabel label = CaseLabel::kCase4;
  double a = 0.0;  ///< Case3 exponents; 0 elsewhere.
  double b = 0.0;
  long samples = 0;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  std::vector<double> argmax;
  double N = 0.0;
  double s = 0.0;
  std::vector<double> ratios;  ///< every sampled ratio, in sampling order
  /// Generated tuples discarded because they classified elsewhere or were not normalized.
  long discarded = 0;
};

struct RemarkFixture {
  std::string name;       ///< sub-case name, e.g. "A22"
  CaseLabel expected;     ///< proposition item the sub-case belongs to
  std::vector<double> xi;
  CaseLabel classified;
  double delta4;
  double bound;
  double ratio;
};

/// The example tuples attached to the multiplier bounds (eps = N_s / 128), at N_s = 4N.
std::vector<RemarkFixture> remark_fixtures(const MultiplierParams& p, const RegimeConstants& rc = {},
                                           double Ns_over_N = 4.0);

struct BoundsOptions {
  RegimeConstants regime;
  /// Lower and upper magnitude limits of the log-uniform sampler, in units of N.
  double min_over_N = 0.25;
  double max_over_N = 512.0;
  /// Store every sampled ratio in BoundReport::ratios (for histogram export).
  bool keep_all_ratios = false;
};

/// Per case (Case3 once per (a,b) in {(1,0), (1/2,1/2), (0,1)}): max and min of
/// |delta4| / bound over num_samples accepted tuples (beta = 1; min over N_s > N only).
/// Each case is drawn from a regime-targeted log-uniform generator, canonicalized and
/// classified; tuples landing in another case or failing is_normalized are discarded.
/// Deterministic in rng_seed.
std::vector<BoundReport> verify_delta4_bounds(const MultiplierParams& p, long num_samples,
                                              std::uint64_t rng_seed, const BoundsOptions& opts = {});

struct DmvtReport {
  long samples = 0;
  double max_ratio = 0.0;
  std::vector<double> argmax;  ///< (xi, eta, lambda)
  bool pass = true;            ///< max_ratio <= 4
};

/// Second difference of f = m^2 against sup_{|theta| in [|xi|/2, 2|xi|]} |f''| |eta| |lambda|,
/// with |xi| > 2N and max(|eta|, |lambda|) <= |xi|/16.
DmvtReport verify_dmvt(const MultiplierParams& p, long num_samples, std::uint64_t rng_seed = 1);
/// Ratio at a single point.
double dmvt_ratio(const MultiplierParams& p, double xi, double eta, double lambda);

struct FreeWaveSampling {
  int band_lo = 1;          ///< data occupy modes band_lo <= |k| <= band_hi
  int band_hi = 8;
  double time_span = 1.0;
  int num_time_samples = 0;  ///< 0 selects a count resolving the fastest phase
  bool positive_only = false;
  std::uint64_t seed = 1;
};

struct StrichartzReport {
  long samples = 0;
  long skipped = 0;
  double sup_ratio_l5l10 = 0.0;      ///< ||u||_{L^5_x L^10_t} / ||u||_{X^{s2,b}}
  double sup_ratio_l203l5 = 0.0;     ///< ||u||_{L^{20/3}_x L^5_t} / ||u||_{X^{s1,b}}
  double s1 = -0.25, s2 = 0.0, b = 0.51;
};

/// Free waves U(t) u0 for random band-limited u0 sampled on the space-time lattice.
StrichartzReport verify_strichartz(const GridSpec& grid, long num_samples,
                                   const FreeWaveSampling& sampling, double s1 = -0.25,
                                   double s2 = 0.0, double b = 0.51);

struct TrilinearReport {
  long samples = 0;
  double sup_ratio = 0.0;
  double s = 0, b = 0, b_prime = 0;
  bool warning_b = false;  ///< b <= 1/2
  std::string note;
};

/// ||u1 u2 conj(u3)||_{X^{s,b'}} / prod_j ||u_j||_{X^{s,b}}; 0 when a factor vanishes.
/// The product is formed pointwise, so the three bands must sum below M/2.
double trilinear_ratio(const SpaceTimeField& u1, const SpaceTimeField& u2,
                       const SpaceTimeField& u3, double s, double b, double b_prime);

/// Sample sup of trilinear_ratio over random free-wave triples.
TrilinearReport verify_trilinear(const GridSpec& grid, double s, double b, double b_prime,
                                 long num_samples, const FreeWaveSampling& sampling);

/// Free wave exp(i xi^3 t) evolution of u0 sampled on the lattice.
SpaceTimeField free_wave(const Spectrum& u0, double time_span, int num_time_samples);

}  // namespace enls
