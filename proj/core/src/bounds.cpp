#include "enls/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/norms.hpp"
#include "enls/solver.hpp"
#include "enls/symbols.hpp"

namespace enls {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::kCase1: return "Case1";
    case CaseLabel::kCase2: return "Case2";
    case CaseLabel::kCase3: return "Case3";
    case CaseLabel::kCase4: return "Case4";
  }
  return "Case4";
}

CaseLabel classify_case(const FrequencyTuple& t, double /*N*/, const RegimeConstants& rc) {
  if (t.size() != 4) throw ConfigError("classify_case: tuple must have 4 entries");
  const auto mag = t.magnitudes();
  if (std::abs(t.xi(1)) < mag.Ns) {
    throw ConfigError("classify_case: slot 1 must carry a maximal magnitude (canonicalize first)");
  }
  const double big = rc.c_big * mag.Ns, small = rc.c_small * mag.Ns;
  const double a12 = std::abs(t.sum(1, 2)), a13 = std::abs(t.sum(1, 3)),
               a14 = std::abs(t.sum(1, 4));
  if (a12 >= big && a13 >= big && a14 >= big && mag.Nb <= small) return CaseLabel::kCase1;
  if (a13 >= big && a14 >= big && a12 <= small) return CaseLabel::kCase2;
  if (a12 <= small && a13 <= small) return CaseLabel::kCase3;
  return CaseLabel::kCase4;
}

FrequencyTuple canonicalize(const FrequencyTuple& t) {
  if (t.size() != 4) throw ConfigError("canonicalize: tuple must have 4 entries");
  std::array<double, 4> x{t.xi(1), t.xi(2), t.xi(3), t.xi(4)};
  int j = 0;
  for (int i = 1; i < 4; ++i) {
    if (std::abs(x[i]) > std::abs(x[j])) j = i;
  }
  // Joint swap (1 2)(3 4) flips the sign of delta4; (1 3) and (2 4) leave it unchanged.
  if (j == 1) x = {x[1], x[0], x[3], x[2]};
  if (j == 2) x = {x[2], x[1], x[0], x[3]};
  if (j == 3) x = {x[3], x[2], x[1], x[0]};
  if (std::abs(x[0] + x[1]) > std::abs(x[0] + x[3])) std::swap(x[1], x[3]);
  return FrequencyTuple(x);
}

bool is_normalized(const FrequencyTuple& t) {
  const auto mag = t.magnitudes();
  return std::abs(t.xi(1)) == mag.Ns && std::abs(t.xi(2)) == mag.Na;
}

double delta4_bound(const FrequencyTuple& t, CaseLabel c, const MultiplierParams& p, double a,
                    double b) {
  const auto mag = t.magnitudes();
  const double Ns = mag.Ns;
  switch (c) {
    case CaseLabel::kCase1: return p.f(mag.Nb) / (Ns * Ns * Ns);
    case CaseLabel::kCase2: return p.f(mag.Nb) / (std::max(mag.Nt, p.N()) * Ns * Ns);
    case CaseLabel::kCase3: {
      const double w = std::pow(std::abs(t.sum(1, 2)), a) * std::pow(std::abs(t.sum(1, 3)), b);
      if (w == 0.0) return kInfinity;
      return p.f(Ns) / (Ns * Ns * w);
    }
    case CaseLabel::kCase4: return p.f(Ns) / (Ns * Ns * Ns);
  }
  return kInfinity;
}

namespace {

double ratio_of(const FrequencyTuple& t, CaseLabel c, const MultiplierParams& p, double a,
                double b) {
  const double d = std::abs(delta4(t, p, 1.0));
  if (d == 0.0) return 0.0;
  return d / delta4_bound(t, c, p, a, b);
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, double N, const BoundsOptions& opts)
      : rng_(seed), N_(N), opts_(opts) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  double sign() { return (rng_() & 1u) ? 1.0 : -1.0; }
  // Relative size of a "much smaller" quantity.
  double small_ratio() { return log_uniform(0x1p-20, opts_.regime.c_small); }
  double Ns() { return N_ * log_uniform(opts_.min_over_N, opts_.max_over_N); }

  std::array<double, 4> draw(CaseLabel c) {
    const double Ns = this->Ns();
    const double cb = opts_.regime.c_big, cs = opts_.regime.c_small;
    std::array<double, 4> x{};
    switch (c) {
      case CaseLabel::kCase1: {
        const double x4 = sign() * Ns * small_ratio();
        const double x3 = -Ns * uniform(cb, 1.0 - cb);
        x = {Ns, -Ns - x3 - x4, x3, x4};
        break;
      }
      case CaseLabel::kCase2: {
        const double x2 = -Ns + sign() * Ns * small_ratio();
        const double x3 = sign() * log_uniform(std::min(N_ / 16.0, Ns), Ns);
        x = {Ns, x2, x3, -Ns - x2 - x3};
        break;
      }
      case CaseLabel::kCase3: {
        const double x2 = -Ns + sign() * Ns * small_ratio();
        const double x3 = -Ns + sign() * Ns * small_ratio();
        x = {Ns, x2, x3, -Ns - x2 - x3};
        break;
      }
      case CaseLabel::kCase4: {
        const auto pattern = rng_() % 3;
        if (pattern == 0) {
          const double x2 = sign() * N_ * log_uniform(opts_.min_over_N, opts_.max_over_N);
          const double x3 = sign() * N_ * log_uniform(opts_.min_over_N, opts_.max_over_N);
          x = {Ns, x2, x3, -Ns - x2 - x3};
        } else if (pattern == 1) {
          // |xi_14| small while xi_12, xi_13 are free.
          const double x4 = -Ns + sign() * Ns * small_ratio();
          const double x2 = sign() * Ns * uniform(0.0, 1.0);
          x = {Ns, x2, -Ns - x2 - x4, x4};
        } else {
          // xi_12 small with xi_13 between the two regime thresholds.
          const double x2 = -Ns + sign() * Ns * small_ratio();
          const double x3 = -Ns + Ns * uniform(cs, cb);
          x = {Ns, x2, x3, -Ns - x2 - x3};
        }
        break;
      }
    }
    const double g = sign();
    for (auto& v : x) v *= g;
    return x;
  }

  double max_magnitude() const { return N_ * opts_.max_over_N; }

 private:
  std::mt19937_64 rng_;
  double N_;
  BoundsOptions opts_;
};

}  // namespace

std::vector<RemarkFixture> remark_fixtures(const MultiplierParams& p, const RegimeConstants& rc,
                                           double Ns_over_N) {
  const double Ns = Ns_over_N * p.N();
  const double e = Ns / 128.0;
  struct Spec {
    const char* name;
    CaseLabel expected;
    std::array<double, 4> xi;
  };
  const Spec specs[] = {
      {"A1", CaseLabel::kCase2, {Ns, -Ns + e, -e / 2, -e / 2}},
      {"A1-second", CaseLabel::kCase2, {Ns, -Ns + e, Ns / 2 - e / 2, -Ns / 2 - e / 2}},
      {"A21", CaseLabel::kCase4, {Ns, -Ns / 2, -Ns / 4, -Ns / 4}},
      {"A22", CaseLabel::kCase1, {Ns, -Ns / 2 - e, -Ns / 2, e}},
      {"B21", CaseLabel::kCase3, {Ns, -Ns + e / 2, -Ns + e / 2, Ns - e}},
  };
  std::vector<RemarkFixture> out;
  for (const auto& s : specs) {
    const FrequencyTuple t(s.xi);
    RemarkFixture f;
    f.name = s.name;
    f.expected = s.expected;
    f.xi.assign(s.xi.begin(), s.xi.end());
    f.classified = classify_case(t, p.N(), rc);
    f.delta4 = delta4(t, p, 1.0);
    f.bound = delta4_bound(t, f.classified, p, 1.0, 0.0);
    f.ratio = std::abs(f.delta4) / f.bound;
    out.push_back(f);
  }
  return out;
}

std::vector<BoundReport> verify_delta4_bounds(const MultiplierParams& p, long num_samples,
                                              std::uint64_t rng_seed, const BoundsOptions& opts) {
  struct Job {
    CaseLabel label;
    double a, b;
  };
  const Job jobs[] = {{CaseLabel::kCase1, 0, 0},   {CaseLabel::kCase2, 0, 0},
                      {CaseLabel::kCase3, 1, 0},   {CaseLabel::kCase3, 0.5, 0.5},
                      {CaseLabel::kCase3, 0, 1},   {CaseLabel::kCase4, 0, 0}};
  std::vector<BoundReport> reports;
  std::uint64_t stream = 0;
  for (const auto& job : jobs) {
    BoundReport r;
    r.label = job.label;
    r.a = job.a;
    r.b = job.b;
    r.N = p.N();
    r.s = p.s();
    r.min_ratio = kInfinity;
    Sampler sampler(rng_seed * 0x9E3779B97F4A7C15ull + (++stream), p.N(), opts);
    const long max_attempts = 1000 * std::max(num_samples, 1L);
    for (long attempt = 0; r.samples < num_samples && attempt < max_attempts; ++attempt) {
      const auto x = sampler.draw(job.label);
      const double biggest =
          std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2]), std::abs(x[3])});
      if (biggest > sampler.max_magnitude()) {
        ++r.discarded;
        continue;
      }
      const FrequencyTuple t = canonicalize(FrequencyTuple(x));
      if (!is_normalized(t) || classify_case(t, p.N(), opts.regime) != job.label) {
        ++r.discarded;
        continue;
      }
      const double ratio = ratio_of(t, job.label, p, job.a, job.b);
      ++r.samples;
      if (opts.keep_all_ratios) r.ratios.push_back(ratio);
      if (r.argmax.empty() || ratio > r.max_ratio) {
        r.max_ratio = ratio;
        r.argmax.assign(t.values().begin(), t.values().end());
      }
      if (t.magnitudes().Ns > p.N()) r.min_ratio = std::min(r.min_ratio, ratio);
    }
    if (!std::isfinite(r.min_ratio)) r.min_ratio = 0.0;
    reports.push_back(std::move(r));
  }
  return reports;
}

double dmvt_ratio(const MultiplierParams& p, double xi, double eta, double lambda) {
  const double lhs =
      std::abs(p.f(xi + eta + lambda) - p.f(xi + eta) - p.f(xi + lambda) + p.f(xi));
  if (lhs == 0.0) return 0.0;
  const double a = std::abs(xi);
  double sup = 0.0;
  constexpr int kPoints = 256;
  for (int i = 0; i <= kPoints; ++i) {
    const double theta = a * std::pow(4.0, static_cast<double>(i) / kPoints) / 2.0;
    sup = std::max(sup, std::abs(p.d2f(theta)));
  }
  return lhs / (sup * std::abs(eta) * std::abs(lambda));
}

DmvtReport verify_dmvt(const MultiplierParams& p, long num_samples, std::uint64_t rng_seed) {
  DmvtReport r;
  BoundsOptions opts;
  Sampler sampler(rng_seed, p.N(), opts);
  for (long i = 0; i < num_samples; ++i) {
    const double xi = sampler.sign() * p.N() * sampler.log_uniform(2.0 * (1 + 1e-12), 512.0);
    const double eta = sampler.sign() * std::abs(xi) / 16.0 * sampler.log_uniform(1e-3, 1.0);
    const double lambda = sampler.sign() * std::abs(xi) / 16.0 * sampler.log_uniform(1e-3, 1.0);
    const double ratio = dmvt_ratio(p, xi, eta, lambda);
    ++r.samples;
    if (ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = {xi, eta, lambda};
    }
  }
  r.pass = r.max_ratio <= 4.0;
  return r;
}

SpaceTimeField free_wave(const Spectrum& u0, double time_span, int num_time_samples) {
  if (num_time_samples < 1) throw ConfigError("free_wave: need at least one time sample");
  SpaceTimeField out(u0.grid, num_time_samples, time_span);
  const Equation airy{EquationForm::kReduced, 0.0, 0.0};
  for (int n = 0; n < num_time_samples; ++n) {
    const FieldSample f = to_field(linear_propagate(u0, n * out.dt(), airy));
    std::copy(f.values.begin(), f.values.end(),
              out.values.begin() + static_cast<std::ptrdiff_t>(n) * u0.grid.num_modes());
  }
  return out;
}

namespace {

Spectrum random_free_data(const GridSpec& grid, const FreeWaveSampling& s, std::mt19937_64& rng) {
  if (s.band_lo < 0 || s.band_hi < s.band_lo || s.band_hi > grid.max_mode()) {
    throw ConfigError("free-wave sampling: band must satisfy 0 <= lo <= hi < M/2");
  }
  std::normal_distribution<> normal;
  Spectrum u(grid);
  for (int k = s.band_lo; k <= s.band_hi; ++k) {
    u[k] = Complex(normal(rng), normal(rng));
    if (!s.positive_only && k != 0) u[-k] = Complex(normal(rng), normal(rng));
  }
  const double n = l2_norm(u);
  if (n > 0) {
    for (auto& z : u.coeffs) z /= n;
  }
  return u;
}

// Time samples resolving the fastest phase difference carried by modes up to max_mode.
int resolving_samples(const GridSpec& grid, int max_mode, double span) {
  const double xi = grid.frequency(max_mode);
  const double need = 8.0 * xi * xi * xi * span / kPi;
  int n = 64;
  while (n < need && n < (1 << 22)) n *= 2;
  return n;
}

}  // namespace

StrichartzReport verify_strichartz(const GridSpec& grid, long num_samples,
                                   const FreeWaveSampling& sampling, double s1, double s2,
                                   double b) {
  StrichartzReport r;
  r.s1 = s1;
  r.s2 = s2;
  r.b = b;
  std::mt19937_64 rng(sampling.seed);
  const int nt = sampling.num_time_samples > 0
                     ? sampling.num_time_samples
                     : resolving_samples(grid, sampling.band_hi, sampling.time_span);
  for (long i = 0; i < num_samples; ++i) {
    const Spectrum u0 = random_free_data(grid, sampling, rng);
    const SpaceTimeField u = free_wave(u0, sampling.time_span, nt);
    const double rhs2 = xsb_norm(u, s2, b), rhs1 = xsb_norm(u, s1, b);
    if (rhs1 == 0.0 || rhs2 == 0.0) {
      ++r.skipped;
      continue;
    }
    ++r.samples;
    r.sup_ratio_l5l10 = std::max(r.sup_ratio_l5l10, mixed_norm(u, 5.0, 10.0) / rhs2);
    r.sup_ratio_l203l5 = std::max(r.sup_ratio_l203l5, mixed_norm(u, 20.0 / 3.0, 5.0) / rhs1);
  }
  return r;
}

double trilinear_ratio(const SpaceTimeField& u1, const SpaceTimeField& u2,
                       const SpaceTimeField& u3, double s, double b, double b_prime) {
  if (!(u1.grid == u2.grid && u2.grid == u3.grid) ||
      u1.num_time_samples != u2.num_time_samples || u2.num_time_samples != u3.num_time_samples) {
    throw ConfigError("trilinear_ratio: factors live on different lattices");
  }
  const double den = xsb_norm(u1, s, b) * xsb_norm(u2, s, b) * xsb_norm(u3, s, b);
  if (den == 0.0) return 0.0;
  SpaceTimeField prod = u1;
  for (std::size_t i = 0; i < prod.values.size(); ++i) {
    prod.values[i] *= u2.values[i] * std::conj(u3.values[i]);
  }
  return xsb_norm(prod, s, b_prime) / den;
}

TrilinearReport verify_trilinear(const GridSpec& grid, double s, double b, double b_prime,
                                 long num_samples, const FreeWaveSampling& sampling) {
  if (3 * sampling.band_hi > grid.max_mode()) {
    throw ConfigError("verify_trilinear: 3 * band_hi must stay below M/2 to avoid aliasing");
  }
  TrilinearReport r;
  r.s = s;
  r.b = b;
  r.b_prime = b_prime;
  r.warning_b = b <= 0.5;
  r.note = "periodized space-time norms with time taper; diagnostic ratios, not certified constants";
  if (r.warning_b) r.note += "; b <= 1/2 is outside the regime of the estimate";
  std::mt19937_64 rng(sampling.seed);
  const int nt = sampling.num_time_samples > 0
                     ? sampling.num_time_samples
                     : resolving_samples(grid, 3 * sampling.band_hi, sampling.time_span);
  for (long i = 0; i < num_samples; ++i) {
    const SpaceTimeField u1 = free_wave(random_free_data(grid, sampling, rng), sampling.time_span, nt);
    const SpaceTimeField u2 = free_wave(random_free_data(grid, sampling, rng), sampling.time_span, nt);
    const SpaceTimeField u3 = free_wave(random_free_data(grid, sampling, rng), sampling.time_span, nt);
    ++r.samples;
    r.sup_ratio = std::max(r.sup_ratio, trilinear_ratio(u1, u2, u3, s, b, b_prime));
  }
  return r;
}

}  // namespace enls
