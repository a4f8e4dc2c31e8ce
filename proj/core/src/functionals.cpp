#include "enls/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "enls/errors.hpp"
#include "enls/fft.hpp"
#include "enls/kahan.hpp"
#include "enls/parallel.hpp"
#include "enls/symbols.hpp"

namespace enls {

namespace {

// Coefficients of one slot over modes [-band, band]: c(k) for odd slots,
// conj(c(-k)) for even slots.
struct Slot {
  int band = 0;
  std::vector<Complex> h;
  Complex at(int k) const { return (k < -band || k > band) ? Complex{} : h[k + band]; }
};

Slot make_slot(const Spectrum& s, int band, bool conjugate) {
  Slot slot;
  slot.band = band;
  slot.h.resize(2 * band + 1);
  for (int k = -band; k <= band; ++k) {
    slot.h[k + band] = conjugate ? std::conj(s.at(-k)) : s.at(k);
  }
  return slot;
}

struct Partial {
  CompensatedComplexSum sum;
  CompensatedSum magnitude;
};

// Deterministic block-ordered reduction of per-k1 partial sums.
template <typename Body>
Partial reduce_over(int lo, int hi, Body&& body) {
  const int count = hi - lo + 1;
  if (count <= 0) return {};
  std::vector<Partial> partials(count);
  for_each_block(count, [&](std::size_t b) { body(lo + static_cast<int>(b), partials[b]); });
  Partial total;
  for (const auto& p : partials) {
    total.sum.add(p.sum);
    total.magnitude.add(p.magnitude);
  }
  return total;
}

// Quartic sum L * sum M(xi) h1 h2 h3 h4 where slot `wide` may be broader than the others;
// the three narrow slots are enumerated and the wide one is fixed by the constraint.
template <typename Mult>
Partial quartic_sum(const GridSpec& grid, const std::array<const Slot*, 4>& slots, int wide,
                    Mult&& mult) {
  std::array<int, 3> free{};
  for (int j = 0, w = 0; j < 4; ++j) {
    if (j != wide) free[w++] = j;
  }
  const Slot& s0 = *slots[free[0]];
  const Slot& s1 = *slots[free[1]];
  const Slot& s2 = *slots[free[2]];
  const Slot& sw = *slots[wide];
  const double dxi = grid.dxi();
  return reduce_over(-s0.band, s0.band, [&](int a, Partial& out) {
    const Complex h0 = s0.at(a);
    if (h0 == Complex{}) return;
    std::array<int, 4> k{};
    std::array<double, 4> xi{};
    k[free[0]] = a;
    for (int b = -s1.band; b <= s1.band; ++b) {
      const Complex h01 = h0 * s1.at(b);
      if (h01 == Complex{}) continue;
      k[free[1]] = b;
      for (int c = -s2.band; c <= s2.band; ++c) {
        const int d = -(a + b + c);
        if (d < -sw.band || d > sw.band) continue;
        const Complex prod = h01 * s2.at(c) * sw.at(d);
        if (prod == Complex{}) continue;
        k[free[2]] = c;
        k[wide] = d;
        for (int j = 0; j < 4; ++j) xi[j] = dxi * k[j];
        const Complex term = mult(k, xi) * prod;
        out.sum.add(term);
        out.magnitude.add(std::abs(term));
      }
    }
  });
}

Complex scaled(const Partial& p, double L) { return L * p.sum.value(); }

// f = m^2 tabulated on modes [-band, band].
std::vector<double> f_table(const GridSpec& grid, const MultiplierParams& p, int band) {
  std::vector<double> f(2 * band + 1);
  for (int k = -band; k <= band; ++k) f[k + band] = p.f(grid.frequency(k));
  return f;
}

// Spectrum of u conj(u) u on a grid wide enough to hold it without truncation.
Spectrum cubic_elongation(const Spectrum& u, int band, int nonlinear_band) {
  int m = u.grid.num_modes();
  while (m < 6 * band + 2) m *= 2;
  const GridSpec wide(u.grid.box_length(), m);
  Spectrum w = cubic_product(u, u, u, wide);
  if (nonlinear_band >= 0) {
    for (int i = 0; i < m; ++i) {
      if (std::abs(wide.mode_of(i)) > nonlinear_band) w.coeffs[i] = 0.0;
    }
  }
  return w;
}

void check_imag_residue(double residue, double magnitude, const char* what) {
  if (std::abs(residue) > 1e-10 * std::max(magnitude, 1e-300)) {
    throw InvariantError(std::string(what) + ": residue " + std::to_string(residue) +
                         " exceeds 1e-10 of the term sum " + std::to_string(magnitude));
  }
}

}  // namespace

int checked_band(const Spectrum& u) {
  const int band = u.bandwidth(1e-13);
  if (band > u.grid.num_modes() / 3) {
    throw ConfigError("spectrum occupies |k| <= " + std::to_string(band) +
                      ", beyond the dealiased band M/3 = " +
                      std::to_string(u.grid.num_modes() / 3) +
                      "; the fourth frequency of in-band triples would leave the grid");
  }
  return band;
}

Complex lambda2(const Spectrum& u, const std::function<double(double, double)>& mult) {
  CompensatedComplexSum sum;
  for (int k = u.grid.min_mode(); k <= u.grid.max_mode(); ++k) {
    const double xi = u.grid.frequency(k);
    sum.add(mult(xi, -xi) * u.at(k) * std::conj(u.at(k)));
  }
  return u.grid.box_length() * sum.value();
}

Complex lambda4(const Spectrum& u, const Multiplier4& mult) {
  const int band = checked_band(u);
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const Partial p = quartic_sum(u.grid, {&odd, &even, &odd, &even}, 3,
                                [&](const std::array<int, 4>&, const std::array<double, 4>& xi) {
                                  return mult(xi[0], xi[1], xi[2], xi[3]);
                                });
  return scaled(p, u.grid.box_length());
}

Complex lambda6_constant(const Spectrum& u, double value) {
  if (u.grid.num_modes() > 64) {
    throw ConfigError("lambda6_constant: M = " + std::to_string(u.grid.num_modes()) +
                      " exceeds the cost guard of 64 for the quintuple lattice sum");
  }
  const int band = checked_band(u);
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const Partial part = reduce_over(-band, band, [&](int k1, Partial& out) {
    const Complex h1 = odd.at(k1);
    for (int k2 = -band; k2 <= band; ++k2) {
      const Complex h12 = h1 * even.at(k2);
      for (int k3 = -band; k3 <= band; ++k3) {
        const Complex h123 = h12 * odd.at(k3);
        for (int k4 = -band; k4 <= band; ++k4) {
          const Complex h1234 = h123 * even.at(k4);
          for (int k5 = -band; k5 <= band; ++k5) {
            const Complex term = h1234 * odd.at(k5) * even.at(-(k1 + k2 + k3 + k4 + k5));
            out.sum.add(term);
          }
        }
      }
    }
  });
  return value * scaled(part, u.grid.box_length());
}

Complex lambda4_elongated(const Spectrum& u, const Spectrum& w, int slot, const Multiplier4& mult) {
  if (slot < 1 || slot > 4) throw ConfigError("lambda4_elongated: slot must be 1..4");
  if (w.grid.box_length() != u.grid.box_length()) {
    throw ConfigError("lambda4_elongated: box lengths differ");
  }
  const int band = checked_band(u);
  const int wband = std::min(w.bandwidth(0.0), w.grid.num_modes() / 2 - 1);
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const Slot ws = make_slot(w, wband, slot % 2 == 0);
  std::array<const Slot*, 4> slots{&odd, &even, &odd, &even};
  slots[slot - 1] = &ws;
  const Partial p = quartic_sum(u.grid, slots, slot - 1,
                                [&](const std::array<int, 4>&, const std::array<double, 4>& xi) {
                                  return mult(xi[0], xi[1], xi[2], xi[3]);
                                });
  return scaled(p, u.grid.box_length());
}

double lambda4_delta4(const Spectrum& u, const MultiplierParams& p, double beta) {
  const int band = checked_band(u);
  if (p.is_identity()) return 0.0;
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const std::vector<double> f = f_table(u.grid, p, 3 * band);
  const int off = 3 * band;
  const Partial part = quartic_sum(
      u.grid, {&odd, &even, &odd, &even}, 3,
      [&](const std::array<int, 4>& k, const std::array<double, 4>& xi) {
        return delta4_with_values(xi[0], xi[1], xi[2], xi[3], f[k[0] + off], f[k[1] + off],
                                  f[k[2] + off], f[k[3] + off], p, beta);
      });
  const Complex value = scaled(part, u.grid.box_length());
  check_imag_residue(value.imag(), u.grid.box_length() * part.magnitude.value(), "lambda4_delta4");
  return value.real();
}

Complex lambda6_delta6_complex(const Spectrum& u, const MultiplierParams& p, double beta,
                               const Lambda6Options& opts) {
  const int band = checked_band(u);
  if (p.is_identity()) return {};
  const Spectrum w = cubic_elongation(u, band, opts.nonlinear_band);
  const int wband = std::min(w.bandwidth(0.0), w.grid.num_modes() / 2 - 1);
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const Slot w_odd = make_slot(w, wband, false), w_even = make_slot(w, wband, true);
  const int off = std::max(3 * band, wband);
  const std::vector<double> f = f_table(u.grid, p, off);
  auto mult = [&](const std::array<int, 4>& k, const std::array<double, 4>& xi) {
    return delta4_with_values(xi[0], xi[1], xi[2], xi[3], f[k[0] + off], f[k[1] + off],
                              f[k[2] + off], f[k[3] + off], p, beta);
  };
  CompensatedComplexSum total;
  double magnitude = 0.0;
  for (int j = 1; j <= 4; ++j) {
    std::array<const Slot*, 4> slots{&odd, &even, &odd, &even};
    slots[j - 1] = (j % 2 == 1) ? &w_odd : &w_even;
    const Partial part = quartic_sum(u.grid, slots, j - 1, mult);
    total.add(FrequencyTuple::alternating(j, beta) * part.sum.value());
    magnitude += std::abs(beta) * part.magnitude.value();
  }
  const double L = u.grid.box_length();
  const Complex value = L * total.value();
  check_imag_residue(value.real(), L * magnitude, "lambda6_delta6");
  return value;
}

double lambda6_delta6(const Spectrum& u, const MultiplierParams& p, double beta,
                      const Lambda6Options& opts) {
  return lambda6_delta6_complex(u, p, beta, opts).imag();
}

Complex lambda6_delta6_direct(const Spectrum& u, const MultiplierParams& p, double beta,
                              const Lambda6Options& opts) {
  if (u.grid.num_modes() > opts.direct_max_modes) {
    throw ConfigError("lambda6 direct sum: M = " + std::to_string(u.grid.num_modes()) +
                      " exceeds the cost guard of " + std::to_string(opts.direct_max_modes) +
                      " (quintuple sum with 144 quartic symbols per term)");
  }
  const int band = checked_band(u);
  if (p.is_identity()) return {};
  const Slot odd = make_slot(u, band, false), even = make_slot(u, band, true);
  const double dxi = u.grid.dxi();
  const Partial part = reduce_over(-band, band, [&](int k1, Partial& out) {
    std::array<double, 6> xi{};
    const Complex h1 = odd.at(k1);
    if (h1 == Complex{}) return;
    for (int k2 = -band; k2 <= band; ++k2) {
      const Complex h12 = h1 * even.at(k2);
      if (h12 == Complex{}) continue;
      for (int k3 = -band; k3 <= band; ++k3) {
        const Complex h123 = h12 * odd.at(k3);
        if (h123 == Complex{}) continue;
        for (int k4 = -band; k4 <= band; ++k4) {
          const Complex h1234 = h123 * even.at(k4);
          if (h1234 == Complex{}) continue;
          for (int k5 = -band; k5 <= band; ++k5) {
            const int k6 = -(k1 + k2 + k3 + k4 + k5);
            if (k6 < -band || k6 > band) continue;
            const Complex prod = h1234 * odd.at(k5) * even.at(k6);
            if (prod == Complex{}) continue;
            const int ks[6] = {k1, k2, k3, k4, k5, k6};
            for (int j = 0; j < 6; ++j) xi[j] = dxi * ks[j];
            const Complex term = delta6(xi, p, beta) * prod;
            out.sum.add(term);
            out.magnitude.add(std::abs(term));
          }
        }
      }
    }
  });
  return scaled(part, u.grid.box_length());
}

double e1_rate_elongation(const Spectrum& u, const MultiplierParams& p, double beta) {
  if (p.is_identity()) return 0.0;
  // X_1^2(M2) = m(xi_4)^2 and X_2^2(M2) = m(xi_1)^2 on the hyperplane.
  const Complex lam = lambda4(u, [&](double x1, double, double, double x4) {
    return FrequencyTuple::alternating(1, beta) * p.f(x4) +
           FrequencyTuple::alternating(2, beta) * p.f(x1);
  });
  return (Complex(0.0, 1.0) * lam).real();
}

double resonant_remainder(const Spectrum& u, const MultiplierParams& p, double beta) {
  if (p.is_identity()) return 0.0;
  const double tol = 1e-9 * u.grid.dxi();
  const Complex lam = lambda4(u, [&](double x1, double x2, double x3, double x4) {
    if (std::abs(x1 + x3) > tol) return 0.0;
    return 0.5 * beta * (p.f(x2) + p.f(x4) - p.f(x1) - p.f(x3));
  });
  return (Complex(0.0, 1.0) * lam).real();
}

}  // namespace enls
