#include "enls/symbols.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "enls/errors.hpp"

namespace enls {

double delta4_with_values(double x1, double x2, double x3, double x4, double f1, double f2,
                          double f3, double f4, const MultiplierParams& p, double beta) {
  const double Ns = std::max({std::abs(x1), std::abs(x2), std::abs(x3), std::abs(x4)});
  if (p.is_identity() || Ns <= p.N()) return 0.0;
  const double tol = kDelta4SingularTol * Ns;
  const double a = x1 + x2;
  const double b = x1 + x3;
  const double c = x1 + x4;
  // Resonant pole: the numerator does not vanish with xi_13.
  if (std::abs(b) < tol) return 0.0;
  const bool small_a = std::abs(a) < tol;
  const bool small_c = std::abs(c) < tol;
  if (small_a && small_c) return beta * p.d2f(x1 - 0.5 * (a + c)) / (6.0 * b);
  // f1 - f2 = a f'(x1 - a/2) + O(a^3), f3 - f4 = -a f'(x3 + a/2) + O(a^3).
  if (small_a) return beta * (p.df(x1 - 0.5 * a) - p.df(x3 + 0.5 * a)) / (6.0 * b * c);
  if (small_c) return beta * (p.df(x1 - 0.5 * c) - p.df(x3 + 0.5 * c)) / (6.0 * b * a);
  return beta * (f1 - f2 + f3 - f4) / (6.0 * a * b * c);
}

double delta4(double x1, double x2, double x3, double x4, const MultiplierParams& p,
              double beta) {
  return delta4_with_values(x1, x2, x3, x4, p.f(x1), p.f(x2), p.f(x3), p.f(x4), p, beta);
}

double delta4(const FrequencyTuple& t, const MultiplierParams& p, double beta) {
  if (t.size() != 4) throw ConfigError("delta4: tuple must have 4 entries");
  return delta4(t.xi(1), t.xi(2), t.xi(3), t.xi(4), p, beta);
}

double m4_unsymmetrized(double x1, double x2, double x3, double x4, const MultiplierParams& p,
                        double beta) {
  const std::array<double, 4> xi{x1, x2, x3, x4};
  std::array<double, 2> first{}, second{};
  elongate(xi, 1, 2, first);
  elongate(xi, 2, 2, second);
  const double x1_m2 = p.m(first[0]) * p.m(first[1]);
  const double x2_m2 = p.m(second[0]) * p.m(second[1]);
  const double gamma = x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3 + x4 * x4 * x4;
  const double scale = std::max({1.0, std::abs(x1), std::abs(x2), std::abs(x3), std::abs(x4)});
  if (std::abs(gamma) <= 1e-12 * scale * scale * scale) return 0.0;
  return -(FrequencyTuple::alternating(1, beta) * x1_m2 +
           FrequencyTuple::alternating(2, beta) * x2_m2) /
         gamma;
}

int elongate(std::span<const double> xi, int j, int k, std::span<double> out) {
  const int n = static_cast<int>(xi.size());
  if (j < 1 || k < 0 || j + k > n) throw ConfigError("elongate: slot range out of bounds");
  const int written = n - k;
  if (static_cast<int>(out.size()) < written) throw ConfigError("elongate: output too small");
  int w = 0;
  for (int i = 0; i < j - 1; ++i) out[w++] = xi[i];
  double s = 0.0;
  for (int i = j - 1; i < j + k; ++i) s += xi[i];
  out[w++] = s;
  for (int i = j + k; i < n; ++i) out[w++] = xi[i];
  return written;
}

double delta6(std::span<const double> xi, const MultiplierParams& p, double beta) {
  if (xi.size() != 6) throw ConfigError("delta6: tuple must have 6 entries");
  if (p.is_identity()) return 0.0;
  std::array<int, 3> odd{1, 3, 5};
  double total = 0.0;
  do {
    std::array<int, 3> even{2, 4, 6};
    do {
      const double k = xi[odd[0] - 1], m = xi[odd[1] - 1], o = xi[odd[2] - 1];
      const double l = xi[even[0] - 1], n = xi[even[1] - 1], q = xi[even[2] - 1];
      total += delta4(k + l + m, n, o, q, p, beta) - delta4(k, l + m + n, o, q, p, beta) +
               delta4(k, l, m + n + o, q, p, beta) - delta4(k, l, m, n + o + q, p, beta);
    } while (std::next_permutation(even.begin(), even.end()));
  } while (std::next_permutation(odd.begin(), odd.end()));
  return beta * total / 36.0;
}

double delta6(const FrequencyTuple& t, const MultiplierParams& p, double beta) {
  if (t.size() != 6) throw ConfigError("delta6: tuple must have 6 entries");
  return delta6(t.values(), p, beta);
}

}  // namespace enls
