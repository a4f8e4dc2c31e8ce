#include "enls/frequency_tuple.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "enls/errors.hpp"

namespace enls {

FrequencyTuple::FrequencyTuple(std::initializer_list<double> xi)
    : FrequencyTuple(std::span<const double>(xi.begin(), xi.size())) {}

FrequencyTuple::FrequencyTuple(std::span<const double> xi) {
  const auto n = static_cast<int>(xi.size());
  if (n != 2 && n != 4 && n != 6) throw ConfigError("frequency tuple: size must be 2, 4 or 6");
  double total = 0.0, biggest = 1.0;
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(xi[j])) throw ConfigError("frequency tuple: non-finite entry");
    xi_[j] = xi[j];
    total += xi[j];
    biggest = std::max(biggest, std::abs(xi[j]));
  }
  if (std::abs(total) > 1e-9 * biggest) {
    throw ConfigError("frequency tuple: entries do not sum to zero");
  }
  n_ = n;
}

double FrequencyTuple::gamma() const {
  double g = 0.0;
  for (int j = 0; j < n_; ++j) g += xi_[j] * xi_[j] * xi_[j];
  return g;
}

FrequencyTuple::Magnitudes FrequencyTuple::magnitudes() const {
  if (n_ != 4) throw ConfigError("frequency tuple: magnitudes defined for n = 4 only");
  std::array<double, 4> a{};
  for (int j = 0; j < 4; ++j) a[j] = std::abs(xi_[j]);
  std::sort(a.begin(), a.end(), std::greater<>());
  return {a[0], a[1], a[2], a[3]};
}

double FrequencyTuple::max_magnitude() const {
  double m = 0.0;
  for (int j = 0; j < n_; ++j) m = std::max(m, std::abs(xi_[j]));
  return m;
}

}  // namespace enls
