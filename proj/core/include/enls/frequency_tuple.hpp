#pragma once

#include <array>
#include <initializer_list>
#include <span>

namespace enls {

/// A point (xi_1, ..., xi_n) of the hyperplane xi_1 + ... + xi_n = 0, n in {2, 4, 6}.
/// Slot indices in the accessors are 1-based to match the usual xi_ij notation.
class FrequencyTuple {
 public:
  static constexpr int kMaxSize = 6;

  /// Throws ConfigError unless n is 2, 4 or 6 and |sum| <= 1e-9 max(1, max|xi_j|).
  FrequencyTuple(std::initializer_list<double> xi);
  explicit FrequencyTuple(std::span<const double> xi);

  int size() const { return n_; }
  double xi(int j) const { return xi_[j - 1]; }
  double sum(int i, int j) const { return xi(i) + xi(j); }
  double sum(int i, int j, int k) const { return xi(i) + xi(j) + xi(k); }
  std::span<const double> values() const { return {xi_.data(), static_cast<std::size_t>(n_)}; }

  /// xi_1^3 + ... + xi_n^3.
  double gamma() const;

  /// N_s >= N_a >= N_t >= N_b (n = 4 only).
  struct Magnitudes {
    double Ns, Na, Nt, Nb;
  };
  Magnitudes magnitudes() const;
  double max_magnitude() const;

  /// (-1)^{j-1} beta, the sign carried by slot j in the time-derivative identity.
  static double alternating(int j, double beta) { return (j % 2 == 1) ? beta : -beta; }

 private:
  std::array<double, kMaxSize> xi_{};
  int n_ = 0;
};

}  // namespace enls
