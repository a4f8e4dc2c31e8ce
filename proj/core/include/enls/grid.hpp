#pragma once

#include <complex>
#include <span>
#include <vector>

namespace enls {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr double kPi = 3.14159265358979323846;

/// Periodic box [0, L) sampled at M equispaced nodes x_j = jL/M.
///
/// Fourier modes are labelled by the integer k in [-M/2, M/2); the physical
/// frequency is xi_k = 2*pi*k/L. Storage of spectra follows the usual FFT
/// order, index = k mod M.
class GridSpec {
 public:
  GridSpec(double box_length, int num_modes);

  double box_length() const { return box_length_; }
  int num_modes() const { return num_modes_; }
  double dx() const { return box_length_ / num_modes_; }
  double dxi() const { return 2.0 * kPi / box_length_; }
  double node(int j) const { return j * dx(); }

  int min_mode() const { return -num_modes_ / 2; }
  int max_mode() const { return num_modes_ / 2 - 1; }
  bool contains_mode(int k) const { return k >= min_mode() && k <= max_mode(); }

  /// Storage index of mode k; k must satisfy contains_mode(k).
  int index_of(int k) const { return k >= 0 ? k : k + num_modes_; }
  /// Mode label of storage index i.
  int mode_of(int i) const { return i < num_modes_ / 2 ? i : i - num_modes_; }
  double frequency(int k) const { return dxi() * k; }
  double frequency_at_index(int i) const { return frequency(mode_of(i)); }

  bool operator==(const GridSpec&) const = default;

 private:
  double box_length_;
  int num_modes_;
};

/// Physical-space samples u(x_j, t).
struct FieldSample {
  FieldSample(GridSpec g, ComplexVector v, double t = 0.0);
  explicit FieldSample(GridSpec g, double t = 0.0);

  GridSpec grid;
  ComplexVector values;
  double time;
};

/// Fourier coefficients c_k = (1/M) sum_j u_j exp(-i xi_k x_j), so that
/// u_j = sum_k c_k exp(i xi_k x_j). With this convention the continuous
/// L2 norm of the trigonometric interpolant is exactly L * sum_k |c_k|^2,
/// which equals the rectangle-rule norm dx * sum_j |u_j|^2.
struct Spectrum {
  Spectrum(GridSpec g, ComplexVector c, double t = 0.0);
  explicit Spectrum(GridSpec g, double t = 0.0);

  /// Coefficient of mode k, or zero when k lies outside the grid.
  Complex at(int k) const {
    return grid.contains_mode(k) ? coeffs[grid.index_of(k)] : Complex{};
  }
  Complex& operator[](int k) { return coeffs[grid.index_of(k)]; }

  /// Largest |k| carrying a coefficient above tol * max|c|.
  int bandwidth(double tol = 0.0) const;

  GridSpec grid;
  ComplexVector coeffs;
  double time;
};

/// Space-time samples on the lattice x_j = jL/M, t_n = n * time_span / num_time_samples.
/// Stored time-major: values[n * M + j].
struct SpaceTimeField {
  SpaceTimeField(GridSpec g, int num_time_samples, double time_span);
  SpaceTimeField(GridSpec g, int num_time_samples, double time_span, ComplexVector v);

  Complex& at(int n, int j) { return values[static_cast<std::size_t>(n) * grid.num_modes() + j]; }
  Complex at(int n, int j) const {
    return values[static_cast<std::size_t>(n) * grid.num_modes() + j];
  }
  std::span<const Complex> slice(int n) const {
    return {values.data() + static_cast<std::size_t>(n) * grid.num_modes(),
            static_cast<std::size_t>(grid.num_modes())};
  }
  double dt() const { return time_span / num_time_samples; }

  GridSpec grid;
  int num_time_samples;
  double time_span;
  ComplexVector values;
};

/// Japanese bracket <x> = 1 + |x|.
inline double bracket(double x) { return 1.0 + (x < 0 ? -x : x); }

}  // namespace enls
