#include "enls/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "enls/errors.hpp"

namespace enls {

namespace {

// fftw planning is not thread-safe; execution of an existing plan on new arrays is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(n);
    auto* out = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(std::pair{n, sign}, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

ComplexVector execute(std::span<const Complex> in, int sign) {
  const int n = static_cast<int>(in.size());
  ComplexVector src(in.begin(), in.end());
  ComplexVector out(in.size());
  if (n == 0) return out;
  fftw_execute_dft(plan_cache().get(n, sign), reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

ComplexVector dft_forward(std::span<const Complex> in) { return execute(in, FFTW_FORWARD); }
ComplexVector dft_inverse(std::span<const Complex> in) { return execute(in, FFTW_BACKWARD); }

Spectrum to_spectrum(const FieldSample& f) {
  ComplexVector c = dft_forward(f.values);
  const double scale = 1.0 / f.grid.num_modes();
  for (auto& z : c) z *= scale;
  return Spectrum(f.grid, std::move(c), f.time);
}

FieldSample to_field(const Spectrum& s) {
  return FieldSample(s.grid, dft_inverse(s.coeffs), s.time);
}

FieldSample to_field_padded(const Spectrum& s, int num_points) {
  if (num_points < s.grid.num_modes() || num_points % 2 != 0) {
    throw ConfigError("to_field_padded: padded size must be even and >= M");
  }
  const GridSpec fine(s.grid.box_length(), num_points);
  Spectrum padded(fine, s.time);
  for (int k = s.grid.min_mode(); k <= s.grid.max_mode(); ++k) padded[k] = s.at(k);
  return to_field(padded);
}

Spectrum cubic_product(const Spectrum& u, const Spectrum& v, const Spectrum& w,
                       const GridSpec& out_grid) {
  if (u.grid.box_length() != v.grid.box_length() || u.grid.box_length() != w.grid.box_length() ||
      u.grid.box_length() != out_grid.box_length()) {
    throw ConfigError("cubic_product: box lengths differ");
  }
  const int band = std::max(0, u.bandwidth()) + std::max(0, v.bandwidth()) +
                   std::max(0, w.bandwidth());
  int padded = 2;
  while (padded <= 2 * band + 1 || padded < out_grid.num_modes() ||
         padded < u.grid.num_modes() || padded < v.grid.num_modes() ||
         padded < w.grid.num_modes()) {
    padded *= 2;
  }
  const FieldSample fu = to_field_padded(u, padded);
  const FieldSample fv = to_field_padded(v, padded);
  const FieldSample fw = to_field_padded(w, padded);
  FieldSample prod(fu.grid, u.time);
  for (int j = 0; j < padded; ++j) {
    prod.values[j] = fu.values[j] * std::conj(fv.values[j]) * fw.values[j];
  }
  const Spectrum full = to_spectrum(prod);
  Spectrum out(out_grid, u.time);
  const int kmax = std::min(out_grid.max_mode(), band);
  const int kmin = std::max(out_grid.min_mode(), -band);
  for (int k = kmin; k <= kmax; ++k) out[k] = full.at(k);
  return out;
}

}  // namespace enls
