#pragma once

#include <complex>
#include <vector>

namespace fsc {

using ComplexGrid = std::vector<std::complex<double>>;

// Thin wrapper over FFTW double-precision c2c transforms on square grids.
//
// Plans are created once per grid side (FFTW_ESTIMATE, so the plan choice
// is deterministic) behind a process-wide registry and executed through the
// new-array interface; execution is thread-safe on distinct buffers.
// Forward is Sum f(x) exp(-2*pi*i k.x/N); inverse carries the 1/N^2.
class Fft2d {
 public:
  static const Fft2d& of(int n);

  void forward(ComplexGrid& data) const;
  void inverse(ComplexGrid& data) const;

  int n() const { return n_; }

  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;

 private:
  explicit Fft2d(int n);
  ~Fft2d();

  int n_;
  void* plan_fwd_;  // fftw_plan kept opaque to avoid leaking fftw3.h
  void* plan_bwd_;
};

// Convenience: spectrum of a real row-major n*n field.
ComplexGrid forward_fft(const std::vector<double>& real_data, int n);

}  // namespace fsc
