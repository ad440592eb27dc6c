#include "fsc/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

#include "fsc/errors.hpp"
#include "fsc/grid.hpp"

namespace fsc {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft2d::Fft2d(int n) : n_(n) {
  if (!is_power_of_two(n))
    throw ConfigError("FFT grid side must be a power of two, got " + std::to_string(n));
  // Plan on a scratch buffer; FFTW_UNALIGNED lets us execute on any
  // std::vector storage later via the new-array interface.
  std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n) * n);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  plan_fwd_ = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_FORWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft_2d(n, n, ptr, ptr, FFTW_BACKWARD,
                               FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plan_fwd_ == nullptr || plan_bwd_ == nullptr)
    throw NumericalError("FFTW plan creation failed for n=" + std::to_string(n));
}

Fft2d::~Fft2d() {
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

const Fft2d& Fft2d::of(int n) {
  std::lock_guard<std::mutex> lock(planner_mutex());
  static std::map<int, std::unique_ptr<Fft2d>> registry;
  auto it = registry.find(n);
  if (it == registry.end())
    it = registry.emplace(n, std::unique_ptr<Fft2d>(new Fft2d(n))).first;
  return *it->second;
}

void Fft2d::forward(ComplexGrid& data) const {
  if (data.size() != static_cast<std::size_t>(n_) * n_)
    throw NumericalError("FFT buffer size mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), ptr, ptr);
}

void Fft2d::inverse(ComplexGrid& data) const {
  if (data.size() != static_cast<std::size_t>(n_) * n_)
    throw NumericalError("FFT buffer size mismatch");
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), ptr, ptr);
  const double norm = 1.0 / (static_cast<double>(n_) * n_);
  for (auto& z : data) z *= norm;
}

ComplexGrid forward_fft(const std::vector<double>& real_data, int n) {
  if (real_data.size() != static_cast<std::size_t>(n) * n)
    throw NumericalError("field size does not match grid side");
  ComplexGrid out(real_data.size());
  for (std::size_t i = 0; i < real_data.size(); ++i) out[i] = real_data[i];
  Fft2d::of(n).forward(out);
  return out;
}

}  // namespace fsc
