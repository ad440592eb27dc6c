#include "fsc/field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "fsc/errors.hpp"
#include "fsc/fft.hpp"
#include "fsc/grid.hpp"
#include "fsc/rng.hpp"

namespace fsc {

double ParamVector::get(const std::string& name, std::size_t fallback_index) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return values[i];
  if (fallback_index < values.size()) return values[fallback_index];
  throw ConfigError("parameter '" + name + "' not found");
}

bool ParamVector::has(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

void ParamVector::validate() const {
  if (!names.empty() && names.size() != values.size())
    throw ConfigError("parameter names/values length mismatch");
  for (double v : values)
    if (!std::isfinite(v)) throw NumericalError("non-finite parameter value");
}

double Field2D::mean() const {
  double s = 0.0;
  for (double v : data) s += v;
  return s / static_cast<double>(data.size());
}

double Field2D::variance() const {
  const double m = mean();
  double s = 0.0;
  for (double v : data) s += (v - m) * (v - m);
  return s / static_cast<double>(data.size());
}

namespace {

void check_grf_args(double amplitude, double slope, int n, double box_size) {
  if (!(amplitude > 0.0))
    throw ConfigError("GRF amplitude A must be positive");
  if (!(slope >= 0.0) || !(slope < 4.0))
    throw ConfigError("GRF slope alpha must lie in [0, 4)");
  if (!is_power_of_two(n) || n < 4)
    throw ConfigError("grid side must be a power of two >= 4");
  if (!(box_size > 0.0)) throw ConfigError("box_size must be positive");
}

}  // namespace

double grf_pixel_variance(double amplitude, double slope, int n, double box_size) {
  check_grf_args(amplitude, slope, n, box_size);
  const WavenumberGrid grid = make_wavenumber_grid(n, box_size);
  double sum = 0.0;
  for (double k : grid.k_magnitude)
    if (k > 0.0) sum += amplitude * std::pow(k, -slope);
  return sum / (box_size * box_size);
}

Field2D make_grf(const ParamVector& params, int n, double box_size,
                 std::uint64_t seed) {
  params.validate();
  const double amplitude = params.get("A", 0);
  const double slope = params.get("alpha", 1);
  check_grf_args(amplitude, slope, n, box_size);

  const std::size_t npix = static_cast<std::size_t>(n) * n;
  CounterRng rng(derive_seed(seed, "grf-white-noise"));

  // White noise in real space; its DFT is Hermitian automatically, so the
  // scaled spectrum inverts to a real field without mode bookkeeping.
  ComplexGrid modes(npix);
  for (std::size_t i = 0; i < npix; ++i) modes[i] = rng.gaussian();
  const Fft2d& fft = Fft2d::of(n);
  fft.forward(modes);

  const WavenumberGrid grid = make_wavenumber_grid(n, box_size);
  const double scale = static_cast<double>(n) / box_size;
  for (std::size_t i = 0; i < npix; ++i) {
    const double k = grid.k_magnitude[i];
    if (k == 0.0) {
      modes[i] = 0.0;  // P(0) = 0: zero-mean overdensity convention
    } else {
      modes[i] *= scale * std::sqrt(amplitude * std::pow(k, -slope));
    }
  }
  fft.inverse(modes);

  Field2D field;
  field.n = n;
  field.box_size = box_size;
  field.params = params;
  field.seed = seed;
  field.data.resize(npix);
  double max_imag = 0.0, max_real = 0.0;
  for (std::size_t i = 0; i < npix; ++i) {
    field.data[i] = modes[i].real();
    max_imag = std::max(max_imag, std::abs(modes[i].imag()));
    max_real = std::max(max_real, std::abs(modes[i].real()));
  }
  if (max_real > 0.0 && max_imag > 1e-10 * max_real)
    throw NumericalError("GRF inverse transform left an imaginary residue");
  return field;
}

double lognormal_lower_bound(double amplitude, double slope, double g, int n,
                             double box_size) {
  if (g <= 0.0) return -std::numeric_limits<double>::infinity();
  const double var = grf_pixel_variance(amplitude, slope, n, box_size);
  const double c = g * std::sqrt(var) / std::sqrt(std::expm1(g * g * var));
  return -c / g;
}

Field2D make_lognormal(const ParamVector& params, int n, double box_size,
                       std::uint64_t seed) {
  params.validate();
  const double g = params.has("g") || params.values.size() > 2 ? params.get("g", 2) : 0.0;
  if (!(g >= 0.0)) throw ConfigError("lognormal strength g must be >= 0");

  Field2D field = make_grf(params, n, box_size, seed);
  field.params = params;
  if (g == 0.0) return field;

  const double amplitude = params.get("A", 0);
  const double slope = params.get("alpha", 1);
  const double var = grf_pixel_variance(amplitude, slope, n, box_size);
  const double m = std::exp(0.5 * g * g * var);
  const double c = g * std::sqrt(var) / std::sqrt(std::expm1(g * g * var));
  const double inv_gm = 1.0 / (g * m);
  for (double& v : field.data) v = c * (std::exp(g * v) - m) * inv_gm;
  return field;
}

}  // namespace fsc
