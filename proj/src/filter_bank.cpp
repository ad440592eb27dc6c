#include "fsc/filter_bank.hpp"

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/grid.hpp"

namespace fsc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Anisotropic Gaussian bump in frequency, expressed in the frame rotated by
// theta: width 1/sigma along the oscillation axis and slant/sigma across it,
// centred at `centre` on the rotated first axis.
struct Envelope {
  double cos_t, sin_t, half_sigma2, inv_slant2, centre;

  double operator()(double wx, double wy) const {
    const double v1 = wx * cos_t + wy * sin_t - centre;
    const double v2 = -wx * sin_t + wy * cos_t;
    return std::exp(-half_sigma2 * (v1 * v1 + v2 * v2 * inv_slant2));
  }
};

double periodized(const Envelope& env, double wx, double wy) {
  double sum = 0.0;
  for (int p = -1; p <= 1; ++p)
    for (int q = -1; q <= 1; ++q) sum += env(wx + kTwoPi * p, wy + kTwoPi * q);
  return sum;
}

}  // namespace

FilterBank build_morlet_bank(int n, int J, int L, MorletParams params) {
  if (!is_power_of_two(n) || n < 4)
    throw ConfigError("filter bank grid side must be a power of two >= 4");
  if (J < 0 || (J > 0 && (1 << J) > n / 2))
    throw ConfigError("scale count J too large for grid: need 2^J <= n/2");
  if (L < 1) throw ConfigError("orientation count L must be >= 1");
  if (!(params.sigma0 > 0.0) || !(params.xi0 > 0.0))
    throw ConfigError("Morlet sigma0 and xi0 must be positive");
  if (params.slant <= 0.0) params.slant = 4.0 / static_cast<double>(L);

  FilterBank bank;
  bank.n = n;
  bank.J = J;
  bank.L = L;
  bank.morlet = params;

  const std::size_t npix = static_cast<std::size_t>(n) * n;
  const double inv_slant2 = 1.0 / (params.slant * params.slant);

  bank.psi_hat.assign(static_cast<std::size_t>(J) * L, std::vector<double>(npix));
  for (int j = 0; j < J; ++j) {
    const double sigma = params.sigma0 * static_cast<double>(1 << j);
    const double xi = params.xi0 / static_cast<double>(1 << j);
    for (int chi = 0; chi < L; ++chi) {
      const double theta = M_PI * chi / L;
      const double c = std::cos(theta), s = std::sin(theta);
      const Envelope carrier{c, s, 0.5 * sigma * sigma, inv_slant2, xi};
      const Envelope baseline{c, s, 0.5 * sigma * sigma, inv_slant2, 0.0};

      // beta kills the mean of the *periodized* filter exactly.
      const double beta = periodized(carrier, 0.0, 0.0) / periodized(baseline, 0.0, 0.0);

      std::vector<double>& psi = bank.psi_hat[static_cast<std::size_t>(j) * L + chi];
      for (int a = 0; a < n; ++a) {
        const double wx = kTwoPi * signed_index(a, n) / n;
        for (int b = 0; b < n; ++b) {
          const double wy = kTwoPi * signed_index(b, n) / n;
          psi[static_cast<std::size_t>(a) * n + b] =
              periodized(carrier, wx, wy) - beta * periodized(baseline, wx, wy);
        }
      }
    }
  }

  // Isotropic Gaussian low-pass with spatial width sigma0 * 2^J.
  const double sigma_phi = params.sigma0 * static_cast<double>(1 << J);
  const Envelope low{1.0, 0.0, 0.5 * sigma_phi * sigma_phi, 1.0, 0.0};
  bank.phi_hat.resize(npix);
  for (int a = 0; a < n; ++a) {
    const double wx = kTwoPi * signed_index(a, n) / n;
    for (int b = 0; b < n; ++b) {
      const double wy = kTwoPi * signed_index(b, n) / n;
      bank.phi_hat[static_cast<std::size_t>(a) * n + b] = periodized(low, wx, wy);
    }
  }

  // Normalize phi to unit DC response, then rescale the whole bank so the
  // Littlewood-Paley maximum is exactly 1 (non-expansive propagator).
  const double phi0 = bank.phi_hat[0];
  for (double& v : bank.phi_hat) v /= phi0;
  const double lp_max = frame_bounds(bank).littlewood_paley_max;
  const double rescale = 1.0 / std::sqrt(lp_max);
  for (auto& psi : bank.psi_hat)
    for (double& v : psi) v *= rescale;
  for (double& v : bank.phi_hat) v *= rescale;
  return bank;
}

FrameReport frame_bounds(const FilterBank& bank) {
  if (bank.n <= 0 || bank.phi_hat.empty())
    throw ConfigError("frame_bounds: empty filter bank");
  const std::size_t npix = static_cast<std::size_t>(bank.n) * bank.n;
  FrameReport report;
  for (std::size_t i = 0; i < npix; ++i) {
    double sum = bank.phi_hat[i] * bank.phi_hat[i];
    for (const auto& psi : bank.psi_hat) sum += psi[i] * psi[i];
    if (i == 0) {
      report.littlewood_paley_min = report.littlewood_paley_max = sum;
    } else {
      report.littlewood_paley_min = std::min(report.littlewood_paley_min, sum);
      report.littlewood_paley_max = std::max(report.littlewood_paley_max, sum);
    }
  }
  return report;
}

}  // namespace fsc
