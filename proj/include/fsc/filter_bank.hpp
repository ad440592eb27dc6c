#pragma once

#include <vector>

namespace fsc {

// Mother Morlet controls.  Defaults are the de facto convention for 2D
// scattering banks; slant <= 0 means "use 4 / L".
struct MorletParams {
  double sigma0 = 0.8;
  double xi0 = 2.356194490192344928846982537459627;  // 3*pi/4 rad per pixel
  double slant = 0.0;
};

// Frequency-domain Morlet family psi_{j,chi} (J scales, L orientations)
// plus one Gaussian scaling function phi at scale 2^J.  Filters are real
// in the frequency domain, built analytically with 3-fold periodization,
// and globally rescaled so the Littlewood-Paley maximum is exactly 1.
struct FilterBank {
  int n = 0;
  int J = 0;
  int L = 0;
  MorletParams morlet;
  std::vector<std::vector<double>> psi_hat;  // index j*L + chi, each n*n
  std::vector<double> phi_hat;               // n*n

  const std::vector<double>& psi(int j, int chi) const {
    return psi_hat[static_cast<std::size_t>(j) * L + chi];
  }
};

struct FrameReport {
  double littlewood_paley_min = 0.0;
  double littlewood_paley_max = 0.0;
};

// J defaults to log2(n) - 1 when passed as 0 in the pipeline layer; here J
// is explicit and 2^J <= n/2 is enforced.
FilterBank build_morlet_bank(int n, int J, int L, MorletParams params = {});

// Exact extrema over all grid frequencies of sum |psi_hat|^2 + |phi_hat|^2.
FrameReport frame_bounds(const FilterBank& bank);

}  // namespace fsc
