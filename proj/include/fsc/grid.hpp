#pragma once

#include <vector>

namespace fsc {

bool is_power_of_two(int n);

// Signed frequency index in [-n/2, n/2) for row/column a of an n-point DFT.
inline int signed_index(int a, int n) { return a < n / 2 ? a : a - n; }

// |k| over the full N x N Fourier grid, in radians per length unit.
struct WavenumberGrid {
  int n = 0;
  double box_size = 0.0;
  double fundamental = 0.0;  // k_f = 2*pi / box_size
  int nyquist_index = 0;     // n / 2
  std::vector<double> k_magnitude;  // row-major n*n

  double at(int a, int b) const { return k_magnitude[static_cast<std::size_t>(a) * n + b]; }
};

WavenumberGrid make_wavenumber_grid(int n, double box_size);

}  // namespace fsc
