#include "fsc/grid.hpp"

#include <cmath>

#include "fsc/errors.hpp"

namespace fsc {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

WavenumberGrid make_wavenumber_grid(int n, double box_size) {
  if (!is_power_of_two(n))
    throw ConfigError("grid side must be a power of two, got " + std::to_string(n));
  if (!(box_size > 0.0))
    throw ConfigError("box_size must be positive, got " + std::to_string(box_size));

  WavenumberGrid g;
  g.n = n;
  g.box_size = box_size;
  g.fundamental = 2.0 * M_PI / box_size;
  g.nyquist_index = n / 2;
  g.k_magnitude.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const double ka = signed_index(a, n);
    for (int b = 0; b < n; ++b) {
      const double kb = signed_index(b, n);
      g.k_magnitude[static_cast<std::size_t>(a) * n + b] =
          g.fundamental * std::sqrt(ka * ka + kb * kb);
    }
  }
  return g;
}

}  // namespace fsc
