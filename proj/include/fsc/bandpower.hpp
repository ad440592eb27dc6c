#pragma once

#include <functional>
#include <vector>

#include "fsc/field.hpp"
#include "fsc/summary.hpp"

namespace fsc {

// Azimuthally averaged spectrum in fine bins of width k_f: bin b covers
// |k|/k_f in [b+0.5, b+1.5), the zero mode is excluded, and
// P(bin) = (box^2 / N^4) * mean over modes of |DFT(f)|^2.  k_centers are
// count-weighted mean |k| per bin; empty bins are dropped (none occur on
// square grids at these sizes, so N = 512 yields the full 362 bins).
struct PowerSpectrum {
  std::vector<double> k_centers;
  std::vector<double> power;
  std::vector<int> counts;
  double k_fundamental = 0.0;
  int n = 0;
  double box_size = 0.0;
};

PowerSpectrum power_spectrum(const Field2D& field);

// Number of fine bins for grid side n: floor(n/2 * sqrt(2)).
int fine_bin_count(int n);

// Expectation of the measured fine spectrum for theory P(k): the same
// binning applied to p_of_k over the exact grid modes.
PowerSpectrum binned_theory_spectrum(const std::function<double(double)>& p_of_k,
                                     int n, double box_size);

// Log-spaced bandpowers: edges log-uniform over the populated k range,
// count-weighted means per band, empty bands merged into their lower
// neighbour (values.size() is the effective count).
struct BandpowerVector {
  std::vector<double> values;
  std::vector<double> edges;  // length values.size() + 1, strictly increasing
};

BandpowerVector rebin_log(const PowerSpectrum& ps, int bands);

SummaryVector bandpower_summary(const Field2D& field, int bands);

}  // namespace fsc
