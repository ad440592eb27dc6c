#pragma once

#include <string>
#include <vector>

#include "fsc/field.hpp"
#include "fsc/filter_bank.hpp"
#include "fsc/summary.hpp"

namespace fsc {

// 1 + J + J(J-1)/2 coefficients for a depth-2 cascade restricted to
// increasing scales (j2 > j1).
int count_coefficients(int J);

// Depth-2, orientation-averaged scattering coefficients.  s0 is the global
// mean of the field; s1[j] and s2[(j1,j2)] are global means of the
// propagated moduli, averaged over orientation tuples.  The global mean
// commutes with the phi convolution on a periodic grid, so U-fields are
// averaged directly; scattering_maps() below applies phi explicitly.
struct ScatteringSummary {
  int J = 0;
  double s0 = 0.0;
  std::vector<double> s1;  // length J
  std::vector<double> s2;  // length J(J-1)/2, pairs (j1, j2) with j2 > j1

  // Index of pair (j1, j2), j2 > j1, in s2.
  static int pair_index(int j1, int j2, int J);
  std::vector<double> concat() const;
  std::vector<std::string> schema() const;
};

// Scattering propagator |f * psi| via frequency-domain multiplication.
Field2D propagate(const Field2D& field, const std::vector<double>& psi_hat);
Field2D propagate(const Field2D& field, const FilterBank& bank, int j, int chi);

// threads > 1 parallelizes over first-order branches; results are
// identical for any thread count.
ScatteringSummary scatter(const Field2D& field, const FilterBank& bank,
                          int threads = 1);

SummaryVector scattering_summary(const Field2D& field, const FilterBank& bank,
                                 int threads = 1);

// Per-pixel smoothed maps U[p]f * phi for diagnostics: entry 0 is f * phi,
// then the J*L first-order maps in (j, chi) order.
std::vector<Field2D> scattering_maps(const Field2D& field, const FilterBank& bank);

}  // namespace fsc
