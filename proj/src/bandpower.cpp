#include "fsc/bandpower.hpp"

#include <cmath>

#include "fsc/errors.hpp"
#include "fsc/fft.hpp"
#include "fsc/grid.hpp"

namespace fsc {

int fine_bin_count(int n) {
  return static_cast<int>(std::floor(0.5 * n * std::sqrt(2.0)));
}

namespace {

// Shared binning core: accumulates `weight(i)` for every nonzero mode.
PowerSpectrum bin_modes(int n, double box_size,
                        const std::function<double(std::size_t, double)>& mode_power) {
  const WavenumberGrid grid = make_wavenumber_grid(n, box_size);
  const int nbins = fine_bin_count(n);
  std::vector<double> power(nbins, 0.0), ksum(nbins, 0.0);
  std::vector<int> counts(nbins, 0);

  const std::size_t npix = static_cast<std::size_t>(n) * n;
  for (std::size_t i = 0; i < npix; ++i) {
    const double k = grid.k_magnitude[i];
    if (k == 0.0) continue;
    const double r = k / grid.fundamental;
    const int b = static_cast<int>(std::floor(r + 0.5)) - 1;  // [b+0.5, b+1.5)
    if (b < 0 || b >= nbins) continue;
    power[b] += mode_power(i, k);
    ksum[b] += k;
    counts[b] += 1;
  }

  PowerSpectrum ps;
  ps.k_fundamental = grid.fundamental;
  ps.n = n;
  ps.box_size = box_size;
  for (int b = 0; b < nbins; ++b) {
    if (counts[b] == 0) continue;
    ps.k_centers.push_back(ksum[b] / counts[b]);
    ps.power.push_back(power[b] / counts[b]);
    ps.counts.push_back(counts[b]);
  }
  return ps;
}

}  // namespace

PowerSpectrum power_spectrum(const Field2D& field) {
  if (!is_power_of_two(field.n) ||
      field.data.size() != static_cast<std::size_t>(field.n) * field.n)
    throw NumericalError("power_spectrum: malformed field");
  const ComplexGrid spectrum = forward_fft(field.data, field.n);
  const double norm = (field.box_size * field.box_size) /
                      (std::pow(static_cast<double>(field.n), 4.0));
  return bin_modes(field.n, field.box_size, [&](std::size_t i, double) {
    return norm * std::norm(spectrum[i]);
  });
}

PowerSpectrum binned_theory_spectrum(const std::function<double(double)>& p_of_k,
                                     int n, double box_size) {
  return bin_modes(n, box_size, [&](std::size_t, double k) { return p_of_k(k); });
}

BandpowerVector rebin_log(const PowerSpectrum& ps, int bands) {
  const int nfine = static_cast<int>(ps.power.size());
  if (bands < 2) throw ConfigError("rebin_log: need at least 2 bands");
  if (nfine == 0) throw ConfigError("rebin_log: empty power spectrum");
  if (bands > nfine)
    throw ConfigError("rebin_log: " + std::to_string(bands) +
                      " bands exceed " + std::to_string(nfine) + " fine bins");

  const double lo = std::log(ps.k_centers.front());
  const double hi = std::log(ps.k_centers.back());
  std::vector<double> edges(bands + 1);
  for (int i = 0; i <= bands; ++i)
    edges[i] = std::exp(lo + (hi - lo) * i / bands);
  edges.back() = std::nextafter(edges.back(), std::numeric_limits<double>::max());

  std::vector<double> mass(bands, 0.0);
  std::vector<double> weight(bands, 0.0);
  for (int f = 0; f < nfine; ++f) {
    const double c = ps.k_centers[f];
    int band = static_cast<int>(std::floor((std::log(c) - lo) / (hi - lo) * bands));
    band = std::max(0, std::min(bands - 1, band));
    // Guard against log/floor roundoff at the edges.
    while (band > 0 && c < edges[band]) --band;
    while (band < bands - 1 && c >= edges[band + 1]) ++band;
    mass[band] += ps.counts[f] * ps.power[f];
    weight[band] += ps.counts[f];
  }

  // Merge empty bands into their lower neighbour by extending its upper
  // edge.  The first and last bands contain the first and last fine centres
  // by construction, so empties are interior.
  BandpowerVector out;
  out.edges.push_back(edges.front());
  for (int b = 0; b < bands; ++b) {
    if (weight[b] > 0.0) {
      out.values.push_back(mass[b] / weight[b]);
      out.edges.push_back(edges[b + 1]);
    } else if (!out.values.empty()) {
      out.edges.back() = edges[b + 1];
    }
    // A leading empty band (never expected) folds into the first populated
    // one since only right edges are appended.
  }
  if (out.values.empty()) throw NumericalError("rebin_log: no populated bands");
  return out;
}

SummaryVector bandpower_summary(const Field2D& field, int bands) {
  const PowerSpectrum ps = power_spectrum(field);
  const BandpowerVector bp = rebin_log(ps, bands);
  SummaryVector out;
  out.values = bp.values;
  for (std::size_t i = 0; i < bp.values.size(); ++i)
    out.schema.push_back("bp[" + std::to_string(i) + "]");
  out.provenance.type = "bandpower";
  out.provenance.n = field.n;
  out.provenance.box_size = field.box_size;
  out.provenance.B = static_cast<int>(bp.values.size());
  out.provenance.field_seed = field.seed;
  return out;
}

}  // namespace fsc
