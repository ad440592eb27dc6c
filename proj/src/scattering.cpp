#include "fsc/scattering.hpp"

#include <cmath>
#include <complex>

#include "fsc/errors.hpp"
#include "fsc/fft.hpp"
#include "fsc/parallel.hpp"

namespace fsc {

int count_coefficients(int J) {
  if (J < 1) throw ConfigError("count_coefficients requires J >= 1");
  return 1 + J + J * (J - 1) / 2;
}

int ScatteringSummary::pair_index(int j1, int j2, int J) {
  // Pairs ordered (0,1), (0,2), ..., (0,J-1), (1,2), ...
  return j1 * J - j1 * (j1 + 1) / 2 + (j2 - j1 - 1);
}

std::vector<double> ScatteringSummary::concat() const {
  std::vector<double> out;
  out.reserve(1 + s1.size() + s2.size());
  out.push_back(s0);
  out.insert(out.end(), s1.begin(), s1.end());
  out.insert(out.end(), s2.begin(), s2.end());
  return out;
}

std::vector<std::string> ScatteringSummary::schema() const {
  std::vector<std::string> labels;
  labels.reserve(1 + s1.size() + s2.size());
  labels.emplace_back("s0");
  for (int j = 0; j < J; ++j) labels.push_back("s1[" + std::to_string(j) + "]");
  for (int j1 = 0; j1 < J; ++j1)
    for (int j2 = j1 + 1; j2 < J; ++j2)
      labels.push_back("s2[" + std::to_string(j1) + "," + std::to_string(j2) + "]");
  return labels;
}

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// |IFFT(spectrum .* filter)|, reusing `work` as scratch.
void modulus_of_filtered(const ComplexGrid& spectrum, const std::vector<double>& filt,
                         const Fft2d& fft, ComplexGrid& work, std::vector<double>& out) {
  const std::size_t npix = spectrum.size();
  work.resize(npix);
  for (std::size_t i = 0; i < npix; ++i) work[i] = spectrum[i] * filt[i];
  fft.inverse(work);
  out.resize(npix);
  for (std::size_t i = 0; i < npix; ++i) out[i] = std::abs(work[i]);
}

void check_shapes(const Field2D& field, std::size_t filter_size) {
  if (field.n < 4 || field.data.size() != static_cast<std::size_t>(field.n) * field.n)
    throw NumericalError("scattering: malformed field");
  if (filter_size != field.data.size())
    throw NumericalError("scattering: filter grid does not match field grid");
}

}  // namespace

Field2D propagate(const Field2D& field, const std::vector<double>& psi_hat) {
  check_shapes(field, psi_hat.size());
  const Fft2d& fft = Fft2d::of(field.n);
  ComplexGrid spectrum = forward_fft(field.data, field.n);
  ComplexGrid work;
  Field2D out;
  out.n = field.n;
  out.box_size = field.box_size;
  out.params = field.params;
  out.seed = field.seed;
  modulus_of_filtered(spectrum, psi_hat, fft, work, out.data);
  return out;
}

Field2D propagate(const Field2D& field, const FilterBank& bank, int j, int chi) {
  if (j < 0 || j >= bank.J || chi < 0 || chi >= bank.L)
    throw ConfigError("propagate: filter index out of range");
  return propagate(field, bank.psi(j, chi));
}

ScatteringSummary scatter(const Field2D& field, const FilterBank& bank, int threads) {
  check_shapes(field, bank.phi_hat.size());
  const int J = bank.J;
  const int L = bank.L;
  const Fft2d& fft = Fft2d::of(field.n);
  const ComplexGrid spectrum = forward_fft(field.data, field.n);

  ScatteringSummary summary;
  summary.J = J;
  summary.s0 = field.mean();
  summary.s1.assign(J, 0.0);
  summary.s2.assign(static_cast<std::size_t>(J) * (J - 1) / 2, 0.0);
  if (J == 0) return summary;

  // Per-branch slots: first-order mean, then one partial sum per (j2, pair).
  const int branches = J * L;
  std::vector<double> order1(branches, 0.0);
  std::vector<std::vector<double>> order2(branches);

  parallel_for(branches, threads, [&](std::size_t branch) {
    const int j1 = static_cast<int>(branch) / L;
    ComplexGrid work;
    std::vector<double> u1;
    modulus_of_filtered(spectrum, bank.psi_hat[branch], fft, work, u1);
    order1[branch] = mean_of(u1);
    if (j1 + 1 >= J) return;

    ComplexGrid u1_spectrum(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) u1_spectrum[i] = u1[i];
    fft.forward(u1_spectrum);

    std::vector<double>& partial = order2[branch];
    partial.assign(static_cast<std::size_t>(J - 1 - j1), 0.0);
    std::vector<double> u2;
    for (int j2 = j1 + 1; j2 < J; ++j2) {
      double acc = 0.0;
      for (int chi2 = 0; chi2 < L; ++chi2) {
        modulus_of_filtered(u1_spectrum, bank.psi(j2, chi2), fft, work, u2);
        acc += mean_of(u2);
      }
      partial[j2 - j1 - 1] = acc;
    }
  });

  // Deterministic reduction in branch order.
  for (int j1 = 0; j1 < J; ++j1) {
    double acc = 0.0;
    for (int chi = 0; chi < L; ++chi) acc += order1[j1 * L + chi];
    summary.s1[j1] = acc / L;
  }
  const double pair_norm = 1.0 / (static_cast<double>(L) * L);
  for (int j1 = 0; j1 < J; ++j1) {
    for (int j2 = j1 + 1; j2 < J; ++j2) {
      double acc = 0.0;
      for (int chi1 = 0; chi1 < L; ++chi1)
        acc += order2[j1 * L + chi1][j2 - j1 - 1];
      summary.s2[ScatteringSummary::pair_index(j1, j2, J)] = acc * pair_norm;
    }
  }
  return summary;
}

SummaryVector scattering_summary(const Field2D& field, const FilterBank& bank,
                                 int threads) {
  const ScatteringSummary s = scatter(field, bank, threads);
  SummaryVector out;
  out.values = s.concat();
  out.schema = s.schema();
  out.provenance.type = "scattering";
  out.provenance.n = field.n;
  out.provenance.box_size = field.box_size;
  out.provenance.J = bank.J;
  out.provenance.L = bank.L;
  out.provenance.field_seed = field.seed;
  return out;
}

std::vector<Field2D> scattering_maps(const Field2D& field, const FilterBank& bank) {
  check_shapes(field, bank.phi_hat.size());
  const Fft2d& fft = Fft2d::of(field.n);
  const ComplexGrid spectrum = forward_fft(field.data, field.n);

  std::vector<Field2D> maps;
  maps.reserve(1 + bank.psi_hat.size());

  // The smoothed maps are real (phi is a real low-pass and its input here is
  // real), so take the real part rather than the modulus.
  auto smooth = [&](const ComplexGrid& spec) {
    ComplexGrid work(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i) work[i] = spec[i] * bank.phi_hat[i];
    fft.inverse(work);
    Field2D map;
    map.n = field.n;
    map.box_size = field.box_size;
    map.data.resize(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) map.data[i] = work[i].real();
    return map;
  };

  maps.push_back(smooth(spectrum));
  ComplexGrid work;
  std::vector<double> u1;
  for (const auto& psi : bank.psi_hat) {
    modulus_of_filtered(spectrum, psi, fft, work, u1);
    ComplexGrid u1_spectrum(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) u1_spectrum[i] = u1[i];
    fft.forward(u1_spectrum);
    maps.push_back(smooth(u1_spectrum));
  }
  return maps;
}

}  // namespace fsc
