#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fsc {

// Ordered, named parameter values (the synthetic family is A, alpha, g).
struct ParamVector {
  std::vector<double> values;
  std::vector<std::string> names;

  double get(const std::string& name, std::size_t fallback_index) const;
  bool has(const std::string& name) const;
  void validate() const;
};

// Real-valued periodic 2D grid sample with box metadata.
struct Field2D {
  std::vector<double> data;  // row-major n*n
  int n = 0;
  double box_size = 0.0;
  std::optional<ParamVector> params;
  std::optional<std::uint64_t> seed;

  double& at(int x, int y) { return data[static_cast<std::size_t>(x) * n + y]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(x) * n + y]; }
  double mean() const;
  double variance() const;
};

// Gaussian random field with ensemble power spectrum P(k) = A * k^-alpha
// (P(0) = 0, so the field has zero mean by construction).  White Gaussian
// modes are drawn in real space, transformed, scaled by sqrt(P * N^2 /
// box^2) and transformed back; deterministic in (params, n, box, seed).
Field2D make_grf(const ParamVector& params, int n, double box_size,
                 std::uint64_t seed);

// Pointwise lognormal transform of a latent GRF h with the same (A, alpha):
//
//   field = c(g) * (exp(g h) - m) / (g m),   m = exp(g^2 sigma_h^2 / 2)
//   c(g)  = g sigma_h / sqrt(exp(g^2 sigma_h^2) - 1)
//
// m is computed analytically from the latent variance so the map stays
// deterministic per pixel; c(g) pins the output variance to the latent one
// for every g (c -> 1 as g -> 0), which keeps the two-point amplitude of
// the family matched across g.  g = 0 returns make_grf unchanged.  The
// construction bounds the field below by -c(g)/g.
Field2D make_lognormal(const ParamVector& params, int n, double box_size,
                       std::uint64_t seed);

// Exact latent pixel variance of the (A, alpha) GRF: sum_{k != 0} P(k) / box^2.
double grf_pixel_variance(double amplitude, double slope, int n, double box_size);

// Lower bound of the lognormal construction at strength g (> -c(g)/g).
double lognormal_lower_bound(double amplitude, double slope, double g, int n,
                             double box_size);

// FLD1 container: magic 'FLD1', u32 version=1, u32 N, f64 box_size,
// u64 seed, u32 P, P x f64 parameter values, N*N f32 row-major data.
// All integers and floats little-endian.
void write_fld1(const std::string& path, const Field2D& field);
Field2D read_fld1(const std::string& path);

}  // namespace fsc
