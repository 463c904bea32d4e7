#pragma once

#include <functional>
#include <vector>

#include "sphrhs/harmonic_core.hpp"
#include "sphrhs/report.hpp"

namespace sphrhs {

/// Gauss-Legendre nodes in x = cos(theta) times an equispaced phi grid. Integrates
/// band-limited products of total degree <= 2*lmax exactly.
struct SphereGrid {
  int lmax = 0;
  std::vector<double> x;       // strictly increasing
  std::vector<double> weight;  // sums to 2
  std::vector<double> theta;   // acos(x)
  std::vector<double> phi;     // 2 pi j / n_phi

  std::size_t n_theta() const { return x.size(); }
  std::size_t n_phi() const { return phi.size(); }
  double phi_weight() const { return kTwoPi / static_cast<double>(phi.size()); }
};

/// n_theta = lmax+1 Gauss-Legendre nodes (Newton iteration) and n_phi = 2*lmax+2.
SphereGrid make_grid(int lmax);

/// Complex samples at (theta_i, phi_j), row-major in i.
struct SampledField {
  SphereGrid grid;
  std::vector<complex> samples;

  complex& operator()(std::size_t i, std::size_t j) { return samples[i * grid.n_phi() + j]; }
  complex operator()(std::size_t i, std::size_t j) const {
    return samples[i * grid.n_phi() + j];
  }
};

SampledField synthesize(const HarmonicExpansion& f, const SphereGrid& grid);

HarmonicExpansion analyze(const SampledField& field, int lmax);

/// Integral of the sampled function over the sphere by the grid's quadrature rule.
complex integrate(const SampledField& field);

complex point_eval(const HarmonicExpansion& f, const SpherePoint& p);

/// <f|g>, conjugate-linear in f.
complex inner_product(const HarmonicExpansion& f, const HarmonicExpansion& g);

/// Gram matrix of {e_{l,m}} by quadrature; lhs is max |Gram - I|.
BoundReport orthonormality_check(int lmax, double tol = 1e-10);

/// sum_{l<=lmax} e_{l,m}(p) conj(e_{l,m}(q)).
complex completeness_kernel(int lmax, const SpherePoint& p, const SpherePoint& q);

/// A sample-domain map (theta, phi, value) -> value.
using PointwiseMap = std::function<complex(double theta, double phi, complex value)>;

/// analyze(map(synthesize(f))) to out_lmax on a grid exact to out_lmax + f.lmax.
HarmonicExpansion pointwise_oracle(const HarmonicExpansion& f, const PointwiseMap& map,
                                   int out_lmax);

/// Same, on an explicitly chosen grid degree.
HarmonicExpansion pointwise_oracle(const HarmonicExpansion& f, const PointwiseMap& map,
                                   int out_lmax, int grid_lmax);

}  // namespace sphrhs
