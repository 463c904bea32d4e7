#include "sphrhs/sphere_transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sphrhs/legendre.hpp"

namespace sphrhs {

namespace {

const double kInvSqrtTwoPi = 1.0 / std::sqrt(kTwoPi);

// P_n(x) and P_n'(x) by the Bonnet recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// e^{i m phi_j} for m in [-lmax, lmax], row j.
std::vector<complex> phase_table(const SphereGrid& grid, int lmax) {
  const std::size_t width = 2 * static_cast<std::size_t>(lmax) + 1;
  std::vector<complex> table(grid.n_phi() * width);
  for (std::size_t j = 0; j < grid.n_phi(); ++j) {
    for (int m = -lmax; m <= lmax; ++m) {
      table[j * width + static_cast<std::size_t>(m + lmax)] = std::polar(1.0, m * grid.phi[j]);
    }
  }
  return table;
}

void require_exact(const SphereGrid& grid, int lmax, const char* what) {
  if (grid.lmax < lmax) {
    throw std::invalid_argument(std::string(what) + ": grid of degree " +
                                std::to_string(grid.lmax) + " is too coarse for lmax " +
                                std::to_string(lmax));
  }
}

}  // namespace

SphereGrid make_grid(int lmax) {
  if (lmax < 0) throw std::invalid_argument("make_grid requires lmax >= 0");
  SphereGrid grid;
  grid.lmax = lmax;
  const int n = lmax + 1;
  grid.x.resize(n);
  grid.weight.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, d] = legendre_with_derivative(n, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // nodes come out in decreasing x; store mirrored pairs in increasing order
    grid.x[n - 1 - i] = x;
    grid.x[i] = -x;
    grid.weight[n - 1 - i] = w;
    grid.weight[i] = w;
  }
  if (n % 2 == 1) grid.x[n / 2] = 0.0;

  grid.theta.resize(n);
  for (int i = 0; i < n; ++i) grid.theta[i] = std::acos(grid.x[i]);

  const int n_phi = 2 * lmax + 2;
  grid.phi.resize(n_phi);
  for (int j = 0; j < n_phi; ++j) grid.phi[j] = kTwoPi * j / n_phi;
  return grid;
}

SampledField synthesize(const HarmonicExpansion& f, const SphereGrid& grid) {
  require_exact(grid, f.lmax(), "synthesize");
  const int L = f.lmax();
  const std::size_t width = 2 * static_cast<std::size_t>(L) + 1;
  const auto phases = phase_table(grid, L);

  SampledField field{grid, std::vector<complex>(grid.n_theta() * grid.n_phi())};
  std::vector<complex> by_order(width);
  for (std::size_t i = 0; i < grid.n_theta(); ++i) {
    const LegendreTable table(L, grid.x[i]);
    std::fill(by_order.begin(), by_order.end(), complex{});
    for (int l = 0; l <= L; ++l) {
      for (int m = -l; m <= l; ++m) {
        by_order[static_cast<std::size_t>(m + L)] += f(l, m) * table.signed_value(l, m);
      }
    }
    for (std::size_t j = 0; j < grid.n_phi(); ++j) {
      complex acc{};
      for (std::size_t k = 0; k < width; ++k) acc += by_order[k] * phases[j * width + k];
      field(i, j) = acc * kInvSqrtTwoPi;
    }
  }
  return field;
}

HarmonicExpansion analyze(const SampledField& field, int lmax) {
  const SphereGrid& grid = field.grid;
  require_exact(grid, lmax, "analyze");
  if (field.samples.size() != grid.n_theta() * grid.n_phi()) {
    throw std::invalid_argument("analyze: sample table does not match grid");
  }
  const std::size_t width = 2 * static_cast<std::size_t>(lmax) + 1;
  const auto phases = phase_table(grid, lmax);
  const double wphi = grid.phi_weight();

  HarmonicExpansion out(lmax);
  std::vector<complex> by_order(width);
  for (std::size_t i = 0; i < grid.n_theta(); ++i) {
    std::fill(by_order.begin(), by_order.end(), complex{});
    for (std::size_t j = 0; j < grid.n_phi(); ++j) {
      const complex v = field(i, j);
      for (std::size_t k = 0; k < width; ++k) by_order[k] += v * std::conj(phases[j * width + k]);
    }
    const LegendreTable table(lmax, grid.x[i]);
    const double w = grid.weight[i] * wphi * kInvSqrtTwoPi;
    for (int l = 0; l <= lmax; ++l) {
      for (int m = -l; m <= l; ++m) {
        out.at(l, m) += w * table.signed_value(l, m) * by_order[static_cast<std::size_t>(m + lmax)];
      }
    }
  }
  return out;
}

complex integrate(const SampledField& field) {
  const SphereGrid& grid = field.grid;
  complex total{};
  for (std::size_t i = 0; i < grid.n_theta(); ++i) {
    complex row{};
    for (std::size_t j = 0; j < grid.n_phi(); ++j) row += field(i, j);
    total += grid.weight[i] * row;
  }
  return total * grid.phi_weight();
}

complex point_eval(const HarmonicExpansion& f, const SpherePoint& p) {
  const LegendreTable table(f.lmax(), std::clamp(std::cos(p.theta()), -1.0, 1.0));
  complex acc{};
  for (int m = -f.lmax(); m <= f.lmax(); ++m) {
    complex column{};
    for (int l = std::abs(m); l <= f.lmax(); ++l) column += f(l, m) * table.signed_value(l, m);
    acc += column * std::polar(1.0, m * p.phi());
  }
  return acc * kInvSqrtTwoPi;
}

complex inner_product(const HarmonicExpansion& f, const HarmonicExpansion& g) {
  const int lmax = std::min(f.lmax(), g.lmax());
  complex acc{};
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) acc += std::conj(f(l, m)) * g(l, m);
  }
  return acc;
}

BoundReport orthonormality_check(int lmax, double tol) {
  if (lmax < 0) throw std::invalid_argument("orthonormality_check requires lmax >= 0");
  const SphereGrid grid = make_grid(lmax);
  const std::size_t modes = triangular_size(lmax);

  // theta factors of every e_{l,m} at every node, and the exact phi sums
  // F(d) = (2pi/n_phi) sum_j e^{i d phi_j}.
  std::vector<double> theta_part(grid.n_theta() * modes);
  for (std::size_t i = 0; i < grid.n_theta(); ++i) {
    const LegendreTable table(lmax, grid.x[i]);
    for (int l = 0; l <= lmax; ++l) {
      for (int m = -l; m <= l; ++m) {
        theta_part[i * modes + triangular_offset(l, m)] = table.signed_value(l, m);
      }
    }
  }
  std::vector<complex> phi_sum(4 * static_cast<std::size_t>(lmax) + 1);
  for (int d = -2 * lmax; d <= 2 * lmax; ++d) {
    complex s{};
    for (double phi : grid.phi) s += std::polar(1.0, d * phi);
    phi_sum[static_cast<std::size_t>(d + 2 * lmax)] = s * grid.phi_weight() / kTwoPi;
  }

  double worst = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const std::size_t a = triangular_offset(l, m);
      for (int lp = 0; lp <= lmax; ++lp) {
        for (int mp = -lp; mp <= lp; ++mp) {
          const std::size_t b = triangular_offset(lp, mp);
          double radial = 0.0;
          for (std::size_t i = 0; i < grid.n_theta(); ++i) {
            radial += grid.weight[i] * theta_part[i * modes + a] * theta_part[i * modes + b];
          }
          const complex gram = radial * phi_sum[static_cast<std::size_t>(mp - m + 2 * lmax)];
          const double target = (a == b) ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(gram - target));
        }
      }
    }
  }
  BoundReport r = make_report("orthonormality", "int e_{l,m}^* e_{l',m'} dOmega = delta delta",
                              worst, 0.0, tol);
  r.lmax = lmax;
  return r;
}

complex completeness_kernel(int lmax, const SpherePoint& p, const SpherePoint& q) {
  const LegendreTable tp(lmax, std::clamp(std::cos(p.theta()), -1.0, 1.0));
  const LegendreTable tq(lmax, std::clamp(std::cos(q.theta()), -1.0, 1.0));
  complex acc{};
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      acc += tp.signed_value(l, m) * tq.signed_value(l, m) *
             std::polar(1.0, m * (p.phi() - q.phi()));
    }
  }
  return acc / kTwoPi;
}

HarmonicExpansion pointwise_oracle(const HarmonicExpansion& f, const PointwiseMap& map,
                                   int out_lmax, int grid_lmax) {
  SampledField field = synthesize(f, make_grid(grid_lmax));
  for (std::size_t i = 0; i < field.grid.n_theta(); ++i) {
    for (std::size_t j = 0; j < field.grid.n_phi(); ++j) {
      field(i, j) = map(field.grid.theta[i], field.grid.phi[j], field(i, j));
    }
  }
  return analyze(field, out_lmax);
}

HarmonicExpansion pointwise_oracle(const HarmonicExpansion& f, const PointwiseMap& map,
                                   int out_lmax) {
  return pointwise_oracle(f, map, out_lmax, out_lmax + f.lmax());
}

}  // namespace sphrhs
