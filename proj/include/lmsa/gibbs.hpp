#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lmsa/critheight.hpp"
#include "lmsa/landscape.hpp"
#include "lmsa/potentials.hpp"

namespace lmsa {

// Discretized law on a 1D grid: weights are per-point trapezoid cell masses of
// the normalized density (nonnegative, summing to 1).
struct DensityGrid {
    Grid1D grid;
    std::vector<double> hs;  // H at each grid point (exported for plotting)
    std::vector<double> weights;
};

// Position-velocity product law: gridded x marginal, Gaussian velocity with
// the given variance (never gridded; sampled analytically).
struct ProductLaw {
    DensityGrid x_marginal;
    double velocity_variance;
};

// Law with density proportional to e^{-H_{eps,c}} evaluated in the log domain
// with max subtraction (e^{-U/eps} alone underflows at small eps).
DensityGrid density_1d(const Potential& p, const FModifier& m, double c, double epsilon,
                       const std::vector<double>& xs);

// P(U(X) > u_min + delta) under the gridded law.
double tail_mass(const DensityGrid& d, const Potential& p, double delta);

// Inverse-CDF sampling of the x marginal over cells (uniform inside a cell),
// velocity drawn N(0, variance). Deterministic in the seed.
std::vector<std::pair<double, double>> sample_product(const ProductLaw& law, long n,
                                                      std::uint64_t seed);

// Total variation between two weight vectors on the same cells.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

// Cell boundaries used for histogram binning against a DensityGrid: midpoints
// between neighbours, with the end cells extending to +-infinity.
std::vector<double> cell_edges(const std::vector<double>& xs);

// Bins samples into the grid's cells and normalizes to a weight vector.
std::vector<double> bin_samples(const std::vector<double>& xs, const std::vector<double>& samples);

}  // namespace lmsa
