#include "lmsa/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lmsa/errors.hpp"
#include "lmsa/rng.hpp"

namespace lmsa {

DensityGrid density_1d(const Potential& p, const FModifier& m, double c, double epsilon,
                       const std::vector<double>& xs) {
    if (p.dim != 1) throw std::invalid_argument("density_1d: requires a 1D potential");
    if (epsilon <= 0.0) throw std::invalid_argument("density_1d: epsilon must be positive");
    if (xs.size() < 2) throw std::invalid_argument("density_1d: need at least 2 grid points");

    const ModifiedLandscape L{&p, m, c, epsilon};
    const size_t n = xs.size();
    DensityGrid d;
    d.grid.xs = xs;
    d.grid.us.resize(n);
    d.hs.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const Vec x{xs[i]};
        d.grid.us[i] = eval(p, x);
        d.hs[i] = h_eval(L, x);
    }
    d.grid.validate();

    // log-domain: subtract the min of H before exponentiating
    const double h_min = *std::min_element(d.hs.begin(), d.hs.end());
    d.weights.resize(n);
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        // trapezoid rule regrouped per point: half-cells at the ends
        const double left = i == 0 ? 0.0 : xs[i] - xs[i - 1];
        const double right = i + 1 == n ? 0.0 : xs[i + 1] - xs[i];
        const double width = 0.5 * (left + right);
        d.weights[i] = std::exp(-(d.hs[i] - h_min)) * width;
        total += d.weights[i];
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw numeric_error(
            "density_1d: total mass vanished; use a larger epsilon or a finer grid", total);
    }
    for (double& w : d.weights) w /= total;
    return d;
}

double tail_mass(const DensityGrid& d, const Potential& p, double delta) {
    if (delta <= 0.0) throw std::invalid_argument("tail_mass: delta must be positive");
    const double thr = p.u_min + delta;
    double mass = 0.0;
    for (size_t i = 0; i < d.weights.size(); ++i) {
        if (d.grid.us[i] > thr) mass += d.weights[i];
    }
    return mass;
}

std::vector<double> cell_edges(const std::vector<double>& xs) {
    std::vector<double> edges(xs.size() + 1);
    edges.front() = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < xs.size(); ++i) edges[i + 1] = 0.5 * (xs[i] + xs[i + 1]);
    edges.back() = std::numeric_limits<double>::infinity();
    return edges;
}

std::vector<double> bin_samples(const std::vector<double>& xs,
                                const std::vector<double>& samples) {
    const std::vector<double> edges = cell_edges(xs);
    std::vector<double> w(xs.size(), 0.0);
    for (double s : samples) {
        const auto it = std::upper_bound(edges.begin() + 1, edges.end() - 1, s);
        w[static_cast<size_t>(it - edges.begin()) - 1] += 1.0;
    }
    if (!samples.empty()) {
        for (double& v : w) v /= static_cast<double>(samples.size());
    }
    return w;
}

std::vector<std::pair<double, double>> sample_product(const ProductLaw& law, long n,
                                                      std::uint64_t seed) {
    if (law.velocity_variance <= 0.0) {
        throw std::invalid_argument("sample_product: velocity variance must be positive");
    }
    if (n < 0) throw std::invalid_argument("sample_product: n must be nonnegative");
    const std::vector<double>& xs = law.x_marginal.grid.xs;
    const std::vector<double>& w = law.x_marginal.weights;
    std::vector<double> cdf(w.size());
    double acc = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        cdf[i] = acc;
    }
    // sampling cells are the midpoint cells clipped to the grid span
    std::vector<double> edges = cell_edges(xs);
    edges.front() = xs.front();
    edges.back() = xs.back();

    const std::uint64_t key = stream_key(seed, 0x70726f64ULL);  // product-law stream
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(n));
    for (long s = 0; s < n; ++s) {
        // words 4s, 4s+1 feed the cell draw; the velocity normal reads words
        // offset by 2^33, so the index ranges never collide
        const double u1 = uniform01(word_at(key, 4 * static_cast<std::uint64_t>(s)));
        const double u2 = uniform01(word_at(key, 4 * static_cast<std::uint64_t>(s) + 1));
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u1 * acc);
        const size_t cell = std::min(static_cast<size_t>(it - cdf.begin()), w.size() - 1);
        const double x = edges[cell] + u2 * (edges[cell + 1] - edges[cell]);
        const double y = std::sqrt(law.velocity_variance) *
                         normal_at(key, 2 * static_cast<std::uint64_t>(s) + 0x100000000ULL);
        out.emplace_back(x, y);
    }
    return out;
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("tv_distance: size mismatch");
    double s = 0.0;
    for (size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

}  // namespace lmsa
