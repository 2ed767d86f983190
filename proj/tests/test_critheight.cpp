#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "lmsa/critheight.hpp"
#include "lmsa/rng.hpp"

using namespace lmsa;

namespace {

Grid1D sample(double lo, double hi, long n, double (*f)(double)) {
    Grid1D g;
    for (long i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        g.xs.push_back(x);
        g.us.push_back(f(x));
    }
    return g;
}

double dwell(double x) { return (x * x - 1.0) * (x * x - 1.0); }

// Cubic-time reference: explicit range maxima for every pair.
double brute_critical(const Grid1D& g, double c, double d1, bool clipped) {
    const double umin = *std::min_element(g.us.begin(), g.us.end());
    double best = -1e300;
    for (std::size_t i = 0; i < g.us.size(); ++i) {
        for (std::size_t j = i; j < g.us.size(); ++j) {
            double m = -1e300;
            for (std::size_t l = i; l <= j; ++l) m = std::max(m, g.us[l]);
            double v;
            if (clipped) {
                v = std::min(m, c + d1) - std::min(g.us[i], c) - std::min(g.us[j], c) + umin;
            } else {
                v = m - g.us[i] - g.us[j] + umin;
            }
            best = std::max(best, v);
        }
    }
    return best;
}

Grid1D random_grid(std::uint64_t seed, long n) {
    const std::uint64_t key = stream_key(seed, 0xA11CE);
    std::uint64_t ctr = 0;
    Grid1D g;
    double x = 0.0;
    for (long i = 0; i < n; ++i) {
        x += 0.01 + uniform01(word_at(key, ctr++));
        g.xs.push_back(x);
        g.us.push_back(-1.0 + 3.0 * uniform01(word_at(key, ctr++)));
    }
    return g;
}

}  // namespace

TEST_CASE("grid validation") {
    Grid1D g;
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g.xs = {0.0, 1.0};
    g.us = {1.0};
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
    g.us = {1.0, 2.0};
    CHECK_NOTHROW(g.validate());
    g.xs = {1.0, 0.5};
    CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}

TEST_CASE("monotone and constant landscapes have no barrier") {
    Grid1D inc = sample(0.0, 1.0, 101, [](double x) { return 2.0 * x; });
    CHECK(critical_height(inc) == doctest::Approx(0.0).epsilon(1e-12));
    Grid1D flat = sample(0.0, 1.0, 101, [](double) { return 3.5; });
    CHECK(critical_height(flat) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("double well: barrier one, clipped at a half") {
    Grid1D g = sample(-2.0, 2.0, 4001, dwell);
    CritResult e = critical_height_detail(g);
    CHECK(e.value == doctest::Approx(1.0).epsilon(1e-3));
    // The attaining pair straddles the hump at zero: one endpoint per well.
    CHECK(g.xs[e.i] < 0.0);
    CHECK(g.xs[e.j] > 0.0);
    CHECK(std::fabs(dwell(g.xs[e.i])) < 1e-6);
    CHECK(std::fabs(dwell(g.xs[e.j])) < 1e-6);

    CHECK(clipped_critical_height(g, 0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-3));
    // Clipping inactive once c clears the whole range.
    CHECK(clipped_critical_height(g, 100.0, 0.0) == critical_height(g));
    CHECK(clipped_critical_height(g, 9.0, 0.5) == critical_height(g));
}

TEST_CASE("detail result is attained by its own pair") {
    Grid1D g = random_grid(5, 120);
    CritResult e = critical_height_detail(g);
    const double umin = *std::min_element(g.us.begin(), g.us.end());
    double m = -1e300;
    for (std::size_t l = e.i; l <= e.j; ++l) m = std::max(m, g.us[l]);
    CHECK(e.value == doctest::Approx(m - g.us[e.i] - g.us[e.j] + umin).epsilon(1e-12));
    CHECK(e.i <= e.j);
}

TEST_CASE("quadratic scan equals the cubic reference on random grids") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        long n = 20 + static_cast<long>(s * 3);
        Grid1D g = random_grid(s, n);
        CHECK(critical_height(g) ==
              doctest::Approx(brute_critical(g, 0, 0, false)).epsilon(1e-12));
        const double umin = *std::min_element(g.us.begin(), g.us.end());
        double c = umin + 0.3 + 0.02 * static_cast<double>(s);
        double d1 = 0.01 * static_cast<double>(s % 7);
        CHECK(clipped_critical_height(g, c, d1) ==
              doctest::Approx(brute_critical(g, c, d1, true)).epsilon(1e-12));
    }
}

TEST_CASE("clipping inequalities on random grids") {
    for (std::uint64_t s = 100; s < 150; ++s) {
        Grid1D g = random_grid(s, 80);
        const double umin = *std::min_element(g.us.begin(), g.us.end());
        const double estar = critical_height(g);
        const double c = umin + static_cast<double>(s % 11) * 0.1;
        const double d1 = static_cast<double>(s % 5) * 0.1;

        // With both clip levels equal (delta1 = 0) the clipped height never
        // exceeds the plain one; a positive delta1 adds at most itself.
        CHECK(clipped_critical_height(g, c, 0.0) <= estar + 1e-12);
        CHECK(clipped_critical_height(g, c, d1) <= estar + d1 + 1e-12);
        // And the clip caps the height at c + delta1 above the minimum.
        CHECK(clipped_critical_height(g, c, d1) <= c + d1 - umin + 1e-12);
        CHECK(clipped_critical_height(g, c, d1) >= 0.0);
    }
}

TEST_CASE("monotone in the clip allowances") {
    Grid1D g = random_grid(7, 150);
    const double umin = *std::min_element(g.us.begin(), g.us.end());
    double prev = -1e300;
    for (int i = 0; i <= 20; ++i) {
        double v = clipped_critical_height(g, umin + 0.1, 0.1 * i);
        CHECK(v >= prev - 1e-12);  // delta1 widens the path allowance
        prev = v;
    }
    // Raising c towards the range maximum recovers the full barrier.
    double vlo = clipped_critical_height(g, umin, 0.0);
    double vhi = clipped_critical_height(g, umin + 100.0, 0.0);
    CHECK(vlo <= vhi + 1e-12);
    CHECK(vhi == critical_height(g));
}

TEST_CASE("vertical shifts cancel") {
    Grid1D g = random_grid(21, 90);
    Grid1D h = g;
    for (double& u : h.us) u += 3.75;
    CHECK(critical_height(h) == doctest::Approx(critical_height(g)).epsilon(1e-12));
    const double umin = *std::min_element(g.us.begin(), g.us.end());
    CHECK(clipped_critical_height(h, umin + 0.4 + 3.75, 0.2) ==
          doctest::Approx(clipped_critical_height(g, umin + 0.4, 0.2)).epsilon(1e-12));
}
