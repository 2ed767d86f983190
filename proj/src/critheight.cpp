#include "lmsa/critheight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmsa {

void Grid1D::validate() const {
    if (xs.size() != us.size()) throw std::invalid_argument("Grid1D: xs and us lengths differ");
    if (xs.size() < 2) throw std::invalid_argument("Grid1D: need at least 2 points");
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] < xs[i + 1])) {
            throw std::invalid_argument("Grid1D: xs must be strictly increasing");
        }
    }
    for (double u : us) {
        if (!std::isfinite(u)) throw std::invalid_argument("Grid1D: us must be finite");
    }
}

namespace {

// Shared scan: endpoint values through `endpoint`, path maxima through `clip`.
template <class Endpoint, class Clip>
CritResult scan(const Grid1D& g, Endpoint endpoint, Clip clip) {
    g.validate();
    const double umin = *std::min_element(g.us.begin(), g.us.end());
    CritResult best;
    best.value = 0.0;  // i = j at the argmin attains exactly 0 for E_*
    bool have = false;
    const size_t n = g.us.size();
    for (size_t i = 0; i < n; ++i) {
        double range_max = g.us[i];
        for (size_t j = i; j < n; ++j) {
            range_max = std::max(range_max, g.us[j]);
            const double cand = clip(range_max) - endpoint(g.us[i]) - endpoint(g.us[j]) + umin;
            if (!have || cand > best.value) {
                best = {cand, i, j};
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

CritResult critical_height_detail(const Grid1D& g) {
    return scan(
        g, [](double u) { return u; }, [](double m) { return m; });
}

double critical_height(const Grid1D& g) { return critical_height_detail(g).value; }

CritResult clipped_critical_height_detail(const Grid1D& g, double c, double delta1) {
    const double cap = c + delta1;
    return scan(
        g, [c](double u) { return std::min(u, c); },
        [cap](double m) { return std::min(m, cap); });
}

double clipped_critical_height(const Grid1D& g, double c, double delta1) {
    return clipped_critical_height_detail(g, c, delta1).value;
}

}  // namespace lmsa
