#pragma once

#include <cstddef>
#include <vector>

namespace lmsa {

// 1D sample grid of a potential. In one dimension the only path between two
// points is the interval between them, so path suprema reduce to range maxima.
struct Grid1D {
    std::vector<double> xs;  // strictly increasing
    std::vector<double> us;

    void validate() const;  // throws std::invalid_argument
};

struct CritResult {
    double value = 0.0;
    std::size_t i = 0;  // attaining endpoint indices
    std::size_t j = 0;
};

// E_* = max over pairs (i, j) of [max us[i..j] - us[i] - us[j] + min us],
// computed in O(n^2) with an incremental range maximum. Always >= 0 (i = j at
// the argmin gives 0).
double critical_height(const Grid1D& g);
CritResult critical_height_detail(const Grid1D& g);

// Same scan with the path values clipped at c + delta1 and the endpoint values
// clipped at c:
// c_* = max over pairs of [max(us[i..j] ^ (c+delta1)) - us[i]^c - us[j]^c + min us]
// where a ^ b = min(a, b).
double clipped_critical_height(const Grid1D& g, double c, double delta1);
CritResult clipped_critical_height_detail(const Grid1D& g, double c, double delta1);

}  // namespace lmsa
