#include "lmsa/rng.hpp"

#include <cmath>
#include <numbers>

namespace lmsa {

double normal_at(std::uint64_t key, std::uint64_t index) {
    const double u1 = uniform01(word_at(key, 2 * index));
    const double u2 = uniform01(word_at(key, 2 * index + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace lmsa
