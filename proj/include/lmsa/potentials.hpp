#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lmsa {

using Vec = std::vector<double>;

// Constants for the quadratic growth envelope
//   a1*|x|^2 - M <= U(x) <= a2*|x|^2 + M,   -<grad U(x), x> <= -r*|x|^2 + M,
// used only for numerical sanity checks of a potential.
struct GrowthCert {
    double a1;
    double a2;
    double r;
    double M;
};

struct GrowthViolation {
    Vec x;
    std::string inequality;  // human-readable form of the bound that failed
    double lhs;
    double rhs;
};

struct Potential {
    std::string name;
    int dim;
    std::function<double(const Vec&)> eval;
    std::function<Vec(const Vec&)> grad;
    double u_min;                // reference global minimum value
    std::vector<Vec> argmin_hint;
    std::vector<std::pair<double, double>> box;  // per-dimension bounds for grids/plots
    std::optional<GrowthCert> growth_cert;
};

double eval(const Potential& p, const Vec& x);
Vec grad(const Potential& p, const Vec& x);

// (u_min, argmin hints) as stored in the definition.
std::pair<double, std::vector<Vec>> reference_min(const Potential& p);

// Samples n points with |x| <= radius and reports every violated growth bound.
// Empty report iff no violation was found among the samples.
std::vector<GrowthViolation> growth_check(const Potential& p, int n_samples, double radius,
                                          std::uint64_t seed = 0);

// Built-ins: "ackley", "ackley3", "rastrigin", "u0". Unknown name -> config_error.
const Potential& potential_by_name(const std::string& name);
std::vector<std::string> potential_names();

}  // namespace lmsa
