#pragma once

#include <string>
#include <vector>

#include "lmsa/potentials.hpp"

namespace lmsa {

// The modifier f: non-negative, non-decreasing, f(u) = 0 for u <= 0. Three
// kinds: identically zero (classical dynamics), a * arctan(u) (the experiment
// choice, unbounded derivative cap), and a C^2 smoothstep capped at M4 beyond
// M3 (the form the theory assumes). M5 = sup f' on [0, M3] is fixed at
// construction.
struct FModifier {
    enum class Kind { zero, scaled_arctan, capped_smoothstep };

    Kind kind = Kind::zero;
    double a = 0.0;   // scaled_arctan
    double M3 = 0.0;  // capped_smoothstep: cap location
    double M4 = 0.0;  // capped_smoothstep: cap value
    double M5 = 0.0;

    static FModifier zero();
    static FModifier scaled_arctan(double a);
    static FModifier capped_smoothstep(double M3, double M4);

    // "zero" | "arctan:<scale>" | "smoothstep:<M3>:<M4>"
    static FModifier parse(const std::string& spec);
    std::string to_string() const;
};

double f_eval(const FModifier& m, double u);
double f_prime(const FModifier& m, double u);

// (1 + f'((u-c)+)) / (f((u-c)+) + epsilon); equals 1/epsilon wherever u <= c.
double drift_factor(const FModifier& m, double c, double epsilon, double u);

struct ModifiedLandscape {
    const Potential* potential;
    FModifier modifier;
    double c;
    double epsilon;
};

// grad_x H_{eps,c}(x) = drift_factor(U(x)) * grad U(x). No quadrature.
Vec modified_drift(const ModifiedLandscape& L, const Vec& x);

// H_{eps,c}(x) = int_{u_min}^{U(x)} du / (f((u-c)+) + eps) + ln(f((U(x)-c)+) + eps).
// The part of the range below c integrates exactly to (length)/eps; the rest
// uses adaptive Simpson (abs tol 1e-10, depth 60). U(x) <= c takes the fully
// closed form (U(x) - u_min)/eps + ln eps.
double h_eval(const ModifiedLandscape& L, const Vec& x);

struct LandscapeRow {
    double x;
    double u;
    double h;
};

// Aligned samples of U and H over a 1D grid, for plotting and sign-change checks.
std::vector<LandscapeRow> landscape_grid(const ModifiedLandscape& L,
                                         const std::vector<double>& xs);

}  // namespace lmsa
