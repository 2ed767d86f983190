#pragma once

#include <functional>

namespace lmsa {

struct QuadResult {
    double value = 0.0;
    bool converged = true;
};

// Adaptive Simpson on [a, b] (a <= b or a > b; the sign follows the orientation).
// Splits an interval until the Richardson error estimate |S2 - S1|/15 drops
// below the local share of abs_tol, up to max_depth levels. A subinterval that
// hits max_depth contributes its best estimate and clears `converged`.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_depth);

// Throwing wrapper: numeric_error carrying the partial estimate on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth);

}  // namespace lmsa
