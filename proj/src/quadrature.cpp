#include "lmsa/quadrature.hpp"

#include <cmath>
#include <utility>

#include "lmsa/errors.hpp"

namespace lmsa {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// One interval [a, b] with cached endpoint/midpoint values and its Simpson
// estimate `whole`. Recurses while the two-panel refinement disagrees by more
// than 15 * tol, halving tol per side.
double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth, bool& converged) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    if (depth <= 0) {
        converged = false;
        return left + right + err / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, converged) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, converged);
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                            double abs_tol, int max_depth) {
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    if (a == b) return {0.0, true};
    QuadResult r;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(fa, fm, fb, b - a);
    r.value = sign * adapt(f, a, b, fa, fm, fb, whole, abs_tol, max_depth, r.converged);
    return r;
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 int max_depth) {
    QuadResult r = adaptive_simpson(f, a, b, abs_tol, max_depth);
    if (!r.converged) {
        throw numeric_error("quadrature did not converge within depth budget", r.value);
    }
    return r.value;
}

}  // namespace lmsa
