#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lmsa {

// eta(k) = eta0 * decay_factor^floor(k / decay_every).
struct StepSchedule {
    double eta0 = 0.05;
    long decay_every = 1000;
    double decay_factor = 0.999;
};

double step_at(const StepSchedule& s, long k);

// Temperature eps as a function of cumulative time Theta. fixed_energy:
// eps = E / ln(Theta + offset). adaptive_energy: the numerator is supplied per
// call (energy_level_at of the running-minimum history), same log denominator.
struct CoolingSchedule {
    enum class Kind { fixed_energy, adaptive_energy };

    Kind kind = Kind::fixed_energy;
    double E = 2.0;
    double offset = 2.0;
    double delta2 = 0.0;  // adaptive_energy
    int n = 0;            // adaptive_energy: mollifier bandwidth 1/n

    static CoolingSchedule fixed(double E, double offset = 2.0);
    static CoolingSchedule adaptive(double delta2, int n, double offset = 2.0);

    // "fixed:<E>:<offset>" | "fixed:<E>" (offset 2) | "adaptive:<delta2>:<n>"
    static CoolingSchedule parse(const std::string& spec);
    std::string to_string() const;
};

double epsilon_at(const CoolingSchedule& c, double theta,
                  std::optional<double> energy_override = std::nullopt);

// Rule for the clipping level c. fixed: constant. appendix: running minimum
// plus 1/(Theta+1). mollified: the kernel-smoothed lagged running minimum
// (delta1 is carried for reporting against the clipped critical height; it is
// not added to the produced c).
struct AdaptiveC {
    enum class Kind { fixed, appendix, mollified };

    Kind kind = Kind::appendix;
    double c = 0.0;     // fixed
    int n = 0;          // mollified
    double delta1 = 0.0;

    static AdaptiveC fixed(double c);
    static AdaptiveC appendix();
    static AdaptiveC mollified(int n, double delta1);

    // "fixed:<c>" | "appendix" | "mollified:<n>:<delta1>"
    static AdaptiveC parse(const std::string& spec);
    std::string to_string() const;
};

// Right-continuous step function of the running minimum: value_at(t) is the
// last recorded min at or before t, extended constant on both ends.
struct RunMinHistory {
    std::vector<double> times;
    std::vector<double> mins;

    // Appends (theta, value) if it is the first sample or a strict
    // improvement; times must strictly increase.
    void record(double theta, double value);
    double value_at(double t) const;
    bool empty() const { return times.empty(); }
    double current() const;
};

// fixed / appendix kinds only (mollified needs the full history).
double c_next(const AdaptiveC& a, double runmin, double theta);
// All kinds; appendix reads the running minimum off the history.
double c_next(const AdaptiveC& a, const RunMinHistory& h, double theta);

// Bump kernel on (-1,1) integrating to 1; the normalizer is computed once by
// quadrature (abs tol 1e-12) and cached.
double mollifier_phi(double x);

// int M_{(u - lag_steps/n)+} phi_{1/n}(t - u) du over the kernel support
// (t - 1/n, t + 1/n), phi_{1/n}(x) = n phi(n x). Evaluated exactly per step
// segment (kernel mass by quadrature, abs tol 1e-9 overall) and normalized by
// the computed total mass, so the result is a convex combination of history
// values.
double mollified_runmin(const RunMinHistory& h, int n, int lag_steps, double t);

// E_t = mollified_runmin(h, n, 3, t) - u_min + delta2.
double energy_level_at(const RunMinHistory& h, int n, double delta2, double u_min, double t);

}  // namespace lmsa
