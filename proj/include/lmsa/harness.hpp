#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lmsa/gibbs.hpp"
#include "lmsa/integrators.hpp"

namespace lmsa {

// One method entry of an experiment: the label names the CSV/config section
// (e.g. "IAKSA"), the config fixes the dynamics and schedules.
struct LabeledMethod {
    std::string label;
    MethodConfig cfg;
};

struct ExperimentConfig {
    std::string potential = "rastrigin";
    std::vector<LabeledMethod> methods;
    Vec x0;
    Vec y0;  // used by kinetic methods; defaults to zeros
    long n_replicas = 100;
    long n_steps = 100000;
    std::vector<long> checkpoints;  // step indices; empty -> default log grid
    double delta = 0.5;             // failure threshold over u_min
    std::uint64_t base_seed = 7;

    void validate() const;
};

struct CurveRow {
    double theta;
    double p_inst;    // fraction of replicas with U(X_k) > u_min + delta
    double p_runmin;  // fraction with running min > u_min + delta
};

struct ProbabilityCurve {
    std::string method;
    std::vector<CurveRow> rows;
};

// Default checkpoint grid: `count` log-spaced Theta targets (computed from the
// first method's step schedule) snapped to step indices, always including 0
// and n_steps.
std::vector<long> default_checkpoints(const ExperimentConfig& cfg, int count = 60);

// Runs every (method, replica) pair; replica r of every method consumes an
// identical noise stream built from (base_seed, r). Replicas run in parallel;
// aggregation is by replica slot, so results do not depend on scheduling. A
// diverged replica counts as a failure (indicator 1) from its divergence step
// onward.
std::vector<ProbabilityCurve> run_experiment(const ExperimentConfig& cfg);

// Columns method,theta,p_inst,p_runmin at 17 significant digits, rows sorted
// by (method, theta). Byte-identical across runs with identical configs.
void write_csv(const std::vector<ProbabilityCurve>& curves, const std::string& path);
std::string csv_string(const std::vector<ProbabilityCurve>& curves);

// Long-run overdamped dynamics at constant epsilon, c and eta, binned on the
// grid after burn_in (the state after burn-in plus one sample per step), and
// compared to the quadrature density in total variation.
double stationarity_test(const Potential& p, const FModifier& m, double c, double epsilon,
                         double eta, double x0, long n_steps, long burn_in, std::uint64_t seed,
                         const std::vector<double>& grid);

}  // namespace lmsa
