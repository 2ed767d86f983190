#include "lmsa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include "lmsa/errors.hpp"
#include "lmsa/format.hpp"
#include "lmsa/rng.hpp"

namespace lmsa {

void ExperimentConfig::validate() const {
    const Potential& p = potential_by_name(potential);
    if (methods.empty()) throw config_error("experiment: no methods configured");
    for (const auto& lm : methods) {
        if (lm.label.empty()) throw config_error("experiment: method label must be nonempty");
        lm.cfg.validate();
    }
    if (static_cast<int>(x0.size()) != p.dim) {
        throw config_error("experiment: x0 must have dimension " + std::to_string(p.dim));
    }
    if (!y0.empty() && static_cast<int>(y0.size()) != p.dim) {
        throw config_error("experiment: y0 must have dimension " + std::to_string(p.dim));
    }
    if (n_replicas < 1) throw config_error("experiment: n_replicas must be >= 1");
    if (n_steps < 0) throw config_error("experiment: n_steps must be >= 0");
    if (delta <= 0.0) throw config_error("experiment: delta must be positive");
    if (!checkpoints.empty()) {
        if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
            throw config_error("experiment: checkpoints must be sorted");
        }
        if (checkpoints.front() < 0 || checkpoints.back() > n_steps) {
            throw config_error("experiment: checkpoints must lie in [0, n_steps]");
        }
    }
}

std::vector<long> default_checkpoints(const ExperimentConfig& cfg, int count) {
    if (cfg.methods.empty()) throw config_error("experiment: no methods configured");
    const StepSchedule& s = cfg.methods.front().cfg.steps;
    // Theta(k) for k = 0..n_steps
    std::vector<double> theta(static_cast<size_t>(cfg.n_steps) + 1);
    double acc = 0.0;
    for (long k = 0; k <= cfg.n_steps; ++k) {
        acc += step_at(s, k);
        theta[static_cast<size_t>(k)] = acc;
    }
    std::vector<long> cps{0};
    if (cfg.n_steps > 0) {
        const double lo = std::log(theta.front());
        const double hi = std::log(theta.back());
        for (int i = 1; i < count; ++i) {
            const double target = std::exp(lo + (hi - lo) * i / (count - 1));
            const auto it = std::lower_bound(theta.begin(), theta.end(), target);
            const long k = std::min<long>(static_cast<long>(it - theta.begin()), cfg.n_steps);
            if (k > cps.back()) cps.push_back(k);
        }
        if (cps.back() != cfg.n_steps) cps.push_back(cfg.n_steps);
    }
    return cps;
}

namespace {

// Per-replica, per-checkpoint failure indicators for one method.
struct ReplicaIndicators {
    std::vector<unsigned char> inst;
    std::vector<unsigned char> runm;
    std::vector<double> theta;
};

ReplicaIndicators replica_indicators(const LabeledMethod& lm, const Potential& p,
                                     const ExperimentConfig& cfg,
                                     const std::vector<long>& checkpoints, long replica) {
    NoiseStream ns(cfg.base_seed, static_cast<std::uint64_t>(replica), p.dim);
    const bool kinetic = is_kinetic(lm.cfg.method);
    std::optional<Vec> y0;
    if (kinetic) y0 = cfg.y0.empty() ? Vec(p.dim, 0.0) : cfg.y0;

    const double thr = p.u_min + cfg.delta;
    ReplicaIndicators out;
    out.inst.resize(checkpoints.size(), 1);
    out.runm.resize(checkpoints.size(), 1);
    out.theta.resize(checkpoints.size(), 0.0);

    auto fill = [&](const std::vector<Checkpoint>& cps, long diverged_at) {
        size_t ci = 0;
        for (const Checkpoint& cp : cps) {
            while (ci < checkpoints.size() && checkpoints[ci] < cp.k) ++ci;
            while (ci < checkpoints.size() && checkpoints[ci] == cp.k) {
                out.inst[ci] = cp.u > thr ? 1 : 0;
                out.runm[ci] = cp.runmin > thr ? 1 : 0;
                out.theta[ci] = cp.theta;
                ++ci;
            }
        }
        // checkpoints at or past the divergence step keep indicator 1; their
        // theta column is filled from the schedule so rows stay aligned
        if (diverged_at >= 0) {
            for (size_t i = 0; i < checkpoints.size(); ++i) {
                if (checkpoints[i] >= diverged_at) {
                    double acc = 0.0;
                    for (long k = 0; k <= checkpoints[i]; ++k) acc += step_at(lm.cfg.steps, k);
                    out.theta[i] = acc;
                }
            }
        }
    };

    try {
        NoiseStream stream = ns;
        Trajectory traj = simulate(lm.cfg, p, cfg.x0, y0, cfg.n_steps, stream, checkpoints);
        fill(traj.checkpoints, -1);
    } catch (const divergence_error& e) {
        fill(e.recorded, e.step);
    }
    return out;
}

}  // namespace

std::vector<ProbabilityCurve> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const Potential& p = potential_by_name(cfg.potential);
    const std::vector<long> checkpoints =
        cfg.checkpoints.empty() ? default_checkpoints(cfg) : cfg.checkpoints;

    std::vector<ProbabilityCurve> curves;
    for (const LabeledMethod& lm : cfg.methods) {
        std::vector<ReplicaIndicators> per_replica(static_cast<size_t>(cfg.n_replicas));
        std::atomic<long> next{0};
        const unsigned n_workers = std::max(
            1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                   static_cast<unsigned>(cfg.n_replicas)));
        auto work = [&]() {
            for (;;) {
                const long r = next.fetch_add(1);
                if (r >= cfg.n_replicas) return;
                per_replica[static_cast<size_t>(r)] =
                    replica_indicators(lm, p, cfg, checkpoints, r);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();

        ProbabilityCurve curve;
        curve.method = lm.label;
        curve.rows.resize(checkpoints.size());
        for (size_t i = 0; i < checkpoints.size(); ++i) {
            long inst = 0;
            long runm = 0;
            for (const auto& ri : per_replica) {
                inst += ri.inst[i];
                runm += ri.runm[i];
            }
            curve.rows[i] = {per_replica.front().theta[i],
                             static_cast<double>(inst) / static_cast<double>(cfg.n_replicas),
                             static_cast<double>(runm) / static_cast<double>(cfg.n_replicas)};
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::string csv_string(const std::vector<ProbabilityCurve>& curves) {
    std::vector<const ProbabilityCurve*> order;
    order.reserve(curves.size());
    for (const auto& c : curves) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const ProbabilityCurve* a, const ProbabilityCurve* b) {
                  return a->method < b->method;
              });
    std::string out = "method,theta,p_inst,p_runmin\n";
    for (const ProbabilityCurve* c : order) {
        std::vector<CurveRow> rows = c->rows;
        std::sort(rows.begin(), rows.end(),
                  [](const CurveRow& a, const CurveRow& b) { return a.theta < b.theta; });
        for (const CurveRow& r : rows) {
            out += c->method;
            out += ',';
            out += format_g17(r.theta);
            out += ',';
            out += format_g17(r.p_inst);
            out += ',';
            out += format_g17(r.p_runmin);
            out += '\n';
        }
    }
    return out;
}

void write_csv(const std::vector<ProbabilityCurve>& curves, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path);
    f << csv_string(curves);
    if (!f) throw io_error("write failed: " + path);
}

double stationarity_test(const Potential& p, const FModifier& m, double c, double epsilon,
                         double eta, double x0, long n_steps, long burn_in, std::uint64_t seed,
                         const std::vector<double>& grid) {
    if (p.dim != 1) throw std::invalid_argument("stationarity_test: requires a 1D potential");
    if (epsilon <= 0.0 || eta <= 0.0) {
        throw std::invalid_argument("stationarity_test: epsilon and eta must be positive");
    }
    const std::uint64_t key = stream_key(seed, 0);
    double x = x0;
    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(n_steps) + 1);
    for (long k = 0; k < burn_in + n_steps; ++k) {
        if (k == burn_in) samples.push_back(x);
        const double u = p.eval({x});
        const double g = p.grad({x})[0];
        const double diff = f_eval(m, std::max(u - c, 0.0)) + epsilon;
        x += -g * eta + std::sqrt(2.0 * diff) * std::sqrt(eta) *
                            normal_at(key, static_cast<std::uint64_t>(k));
        if (!std::isfinite(x)) {
            throw divergence_error(k + 1, {k, 0.0, {x}, u, u}, {});
        }
        if (k >= burn_in) samples.push_back(x);
    }
    if (samples.empty()) samples.push_back(x);  // n_steps = 0, burn_in only
    const DensityGrid d = density_1d(p, m, c, epsilon, grid);
    return tv_distance(bin_samples(grid, samples), d.weights);
}

}  // namespace lmsa
