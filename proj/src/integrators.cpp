#include "lmsa/integrators.hpp"

#include <algorithm>
#include <cmath>

#include "lmsa/errors.hpp"
#include "lmsa/rng.hpp"

namespace lmsa {

namespace {

constexpr double kDivergenceCap = 1e300;

std::uint64_t noise_key(const NoiseStream& ns) {
    return stream_key(ns.base_seed, ns.replica_index);
}

bool finite_state(const Vec& x, double u) {
    for (double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return std::isfinite(u) && std::abs(u) <= kDivergenceCap;
}

// Pre-step schedule values: eta(k), eps(k), c(k) from the current state.
struct StepParams {
    double eta;
    double eps;
    double c;
};

StepParams params_at(const MethodConfig& cfg, const Potential& p, const MethodState& st) {
    StepParams sp{};
    sp.eta = step_at(cfg.steps, st.k);
    if (cfg.cooling.kind == CoolingSchedule::Kind::adaptive_energy) {
        const double e = energy_level_at(st.history, cfg.cooling.n, cfg.cooling.delta2, p.u_min,
                                         st.theta);
        sp.eps = epsilon_at(cfg.cooling, st.theta, e);
    } else {
        sp.eps = epsilon_at(cfg.cooling, st.theta);
    }
    sp.c = c_next(cfg.adaptive_c, st.history, st.theta);
    return sp;
}

void advance_bookkeeping(const MethodConfig& cfg, const Potential& p, MethodState& st) {
    const double u = p.eval(st.x);
    const long next = st.k + 1;
    if (!finite_state(st.x, u)) {
        throw divergence_error(next, {}, {});
    }
    st.u = u;
    st.k = next;
    st.theta += step_at(cfg.steps, next);
    if (u < st.runmin) {
        st.runmin = u;
        st.history.record(st.theta, u);
    }
}

}  // namespace

NoiseStream::NoiseStream(std::uint64_t base_seed, std::uint64_t replica_index, int dim)
    : base_seed(base_seed), replica_index(replica_index), dim(dim) {
    if (dim <= 0) throw std::invalid_argument("NoiseStream: dim must be positive");
}

Vec gaussians(NoiseStream& ns, long k) {
    Vec out(ns.dim);
    gaussians_into(ns, k, out);
    return out;
}

void gaussians_into(NoiseStream& ns, long k, Vec& out) {
    if (k < 0) throw std::invalid_argument("gaussians: negative step index");
    out.resize(ns.dim);
    const std::uint64_t key = noise_key(ns);
    const std::uint64_t base = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(ns.dim);
    for (int i = 0; i < ns.dim; ++i) {
        out[i] = normal_at(key, base + i);
    }
    ns.cursor = static_cast<std::uint64_t>(k) + 1;
}

bool is_kinetic(Method m) { return m == Method::KSA || m == Method::IKSA; }

Method method_parse(const std::string& name) {
    if (name == "SA") return Method::SA;
    if (name == "ISA") return Method::ISA;
    if (name == "KSA") return Method::KSA;
    if (name == "IKSA") return Method::IKSA;
    throw config_error("unknown method \"" + name + "\" (have: SA, ISA, KSA, IKSA)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::SA: return "SA";
        case Method::ISA: return "ISA";
        case Method::KSA: return "KSA";
        case Method::IKSA: return "IKSA";
    }
    return "?";
}

void MethodConfig::validate() const {
    if ((method == Method::SA || method == Method::KSA) &&
        modifier.kind != FModifier::Kind::zero) {
        throw config_error("method " + method_name(method) + " requires the zero modifier");
    }
}

void overdamped_step(const MethodConfig& cfg, const Potential& p, MethodState& st,
                     const Vec& noise) {
    const StepParams sp = params_at(cfg, p, st);
    const double diff = f_eval(cfg.modifier, std::max(st.u - sp.c, 0.0)) + sp.eps;
    const double sigma = std::sqrt(2.0 * diff) * std::sqrt(sp.eta);
    const Vec g = p.grad(st.x);
    for (size_t i = 0; i < st.x.size(); ++i) {
        st.x[i] += -g[i] * sp.eta + sigma * noise[i];
    }
    advance_bookkeeping(cfg, p, st);
}

void kinetic_step(const MethodConfig& cfg, const Potential& p, MethodState& st, const Vec& noise) {
    const StepParams sp = params_at(cfg, p, st);
    Vec& y = *st.y;
    const double factor = drift_factor(cfg.modifier, sp.c, sp.eps, st.u);
    const Vec g = p.grad(st.x);
    // position first with the old velocity, then velocity with the old position
    for (size_t i = 0; i < st.x.size(); ++i) {
        const double xi = st.x[i];
        st.x[i] = xi + y[i] * sp.eta;
        // the drift is eps * grad H, computed literally as eps * (factor * grad U)
        const double drift = sp.eps * (factor * g[i]);
        if (cfg.kinetic_form == KineticForm::appendix) {
            y[i] += -y[i] * sp.eta - drift * sp.eta +
                    std::sqrt(2.0 * sp.eps) * std::sqrt(sp.eta) * noise[i];
        } else {
            y[i] += -(1.0 / sp.eps) * y[i] * sp.eta - drift * sp.eta +
                    std::sqrt(2.0) * std::sqrt(sp.eta) * noise[i];
        }
    }
    advance_bookkeeping(cfg, p, st);
}

Trajectory simulate(const MethodConfig& cfg, const Potential& p, const Vec& x0,
                    const std::optional<Vec>& y0, long n_steps, NoiseStream& ns,
                    const std::vector<long>& checkpoints) {
    cfg.validate();
    if (static_cast<int>(x0.size()) != p.dim) {
        throw std::invalid_argument("simulate: x0 dimension mismatch");
    }
    const bool kinetic = is_kinetic(cfg.method);
    if (kinetic && (!y0 || static_cast<int>(y0->size()) != p.dim)) {
        throw std::invalid_argument("simulate: kinetic method needs y0 of matching dimension");
    }
    if (!kinetic && y0) {
        throw std::invalid_argument("simulate: overdamped method takes no y0");
    }
    if (ns.dim != p.dim) throw std::invalid_argument("simulate: noise stream dimension mismatch");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
        throw std::invalid_argument("simulate: checkpoints must be sorted");
    }
    if (!checkpoints.empty() && (checkpoints.front() < 0 || checkpoints.back() > n_steps)) {
        throw std::invalid_argument("simulate: checkpoints must lie in [0, n_steps]");
    }

    MethodState st;
    st.x = x0;
    if (kinetic) st.y = *y0;
    st.k = 0;
    st.theta = step_at(cfg.steps, 0);
    st.u = eval(p, x0);
    st.runmin = st.u;
    st.history.record(st.theta, st.u);

    Trajectory traj;
    auto record = [&st, &traj]() {
        traj.checkpoints.push_back({st.k, st.theta, st.x, st.u, st.runmin});
    };
    size_t next_cp = 0;
    while (next_cp < checkpoints.size() && checkpoints[next_cp] == 0) {
        record();
        ++next_cp;
    }

    Vec noise(p.dim);
    Vec prev_x = st.x;  // pre-step snapshot, reused across iterations
    for (long k = 0; k < n_steps; ++k) {
        gaussians_into(ns, k, noise);
        prev_x.assign(st.x.begin(), st.x.end());
        const long prev_k = st.k;
        const double prev_theta = st.theta;
        const double prev_u = st.u;
        const double prev_runmin = st.runmin;
        try {
            if (kinetic) {
                kinetic_step(cfg, p, st, noise);
            } else {
                overdamped_step(cfg, p, st, noise);
            }
        } catch (const divergence_error&) {
            Checkpoint last{prev_k, prev_theta, std::move(prev_x), prev_u, prev_runmin};
            throw divergence_error(k + 1, std::move(last), std::move(traj.checkpoints));
        }
        while (next_cp < checkpoints.size() && checkpoints[next_cp] == st.k) {
            record();
            ++next_cp;
        }
    }
    traj.final_state = std::move(st);
    traj.noise_cursor = ns.cursor;
    return traj;
}

}  // namespace lmsa
