#include "lmsa/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lmsa/errors.hpp"
#include "lmsa/quadrature.hpp"

namespace lmsa {

namespace {

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
}

double parse_num(const std::string& spec, const std::string& s) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw config_error("spec \"" + spec + "\": bad number \"" + s + "\"");
    }
    if (pos != s.size()) throw config_error("spec \"" + spec + "\": bad number \"" + s + "\"");
    return v;
}

}  // namespace

double step_at(const StepSchedule& s, long k) {
    if (k < 0) throw std::invalid_argument("step_at: negative step index");
    if (s.eta0 <= 0.0 || s.decay_every <= 0 || s.decay_factor <= 0.0 || s.decay_factor > 1.0) {
        throw config_error("step schedule: need eta0 > 0, decay_every > 0, decay_factor in (0,1]");
    }
    return s.eta0 * std::pow(s.decay_factor, static_cast<double>(k / s.decay_every));
}

CoolingSchedule CoolingSchedule::fixed(double E, double offset) {
    if (E <= 0.0) throw config_error("cooling fixed: energy must be positive");
    CoolingSchedule c;
    c.kind = Kind::fixed_energy;
    c.E = E;
    c.offset = offset;
    return c;
}

CoolingSchedule CoolingSchedule::adaptive(double delta2, int n, double offset) {
    if (delta2 <= 0.0) throw config_error("cooling adaptive: delta2 must be positive");
    if (n <= 0) throw config_error("cooling adaptive: n must be a positive integer");
    CoolingSchedule c;
    c.kind = Kind::adaptive_energy;
    c.delta2 = delta2;
    c.n = n;
    c.offset = offset;
    return c;
}

CoolingSchedule CoolingSchedule::parse(const std::string& spec) {
    const auto parts = split_colon(spec);
    if (parts.size() >= 2 && parts[0] == "fixed") {
        const double E = parse_num(spec, parts[1]);
        if (parts.size() == 2) return fixed(E);
        if (parts.size() == 3) return fixed(E, parse_num(spec, parts[2]));
    }
    if (parts.size() == 3 && parts[0] == "adaptive") {
        const double d2 = parse_num(spec, parts[1]);
        const double n = parse_num(spec, parts[2]);
        if (n != std::floor(n)) throw config_error("spec \"" + spec + "\": n must be an integer");
        return adaptive(d2, static_cast<int>(n));
    }
    throw config_error("bad cooling spec \"" + spec +
                       "\" (want fixed:<E>[:<offset>] | adaptive:<delta2>:<n>)");
}

std::string CoolingSchedule::to_string() const {
    std::ostringstream os;
    if (kind == Kind::fixed_energy) {
        os << "fixed:" << E << ":" << offset;
    } else {
        os << "adaptive:" << delta2 << ":" << n;
    }
    return os.str();
}

double epsilon_at(const CoolingSchedule& c, double theta, std::optional<double> energy_override) {
    if (theta + c.offset <= 1.0) {
        throw std::invalid_argument("epsilon_at: theta + offset must exceed 1 (got theta=" +
                                    std::to_string(theta) + ", offset=" + std::to_string(c.offset) +
                                    ")");
    }
    const double denom = std::log(theta + c.offset);
    if (c.kind == CoolingSchedule::Kind::fixed_energy) {
        return c.E / denom;
    }
    if (!energy_override || *energy_override <= 0.0) {
        throw std::invalid_argument("epsilon_at: adaptive cooling needs a positive energy override");
    }
    return *energy_override / denom;
}

AdaptiveC AdaptiveC::fixed(double c) {
    AdaptiveC a;
    a.kind = Kind::fixed;
    a.c = c;
    return a;
}

AdaptiveC AdaptiveC::appendix() {
    AdaptiveC a;
    a.kind = Kind::appendix;
    return a;
}

AdaptiveC AdaptiveC::mollified(int n, double delta1) {
    if (n <= 0) throw config_error("adaptive_c mollified: n must be a positive integer");
    if (delta1 < 0.0) throw config_error("adaptive_c mollified: delta1 must be nonnegative");
    AdaptiveC a;
    a.kind = Kind::mollified;
    a.n = n;
    a.delta1 = delta1;
    return a;
}

AdaptiveC AdaptiveC::parse(const std::string& spec) {
    if (spec == "appendix") return appendix();
    const auto parts = split_colon(spec);
    if (parts.size() == 2 && parts[0] == "fixed") return fixed(parse_num(spec, parts[1]));
    if (parts.size() == 3 && parts[0] == "mollified") {
        const double n = parse_num(spec, parts[1]);
        if (n != std::floor(n)) throw config_error("spec \"" + spec + "\": n must be an integer");
        return mollified(static_cast<int>(n), parse_num(spec, parts[2]));
    }
    throw config_error("bad adaptive_c spec \"" + spec +
                       "\" (want fixed:<c> | appendix | mollified:<n>:<delta1>)");
}

std::string AdaptiveC::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::fixed: os << "fixed:" << c; break;
        case Kind::appendix: os << "appendix"; break;
        case Kind::mollified: os << "mollified:" << n << ":" << delta1; break;
    }
    return os.str();
}

void RunMinHistory::record(double theta, double value) {
    if (times.empty()) {
        times.push_back(theta);
        mins.push_back(value);
        return;
    }
    if (value >= mins.back()) return;  // keep only strict improvements
    if (theta <= times.back()) {
        throw std::invalid_argument("RunMinHistory: times must strictly increase");
    }
    times.push_back(theta);
    mins.push_back(value);
}

double RunMinHistory::value_at(double t) const {
    if (times.empty()) throw std::invalid_argument("RunMinHistory: empty history");
    // last sample with time <= t; constant extension on both ends
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return mins.front();
    return mins[static_cast<size_t>(it - times.begin()) - 1];
}

double RunMinHistory::current() const {
    if (mins.empty()) throw std::invalid_argument("RunMinHistory: empty history");
    return mins.back();
}

double c_next(const AdaptiveC& a, double runmin, double theta) {
    switch (a.kind) {
        case AdaptiveC::Kind::fixed: return a.c;
        case AdaptiveC::Kind::appendix:
            if (theta < 0.0) throw std::invalid_argument("c_next: theta must be nonnegative");
            return runmin + 1.0 / (theta + 1.0);
        case AdaptiveC::Kind::mollified:
            throw std::invalid_argument("c_next: mollified rule needs the full history");
    }
    throw std::invalid_argument("c_next: bad kind");
}

double c_next(const AdaptiveC& a, const RunMinHistory& h, double theta) {
    if (a.kind == AdaptiveC::Kind::mollified) return mollified_runmin(h, a.n, 1, theta);
    if (a.kind == AdaptiveC::Kind::fixed) return a.c;
    return c_next(a, h.current(), theta);
}

namespace {

double phi_unnormalized(double x) {
    if (x <= -1.0 || x >= 1.0) return 0.0;
    return std::exp(1.0 / (x * x - 1.0));
}

double phi_normalizer() {
    static const double z =
        integrate([](double y) { return phi_unnormalized(y); }, -1.0, 1.0, 1e-12, 60);
    return z;
}

}  // namespace

double mollifier_phi(double x) { return phi_unnormalized(x) / phi_normalizer(); }

double mollified_runmin(const RunMinHistory& h, int n, int lag_steps, double t) {
    if (h.empty()) throw std::invalid_argument("mollified_runmin: empty history");
    if (n <= 0 || lag_steps <= 0) {
        throw std::invalid_argument("mollified_runmin: n and lag_steps must be positive");
    }
    const double bw = 1.0 / n;
    const double lag = static_cast<double>(lag_steps) / n;
    const double lo = t - bw;
    const double hi = t + bw;

    // The integrand is M_{(u-lag)+} * phi_{1/n}(t-u): piecewise constant in M
    // with jumps exactly at u = time_j + lag. Splitting there makes each
    // segment M_j * (kernel mass), so after normalizing by the total computed
    // mass the result is a convex combination of history values.
    std::vector<double> cuts{lo};
    for (double tj : h.times) {
        const double u = tj + lag;
        if (u > lo && u < hi) cuts.push_back(u);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    const double seg_tol = 1e-9 / static_cast<double>(cuts.size());
    double acc = 0.0;
    double mass = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        if (b <= a) continue;
        const double w = integrate(
            [n, t](double u) { return n * mollifier_phi(n * (t - u)); }, a, b, seg_tol, 60);
        const double mid = 0.5 * (a + b);
        const double m = h.value_at(std::max(mid - lag, 0.0));
        acc += m * w;
        mass += w;
    }
    if (mass <= 0.0) {
        throw numeric_error("mollified_runmin: kernel mass vanished", acc);
    }
    return acc / mass;
}

double energy_level_at(const RunMinHistory& h, int n, double delta2, double u_min, double t) {
    if (delta2 <= 0.0) throw std::invalid_argument("energy_level_at: delta2 must be positive");
    return mollified_runmin(h, n, 3, t) - u_min + delta2;
}

}  // namespace lmsa
