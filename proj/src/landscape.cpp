#include "lmsa/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lmsa/errors.hpp"
#include "lmsa/quadrature.hpp"

namespace lmsa {

namespace {

constexpr double kHTol = 1e-10;
constexpr int kHDepth = 60;

// Quintic smoothstep: s(0)=s'(0)=s''(0)=0, s(1)=1, s'(1)=s''(1)=0.
double smoothstep(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double smoothstep_prime(double t) {
    const double u = t * (1.0 - t);
    return 30.0 * u * u;
}

}  // namespace

FModifier FModifier::zero() { return {}; }

FModifier FModifier::scaled_arctan(double a) {
    if (a <= 0.0) throw config_error("modifier arctan: scale must be positive");
    FModifier m;
    m.kind = Kind::scaled_arctan;
    m.a = a;
    // f'(u) = a/(1+u^2) approaches a as u -> 0+ and only decreases after.
    m.M5 = a;
    return m;
}

FModifier FModifier::capped_smoothstep(double M3, double M4) {
    if (M3 <= 0.0 || M4 <= 0.0) throw config_error("modifier smoothstep: M3, M4 must be positive");
    FModifier m;
    m.kind = Kind::capped_smoothstep;
    m.M3 = M3;
    m.M4 = M4;
    // sup s' = s'(1/2) = 15/8 on [0,1], scaled by M4/M3.
    m.M5 = 1.875 * M4 / M3;
    return m;
}

FModifier FModifier::parse(const std::string& spec) {
    if (spec == "zero") return zero();
    auto split = [&](const std::string& s) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        return parts;
    };
    auto to_double = [&](const std::string& s) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw config_error("modifier spec \"" + spec + "\": bad number \"" + s + "\"");
        }
        if (pos != s.size()) {
            throw config_error("modifier spec \"" + spec + "\": bad number \"" + s + "\"");
        }
        return v;
    };
    const auto parts = split(spec);
    if (parts.size() == 2 && parts[0] == "arctan") return scaled_arctan(to_double(parts[1]));
    if (parts.size() == 3 && parts[0] == "smoothstep") {
        return capped_smoothstep(to_double(parts[1]), to_double(parts[2]));
    }
    throw config_error("bad modifier spec \"" + spec +
                       "\" (want zero | arctan:<scale> | smoothstep:<M3>:<M4>)");
}

std::string FModifier::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::zero: os << "zero"; break;
        case Kind::scaled_arctan: os << "arctan:" << a; break;
        case Kind::capped_smoothstep: os << "smoothstep:" << M3 << ":" << M4; break;
    }
    return os.str();
}

double f_eval(const FModifier& m, double u) {
    if (u <= 0.0) return 0.0;
    switch (m.kind) {
        case FModifier::Kind::zero: return 0.0;
        case FModifier::Kind::scaled_arctan: return m.a * std::atan(u);
        case FModifier::Kind::capped_smoothstep:
            if (u >= m.M3) return m.M4;
            return m.M4 * smoothstep(u / m.M3);
    }
    return 0.0;
}

double f_prime(const FModifier& m, double u) {
    if (u <= 0.0) return 0.0;
    switch (m.kind) {
        case FModifier::Kind::zero: return 0.0;
        case FModifier::Kind::scaled_arctan: return m.a / (1.0 + u * u);
        case FModifier::Kind::capped_smoothstep:
            if (u >= m.M3) return 0.0;
            return m.M4 / m.M3 * smoothstep_prime(u / m.M3);
    }
    return 0.0;
}

double drift_factor(const FModifier& m, double c, double epsilon, double u) {
    if (epsilon <= 0.0) throw std::invalid_argument("drift_factor: epsilon must be positive");
    const double up = std::max(u - c, 0.0);
    return (1.0 + f_prime(m, up)) / (f_eval(m, up) + epsilon);
}

Vec modified_drift(const ModifiedLandscape& L, const Vec& x) {
    const double u = eval(*L.potential, x);
    const double factor = drift_factor(L.modifier, L.c, L.epsilon, u);
    Vec g = grad(*L.potential, x);
    for (double& gi : g) gi *= factor;
    return g;
}

double h_eval(const ModifiedLandscape& L, const Vec& x) {
    const double u = eval(*L.potential, x);
    const double eps = L.epsilon;
    if (eps <= 0.0) throw std::invalid_argument("h_eval: epsilon must be positive");
    const double lo = L.potential->u_min;
    const double log_term = std::log(f_eval(L.modifier, std::max(u - L.c, 0.0)) + eps);
    if (u <= L.c || L.modifier.kind == FModifier::Kind::zero) {
        // integrand is the constant 1/eps on the whole (possibly inverted) range
        return (u - lo) / eps + log_term;
    }
    // Exact part over [lo, c] where f((u-c)+) = 0; quadrature above c.
    double a = lo;
    double exact = 0.0;
    if (L.c > lo) {
        exact = (L.c - lo) / eps;
        a = L.c;
    }
    const FModifier m = L.modifier;
    const double c = L.c;
    const double tail = integrate(
        [m, c, eps](double v) { return 1.0 / (f_eval(m, v - c) + eps); }, a, u, kHTol, kHDepth);
    return exact + tail + log_term;
}

std::vector<LandscapeRow> landscape_grid(const ModifiedLandscape& L,
                                         const std::vector<double>& xs) {
    if (L.potential->dim != 1) {
        throw std::invalid_argument("landscape_grid: requires a 1D potential");
    }
    std::vector<LandscapeRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        const Vec p{x};
        rows.push_back({x, eval(*L.potential, p), h_eval(L, p)});
    }
    return rows;
}

}  // namespace lmsa
