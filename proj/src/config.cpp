#include "lmsa/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lmsa/errors.hpp"

namespace lmsa {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw config_error("key \"" + key + "\": bad number \"" + v + "\"");
    }
    if (pos != v.size()) throw config_error("key \"" + key + "\": bad number \"" + v + "\"");
    return d;
}

long parse_long(const std::string& key, const std::string& v) {
    const double d = parse_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 9e15) {
        throw config_error("key \"" + key + "\": expected an integer, got \"" + v + "\"");
    }
    return static_cast<long>(d);
}

std::vector<double> parse_vec(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw config_error("key \"" + key + "\": empty vector");
    return out;
}

const std::set<std::string> kExperimentKeys = {"potential", "x0",    "y0",          "n_replicas",
                                               "n_steps",   "delta", "base_seed",   "checkpoints",
                                               "out"};
const std::set<std::string> kMethodKeys = {"method",      "modifier",     "adaptive_c", "cooling",
                                           "eta0",        "decay_every",  "decay_factor",
                                           "kinetic_form"};

struct PotentialDefaults {
    Vec x0;
    double eta0;
    double energy;
    double delta;
};

PotentialDefaults defaults_for(const std::string& potential) {
    if (potential == "rastrigin") return {{9.84, 3.33}, 0.5, 0.5, 0.5};
    if (potential == "ackley") return {{18.5, 17.4}, 0.05, 2.0, 0.5};
    if (potential == "ackley3") return {{18.4, 12.8}, 0.05, 2.0, 2.0};
    if (potential == "u0") return {{0.0}, 0.05, 2.0, 0.5};
    throw config_error("unknown potential \"" + potential +
                       "\" (have: ackley, ackley3, rastrigin, u0)");
}

Method method_for_label(const std::string& label) {
    if (label == "SA") return Method::SA;
    if (label == "ISA" || label == "IASA") return Method::ISA;
    if (label == "KSA") return Method::KSA;
    if (label == "IKSA" || label == "IAKSA") return Method::IKSA;
    throw config_error("section [" + label +
                       "]: cannot infer the method from the label; set key \"method\"");
}

}  // namespace

RawConfig RawConfig::from_string(const std::string& text) {
    RawConfig raw;
    std::map<std::string, std::string>* current = &raw.experiment;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw config_error("line " + std::to_string(lineno) + ": unterminated section");
            }
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) {
                throw config_error("line " + std::to_string(lineno) + ": empty section name");
            }
            raw.sections.emplace_back(name, std::map<std::string, std::string>{});
            current = &raw.sections.back().second;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw config_error("line " + std::to_string(lineno) + ": empty key");
        (*current)[key] = value;
    }
    return raw;
}

RawConfig RawConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_string(ss.str());
}

void RawConfig::apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) {
        throw config_error("override \"" + assignment + "\": expected key=value");
    }
    std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    const auto dot = key.find('.');
    if (dot == std::string::npos) {
        experiment[key] = value;
        return;
    }
    const std::string section = key.substr(0, dot);
    key = key.substr(dot + 1);
    for (auto& [name, map] : sections) {
        if (name == section) {
            map[key] = value;
            return;
        }
    }
    sections.emplace_back(section, std::map<std::string, std::string>{{key, value}});
}

ExperimentConfig build_experiment(const RawConfig& raw) {
    for (const auto& [k, v] : raw.experiment) {
        if (!kExperimentKeys.count(k)) {
            throw config_error("unknown experiment key \"" + k + "\"");
        }
    }
    ExperimentConfig cfg;
    auto get = [&](const std::string& k) -> const std::string* {
        const auto it = raw.experiment.find(k);
        return it == raw.experiment.end() ? nullptr : &it->second;
    };
    if (const auto* v = get("potential")) cfg.potential = *v;
    const PotentialDefaults defs = defaults_for(cfg.potential);
    cfg.x0 = defs.x0;
    cfg.delta = defs.delta;
    if (const auto* v = get("x0")) cfg.x0 = parse_vec("x0", *v);
    if (const auto* v = get("y0")) cfg.y0 = parse_vec("y0", *v);
    if (const auto* v = get("n_replicas")) cfg.n_replicas = parse_long("n_replicas", *v);
    if (const auto* v = get("n_steps")) cfg.n_steps = parse_long("n_steps", *v);
    if (const auto* v = get("delta")) cfg.delta = parse_double("delta", *v);
    if (const auto* v = get("base_seed")) {
        cfg.base_seed = static_cast<std::uint64_t>(parse_long("base_seed", *v));
    }

    std::vector<std::pair<std::string, std::map<std::string, std::string>>> sections =
        raw.sections;
    if (sections.empty()) {
        sections = {{"SA", {}}, {"IASA", {}}, {"KSA", {}}, {"IAKSA", {}}};
    }
    for (const auto& [label, keys] : sections) {
        for (const auto& [k, v] : keys) {
            if (!kMethodKeys.count(k)) {
                throw config_error("section [" + label + "]: unknown key \"" + k + "\"");
            }
        }
        auto mget = [&keys = keys](const std::string& k) -> const std::string* {
            const auto it = keys.find(k);
            return it == keys.end() ? nullptr : &it->second;
        };
        LabeledMethod lm;
        lm.label = label;
        lm.cfg.method = mget("method") ? method_parse(*mget("method")) : method_for_label(label);
        const bool improved = lm.cfg.method == Method::ISA || lm.cfg.method == Method::IKSA;
        lm.cfg.modifier =
            improved ? FModifier::scaled_arctan(0.5) : FModifier::zero();
        if (const auto* v = mget("modifier")) lm.cfg.modifier = FModifier::parse(*v);
        lm.cfg.adaptive_c = AdaptiveC::appendix();
        if (const auto* v = mget("adaptive_c")) lm.cfg.adaptive_c = AdaptiveC::parse(*v);
        lm.cfg.cooling = CoolingSchedule::fixed(defs.energy);
        if (const auto* v = mget("cooling")) lm.cfg.cooling = CoolingSchedule::parse(*v);
        lm.cfg.steps = StepSchedule{defs.eta0, 1000, 0.999};
        if (const auto* v = mget("eta0")) lm.cfg.steps.eta0 = parse_double("eta0", *v);
        if (const auto* v = mget("decay_every")) {
            lm.cfg.steps.decay_every = parse_long("decay_every", *v);
        }
        if (const auto* v = mget("decay_factor")) {
            lm.cfg.steps.decay_factor = parse_double("decay_factor", *v);
        }
        if (const auto* v = mget("kinetic_form")) {
            if (*v == "appendix") {
                lm.cfg.kinetic_form = KineticForm::appendix;
            } else if (*v == "theory") {
                lm.cfg.kinetic_form = KineticForm::theory;
            } else {
                throw config_error("section [" + label + "]: kinetic_form must be appendix|theory");
            }
        }
        cfg.methods.push_back(std::move(lm));
    }

    if (const auto* v = get("checkpoints")) {
        const long count = parse_long("checkpoints", *v);
        if (count < 1) throw config_error("key \"checkpoints\": need a positive count");
        cfg.checkpoints = default_checkpoints(cfg, static_cast<int>(count));
    }
    cfg.validate();
    return cfg;
}

std::string config_key_help() {
    return
        "experiment keys (defaults in parentheses; benchmark-dependent marked *):\n"
        "  potential    target function: ackley | ackley3 | rastrigin | u0 (rastrigin)\n"
        "  x0           start position, comma-separated (*benchmark start point)\n"
        "  y0           start velocity for kinetic methods (zeros)\n"
        "  n_replicas   independent replicas per method (100)\n"
        "  n_steps      steps per replica (100000)\n"
        "  delta        failure threshold over the reference minimum (*0.5; ackley3 2.0)\n"
        "  base_seed    seed shared by all methods; replica r uses stream (seed, r) (7)\n"
        "  checkpoints  number of log-spaced checkpoint indices (60)\n"
        "  out          output CSV path (<potential>_curves.csv)\n"
        "method sections [SA] [IASA] [KSA] [IAKSA] (any label; unknown labels need `method`):\n"
        "  method       dynamics: SA | ISA | KSA | IKSA (inferred from the label)\n"
        "  modifier     zero | arctan:<scale> | smoothstep:<M3>:<M4>\n"
        "               (zero for SA/KSA, arctan:0.5 for ISA/IKSA)\n"
        "  adaptive_c   fixed:<c> | appendix | mollified:<n>:<delta1> (appendix)\n"
        "  cooling      fixed:<E>[:<offset>] | adaptive:<delta2>:<n> (fixed:*E:2; E 2,\n"
        "               rastrigin 0.5)\n"
        "  eta0         initial stepsize (*0.05; rastrigin 0.5)\n"
        "  decay_every  steps between stepsize decays (1000)\n"
        "  decay_factor multiplicative stepsize decay (0.999)\n"
        "  kinetic_form appendix | theory (appendix; kinetic methods only)\n";
}

std::string default_out_name(const ExperimentConfig& cfg) {
    return cfg.potential + "_curves.csv";
}

}  // namespace lmsa
