#include "lmsa/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lmsa/config.hpp"
#include "lmsa/critheight.hpp"
#include "lmsa/errors.hpp"
#include "lmsa/format.hpp"
#include "lmsa/gibbs.hpp"
#include "lmsa/harness.hpp"
#include "lmsa/landscape.hpp"

namespace lmsa {

namespace {

// Relative output paths land in $LMSA_OUT_DIR when it is set.
std::string resolve_out(const std::string& name) {
    if (name.empty()) throw config_error("output path is empty");
    if (name.front() == '/') return name;
    const char* dir = std::getenv("LMSA_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return name;
    std::string d = dir;
    if (d.back() != '/') d += '/';
    return d + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open \"" + path + "\" for writing");
    f << text;
    if (!f) throw io_error("write to \"" + path + "\" failed");
}

std::vector<double> linspace(double lo, double hi, long points) {
    if (points < 2) throw config_error("grid needs at least 2 points");
    if (!(lo < hi)) throw config_error("grid range is empty");
    std::vector<double> xs(static_cast<std::size_t>(points));
    for (long i = 0; i < points; ++i)
        xs[static_cast<std::size_t>(i)] =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    return xs;
}

const Potential& potential_1d(const std::string& name) {
    const Potential& p = potential_by_name(name);
    if (p.dim != 1)
        throw config_error("potential \"" + name + "\" is " + std::to_string(p.dim) +
                           "-dimensional; this command needs a 1D potential");
    return p;
}

struct ExperimentArgs {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
};

void add_experiment_options(CLI::App* sub, ExperimentArgs& a) {
    sub->add_option("-c,--config", a.config_path, "Config file (key = value, one [SECTION] per method)");
    sub->add_option("-s,--set", a.overrides,
                    "Override \"key=value\" or \"SECTION.key=value\"; repeatable");
    sub->add_option("-o,--out", a.out_path, "Output CSV path (overrides the config's out key)");
    sub->footer(config_key_help());
}

std::vector<ProbabilityCurve> run_configured(const ExperimentArgs& a, ExperimentConfig& cfg,
                                             std::string& out_path) {
    RawConfig raw;
    if (!a.config_path.empty()) raw = RawConfig::from_file(a.config_path);
    for (const auto& s : a.overrides) raw.apply_override(s);
    cfg = build_experiment(raw);
    out_path = a.out_path;
    if (out_path.empty()) {
        auto it = raw.experiment.find("out");
        out_path = it != raw.experiment.end() ? it->second : default_out_name(cfg);
    }
    out_path = resolve_out(out_path);
    return run_experiment(cfg);
}

int cmd_run(const ExperimentArgs& a, std::ostream& out) {
    ExperimentConfig cfg;
    std::string path;
    auto curves = run_configured(a, cfg, path);
    write_csv(curves, path);
    out << "wrote " << path << "\n";
    return 0;
}

int cmd_compare(const ExperimentArgs& a, std::ostream& out) {
    ExperimentConfig cfg;
    std::string path;
    auto curves = run_configured(a, cfg, path);
    write_csv(curves, path);
    out << "wrote " << path << "\n";
    out << "method,final_p_inst,final_p_runmin\n";
    auto sorted = curves;
    std::sort(sorted.begin(), sorted.end(),
              [](const ProbabilityCurve& x, const ProbabilityCurve& y) { return x.method < y.method; });
    for (const auto& c : sorted) {
        const CurveRow& last = c.rows.back();
        out << c.method << "," << format_g17(last.p_inst) << "," << format_g17(last.p_runmin)
            << "\n";
    }
    return 0;
}

struct LandscapeArgs {
    std::string potential = "u0";
    std::string modifier = "arctan:1";
    double c = -1.5;
    double epsilon = 0.5;
    long points = 2001;
    std::optional<double> lo, hi;
    std::string out_path;
};

int cmd_landscape(const LandscapeArgs& a, std::ostream& out) {
    const Potential& p = potential_1d(a.potential);
    ModifiedLandscape L{&p, FModifier::parse(a.modifier), a.c, a.epsilon};
    double lo = a.lo.value_or(p.box.at(0).first);
    double hi = a.hi.value_or(p.box.at(0).second);
    auto rows = landscape_grid(L, linspace(lo, hi, a.points));
    std::string text = "x,u,h\n";
    for (const auto& r : rows)
        text += format_g17(r.x) + "," + format_g17(r.u) + "," + format_g17(r.h) + "\n";
    std::string path =
        resolve_out(a.out_path.empty() ? a.potential + "_landscape.csv" : a.out_path);
    write_text(path, text);
    out << "wrote " << path << "\n";
    return 0;
}

struct CritArgs {
    std::string csv_path;
    std::string potential;
    long points = 4001;
    double c = 1e300;
    double delta1 = 0.0;
};

// Two numeric columns "x,U"; an optional single header line is skipped.
Grid1D read_grid_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw io_error("cannot open \"" + path + "\"");
    Grid1D g;
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string xs, us, extra;
        if (!std::getline(ss, xs, ',') || !std::getline(ss, us, ','))
            throw config_error(path + ":" + std::to_string(lineno) + ": need two columns \"x,U\"");
        if (std::getline(ss, extra, ','))
            throw config_error(path + ":" + std::to_string(lineno) + ": more than two columns");
        char* endx = nullptr;
        char* endu = nullptr;
        double x = std::strtod(xs.c_str(), &endx);
        double u = std::strtod(us.c_str(), &endu);
        bool ok = endx != xs.c_str() && *endx == '\0' && endu != us.c_str() && *endu == '\0';
        if (!ok) {
            if (lineno == 1 && g.xs.empty()) continue;  // header
            throw config_error(path + ":" + std::to_string(lineno) + ": not numeric: " + line);
        }
        g.xs.push_back(x);
        g.us.push_back(u);
    }
    if (g.xs.empty()) throw config_error(path + ": no data rows");
    return g;
}

int cmd_critheight(const CritArgs& a, std::ostream& out) {
    Grid1D g;
    if (!a.csv_path.empty()) {
        g = read_grid_csv(a.csv_path);
    } else if (!a.potential.empty()) {
        const Potential& p = potential_1d(a.potential);
        g.xs = linspace(p.box.at(0).first, p.box.at(0).second, a.points);
        g.us.reserve(g.xs.size());
        for (double x : g.xs) g.us.push_back(eval(p, {x}));
    } else {
        throw config_error("need either --csv or --potential");
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw config_error(std::string("bad grid: ") + e.what());
    }
    CritResult e = critical_height_detail(g);
    CritResult cs = clipped_critical_height_detail(g, a.c, a.delta1);
    out << "E_* = " << format_g17(e.value) << "  between x = " << format_g17(g.xs[e.i])
        << " and x = " << format_g17(g.xs[e.j]) << "\n";
    out << "c_* = " << format_g17(cs.value) << "  between x = " << format_g17(g.xs[cs.i])
        << " and x = " << format_g17(g.xs[cs.j]) << "  (c = " << format_g17(a.c)
        << ", delta1 = " << format_g17(a.delta1) << ")\n";
    return 0;
}

struct StationaryArgs {
    std::string potential = "u0";
    std::string modifier = "arctan:1";
    double c = -1.5;
    double epsilon = 0.5;
    double delta = 0.3;
    long points = 4001;
    std::optional<double> lo, hi;
    std::string out_path;
};

int cmd_stationary(const StationaryArgs& a, std::ostream& out) {
    const Potential& p = potential_1d(a.potential);
    FModifier m = FModifier::parse(a.modifier);
    double lo = a.lo.value_or(p.box.at(0).first);
    double hi = a.hi.value_or(p.box.at(0).second);
    DensityGrid d = density_1d(p, m, a.c, a.epsilon, linspace(lo, hi, a.points));
    std::string text = "x,u,h,mu\n";
    for (std::size_t i = 0; i < d.grid.xs.size(); ++i)
        text += format_g17(d.grid.xs[i]) + "," + format_g17(d.grid.us[i]) + "," +
                format_g17(d.hs[i]) + "," + format_g17(d.weights[i]) + "\n";
    std::string path =
        resolve_out(a.out_path.empty() ? a.potential + "_stationary.csv" : a.out_path);
    write_text(path, text);
    out << "wrote " << path << "\n";
    out << "tail_mass(delta = " << format_g17(a.delta)
        << ") = " << format_g17(tail_mass(d, p, a.delta)) << "\n";
    return 0;
}

std::string names_joined() {
    std::string s;
    for (const auto& n : potential_names()) {
        if (!s.empty()) s += ", ";
        s += n;
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Langevin simulated-annealing toolbox: replica experiments, modified-landscape "
                 "exports, critical heights, stationary densities"};
    app.require_subcommand(1);
    app.footer("Relative output paths are placed under $LMSA_OUT_DIR when it is set.");

    ExperimentArgs run_a;
    CLI::App* run_cmd = app.add_subcommand("run", "Run the configured experiment, write the curves CSV");
    add_experiment_options(run_cmd, run_a);

    ExperimentArgs cmp_a;
    CLI::App* cmp_cmd = app.add_subcommand(
        "compare", "Run the configured experiment, write the CSV, print final probabilities per method");
    add_experiment_options(cmp_cmd, cmp_a);

    LandscapeArgs land_a;
    CLI::App* land_cmd =
        app.add_subcommand("landscape", "Export x,u,h over a 1D grid (original and modified landscape)");
    land_cmd->add_option("-p,--potential", land_a.potential, "1D potential (" + names_joined() + ")")
        ->capture_default_str();
    land_cmd->add_option("-m,--modifier", land_a.modifier, "zero | arctan:<a> | smoothstep:<M3>:<M4>")
        ->capture_default_str();
    land_cmd->add_option("-c", land_a.c, "Modification level c")->capture_default_str();
    land_cmd->add_option("-e,--epsilon", land_a.epsilon, "Temperature epsilon")->capture_default_str();
    land_cmd->add_option("-n,--points", land_a.points, "Grid points")->capture_default_str();
    land_cmd->add_option("--lo", land_a.lo, "Grid lower end (default: potential box)");
    land_cmd->add_option("--hi", land_a.hi, "Grid upper end (default: potential box)");
    land_cmd->add_option("-o,--out", land_a.out_path, "Output CSV (default <potential>_landscape.csv)");

    CritArgs crit_a;
    CLI::App* crit_cmd = app.add_subcommand(
        "critheight", "Largest barrier to a global minimum on a 1D grid, plain and clipped at c");
    CLI::Option* crit_csv =
        crit_cmd->add_option("--csv", crit_a.csv_path, "Two-column CSV \"x,U\" with the grid");
    crit_cmd->add_option("-p,--potential", crit_a.potential, "1D potential to sample instead of --csv")
        ->excludes(crit_csv);
    crit_cmd->add_option("-n,--points", crit_a.points, "Grid points with --potential")
        ->capture_default_str();
    crit_cmd->add_option("-c", crit_a.c, "Clip level (default: clipping inactive)")
        ->capture_default_str();
    crit_cmd->add_option("--delta1", crit_a.delta1, "Path-clip slack above c")->capture_default_str();

    StationaryArgs stat_a;
    CLI::App* stat_cmd = app.add_subcommand(
        "stationary", "Export x,u,h,mu for the fixed-temperature stationary law; print the tail mass");
    stat_cmd->add_option("-p,--potential", stat_a.potential, "1D potential (" + names_joined() + ")")
        ->capture_default_str();
    stat_cmd->add_option("-m,--modifier", stat_a.modifier, "zero | arctan:<a> | smoothstep:<M3>:<M4>")
        ->capture_default_str();
    stat_cmd->add_option("-c", stat_a.c, "Modification level c")->capture_default_str();
    stat_cmd->add_option("-e,--epsilon", stat_a.epsilon, "Temperature epsilon")->capture_default_str();
    stat_cmd->add_option("-d,--delta", stat_a.delta, "Tail threshold above the minimum")
        ->capture_default_str();
    stat_cmd->add_option("-n,--points", stat_a.points, "Grid points")->capture_default_str();
    stat_cmd->add_option("--lo", stat_a.lo, "Grid lower end (default: potential box)");
    stat_cmd->add_option("--hi", stat_a.hi, "Grid upper end (default: potential box)");
    stat_cmd->add_option("-o,--out", stat_a.out_path, "Output CSV (default <potential>_stationary.csv)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd) return cmd_run(run_a, out);
        if (*cmp_cmd) return cmd_compare(cmp_a, out);
        if (*land_cmd) return cmd_landscape(land_a, out);
        if (*crit_cmd) return cmd_critheight(crit_a, out);
        return cmd_stationary(stat_a, out);
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        err << "numeric error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lmsa
