#pragma once

#include <map>
#include <string>
#include <vector>

#include "lmsa/harness.hpp"

namespace lmsa {

// Flat key=value config with one [SECTION] per method. Lines are
// "key = value", '#' starts a comment. Unknown keys are rejected.
struct RawConfig {
    std::map<std::string, std::string> experiment;               // section-less keys
    std::vector<std::pair<std::string,
                          std::map<std::string, std::string>>> sections;  // in file order

    static RawConfig from_file(const std::string& path);
    static RawConfig from_string(const std::string& text);

    // "key=value" -> experiment key; "SECTION.key=value" -> section key.
    void apply_override(const std::string& assignment);
};

// Materializes an ExperimentConfig. Defaults depend on the potential (start
// point, stepsize and energy follow the benchmark setups); a config without
// method sections gets the four standard methods SA, IASA, KSA, IAKSA.
ExperimentConfig build_experiment(const RawConfig& raw);

// Key -> default documentation, printed by --help.
std::string config_key_help();

// Default output file name for an experiment ("<potential>_curves.csv"),
// before the output-directory environment variable is applied.
std::string default_out_name(const ExperimentConfig& cfg);

}  // namespace lmsa
