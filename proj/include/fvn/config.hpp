#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fvn/kessence.hpp"
#include "fvn/kink.hpp"
#include "fvn/nucleation.hpp"
#include "fvn/potential.hpp"

namespace fvn {

// Full parameter set of one CLI run. Overridable through a plain-text config
// file of `key = value` lines (`#` comments, dotted keys) and `--set` flags;
// flags win over file values.
struct RunConfig {
    PotentialParams potential;
    KinkProfile kink;
    KEssenceModel kessence;
    NucleationInputs nucleation;
    int grid_points = 2001;  // must be odd and >= 3 so symmetric grids hit x = 0
    double flatness_threshold = 0.15;
    std::string output_dir = "out";

    void validate() const;  // throws std::invalid_argument
};

// All dotted config keys, in a fixed order.
const std::vector<std::string>& config_keys();

// Read/write one key by name. Both throw std::invalid_argument for unknown
// keys or unparseable values.
double get_config_value(const RunConfig& cfg, std::string_view key);
void apply_key_value(RunConfig& cfg, std::string_view key, std::string_view value);

// Splits "key=value" and applies it.
void apply_set_flag(RunConfig& cfg, std::string_view keyval);

// Applies every assignment in a config file. Throws fvn::io_error when the
// file cannot be read, std::invalid_argument on parse errors.
void apply_config_file(RunConfig& cfg, const std::string& path);

// One line per key with its default, for --help output.
std::string config_keys_help();

}  // namespace fvn
