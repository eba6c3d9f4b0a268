#include "fvn/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "fvn/errors.hpp"

namespace fvn {

void RunConfig::validate() const {
    potential.validate();
    kink.validate();
    kessence.validate();
    nucleation.validate();
    if (grid_points < 3 || grid_points % 2 == 0) {
        throw std::invalid_argument("run.grid_points must be odd and >= 3");
    }
    if (!(flatness_threshold > 0.0)) {
        throw std::invalid_argument("run.flatness_threshold must be > 0");
    }
    if (output_dir.empty()) {
        throw std::invalid_argument("output directory must not be empty");
    }
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "potential.m",
        "potential.phi_star",
        "potential.cos_coeff",
        "potential.rho_init",
        "kink.length_L",
        "kink.steepness_b",
        "kessence.f0",
        "kessence.f2",
        "kessence.x0",
        "kessence.eps0",
        "kessence.v0",
        "nucleation.prefactor_A",
        "nucleation.s_bounce",
        "nucleation.m_field",
        "nucleation.mass_M",
        "nucleation.e_charge",
        "nucleation.e_field_E0",
        "nucleation.hubble_H",
        "nucleation.s_euclid",
        "nucleation.alpha_gap",
        "nucleation.x_vantage",
        "nucleation.length_L",
        "run.grid_points",
        "run.flatness_threshold",
        "run.output_dir",
    };
    return keys;
}

namespace {

double* numeric_slot(RunConfig& cfg, std::string_view key) {
    if (key == "potential.m") return &cfg.potential.m;
    if (key == "potential.phi_star") return &cfg.potential.phi_star;
    if (key == "potential.cos_coeff") return &cfg.potential.cos_coeff;
    if (key == "potential.rho_init") return &cfg.potential.rho_init;
    if (key == "kink.length_L") return &cfg.kink.length_L;
    if (key == "kink.steepness_b") return &cfg.kink.steepness_b;
    if (key == "kessence.f0") return &cfg.kessence.f0;
    if (key == "kessence.f2") return &cfg.kessence.f2;
    if (key == "kessence.x0") return &cfg.kessence.x0;
    if (key == "kessence.eps0") return &cfg.kessence.eps0;
    if (key == "kessence.v0") return &cfg.kessence.v0;
    if (key == "nucleation.prefactor_A") return &cfg.nucleation.prefactor_A;
    if (key == "nucleation.s_bounce") return &cfg.nucleation.s_bounce;
    if (key == "nucleation.m_field") return &cfg.nucleation.m_field;
    if (key == "nucleation.mass_M") return &cfg.nucleation.mass_M;
    if (key == "nucleation.e_charge") return &cfg.nucleation.e_charge;
    if (key == "nucleation.e_field_E0") return &cfg.nucleation.e_field_E0;
    if (key == "nucleation.hubble_H") return &cfg.nucleation.hubble_H;
    if (key == "nucleation.s_euclid") return &cfg.nucleation.s_euclid;
    if (key == "nucleation.alpha_gap") return &cfg.nucleation.alpha_gap;
    if (key == "nucleation.x_vantage") return &cfg.nucleation.x_vantage;
    if (key == "nucleation.length_L") return &cfg.nucleation.length_L;
    if (key == "run.flatness_threshold") return &cfg.flatness_threshold;
    return nullptr;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view key, std::string_view value) {
    const std::string buf(value);
    if (buf.empty()) {
        throw std::invalid_argument("config: empty value for '" + std::string(key) + "'");
    }
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) {
        throw std::invalid_argument("config: cannot parse value '" + buf + "' for '" +
                                    std::string(key) + "'");
    }
    return v;
}

}  // namespace

double get_config_value(const RunConfig& cfg, std::string_view key) {
    // numeric_slot only reads here; the cast never mutates cfg
    if (const double* slot = numeric_slot(const_cast<RunConfig&>(cfg), key)) return *slot;
    if (key == "run.grid_points") return static_cast<double>(cfg.grid_points);
    throw std::invalid_argument("config: unknown or non-numeric key '" + std::string(key) + "'");
}

void apply_key_value(RunConfig& cfg, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "run.output_dir") {
        cfg.output_dir = std::string(value);
        return;
    }
    if (key == "run.grid_points") {
        const double v = parse_double(key, value);
        const long n = static_cast<long>(v);
        if (static_cast<double>(n) != v) {
            throw std::invalid_argument("config: run.grid_points must be an integer");
        }
        cfg.grid_points = static_cast<int>(n);
        return;
    }
    double* slot = numeric_slot(cfg, key);
    if (slot == nullptr) {
        throw std::invalid_argument("config: unknown key '" + std::string(key) + "'");
    }
    *slot = parse_double(key, value);
}

void apply_set_flag(RunConfig& cfg, std::string_view keyval) {
    const std::size_t eq = keyval.find('=');
    if (eq == std::string_view::npos) {
        throw std::invalid_argument("--set expects key=value, got '" + std::string(keyval) + "'");
    }
    apply_key_value(cfg, keyval.substr(0, eq), keyval.substr(eq + 1));
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open config file '" + path + "'");
    }
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string_view stripped = trim(line);
        if (stripped.empty()) continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("config: line " + std::to_string(line_no) + " of '" +
                                        path + "' is not a key = value assignment");
        }
        apply_key_value(cfg, stripped.substr(0, eq), stripped.substr(eq + 1));
    }
}

std::string config_keys_help() {
    const RunConfig defaults;
    std::string out = "Config keys (file `key = value` lines or --set key=value):\n";
    for (const std::string& key : config_keys()) {
        out += "  " + key + " = ";
        if (key == "run.output_dir") {
            out += defaults.output_dir;
        } else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.15g", get_config_value(defaults, key));
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace fvn
