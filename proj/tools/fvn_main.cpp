// fvn: false-vacuum / k-essence toolkit CLI. Every subcommand evaluates one
// family of quantities over the configured parameter set and writes CSV files
// into the output directory.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fvn/config.hpp"
#include "fvn/errors.hpp"
#include "fvn/report.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> sets;
};

const char* command_summary(const std::string& name) {
    if (name == "landscape") return "Potential landscape and vacuum solution (landscape.csv, vacua.csv)";
    if (name == "profile") return "Kink-antikink wall profile and kinetic density (profile.csv)";
    if (name == "kessence") return "Equation of state and sound speed across the wall (eos.csv)";
    if (name == "slowroll") return "Slow-roll diagnostics at the vacua, barrier and phi_star (slowroll.csv)";
    if (name == "rates") return "Nucleation rates and tunneling matrix elements (rates.csv)";
    if (name == "audit") return "Consistency audit of the published values (audit.csv)";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fvn: false-vacuum nucleation and k-essence numerical toolkit"};
    app.require_subcommand(1);

    CliArgs args;
    for (const std::string& name : fvn::report::command_names()) {
        CLI::App* sub = app.add_subcommand(name, command_summary(name));
        sub->add_option("--config", args.config_path, "Config file of key = value lines");
        sub->add_option("--set", args.sets, "Override one key (key=value), repeatable")
            ->take_all();
        sub->add_option("--out", args.out_dir, "Output directory (default: out)");
        sub->footer(fvn::config_keys_help());
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    fvn::RunConfig cfg;
    try {
        if (!args.config_path.empty()) fvn::apply_config_file(cfg, args.config_path);
        for (const std::string& kv : args.sets) fvn::apply_set_flag(cfg, kv);
        if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
    } catch (const fvn::io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    return fvn::report::run_command(app.get_subcommands().front()->get_name(), cfg);
}
