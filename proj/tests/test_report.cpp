#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fvn/config.hpp"
#include "fvn/errors.hpp"
#include "fvn/report.hpp"

using namespace fvn;
using doctest::Approx;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& tag) {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("fvn_test_" + tag + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        const auto it = std::find(header.begin(), header.end(), name);
        REQUIRE(it != header.end());
        return static_cast<std::size_t>(it - header.begin());
    }

    double value(std::size_t row, const std::string& name) const {
        return std::strtod(rows[row][col(name)].c_str(), nullptr);
    }
};

Csv read_csv(const fs::path& path) {
    // our files carry no quoted separators, so a plain split is enough
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    Csv csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (line.empty() || line.back() == ',') cells.push_back("");
        if (first) {
            csv.header = cells;
            first = false;
        } else {
            csv.rows.push_back(cells);
        }
    }
    return csv;
}

RunConfig config_in(const fs::path& dir) {
    RunConfig cfg;
    cfg.output_dir = dir.string();
    return cfg;
}

}  // namespace

TEST_CASE("csv formatting helpers") {
    CHECK(report::csv_escape("plain") == "plain");
    CHECK(report::csv_escape("a,b") == "\"a,b\"");
    CHECK(report::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

    for (const double v : {std::numbers::pi, 0.1, 1e-300, 493.48022005446793}) {
        const std::string s = report::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("every config key is settable and readable") {
    RunConfig cfg;
    for (const std::string& key : config_keys()) {
        if (key == "run.output_dir") {
            apply_key_value(cfg, key, "elsewhere");
            CHECK(cfg.output_dir == "elsewhere");
            continue;
        }
        if (key == "run.grid_points") {
            apply_key_value(cfg, key, "11");
            CHECK(cfg.grid_points == 11);
            continue;
        }
        apply_key_value(cfg, key, "1.25");
        CHECK(get_config_value(cfg, key) == 1.25);
    }
}

TEST_CASE("config rejects unknown keys and bad values") {
    RunConfig cfg;
    CHECK_THROWS_AS(apply_key_value(cfg, "potential.mass", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key_value(cfg, "potential.m", "abc"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key_value(cfg, "run.grid_points", "2.5"), std::invalid_argument);
    CHECK_THROWS_AS(apply_set_flag(cfg, "potential.m"), std::invalid_argument);
    CHECK_NOTHROW(apply_set_flag(cfg, "potential.m=0.5"));
    CHECK(cfg.potential.m == 0.5);
}

TEST_CASE("config file parsing") {
    const fs::path dir = fresh_dir("cfg");
    fs::create_directories(dir);
    const fs::path file = dir / "run.cfg";
    {
        std::ofstream out(file);
        out << "# comment line\n"
            << "\n"
            << "potential.m = 0.5  # trailing comment\n"
            << "run.grid_points=101\n"
            << "  kink.steepness_b =  12.5\n";
    }
    RunConfig cfg;
    apply_config_file(cfg, file.string());
    CHECK(cfg.potential.m == 0.5);
    CHECK(cfg.grid_points == 101);
    CHECK(cfg.kink.steepness_b == 12.5);

    CHECK_THROWS_AS(apply_config_file(cfg, (dir / "missing.cfg").string()), io_error);

    {
        std::ofstream out(file);
        out << "potential.m 0.5\n";
    }
    CHECK_THROWS_AS(apply_config_file(cfg, file.string()), std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("run config validation") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.grid_points = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.grid_points = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.flatness_threshold = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.kessence.f2 = -1.0;
    CHECK(report::run_command("landscape", cfg) == 1);
}

TEST_CASE("landscape command") {
    const fs::path dir = fresh_dir("landscape");
    RunConfig cfg = config_in(dir);
    cfg.grid_points = 5;
    REQUIRE(report::run_command("landscape", cfg) == 0);

    const Csv landscape = read_csv(dir / "landscape.csv");
    CHECK(landscape.header ==
          std::vector<std::string>{"phi", "v1", "v1_d1", "v1_d2"});
    CHECK(landscape.rows.size() == 5);

    const Csv vacua = read_csv(dir / "vacua.csv");
    REQUIRE(vacua.rows.size() == 1);
    CHECK(vacua.value(0, "delta_E") == Approx(0.026280059940927782).epsilon(1e-9));
    CHECK(vacua.value(0, "length_L") == Approx(38.051663590105812).epsilon(1e-9));
    CHECK(vacua.rows[0][vacua.col("gap_status")] == "ok");
    CHECK(vacua.value(0, "bracket_A") == Approx(0.5972405).epsilon(1e-12));
    // both length candidates are reported even when the bracket route is negative
    CHECK(vacua.value(0, "length_from_brackets") < 0.0);
    fs::remove_all(dir);
}

TEST_CASE("landscape flags degenerate wells") {
    const fs::path dir = fresh_dir("degenerate");
    RunConfig cfg = config_in(dir);
    cfg.potential.phi_star = std::numbers::pi;
    REQUIRE(report::run_command("landscape", cfg) == 0);
    const Csv vacua = read_csv(dir / "vacua.csv");
    CHECK(vacua.rows[0][vacua.col("gap_status")] == "degenerate");
    CHECK(vacua.value(0, "delta_E") == 0.0);
    fs::remove_all(dir);
}

TEST_CASE("profile command") {
    const fs::path dir = fresh_dir("profile");
    RunConfig cfg = config_in(dir);
    REQUIRE(report::run_command("profile", cfg) == 0);
    const Csv profile = read_csv(dir / "profile.csv");
    CHECK(profile.rows.size() == static_cast<std::size_t>(cfg.grid_points));

    double max_x = 0.0;
    for (std::size_t i = 0; i < profile.rows.size(); ++i) {
        const double kin = profile.value(i, "X");
        max_x = std::max(max_x, kin);
        // s is the square of the X cell, bit for bit
        CHECK(profile.value(i, "s") == kin * kin);
        if (profile.value(i, "x") == 0.0) CHECK(kin < 1e-6);
    }
    CHECK(max_x == Approx(493.48022005446793).epsilon(0.01));
    fs::remove_all(dir);
}

TEST_CASE("kessence command distinguishes wall and exterior") {
    const fs::path dir = fresh_dir("kessence");
    RunConfig cfg = config_in(dir);
    REQUIRE(report::run_command("kessence", cfg) == 0);
    const Csv eos = read_csv(dir / "eos.csv");
    CHECK(eos.header ==
          std::vector<std::string>{"x", "X", "w_eq43_route", "cs2_eq43", "cs2_eq50_form",
                                   "pressure", "density"});
    bool saw_wall = false, saw_exterior = false;
    for (std::size_t i = 0; i < eos.rows.size(); ++i) {
        const double kin = eos.value(i, "X");
        CHECK(std::isfinite(eos.value(i, "density")));
        if (kin > cfg.kessence.eps0) {
            saw_wall = true;
            CHECK(std::abs(eos.value(i, "w_eq43_route") + 1.0) < 0.05);
            CHECK(eos.value(i, "cs2_eq43") < 1e-5);
        } else {
            saw_exterior = true;
            CHECK(eos.value(i, "cs2_eq50_form") == 1.0);
        }
    }
    CHECK(saw_wall);
    CHECK(saw_exterior);
    fs::remove_all(dir);
}

TEST_CASE("slowroll command") {
    const fs::path dir = fresh_dir("slowroll");
    RunConfig cfg = config_in(dir);
    REQUIRE(report::run_command("slowroll", cfg) == 0);
    const Csv sr = read_csv(dir / "slowroll.csv");
    REQUIRE(sr.rows.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(sr.rows[i][sr.col("passes_flat")] == "true");
    }
    const auto point_col = sr.col("point");
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string& point = sr.rows[i][point_col];
        if (point == "phi_star") {
            CHECK(std::abs(sr.value(i, "h_squared") - 8.378) < 0.01);
            CHECK(sr.rows[i][sr.col("paper_eq")] == "Eq.32");
        }
        if (point == "phi_F" || point == "phi_T") {
            CHECK(sr.value(i, "epsilon_sr") < 1e-18);
        }
    }
    fs::remove_all(dir);
}

TEST_CASE("rates command") {
    const fs::path dir = fresh_dir("rates");
    RunConfig cfg = config_in(dir);
    REQUIRE(report::run_command("rates", cfg) == 0);
    const Csv rates = read_csv(dir / "rates.csv");
    REQUIRE(rates.rows.size() == 1);
    CHECK(rates.value(0, "garriga_density") == Approx(0.15915494309189534).epsilon(1e-13));
    CHECK(rates.value(0, "cdl_rate") == Approx(0.70594574669423205).epsilon(1e-12));
    CHECK(std::isfinite(rates.value(0, "transfer_closed_form")));
    CHECK(std::isfinite(rates.value(0, "transfer_discretized")));
    CHECK(std::isfinite(rates.value(0, "log10_closed_vs_garriga")));
    CHECK(rates.rows[0][rates.col("transfer_underflow")] == "false");

    cfg.nucleation.prefactor_A = 0.0;
    REQUIRE(report::run_command("rates", cfg) == 0);
    const Csv zeroed = read_csv(dir / "rates.csv");
    CHECK(zeroed.value(0, "cdl_rate") == 0.0);
    fs::remove_all(dir);
}

TEST_CASE("audit command covers every claim") {
    const fs::path dir = fresh_dir("audit");
    RunConfig cfg = config_in(dir);
    REQUIRE(report::run_command("audit", cfg) == 0);
    const Csv audit = read_csv(dir / "audit.csv");

    const std::set<std::string> required = {
        "Eq.1",      "Eq.3",      "Eq.10",     "Eq.11",     "Eq.12",    "Eq.13",
        "Eq.16-gap", "Eq.28",     "Eq.30-LHS", "Eq.30-RHS", "Eq.31-LHS", "Eq.31-RHS",
        "Eq.32-LHS", "Eq.32-RHS", "Eq.57-w",   "Eq.58-cs2", "Eq.60-cs2"};
    std::set<std::string> seen;
    const std::set<std::string> statuses = {"MATCH", "NEAR", "MISMATCH"};
    const auto id_col = audit.col("claim_id");
    const auto status_col = audit.col("status");
    for (const auto& row : audit.rows) {
        seen.insert(row[id_col]);
        CHECK(statuses.count(row[status_col]) == 1);
    }
    for (const std::string& id : required) {
        INFO("claim: ", id);
        CHECK(seen.count(id) == 1);
    }

    const auto status_of = [&](const std::string& id) {
        for (const auto& row : audit.rows) {
            if (row[id_col] == id) return row[status_col];
        }
        return std::string("absent");
    };
    CHECK(status_of("Eq.1") == "MATCH");
    CHECK(status_of("Eq.32-RHS") == "MATCH");
    CHECK(status_of("Eq.28") == "MATCH");
    CHECK(status_of("Eq.10") == "MISMATCH");
    CHECK(status_of("Eq.11") == "NEAR");
    CHECK(status_of("Eq.12") == "MISMATCH");
    CHECK(status_of("Eq.13") == "MISMATCH");
    CHECK(status_of("Eq.16-gap") == "MISMATCH");
    CHECK(status_of("Eq.57-w") == "NEAR");
    CHECK(status_of("Eq.58-cs2") == "MATCH");
    CHECK(status_of("Eq.60-cs2") == "MATCH");
    fs::remove_all(dir);
}

TEST_CASE("audit status grading") {
    CHECK(report::audit_status(1.0, 1.005) == "MATCH");
    CHECK(report::audit_status(1.0, 1.05) == "NEAR");
    CHECK(report::audit_status(1.0, 2.0) == "MISMATCH");
    // limit claims at zero are graded on absolute difference
    CHECK(report::audit_status(0.0, 5e-9) == "MATCH");
    CHECK(report::audit_status(0.0, 0.05) == "NEAR");
    CHECK(report::audit_status(0.0, 0.5) == "MISMATCH");
}

TEST_CASE("identical configs produce byte-identical files") {
    for (const std::string& name : report::command_names()) {
        const fs::path dir1 = fresh_dir("det1_" + name);
        const fs::path dir2 = fresh_dir("det2_" + name);
        REQUIRE(report::run_command(name, config_in(dir1)) == 0);
        REQUIRE(report::run_command(name, config_in(dir2)) == 0);
        for (const auto& entry : fs::directory_iterator(dir1)) {
            const fs::path twin = dir2 / entry.path().filename();
            INFO("file: ", entry.path().string());
            CHECK(slurp(entry.path()) == slurp(twin));
        }
        fs::remove_all(dir1);
        fs::remove_all(dir2);
    }
}

TEST_CASE("exit codes") {
    RunConfig cfg;
    cfg.output_dir = "/proc/version/not_a_directory";
    CHECK(report::run_command("landscape", cfg) == 2);

    cfg = RunConfig{};
    cfg.grid_points = 10;  // even
    CHECK(report::run_command("profile", cfg) == 1);

    const fs::path dir = fresh_dir("unknown");
    CHECK(report::run_command("nonsense", config_in(dir)) == 1);

    // single-well parameters surface as a computation error
    cfg = config_in(fresh_dir("nodw"));
    cfg.potential.m = 10.0;
    CHECK(report::run_command("landscape", cfg) == 1);
}

TEST_CASE("help text lists every key with its default") {
    const std::string help = config_keys_help();
    for (const std::string& key : config_keys()) {
        INFO("key: ", key);
        CHECK(help.find(key + " = ") != std::string::npos);
    }
    CHECK(help.find("potential.m = 0.441") != std::string::npos);
    CHECK(help.find("run.grid_points = 2001") != std::string::npos);
}
