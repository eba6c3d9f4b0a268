#include "fvn/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "fvn/errors.hpp"
#include "fvn/kessence.hpp"
#include "fvn/kink.hpp"
#include "fvn/nucleation.hpp"
#include "fvn/potential.hpp"
#include "fvn/slowroll.hpp"

namespace fvn::report {

namespace {

// Published reference values audited against the recomputed quantities.
// Location claims are paired positionally (lower/upper minimum), since the
// published false/true labels disagree with the energy ordering that the
// stated parameters actually produce.
constexpr double kPaperPhiF = 0.5472;       // Eq.10 (lower minimum)
constexpr double kPaperPhiT = 5.457;        // Eq.11 (upper minimum)
constexpr double kPaperGap = 0.041;         // Eq.13
constexpr double kPaperX = 0.663;           // Eq.28, x = V(phi_F)
constexpr double kPaperPhi0Bound = 3.1;     // Eq.1
constexpr double kPaperM = 0.441;           // stated mass
constexpr double kPaperVdd_T = 0.504;       // Eq.30 LHS
constexpr double kPaperH2_T = 4.962;        // Eq.30 RHS
constexpr double kPaperVdd_F = 0.575;       // Eq.31 LHS
constexpr double kPaperH2_F = 5.305;        // Eq.31 RHS
constexpr double kPaperVdd_Star = 0.335;    // Eq.32 LHS
constexpr double kPaperH2_Star = 8.378;     // Eq.32 RHS
constexpr double kAltCosCoeff = 0.5989;     // alternate cosine coefficient

class CsvFile {
  public:
    explicit CsvFile(const std::filesystem::path& path)
        : path_(path.string()), out_(path, std::ios::binary) {
        if (!out_) throw io_error("cannot open '" + path_ + "' for writing");
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out_ << ',';
            out_ << csv_escape(cells[i]);
        }
        out_ << '\n';
        if (!out_) throw io_error("write failure on '" + path_ + "'");
    }

    void close() {
        out_.close();
        if (!out_) throw io_error("write failure on '" + path_ + "'");
    }

  private:
    std::string path_;
    std::ofstream out_;
};

std::filesystem::path prepare_output_dir(const RunConfig& cfg) {
    const std::filesystem::path dir(cfg.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw io_error("cannot create output directory '" + cfg.output_dir + "'");
    }
    return dir;
}

std::string fmt(double v) { return format_double(v); }

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

// Local extremal kinetic value of the quadratic expansion: the configured
// wall value inside the wall region (where the profile kinetic density
// exceeds eps0), zero outside.
double regime_x0(double kinetic, const KEssenceModel& m) {
    return kinetic > m.eps0 ? m.x0 : 0.0;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string audit_status(double paper_value, double computed_value) {
    const double denom = std::abs(paper_value);
    const double diff = std::abs(computed_value - paper_value);
    if (denom > 0.0) {
        const double rel = diff / denom;
        if (rel < 0.01) return "MATCH";
        if (rel < 0.10) return "NEAR";
        return "MISMATCH";
    }
    if (diff < 0.01) return "MATCH";
    if (diff < 0.10) return "NEAR";
    return "MISMATCH";
}

void write_landscape(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const PotentialParams& p = cfg.potential;

    const double lo = -1.0;
    const double hi = 2.0 * std::numbers::pi + 1.0;
    const std::vector<double> xs = linspace(lo, hi, cfg.grid_points);

    CsvFile landscape(dir / "landscape.csv");
    landscape.row({"phi", "v1", "v1_d1", "v1_d2"});
    for (const double phi : xs) {
        landscape.row({fmt(phi), fmt(v1(phi, p)), fmt(v1_d1(phi, p)), fmt(v1_d2(phi, p))});
    }
    landscape.close();

    const VacuumSolution vs = find_vacua(p, lo, hi);
    const BracketTerms bt = bracket_terms(p, vs);
    CsvFile vacua(dir / "vacua.csv");
    vacua.row({"phi_F", "phi_T", "phi_barrier", "delta_E", "length_L", "gap_status",
               "bracket_A", "bracket_B", "bracket", "gap_from_brackets",
               "length_from_brackets"});
    vacua.row({fmt(vs.phi_F), fmt(vs.phi_T), fmt(vs.phi_barrier), fmt(vs.delta_E),
               fmt(vs.length_L), vs.degenerate ? "degenerate" : "ok", fmt(bt.bracket_A),
               fmt(bt.bracket_B), fmt(bt.bracket), fmt(bt.gap_from_brackets),
               fmt(1.0 / bt.gap_from_brackets)});
    vacua.close();
}

void write_profile(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const KinkProfile& k = cfg.kink;
    const std::vector<double> xs = linspace(-k.length_L, k.length_L, cfg.grid_points);

    CsvFile profile(dir / "profile.csv");
    profile.row({"x", "phi", "dphi_dx", "X", "s"});
    for (const double x : xs) {
        const double kin = kinetic_x(x, k);
        profile.row({fmt(x), fmt(phi_of_x(x, k)), fmt(dphi_dx(x, k)), fmt(kin), fmt(kin * kin)});
    }
    profile.close();
}

void write_kessence(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const KinkProfile& k = cfg.kink;
    const KEssenceModel& m = cfg.kessence;
    const std::vector<double> xs = linspace(-k.length_L, k.length_L, cfg.grid_points);

    CsvFile eos(dir / "eos.csv");
    eos.row({"x", "X", "w_eq43_route", "cs2_eq43", "cs2_eq50_form", "pressure", "density"});
    for (const double x : xs) {
        const double kin = kinetic_x(x, k);
        KEssenceModel local = m;
        local.x0 = regime_x0(kin, m);
        const double x_val = local.x0 + local.eps0;
        const double phi_here = phi_of_x(x, k);
        eos.row({fmt(x), fmt(kin), fmt(equation_of_state(x_val, local)),
                 fmt(sound_speed_sq(x_val, local)), fmt(paper_cs2_form(local.x0, local.eps0)),
                 fmt(pressure(phi_here, x_val, local, cfg.potential)),
                 fmt(density(phi_here, x_val, local, cfg.potential))});
    }
    eos.close();
}

void write_slowroll(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const PotentialParams& p = cfg.potential;
    const VacuumSolution vs = find_vacua(p, 0.0, 2.0 * std::numbers::pi);

    struct Point {
        const char* name;
        double phi;
    };
    const Point points[] = {
        {"phi_F", vs.phi_F},
        {"phi_barrier", vs.phi_barrier},
        {"phi_T", vs.phi_T},
        {"phi_star", p.phi_star},
    };

    CsvFile sr(dir / "slowroll.csv");
    sr.row({"point", "phi", "v", "h_squared", "v_dd_abs", "ratio", "epsilon_sr", "eta_sr",
            "passes_flat", "passes_negative_pressure", "paper_eq", "paper_v_dd_abs",
            "paper_h_squared"});
    for (const Point& pt : points) {
        const SlowRollReport r = slow_roll_report(pt.phi, p, cfg.flatness_threshold);
        // Published claims attach to locations: Eq.31 quotes the lower
        // minimum, Eq.30 the upper one, Eq.32 the phi_star point.
        std::string eq, paper_vdd, paper_h2;
        if (pt.phi == p.phi_star) {
            eq = "Eq.32";
            paper_vdd = fmt(kPaperVdd_Star);
            paper_h2 = fmt(kPaperH2_Star);
        } else if (pt.phi == vs.phi_lower()) {
            eq = "Eq.31";
            paper_vdd = fmt(kPaperVdd_F);
            paper_h2 = fmt(kPaperH2_F);
        } else if (pt.phi == vs.phi_upper()) {
            eq = "Eq.30";
            paper_vdd = fmt(kPaperVdd_T);
            paper_h2 = fmt(kPaperH2_T);
        }
        sr.row({pt.name, fmt(r.phi), fmt(r.v), fmt(r.h_squared), fmt(r.v_dd_abs), fmt(r.ratio),
                fmt(r.epsilon_sr), fmt(r.eta_sr), fmt_bool(r.passes_flat),
                fmt_bool(r.passes_negative_pressure), eq, paper_vdd, paper_h2});
    }
    sr.close();
}

void write_rates(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const NucleationInputs& n = cfg.nucleation;

    const VacuumSolution vs = find_vacua(cfg.potential, 0.0, 2.0 * std::numbers::pi);
    const BracketTerms bt = bracket_terms(cfg.potential, vs);
    const double c1 = normalization_constant(bt.bracket_A, n.length_L);
    const double c2 = normalization_constant(bt.bracket_B, n.length_L);

    const double cdl = cdl_rate(n);
    const double garriga = garriga_density(n);
    const double closed = transfer_closed_form(n, c1, c2);

    // One-mode reduction: the initial state has no nucleated pair (mode
    // amplitude 0), the final state carries the box amplitude of an S-S'
    // pair of width L; the barrier threshold sits halfway between them.
    const double final_center = momentum_basis(0.0, n.length_L);
    const WaveFunctional psi_i{c1, n.alpha_gap, 0.0, "initial"};
    const WaveFunctional psi_f{c2, n.alpha_gap, final_center, "final"};
    const double upper = n.length_L * n.length_L / (2.0 * std::numbers::pi);
    const TransferResult discr = transfer_discretized(psi_i, psi_f, 0.5 * final_center, upper);

    CsvFile rates(dir / "rates.csv");
    rates.row({"cdl_rate", "garriga_density", "norm_c1", "norm_c2", "transfer_closed_form",
               "transfer_discretized", "transfer_underflow", "log10_closed_vs_garriga"});
    rates.row({fmt(cdl), fmt(garriga), fmt(c1), fmt(c2), fmt(closed), fmt(discr.value),
               fmt_bool(discr.underflow),
               fmt(std::log10(std::abs(closed)) - std::log10(garriga))});
    rates.close();
}

std::vector<AuditRow> build_audit_rows(const RunConfig& cfg) {
    const PotentialParams& p = cfg.potential;
    const KEssenceModel& m = cfg.kessence;
    const VacuumSolution vs = find_vacua(p, 0.0, 2.0 * std::numbers::pi);

    // Bracket-route gap evaluated on the published minima, the comparison
    // the published 0.041 is measured against.
    const auto paper_bracket_gap = [&](double mass) {
        return ((1.0 + mass * mass) / 2.0 - kPaperPhiT * kPaperPhiF / 6.0) / 2.0;
    };

    std::vector<AuditRow> rows;
    rows.push_back({"Eq.1", kPaperPhi0Bound, guth_bound()});
    rows.push_back({"Eq.3", p.phi_star, phi_star_formula(p.m)});
    rows.push_back({"Eq.10", kPaperPhiF, vs.phi_lower()});
    rows.push_back({"Eq.11", kPaperPhiT, vs.phi_upper()});
    // Inverse of the Eq.3 check: the mass that would actually produce the
    // stated phi_star.
    rows.push_back(
        {"Eq.12", kPaperM, std::sqrt(3.0 / (16.0 * std::numbers::pi)) / (p.phi_star * p.phi_star)});
    rows.push_back({"Eq.13", kPaperGap, vs.delta_E});
    rows.push_back({"Eq.16-gap", kPaperGap, paper_bracket_gap(p.m)});
    rows.push_back({"Eq.28", kPaperX, v1(vs.phi_lower(), p)});
    rows.push_back({"Eq.30-LHS", kPaperVdd_T, std::abs(v1_d2(vs.phi_upper(), p))});
    rows.push_back({"Eq.30-RHS", kPaperH2_T, hubble_squared(v1(vs.phi_upper(), p))});
    rows.push_back({"Eq.31-LHS", kPaperVdd_F, std::abs(v1_d2(vs.phi_lower(), p))});
    rows.push_back({"Eq.31-RHS", kPaperH2_F, hubble_squared(v1(vs.phi_lower(), p))});
    rows.push_back({"Eq.32-LHS", kPaperVdd_Star, std::abs(v1_d2(p.phi_star, p))});
    rows.push_back({"Eq.32-RHS", kPaperH2_Star, hubble_squared(v1(p.phi_star, p))});
    rows.push_back({"Eq.57-w", -1.0, equation_of_state(m.x0 + m.eps0, m)});
    rows.push_back({"Eq.58-cs2", 0.0, paper_cs2_form(m.x0, m.eps0)});
    rows.push_back({"Eq.60-cs2", 1.0, paper_cs2_form(0.0, m.eps0)});

    // Supplementary rows: the cs^2 master-formula route, both printed
    // groupings of the wall correction, the decay-law exponent, and the
    // alternate cosine coefficient.
    rows.push_back({"Eq.58-cs2-eq43route", 0.0, sound_speed_sq(m.x0 + m.eps0, m)});
    {
        KEssenceModel outside = m;
        outside.x0 = 0.0;
        rows.push_back({"Eq.60-cs2-eq43route", 1.0, sound_speed_sq(m.eps0, outside)});
    }
    rows.push_back({"Eq.53-w-printed", -1.0, -1.0 / (1.0 - 4.0 * m.x0 * (m.f2 / m.f0) * m.eps0)});
    rows.push_back({"Eq.57-w-printed", -1.0, -1.0 / (1.0 - 4.0 * m.x0 * m.eps0 / m.f2)});
    rows.push_back({"Eq.49-decay-exponent", 8.0 * std::numbers::pi * m.v0,
                    3.0 * std::sqrt(hubble_squared(m.v0))});

    PotentialParams alt = p;
    alt.cos_coeff = kAltCosCoeff;
    const VacuumSolution vsa = find_vacua(alt, 0.0, 2.0 * std::numbers::pi);
    rows.push_back({"Eq.10-alt0.5989", kPaperPhiF, vsa.phi_lower()});
    rows.push_back({"Eq.11-alt0.5989", kPaperPhiT, vsa.phi_upper()});
    rows.push_back({"Eq.13-alt0.5989", kPaperGap, vsa.delta_E});
    rows.push_back({"Eq.28-alt0.5989", kPaperX, v1(vsa.phi_lower(), alt)});
    rows.push_back({"Eq.30-LHS-alt0.5989", kPaperVdd_T, std::abs(v1_d2(vsa.phi_upper(), alt))});
    rows.push_back({"Eq.30-RHS-alt0.5989", kPaperH2_T, hubble_squared(v1(vsa.phi_upper(), alt))});
    rows.push_back({"Eq.31-LHS-alt0.5989", kPaperVdd_F, std::abs(v1_d2(vsa.phi_lower(), alt))});
    rows.push_back({"Eq.31-RHS-alt0.5989", kPaperH2_F, hubble_squared(v1(vsa.phi_lower(), alt))});
    rows.push_back({"Eq.32-LHS-alt0.5989", kPaperVdd_Star, std::abs(v1_d2(p.phi_star, alt))});
    rows.push_back({"Eq.32-RHS-alt0.5989", kPaperH2_Star, hubble_squared(v1(p.phi_star, alt))});
    return rows;
}

void write_audit(const RunConfig& cfg) {
    const auto dir = prepare_output_dir(cfg);
    const std::vector<AuditRow> rows = build_audit_rows(cfg);

    CsvFile audit(dir / "audit.csv");
    audit.row({"claim_id", "paper_value", "computed_value", "abs_diff", "status"});
    for (const AuditRow& r : rows) {
        audit.row({r.claim_id, fmt(r.paper_value), fmt(r.computed_value),
                   fmt(std::abs(r.computed_value - r.paper_value)),
                   audit_status(r.paper_value, r.computed_value)});
    }
    audit.close();
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"landscape", "profile", "kessence",
                                                   "slowroll",  "rates",   "audit"};
    return names;
}

int run_command(const std::string& name, const RunConfig& cfg) {
    try {
        cfg.validate();
        if (name == "landscape") {
            write_landscape(cfg);
        } else if (name == "profile") {
            write_profile(cfg);
        } else if (name == "kessence") {
            write_kessence(cfg);
        } else if (name == "slowroll") {
            write_slowroll(cfg);
        } else if (name == "rates") {
            write_rates(cfg);
        } else if (name == "audit") {
            write_audit(cfg);
        } else {
            std::fprintf(stderr, "error: unknown command '%s'\n", name.c_str());
            return 1;
        }
        return 0;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

}  // namespace fvn::report
