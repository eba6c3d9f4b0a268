#pragma once

#include <string>
#include <vector>

#include "fvn/config.hpp"

namespace fvn::report {

// CSV cell formatting: doubles at full round-trip precision (%.17g),
// RFC-4180-style quoting for text cells that need it.
std::string format_double(double v);
std::string csv_escape(const std::string& field);

// One claim of the consistency audit: a published value next to the value
// this library computes for the same quantity.
struct AuditRow {
    std::string claim_id;
    double paper_value = 0.0;
    double computed_value = 0.0;
};

// MATCH (<1% relative), NEAR (<10%), MISMATCH. Claims whose published value
// is a limit at 0 are graded on absolute difference instead.
std::string audit_status(double paper_value, double computed_value);

// The full audit table (required claim ids first, then supplementary rows).
std::vector<AuditRow> build_audit_rows(const RunConfig& cfg);

// Subcommand bodies. Each writes its CSVs under cfg.output_dir and throws
// fvn::io_error on filesystem failures, std::domain_error and friends on
// computation failures.
void write_landscape(const RunConfig& cfg);
void write_profile(const RunConfig& cfg);
void write_kessence(const RunConfig& cfg);
void write_slowroll(const RunConfig& cfg);
void write_rates(const RunConfig& cfg);
void write_audit(const RunConfig& cfg);

const std::vector<std::string>& command_names();

// Validates cfg, dispatches to the writer, maps exceptions to exit codes
// (0 success, 1 domain/computation, 2 I/O) with a one-line diagnostic on
// stderr. Unknown command names return 1.
int run_command(const std::string& name, const RunConfig& cfg);

}  // namespace fvn::report
