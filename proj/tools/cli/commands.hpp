#pragma once

#include "config.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mtjsyn::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,   ///< bad usage or configuration
    kExitRuntime = 2, ///< I/O or simulation failure
};

/// trace, ltp-sweep, ppf-ptp, array, lifetime, constants, dump-config
const std::vector<std::string> &subcommands();

/// Runs one subcommand. Files go to config.out_dir; summaries go to `out`,
/// diagnostics to `err`. Never throws.
int dispatch(std::string_view subcommand, const RunConfig &config, std::ostream &out, std::ostream &err);

/// The bundled 34x43 stimulus glyph (plain PBM).
std::string_view bundled_mask();

/// Comment block embedding the command, seed and effective configuration (all keys but `threads`).
std::string output_header(std::string_view command, const RunConfig &config);

void write_trace_csv(std::ostream &os, const Trace &trace);
void write_sweep_csv(std::ostream &os, const SweepResult &sweep);
void write_mean_conductance_csv(std::ostream &os, const SweepResult &sweep);
void write_ppf_ptp_csv(std::ostream &os, const SweepResult &sweep, const PpfPtp &values);
/// Row-major matrix in mS, 6 significant digits, no header row.
void write_snapshot_csv(std::ostream &os, const Snapshot &snapshot, int rows, int cols);

/// Number to fixed significant digits in general notation.
std::string format_sig(double value, int digits);

/// `trace_interval_<X>ns.csv`
std::string trace_file_name(const RunConfig &config);

} // namespace mtjsyn::cli
