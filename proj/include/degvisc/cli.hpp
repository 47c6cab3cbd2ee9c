#pragma once

#include "degvisc/config.hpp"

#include <iosfwd>
#include <string>

namespace degvisc {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,   ///< configuration or regime error
    kExitFlagged = 2,  ///< a monitored inequality was flagged
    kExitAborted = 3,  ///< positivity loss, overflow or solver failure
};

/// Runs one trajectory and writes config.ini, records.csv, steps.csv,
/// reports.json, summary.json, snapshots/ and (optionally) residuals.csv to `out`.
int run_command(const RunConfig& cfg, const std::string& out, std::ostream& log);

/// Runs cfg.eps_list and writes convergence.csv / convergence.json to `out`.
int sweep_command(const RunConfig& cfg, const std::string& out, std::ostream& log);

/// Recomputes records and reports from the snapshots of a `run` directory
/// into `dir`/check and compares them with the stored ones.
/// \throws IoError on missing or corrupt files.
int check_command(const std::string& dir, std::ostream& log);

/// Full command line: `degvisc {run|sweep|check} ...`.
int cli_main(int argc, char** argv);

}  // namespace degvisc
