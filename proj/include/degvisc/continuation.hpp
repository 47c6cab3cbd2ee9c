#pragma once

#include "degvisc/dynamics.hpp"
#include "degvisc/initdata.hpp"
#include "degvisc/weakform.hpp"

#include <functional>
#include <string>
#include <vector>

namespace degvisc {

/// Raw data sampled on a given grid (lets refined members resample).
using RawSource = std::function<RawData(const Grid&)>;

struct SequenceOptions {
    RunControls controls;
    double t_end = 0.1;
    InitialDataMode init = InitialDataMode::Regularized;
    int nu = 0;                 ///< 0 selects default_nu
    /// Member k runs on n 2^k cells per axis with halved cfl (or dt_override) per level.
    bool refine = false;
    /// Snapshots (and comparisons) at this many equally spaced times.
    int sync_points = 10;
    bool residuals = false;     ///< evaluate the weak-form residual table per member
    int test_modes = 3;
    bool parallel = true;       ///< run members concurrently
    bool keep_trajectories = false;
};

/// Vanishing-term names in report order with their predicted decay exponents
/// (NaN when only exponential smallness is predicted).
struct VanishingTerm {
    std::string name;
    double FunctionalRecord::*field;
    double exponent;
};
const std::vector<VanishingTerm>& vanishing_terms();

struct SequenceMember {
    double epsilon = 0.0;
    int level = 0;
    Grid grid;
    bool aborted = false;
    std::string abort_reason;
    long nsteps = 0;
    std::vector<double> vanishing;  ///< time integrals, order of vanishing_terms()
    std::vector<ResidualRow> residuals;
    Trajectory trajectory;          ///< filled only with keep_trajectories
};

struct PairDistance {
    double eps_a = 0.0, eps_b = 0.0;
    bool valid = false;
    double d_rho = 0.0;  ///< ||rho_a - rho_b||_{L^gamma(Omega x (0,T))}
    double d_m = 0.0;    ///< ||sqrt(rho_a) u_a - sqrt(rho_b) u_b||_{L^2(Omega x (0,T))}
};

struct SlopeFit {
    std::string term;
    double exponent = 0.0;  ///< predicted
    double slope = 0.0;     ///< least squares on log-log, NaN with fewer than 3 usable points
    int points = 0;
    bool consistent = false;  ///< |slope - exponent| <= 0.5
};

struct ConvergenceReport {
    SystemVariant variant = SystemVariant::A2D;
    std::vector<SequenceMember> members;
    std::vector<PairDistance> pairs;
    std::vector<SlopeFit> slopes;
    bool contraction = true;  ///< d_rho and d_m decrease along valid consecutive pairs
    bool flagged = false;
    std::vector<std::string> flags;
    std::vector<std::string> warnings;
};

/// Space-time distances between two runs on their common snapshot times.
/// A finer grid (2^l times the coarser per axis) is block-averaged first.
/// \throws ConfigError when the runs share fewer than two snapshot times or
/// their grids do not nest.
PairDistance trajectory_distance(const Trajectory& a, const Trajectory& b, double gamma);

/// Least-squares slope of log y against log x over the positive pairs.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y, int* used = nullptr);

/// Block average of f onto `coarse` (extents must divide those of f).
ScalarField restrict_to(const ScalarField& f, const Grid& coarse);

/// Runs the epsilon sequence from the same raw data. Duplicate epsilons are
/// dropped with a warning and the list is taken in decreasing order.
/// \throws ConfigError with fewer than 3 distinct epsilons or an
/// inadmissible regime.
ConvergenceReport run_sequence(const RawSource& raw, const Grid& grid, const ModelParams& base,
                               std::vector<double> eps_list, const SequenceOptions& opts);

/// CSV: one row per member (epsilon, level, aborted, vanishing integrals),
/// then one row per pair and one per slope fit, each block with its own header.
void write_convergence_csv(const std::string& path, const ConvergenceReport& r);
std::string convergence_json(const ConvergenceReport& r);

}  // namespace degvisc
