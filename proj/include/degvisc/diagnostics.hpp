#pragma once

#include "degvisc/dynamics.hpp"
#include "degvisc/records.hpp"

#include <map>
#include <string>
#include <vector>

namespace degvisc {

/// Evaluates every monitored functional on one state. `cached` may carry the
/// rhs terms of this exact state to avoid recomputing them; the result is
/// identical either way.
FunctionalRecord record(const State& state, SystemVariant variant, BCMode bc, const LevelGrid& levels = {},
                        const RhsTerms* cached = nullptr);

/// phi(rho) = integral from 1 to rho of rho^{-1} h'(s) ds for the variant's viscosity law.
double bd_potential(double rho, const ModelParams& p);

/// `points` equally spaced levels across [min v0, max v0] and the reciprocal
/// range for w = rho^{-1/2}, widened by 10% on both sides.
LevelGrid default_levels(const ScalarField& rho0, int points = 8);

struct InequalityReport {
    std::string name;
    bool applicable = true;     ///< false when the regime gate excludes the check
    bool flagged = false;
    double tolerance = 0.0;
    double worst_violation = 0.0;  ///< largest signed residual minus tolerance; <= 0 means no violation
    double worst_time = 0.0;
    double worst_abs_residual = 0.0;
    std::vector<std::string> flags;
    std::map<std::string, double> metrics;  ///< reported constants and observed quantities
    std::vector<double> residuals;          ///< per record interval

    bool pass() const { return !flagged; }
};

/// Per-interval residual r_k = (E_{k+1} - E_k)/dt + D_k with D_k the
/// dissipation at t_k; flags r_k > c_tol (dt + h^2) E(0).
InequalityReport energy_budget(const Trajectory& tr, double c_tol = 10.0);

/// Balance of the BD combination against its chain-rule rate, the sign of the
/// cold-diffusion contribution, the bound of the core by its initial value
/// and the growth of the accumulated combination.
InequalityReport bd_entropy_budget(const Trajectory& tr, double c_tol = 10.0);

/// Balance of the Mellet-Vasseur functional; observed constant reported.
InequalityReport mv_budget(const Trajectory& tr, double c_tol = 10.0);

/// Per-step mass identity: |Δ∫rho - dt S| <= c_tol dt^2 ∫rho0 with S the
/// integral of the continuity source (three-term form for C3D).
InequalityReport mass_identity(const Trajectory& tr, double c_tol = 10.0);

/// Pointwise coercivity of the stress at every record time.
InequalityReport coercivity_report(const Trajectory& tr, double rel_tol = 1e-12);

struct DeGiorgiReport {
    LevelGrid levels;
    std::vector<double> times;
    std::vector<std::vector<double>> nu_v, nu_w;  ///< [record][level]
    double sup_rho_max = 0.0;
    double sup_inv_rho_min = 0.0;
    double decay_rate = 0.0;  ///< smallest c with rho_min(t) >= rho_min(0) e^{-ct}
    bool monotone = true;
    bool finite = true;
    bool flagged = false;
    std::vector<std::string> flags;
};

/// Level-set tables at every record time. Uses the tables stored in the
/// records when they match `levels`, otherwise recomputes them from snapshots.
DeGiorgiReport density_bounds(const Trajectory& tr, const LevelGrid& levels);

/// Accumulated trapezoid integral of one record column.
std::vector<double> accumulate(const std::vector<FunctionalRecord>& recs, double FunctionalRecord::*field);

/// Record values in CSV column order (excluding level-set columns).
std::vector<double> record_values(const FunctionalRecord& r);

void write_records_csv(const std::string& path, const std::vector<FunctionalRecord>& recs, const LevelGrid& levels);
std::string report_json(const InequalityReport& r);
std::string report_json(const DeGiorgiReport& r);

}  // namespace degvisc
