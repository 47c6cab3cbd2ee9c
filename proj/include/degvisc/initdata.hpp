#pragma once

#include "degvisc/calculus.hpp"
#include "degvisc/fields.hpp"
#include "degvisc/params.hpp"

#include <string>
#include <vector>

namespace degvisc {

/// Raw initial data: rho0 >= 0 (may vanish) and momentum m0, zero on the vacuum set.
struct RawData {
    ScalarField rho0;
    VectorField m0;

    const Grid& grid() const { return rho0.grid(); }
};

/// Discrete checks of the raw-data hypotheses.
struct RawDataCheck {
    bool nonnegative = true;
    bool momentum_vanishes_on_vacuum = true;
    double vacuum_measure = 0.0;
    double mass = 0.0;
    double grad_power_l2 = 0.0;   ///< ||∇ rho0^{alpha-1/2}||_{L^2}, centered differences
    double momentum_norm = 0.0;   ///< ||m0||_{L^{2 gamma/(gamma+1)}}, reported only
    double kinetic_moment = 0.0;  ///< ∫ rho0^{-1-eta0} |m0|^{2+eta0}, 0 on vacuum
    bool ok() const { return nonnegative && momentum_vanishes_on_vacuum; }
};

RawDataCheck check_raw(const RawData& raw, const ModelParams& p);

/// Separable Gaussian smoothing with standard deviation `width_cells` cells,
/// truncated at three deviations. Periodic grids wrap; boxes reflect with
/// the given parity per axis (velocity component `comp`, or density if comp < 0).
ScalarField gaussian_smooth(const ScalarField& f, double width_cells, int comp = -1);

/// Smallest integer nu >= 2 with nu (alpha - 1/2) >= 5.
int default_nu(double alpha);

/// Closed-form positive floor of the mollified density (rho0 = 0):
/// eps^{4 sigma0} for every system.
double mollified_floor(const ModelParams& p);

/// rho0eps = (rho~^{q} + eps^{4 sigma0 q})^{1/q}, q = nu (alpha - 1/2), with rho~
/// the smoothed rho0 clamped to [0, eps^{-4 sigma0}]; System C uses q = 6.
/// \throws ConfigError if nu (alpha - 1/2) < 5 for systems A/B.
ScalarField mollify_density(const RawData& raw, const ModelParams& p, int nu);

struct VelocityLift {
    VectorField u;
    double exponent = 0.0;        ///< -1/(2+eta0), or -1/4 with L4 data
    double moment = 0.0;          ///< ∫ rho0eps |u|^{2+eta0}
    double moment4 = 0.0;         ///< ∫ rho0eps |u|^4
    double momentum_l1_error = 0.0;  ///< ||rho0eps u - m0||_{L^1}
};

/// u = rho0eps^{-1/(2+eta0)} w with w the smoothed m0 / rho0^{(1+eta0)/(2+eta0)}
/// (0/0 := 0); with `l4_data` the exponents are 1/4 and 3/4.
/// \throws PositivityError if rho0eps has a non-positive sample.
VelocityLift lift_velocity(const RawData& raw, const ScalarField& rho0eps, const ModelParams& p, bool l4_data);

struct Truncation {
    RawData raw;
    double half_width = 0.0;
    double outside_fraction = 0.0;  ///< raw mass outside the box over total raw mass
    bool warning = false;
    std::string message;
};

/// Resamples raw data (treated as zero outside its grid) onto the box
/// (-s eps^{-sigma0}, s eps^{-sigma0})^N with n cells per axis, s = box_scale,
/// and multiplies by a smooth radial cutoff equal to 1 for |x| <= R/2 and 0
/// for |x| >= R, R the box half-width. Warns when more than 1% of the raw
/// mass lies outside the box.
Truncation truncate_to_box(const RawData& raw, const ModelParams& p, double box_scale, int n);

/// The full regularized initial state with its construction report.
struct InitialData {
    State state;
    RawDataCheck raw_check;
    double l1_distance = 0.0;      ///< ||rho0eps - rho0||_{L^1}
    double lgamma_distance = 0.0;  ///< ||rho0eps - rho0||_{L^gamma}
    double floor = 0.0;
    int nu = 0;
    VelocityLift lift;
};

/// \throws ConfigError if the raw data violate rho0 >= 0 or m0 = 0 on vacuum.
InitialData regularize(const RawData& raw, const ModelParams& p, int nu = 0);

/// Raw data with rho0 > 0 taken directly as the initial state (u = m0 / rho0).
/// \throws ConfigError when rho0 has a non-positive sample.
State state_from_raw(const RawData& raw, const ModelParams& p);

/// Regularized: the mollified construction above. Raw: vacuum-free data used
/// as is, so runs at different epsilon start from identical states.
enum class InitialDataMode { Regularized, Raw };

std::string to_string(InitialDataMode m);
/// \throws ConfigError on an unknown name.
InitialDataMode parse_initial_data_mode(const std::string& name);

/// Initial state and report for either mode. In raw mode the distances and
/// the floor are zero and the lift moments are those of u = m0 / rho0.
InitialData prepare_initial(const RawData& raw, const ModelParams& p, InitialDataMode mode, int nu = 0);

}  // namespace degvisc
