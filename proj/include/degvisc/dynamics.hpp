#pragma once

#include "degvisc/calculus.hpp"
#include "degvisc/constitutive.hpp"
#include "degvisc/fields.hpp"
#include "degvisc/records.hpp"

#include <functional>
#include <string>
#include <vector>

namespace degvisc {

enum class Scheme { RK2, IMEX };

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& name);

/// Right-hand side split into its physical terms. Momentum terms are already
/// divided by rho. Unused terms of a variant are zero fields.
struct RhsTerms {
    SystemVariant variant = SystemVariant::A2D;

    // continuity
    ScalarField transport;   ///< -div(rho u)
    ScalarField source;      ///< G (A2D/B3D) or eps(v Δv + v div(|∇v|^2 ∇v) + rho^{-p0}) (C3D)
    double source_dirichlet = 0.0;  ///< C3D: discrete ∫|∇v|^2
    double source_quartic = 0.0;    ///< C3D: discrete ∫|∇v|^4
    double source_floor = 0.0;      ///< C3D: ∫rho^{-p0}

    // momentum
    VectorField advection;   ///< -u·∇u in skew-symmetric form
    VectorField pressure;    ///< -∇P / rho
    VectorField visc_main;   ///< div(h Du) (A2D, C3D) or div(h ∇u) (B3D)
    VectorField visc_aug;    ///< sqrt(eps) div(h ∇u) (A2D, C3D)
    VectorField visc_bulk;   ///< c ∇(g div u), c = 1 + sqrt(eps) for A2D, 1 for B3D
    VectorField damping;     ///< -damping u / rho
    VectorField c_extra;     ///< C3D: eps(v|∇v|^2 ∇v·∇u - rho^{-p0} u - rho|u|^3 u) / rho

    ScalarField enthalpy;    ///< gamma/(gamma-1) rho^{gamma-1}, so that ∇P/rho = ∇enthalpy
    bool damping_underflow = false;
};

struct RhsOptions {
    /// Ablation switch: drop the continuity source from the assembled rhs.
    bool disable_source = false;
};

struct Rhs {
    ScalarField drho_dt;
    VectorField du_dt;
};

/// \throws PositivityError on non-positive density, OverflowError from the
/// constitutive layer, TopologyError on a bc/grid mismatch.
RhsTerms rhs_terms(const State& state, SystemVariant variant, BCMode bc);
Rhs assemble(const RhsTerms& terms, const RhsOptions& opts = {});
Rhs rhs(const State& state, SystemVariant variant, BCMode bc, const RhsOptions& opts = {});

/// Explicit stability bound. With `implicit_density` the density-diffusion
/// restriction is dropped (IMEX).
/// \throws SolverError when the bound underflows.
double stable_dt(const State& state, SystemVariant variant, double cfl, bool implicit_density = false);

struct StepOptions {
    RhsOptions rhs;
    /// Stage densities below this value abort the step.
    double density_floor = 0.0;
    double solver_tol = 1e-10;
    int solver_max_iter = 5000;
};

/// One time step. `first_terms`, if given, receives the rhs terms of the
/// initial stage.
/// \throws PositivityError when a stage density drops to the floor,
/// SolverError when the IMEX linear solve fails.
State step(const State& state, double dt, Scheme scheme, SystemVariant variant, BCMode bc,
           const StepOptions& opts = {}, RhsTerms* first_terms = nullptr);

struct StepLogEntry {
    double t = 0.0;
    double dt = 0.0;
    double mass_before = 0.0;
    double mass_after = 0.0;
    double source_integral = 0.0;  ///< ∫ of the continuity source at the step start
    double dirichlet = 0.0;        ///< C3D only
    double quartic = 0.0;          ///< C3D only
    double floor_integral = 0.0;   ///< C3D only
};

struct RunControls {
    double cfl = 0.4;
    Scheme scheme = Scheme::RK2;
    /// Fixed step size; 0 selects the adaptive stable_dt.
    double dt_override = 0.0;
    /// Record functionals every this many steps (plus the first and last state).
    int record_stride = 1;
    /// Keep a snapshot every this many steps (plus first and last); 0 keeps only the endpoints.
    int snapshot_stride = 0;
    /// If positive, steps are shortened so records and snapshots land on multiples of this time.
    double sync_interval = 0.0;
    long max_steps = 50'000'000;
    /// Abort when density drops below floor_fraction times the initial mean density.
    double floor_fraction = 1e-12;
    RhsOptions rhs;
    LevelGrid levels;
    /// Called after each accepted step; may modify the state (used for perturbation controls).
    std::function<void(State&, long)> on_step;
    /// Called with every snapshot as it is taken (for persisting partial results).
    std::function<void(const State&)> on_snapshot;
};

struct Trajectory {
    SystemVariant variant = SystemVariant::A2D;
    BCMode bc;
    std::vector<State> snapshots;
    std::vector<FunctionalRecord> records;
    std::vector<StepLogEntry> steps;
    long nsteps = 0;
    bool aborted = false;
    std::string abort_reason;
    bool damping_underflow = false;

    const Grid& grid() const { return snapshots.front().grid(); }
};

/// Integrates to t_end. Positivity loss and overflow abort the run; the
/// trajectory then ends with the last good state and the abort reason.
/// \throws ConfigError on t_end < initial.t or an inadmissible configuration.
Trajectory run(const State& initial, SystemVariant variant, BCMode bc, double t_end, const RunControls& controls);

}  // namespace degvisc
