#pragma once

#include "degvisc/dynamics.hpp"

#include <array>
#include <string>
#include <vector>

namespace degvisc {

/// psi(x, t) = theta(t) prod_a f_a(x_a) with theta = (1 - (t - t0)/(T - t0))^2 and
/// f_a = trig(2 pi k_a (x_a - o_a)/L_a), times sin^2(pi (x_a - o_a)/L_a) on a
/// box so that psi has compact support. As a vector test function it is psi e_comp.
struct TestFunction {
    Grid grid;
    int comp = 0;
    bool cosine = false;
    std::array<int, 3> k{1, 1, 1};
    double amplitude = 1.0;
    double t0 = 0.0;
    double T = 1.0;

    struct Sample {
        double value;
        std::array<double, 3> grad;
        std::array<std::array<double, 3>, 3> hess;
    };
    /// Spatial factor and its derivatives at a cell center.
    Sample spatial(std::size_t cell) const;
    double theta(double t) const;
    double theta_dot(double t) const;
    std::string label() const;
};

/// The preset family: every component, both phases and k in {1..modes}^N
/// (2N modes^N functions), with theta running from 1 at t0 to 0 at T.
std::vector<TestFunction> test_family(const Grid& g, double t0, double T, int modes = 3);

/// R_c = ∫rho0 psi(0) + ∫∫(rho psi_t + rho u·∇psi), trapezoid in time over the snapshots.
/// \throws ConfigError with fewer than two snapshots.
double continuity_residual(const Trajectory& tr, const TestFunction& psi);

/// ∫∫ S psi for the continuity source S (G for A/B) over the snapshots; for
/// an epsilon-system trajectory R_c = -(this) up to time quadrature.
double continuity_source_pairing(const Trajectory& tr, const TestFunction& psi);

/// Momentum residual with the viscous brackets in their integrated-by-parts
/// form (only rho^{alpha-1/2}, its gradient and sqrt(rho) u enter). Stress
/// split 1/2 grad u + 1/2 grad u^T for A2D/C3D and grad u for B3D.
double momentum_residual(const Trajectory& tr, const TestFunction& phi);

/// Same residual with the naive brackets ∫∫ h ∇u : ∇phi etc. from centered ∇u.
double momentum_residual_naive(const Trajectory& tr, const TestFunction& phi);

struct ResidualRow {
    std::string label;
    double r_c = 0.0;
    double r_m = 0.0;
    double source_pairing = 0.0;
};

std::vector<ResidualRow> residual_table(const Trajectory& tr, int modes = 3);

/// CSV "label,R_c,R_m,source_pairing,level".
void write_residual_csv(const std::string& path, const std::vector<ResidualRow>& rows, int level);

}  // namespace degvisc
