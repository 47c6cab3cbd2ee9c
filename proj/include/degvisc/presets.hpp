#pragma once

#include "degvisc/dynamics.hpp"
#include "degvisc/initdata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace degvisc {

/// Names accepted by `preset`.
const std::vector<std::string>& preset_names();

/// Analytic raw data sampled at cell centers.
/// uniform: rho0 = 1, m0 = 0.
/// gaussian-bump: 1 + 0.5 bump at the domain center, m0 = 0.
/// vacuum-patch: rho0 = 0 on a ball of radius 0.15 L, a C^1 ramp to 1 over 0.1 L, m0 = rho0 U.
/// two-bump: 1 + 0.6 and 0.3 bumps at asymmetric centers, m0 = rho0 U.
/// random-smooth: band-limited (|k| <= 3) fields from a seeded generator.
/// \throws ConfigError on an unknown name.
RawData preset(const std::string& name, const Grid& grid, std::uint64_t seed = 0);

/// Manufactured solution rho = 1 + a sin(2 pi s), u = (b, c) sin(2 pi s) e^{-t},
/// s = x (1D) or x + y (2D) on the unit torus, with its forcing tables.
class Manufactured {
public:
    /// \throws ConfigError for dim outside {1, 2}.
    Manufactured(SystemVariant variant, int dim);

    const ModelParams& params() const { return params_; }
    SystemVariant variant() const { return variant_; }
    int dim() const { return dim_; }

    State exact(const Grid& grid, double t) const;
    /// Time derivative of the exact solution.
    Rhs exact_rate(const Grid& grid, double t) const;
    /// d_t(exact) - rhs(exact) of the continuous system.
    Rhs forcing(const Grid& grid, double t) const;
    /// (A2D viscous rhs - B3D viscous rhs)/rho on the exact solution.
    VectorField stress_difference(const Grid& grid, double t) const;

private:
    double series(const double* row, double s) const;
    SystemVariant variant_;
    int dim_;
    ModelParams params_;
    const double* table_;
};

}  // namespace degvisc
