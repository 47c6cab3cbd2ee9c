#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace degvisc {

/// The three regularized approximation systems.
enum class SystemVariant {
    A2D,  ///< symmetric stress with sqrt(eps) augmentation
    B3D,  ///< full-gradient stress
    C3D,  ///< alpha = 1 system with p0 = 50 source terms
};

enum class Theorem { Thm2D_S2, Thm2D_S1, Thm3D_S1, Thm3D_S2_alpha1, None };

std::string to_string(SystemVariant v);
std::string to_string(Theorem t);
/// Accepts "A2D", "B3D", "C3D" and "C3D_alpha1".
SystemVariant parse_variant(std::string_view name);
/// Dimension the variant is stated for (2 for A2D, 3 otherwise).
int native_dimension(SystemVariant v);

struct ModelParams {
    double alpha = 1.0;
    double gamma = 2.0;
    double epsilon = 0.05;
    double eta0 = 1.0;
    SystemVariant system = SystemVariant::A2D;
    int p0 = 50;
    double gamma_tilde = 2.0 + 1.0 / 6.0;
    double epsilon0 = 0.0;
    double sigma0 = 0.0;

    /// Whether the user epsilon lies inside the theoretical range (0, epsilon0].
    bool epsilon_in_theory_range() const { return epsilon > 0.0 && epsilon <= epsilon0; }
};

struct RegimeReport {
    bool admissible = false;
    Theorem theorem = Theorem::None;
    std::vector<std::string> violated_conditions;
    bool needs_L4_data = false;
    std::vector<std::string> notes;
};

/// Checks (alpha, gamma) against the existence theorem matching (N, system).
/// Never throws; an inadmissible regime lists the failing conditions.
RegimeReport validate_regime(double alpha, double gamma, int dim, SystemVariant system);

/// Derived constants for an admissible regime. The regime is checked in
/// `dim` dimensions (0 selects the variant's native dimension). Epsilon is
/// left at its default and set by the caller.
/// \throws RegimeError when validate_regime reports the regime inadmissible.
ModelParams derive_constants(double alpha, double gamma, double eta0, SystemVariant system, int dim = 0);

/// derive_constants followed by setting epsilon (epsilon >= 0; 0 disables regularization).
ModelParams make_params(double alpha, double gamma, double epsilon, double eta0, SystemVariant system,
                        int dim = 0);

}  // namespace degvisc
