#pragma once

#include "degvisc/calculus.hpp"
#include "degvisc/fields.hpp"
#include "degvisc/params.hpp"

#include <cmath>

namespace degvisc {

/// x^e with exact fast paths for 0, 1, 2, 1/2 and -1/2; otherwise exp(e ln x).
inline double power(double x, double e) {
    if (e == 1.0) return x;
    if (e == 0.0) return 1.0;
    if (e == 2.0) return x * x;
    if (e == 0.5) return std::sqrt(x);
    if (e == -0.5) return 1.0 / std::sqrt(x);
    return std::exp(e * std::log(x));
}

/// Pointwise values of the regularized coefficient family at one density.
struct CoeffPoint {
    double h;            ///< rho^alpha
    double g;            ///< (alpha - 1) rho^alpha
    double h_eps;        ///< rho^alpha + eps^(1/3) (rho^(7/8) + rho^gamma_tilde)
    double h_eps_prime;  ///< d h_eps / d rho
    double g_eps;        ///< rho h_eps' - h_eps
    double P;            ///< rho^gamma
    double phi_prime;    ///< h_eps' / rho
};

/// The coefficient laws with the parameter-only factors precomputed; one log
/// per evaluation. Used by the per-cell loops.
class CoeffLaw {
public:
    explicit CoeffLaw(const ModelParams& p);
    /// The regularized law.
    CoeffPoint regularized(double rho) const;
    /// The law the variant's momentum equation uses (see viscosity_at).
    CoeffPoint viscosity(double rho) const;

private:
    double alpha_, gamma_, gt_, e13_;
    bool csys_;
};

/// The regularized law for systems A and B, evaluated for any variant.
CoeffPoint coeffs_at(double rho, const ModelParams& p);

/// The viscosity law the variant's momentum equation actually uses: the
/// regularized law for A2D/B3D, and h = rho, g = 0 for C3D.
CoeffPoint viscosity_at(double rho, const ModelParams& p);

struct CoeffSet {
    ScalarField h, g, h_eps, h_eps_prime, g_eps, P, phi_prime;
};

/// Pointwise evaluation of the regularized coefficient family.
/// \throws PositivityError if rho <= 0 somewhere.
CoeffSet eval_coeffs(const ScalarField& rho, const ModelParams& p);

/// \throws PositivityError naming the first non-positive cell.
void require_positive(const ScalarField& rho, const char* context);

/// Log of the damping coefficient e^{-eps^-3}(rho^{eps^-2} + rho^{-eps^-2}).
/// Returns -infinity when epsilon = 0 (regularization off).
double log_damping(double rho, double epsilon);

struct DampingField {
    ScalarField coef;
    bool underflow = false;  ///< some cell's positive coefficient was clamped to zero
};

/// Damping coefficient evaluated in the log domain.
/// \throws OverflowError with the offending cell if it exceeds the double range.
DampingField damping_coefficient(const ScalarField& rho, const ModelParams& p);

/// The cold-diffusion term eps rho^{1/2} div(rho^{-1/2} h_eps' grad rho).
/// Discretized in conservative face form so that its integral equals
/// -cold_dissipation/2 to round-off on the torus.
ScalarField cold_diffusion_G(const ScalarField& rho, const ModelParams& p, BCMode bc);

/// eps * integral of rho^{-1} h_eps' |grad rho|^2 in the face form matching
/// cold_diffusion_G.
double cold_dissipation(const ScalarField& rho, const ModelParams& p, BCMode bc);

/// The five System-C term fields (without the eps prefactor).
struct QTerms {
    ScalarField v_lap_v;      ///< v Δv
    ScalarField v_div_flux;   ///< v div(|∇v|^2 ∇v)
    ScalarField rho_mp0;      ///< rho^{-p0}
    VectorField rho_u3u;      ///< rho |u|^3 u
    VectorField v_grad_work;  ///< v |∇v|^2 (∇v·∇u), component j = v|∇v|^2 ∂_i v ∂_i u_j
    double dirichlet = 0.0;   ///< -∫ v Δv, the discrete ∫|∇v|^2
    double quartic = 0.0;     ///< -∫ v div(|∇v|^2∇v), the discrete ∫|∇v|^4
};

/// \throws PositivityError on non-positive density; OverflowError when
/// rho^{-p0} leaves the double range.
QTerms qsystem_coeffs(const ScalarField& rho, const VectorField& u, const ModelParams& p, BCMode bc);

/// min{N alpha - (N - 1), 1}.
double coercivity_constant(int dim, double alpha);

struct CoercivityResult {
    double min_value = 0.0;  ///< min over cells of 4(h|Du|^2 + g (div u)^2) - c h |Du|^2
    double scale = 0.0;      ///< max over cells of 4 h_eps |Du|^2 + 4 |g_eps| (div u)^2
    bool holds(double rel_tol = 1e-12) const { return min_value >= -rel_tol * scale; }
};

CoercivityResult stress_coercivity_check(const VectorField& u, const ScalarField& rho, const ModelParams& p,
                                         BCMode bc);

}  // namespace degvisc
