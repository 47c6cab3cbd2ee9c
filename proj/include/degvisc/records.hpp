#pragma once

#include <string>
#include <vector>

namespace degvisc {

/// Level-set thresholds for v = rho^{1/2} and w = rho^{-1/2}.
struct LevelGrid {
    std::vector<double> k_v;
    std::vector<double> k_w;
};

/// Every functional monitored along a trajectory, evaluated on one state.
/// Rates are the semi-discrete time derivatives of the regularized system
/// (G always included, whatever the run's ablation switches).
struct FunctionalRecord {
    double t = 0.0;
    double h = 0.0;  ///< largest grid spacing

    double mass = 0.0;
    double kinetic = 0.0;
    double internal = 0.0;
    double energy = 0.0;

    double bd_core = 0.0;        ///< ∫ rho^{-1} (h_eps')^2 |∇rho|^2
    double bd_phi_sq = 0.0;      ///< ∫ rho |∇phi(rho)|^2
    double bd_cross = 0.0;       ///< ∫ rho u·∇phi(rho)
    double bd_combo = 0.0;       ///< kappa/2 bd_phi_sq + bd_cross
    double bd_exotic = 0.0;      ///< eps^{13/3} e^{-eps^-3} ∫(rho^{eps^-2+gt-1} + rho^{-eps^-2-1/8})
    double bd_exotic_log = 0.0;  ///< natural log of bd_exotic (meaningful when it underflows)
    bool bd_exotic_underflow = false;

    double mv = 0.0;
    double mom4 = 0.0;
    double mom5_rate = 0.0;  ///< eps ∫ rho |u|^5

    double visc_sym = 0.0;   ///< discrete ∫ h_eps |Du|^2 (A2D, C3D) or ∫ h_eps |∇u|^2 (B3D)
    double visc_grad = 0.0;  ///< discrete sqrt(eps) ∫ h_eps |∇u|^2 (augmentation)
    double visc_bulk = 0.0;  ///< discrete c ∫ g_eps (div u)^2
    double damp_dissip = 0.0;
    double cold_dissip = 0.0;    ///< eps ∫ rho^{-1} h_eps' |∇rho|^2 (A/B)
    double cold_energy = 0.0;    ///< -∫ (enthalpy + |u|^2/2) x continuity source
    double c_energy = 0.0;       ///< -∫ rho u·(C3D momentum extras)
    double pgrad_dissip = 0.0;   ///< ∫ rho^{gamma-3} h_eps |∇rho|^2
    double bd_visc = 0.0;        ///< ∫ h_eps |∇u|^2
    double qc_dissip_grad = 0.0; ///< eps ∫ (|∇v|^2 + |∇v|^4)(1 + |u|^2)
    double qc_dissip_floor = 0.0;///< eps^2 ∫ rho^{-2 p0 - 1}

    double energy_rate = 0.0;  ///< dE/dt
    double bd_rate = 0.0;      ///< d bd_combo / dt
    double bd_rate_G = 0.0;    ///< part of bd_rate driven by the cold diffusion
    double bb8_bound = 0.0;    ///< (1/2eps) ∫ phi' G^2 - (eps/2) ∫ rho^2 phi' (div u)^2
    double mv_rate = 0.0;      ///< d mv / dt

    double rho_min = 0.0;
    double rho_max = 0.0;
    double power_sum = 0.0;  ///< ∫ (rho + rho^{4 gamma - 1})

    double van_e135p = 0.0;  ///< eps ∫ h_eps' |∇rho|
    double van_e153 = 0.0;   ///< eps ∫ rho^{-1} h_eps' |∇rho|^2
    double van_e153p = 0.0;  ///< eps ∫ rho^{-1} h_eps' |∇rho|^2 |u|
    double van_e152 = 0.0;   ///< eps ∫ h_eps' |∇rho| |u|
    double van_e52p = 0.0;   ///< e^{-eps^-3} ∫ (rho^{eps^-2} + rho^{-eps^-2}) |u|
    double van_e52 = 0.0;    ///< sqrt(eps) ∫ (h_eps + |g_eps|) |∇u|
    double van_e53 = 0.0;    ///< eps^{1/3} ∫ (rho^{7/8} + rho^{gt}) |∇u|

    double coercivity_min = 0.0;
    double coercivity_scale = 0.0;

    bool damping_underflow = false;
    std::vector<double> nu_v;  ///< |{v > k}| for each k in LevelGrid::k_v
    std::vector<double> nu_w;  ///< |{w > k}| for each k in LevelGrid::k_w
};

/// Column names in CSV order (excluding the level-set columns).
std::vector<std::string> record_columns();

}  // namespace degvisc
