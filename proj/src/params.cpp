#include "degvisc/params.hpp"

#include "degvisc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace degvisc {

std::string to_string(SystemVariant v) {
    switch (v) {
        case SystemVariant::A2D: return "A2D";
        case SystemVariant::B3D: return "B3D";
        case SystemVariant::C3D: return "C3D";
    }
    return "?";
}

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::Thm2D_S2: return "Thm2D_S2";
        case Theorem::Thm2D_S1: return "Thm2D_S1";
        case Theorem::Thm3D_S1: return "Thm3D_S1";
        case Theorem::Thm3D_S2_alpha1: return "Thm3D_S2_alpha1";
        case Theorem::None: return "None";
    }
    return "?";
}

SystemVariant parse_variant(std::string_view name) {
    if (name == "A2D") return SystemVariant::A2D;
    if (name == "B3D") return SystemVariant::B3D;
    if (name == "C3D" || name == "C3D_alpha1") return SystemVariant::C3D;
    throw ConfigError("unknown system variant '" + std::string(name) + "' (expected A2D, B3D or C3D)");
}

int native_dimension(SystemVariant v) { return v == SystemVariant::A2D ? 2 : 3; }

RegimeReport validate_regime(double alpha, double gamma, int dim, SystemVariant system) {
    RegimeReport r;
    auto require = [&r](bool ok, const char* condition) {
        if (!ok) r.violated_conditions.emplace_back(condition);
    };

    if (!std::isfinite(alpha) || !std::isfinite(gamma)) {
        r.violated_conditions.emplace_back("finite α, γ");
        return r;
    }
    if (dim < 1 || dim > 3) {
        r.violated_conditions.emplace_back("N∈{1,2,3}");
        return r;
    }

    // Standing assumptions shared by every system.
    require(alpha > 0.5, "α>1/2");
    require(gamma > 1.0, "γ>1");

    if (system == SystemVariant::C3D) {
        require(alpha == 1.0, "α=1");
        if (dim == 3) {
            require(gamma < 3.0, "γ<3");
            r.theorem = Theorem::Thm3D_S2_alpha1;
        } else {
            r.notes.emplace_back("C3D below 3 dimensions is a reduced-dimension test configuration");
        }
    } else if (dim == 1) {
        r.notes.emplace_back("desk-scale extension: N=1 is not covered by the existence theorems");
    } else if (dim == 2) {
        require(gamma >= 2.0 * alpha - 1.0, "γ≥2α−1");
        r.theorem = system == SystemVariant::A2D ? Theorem::Thm2D_S2 : Theorem::Thm2D_S1;
    } else {
        if (system == SystemVariant::A2D) {
            r.violated_conditions.emplace_back("A2D requires N≤2 (use B3D or C3D in 3D)");
        } else if (alpha >= 0.75 && alpha <= 1.0) {
            // At alpha = 1 both branches apply; the [3/4, 1] branch is preferred.
            require(gamma < 6.0 * alpha - 3.0, "γ<6α−3");
            r.theorem = Theorem::Thm3D_S1;
        } else if (alpha > 1.0 && alpha < 2.0) {
            require(gamma >= 2.0 * alpha - 1.0, "γ≥2α−1");
            require(gamma <= 3.0 * alpha - 1.0, "γ≤3α−1");
            require(gamma < 3.0, "γ<3");
            r.theorem = Theorem::Thm3D_S1;
            r.needs_L4_data = true;
        } else {
            require(false, "α∈[3/4,2)");
        }
    }

    r.admissible = r.violated_conditions.empty();
    if (!r.admissible) {
        r.theorem = Theorem::None;
        r.needs_L4_data = false;
    }
    return r;
}

ModelParams derive_constants(double alpha, double gamma, double eta0, SystemVariant system, int dim) {
    if (dim == 0) dim = native_dimension(system);
    const RegimeReport report = validate_regime(alpha, gamma, dim, system);
    if (!report.admissible) {
        std::ostringstream msg;
        msg << "inadmissible regime (α=" << alpha << ", γ=" << gamma << ", N=" << dim << ", "
            << to_string(system) << "): violated";
        for (const auto& c : report.violated_conditions) msg << ' ' << c;
        throw RegimeError(msg.str());
    }
    if (!(eta0 > 0.0)) throw RegimeError("η₀ must be positive");

    ModelParams p;
    p.alpha = alpha;
    p.gamma = gamma;
    p.eta0 = eta0;
    p.system = system;
    p.p0 = 50;
    p.gamma_tilde = gamma + 1.0 / 6.0;
    if (system == SystemVariant::C3D) {
        p.epsilon0 = std::min(1e-10, eta0);
        p.sigma0 = 1e-10;
    } else {
        p.epsilon0 = std::min((2.0 * alpha - 1.0) * std::pow(16.0 * (alpha + gamma), -10.0), eta0);
        p.sigma0 = std::pow(8.0 * (alpha + gamma + 2.0), -8.0);
    }
    return p;
}

ModelParams make_params(double alpha, double gamma, double epsilon, double eta0, SystemVariant system, int dim) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw RegimeError("ε must be a finite non-negative number");
    ModelParams p = derive_constants(alpha, gamma, eta0, system, dim);
    p.epsilon = epsilon;
    return p;
}

}  // namespace degvisc
