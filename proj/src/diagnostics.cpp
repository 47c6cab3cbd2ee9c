#include "degvisc/diagnostics.hpp"

#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/snapshot.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <utility>

namespace degvisc {

using detail::for_cells;

namespace {

struct Column {
    const char* name;
    double FunctionalRecord::*field;
};

// CSV column order. Boolean flags are appended separately.
const Column kColumns[] = {
    {"t", &FunctionalRecord::t},
    {"h", &FunctionalRecord::h},
    {"mass", &FunctionalRecord::mass},
    {"kinetic", &FunctionalRecord::kinetic},
    {"internal", &FunctionalRecord::internal},
    {"energy", &FunctionalRecord::energy},
    {"bd_core", &FunctionalRecord::bd_core},
    {"bd_phi_sq", &FunctionalRecord::bd_phi_sq},
    {"bd_cross", &FunctionalRecord::bd_cross},
    {"bd_combo", &FunctionalRecord::bd_combo},
    {"bd_exotic", &FunctionalRecord::bd_exotic},
    {"bd_exotic_log", &FunctionalRecord::bd_exotic_log},
    {"mv", &FunctionalRecord::mv},
    {"mom4", &FunctionalRecord::mom4},
    {"mom5_rate", &FunctionalRecord::mom5_rate},
    {"visc_sym", &FunctionalRecord::visc_sym},
    {"visc_grad", &FunctionalRecord::visc_grad},
    {"visc_bulk", &FunctionalRecord::visc_bulk},
    {"damp_dissip", &FunctionalRecord::damp_dissip},
    {"cold_dissip", &FunctionalRecord::cold_dissip},
    {"cold_energy", &FunctionalRecord::cold_energy},
    {"c_energy", &FunctionalRecord::c_energy},
    {"pgrad_dissip", &FunctionalRecord::pgrad_dissip},
    {"bd_visc", &FunctionalRecord::bd_visc},
    {"qc_dissip_grad", &FunctionalRecord::qc_dissip_grad},
    {"qc_dissip_floor", &FunctionalRecord::qc_dissip_floor},
    {"energy_rate", &FunctionalRecord::energy_rate},
    {"bd_rate", &FunctionalRecord::bd_rate},
    {"bd_rate_G", &FunctionalRecord::bd_rate_G},
    {"bb8_bound", &FunctionalRecord::bb8_bound},
    {"mv_rate", &FunctionalRecord::mv_rate},
    {"rho_min", &FunctionalRecord::rho_min},
    {"rho_max", &FunctionalRecord::rho_max},
    {"power_sum", &FunctionalRecord::power_sum},
    {"van_e135p", &FunctionalRecord::van_e135p},
    {"van_e153", &FunctionalRecord::van_e153},
    {"van_e153p", &FunctionalRecord::van_e153p},
    {"van_e152", &FunctionalRecord::van_e152},
    {"van_e52p", &FunctionalRecord::van_e52p},
    {"van_e52", &FunctionalRecord::van_e52},
    {"van_e53", &FunctionalRecord::van_e53},
    {"coercivity_min", &FunctionalRecord::coercivity_min},
    {"coercivity_scale", &FunctionalRecord::coercivity_scale},
};

// integral from 1 to rho of s^a ds
// integral from 1 to rho of s^a ds, given L = ln rho
double power_primitive(double L, double a) {
    const double b = a + 1.0;
    if (std::abs(b) < 1e-14) return L;
    return std::expm1(b * L) / b;
}

// log of sum of exp(x_i), skipping -inf entries
double log_sum_exp(const std::vector<double>& x) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : x) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    std::vector<double> e(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) e[i] = std::exp(x[i] - m);
    return m + std::log(pairwise_sum(e.data(), e.size()));
}

ModelParams params_for(const State& s, SystemVariant variant) {
    ModelParams p = s.params;
    p.system = variant;
    return p;
}

double dot_cells(const Grid& g, const VectorField& a, const VectorField& b, const ScalarField* weight) {
    return integrate_cells(g, [&](std::size_t k) {
        double s = 0.0;
        for (int j = 0; j < g.dim; ++j) s += a(j, k) * b(j, k);
        return weight ? s * (*weight)[k] : s;
    });
}

}  // namespace

std::vector<std::string> record_columns() {
    std::vector<std::string> out;
    for (const auto& c : kColumns) out.emplace_back(c.name);
    out.emplace_back("bd_exotic_underflow");
    out.emplace_back("damping_underflow");
    return out;
}

std::vector<double> record_values(const FunctionalRecord& r) {
    std::vector<double> out;
    for (const auto& c : kColumns) out.push_back(r.*(c.field));
    out.push_back(r.bd_exotic_underflow ? 1.0 : 0.0);
    out.push_back(r.damping_underflow ? 1.0 : 0.0);
    return out;
}

double bd_potential(double rho, const ModelParams& p) {
    const double L = std::log(rho);
    if (p.system == SystemVariant::C3D) return L;
    const double e13 = std::cbrt(std::max(p.epsilon, 0.0));
    return p.alpha * power_primitive(L, p.alpha - 2.0) +
           e13 * (0.875 * power_primitive(L, -1.125) + p.gamma_tilde * power_primitive(L, p.gamma_tilde - 2.0));
}

FunctionalRecord record(const State& state, SystemVariant variant, BCMode bc, const LevelGrid& levels,
                        const RhsTerms* cached) {
    const Grid& g = state.grid();
    require_compatible(g, bc);
    require_positive(state.rho, "record");
    check_finite(state.u, "velocity");
    RhsTerms own;
    if (!cached) {
        own = rhs_terms(state, variant, bc);
        cached = &own;
    }
    const RhsTerms& T = *cached;
    const ModelParams p = params_for(state, variant);
    const ScalarField& rho = state.rho;
    const VectorField& u = state.u;
    const int d = g.dim;
    const double eps = std::max(p.epsilon, 0.0);
    const double se = std::sqrt(eps);
    const double e13 = std::cbrt(eps);
    const bool csys = variant == SystemVariant::C3D;

    FunctionalRecord r;
    r.t = state.t;
    r.h = g.max_spacing();

    // Pointwise coefficient fields.
    ScalarField hv(g), hpv(g), phip(g), phi(g), hreg(g), hpreg(g), greg(g), Pv(g), low(g);
    const CoeffLaw law(p);
    for_cells(g, [&](std::size_t k) {
        const CoeffPoint c = law.regularized(rho[k]);
        const CoeffPoint v = csys ? law.viscosity(rho[k]) : c;
        hv[k] = v.h_eps;
        hpv[k] = v.h_eps_prime;
        phip[k] = v.phi_prime;
        phi[k] = bd_potential(rho[k], p);
        hreg[k] = c.h_eps;
        hpreg[k] = c.h_eps_prime;
        greg[k] = c.g_eps;
        Pv[k] = c.P;
        // rho^{7/8} + rho^{gamma_tilde}
        low[k] = e13 > 0.0 ? (c.h_eps - c.h) / e13 : power(rho[k], 0.875) + power(rho[k], p.gamma_tilde);
    });
    const VectorField grho = gradient(rho, bc);
    const VectorField dphi = gradient(phi, bc);
    const VelocityGradient G = sym_gradient(u, bc);

    r.mass = integrate(rho);
    r.kinetic = integrate_cells(g, [&](std::size_t k) { return 0.5 * rho[k] * u.norm2_at(k); });
    r.internal = integrate_cells(g, [&](std::size_t k) { return Pv[k] / (p.gamma - 1.0); });
    r.energy = r.kinetic + r.internal;

    r.bd_core = integrate_cells(g, [&](std::size_t k) { return hpv[k] * hpv[k] * grho.norm2_at(k) / rho[k]; });
    r.bd_phi_sq = integrate_cells(g, [&](std::size_t k) { return rho[k] * dphi.norm2_at(k); });
    r.bd_cross = dot_cells(g, u, dphi, &rho);
    const double kappa = variant == SystemVariant::B3D ? 1.0 : 1.0 + se;
    r.bd_combo = 0.5 * kappa * r.bd_phi_sq + r.bd_cross;

    if (!csys && eps > 0.0) {
        const double e2 = 1.0 / (eps * eps);
        std::vector<double> logs(2 * g.size());
        for_cells(g, [&](std::size_t k) {
            const double L = std::log(rho[k]);
            logs[2 * k] = (e2 + p.gamma_tilde - 1.0) * L;
            logs[2 * k + 1] = (-e2 - 0.125) * L;
        });
        r.bd_exotic_log = (13.0 / 3.0) * std::log(eps) - e2 / eps + log_sum_exp(logs) + std::log(g.cell_volume());
        if (r.bd_exotic_log > 709.0) throw OverflowError("exotic BD term overflows", 0);
        if (r.bd_exotic_log < -708.0) {
            r.bd_exotic_underflow = true;
        } else {
            r.bd_exotic = std::exp(r.bd_exotic_log);
        }
    } else {
        r.bd_exotic_log = -std::numeric_limits<double>::infinity();
    }

    r.mv = integrate_cells(g, [&](std::size_t k) {
        const double a = std::numbers::e + u.norm2_at(k);
        return rho[k] * a * std::log(a);
    });
    r.mom4 = integrate_cells(g, [&](std::size_t k) {
        const double s = u.norm2_at(k);
        return rho[k] * s * s;
    });
    r.mom5_rate = eps * integrate_cells(g, [&](std::size_t k) {
        const double s = u.norm2_at(k);
        return rho[k] * s * s * std::sqrt(s);
    });

    // Energy pairings of the individual rhs terms.
    r.visc_sym = -dot_cells(g, u, T.visc_main, &rho);
    r.visc_grad = -dot_cells(g, u, T.visc_aug, &rho);
    r.visc_bulk = -dot_cells(g, u, T.visc_bulk, &rho);
    r.damp_dissip = -dot_cells(g, u, T.damping, &rho);
    r.c_energy = -dot_cells(g, u, T.c_extra, &rho);
    r.cold_energy = -integrate_cells(g, [&](std::size_t k) {
        return (T.enthalpy[k] + 0.5 * u.norm2_at(k)) * T.source[k];
    });
    const double transport_pair =
        dot_cells(g, u, T.advection, &rho) + dot_cells(g, u, T.pressure, &rho) +
        integrate_cells(g, [&](std::size_t k) { return (T.enthalpy[k] + 0.5 * u.norm2_at(k)) * T.transport[k]; });
    r.energy_rate =
        transport_pair - r.visc_sym - r.visc_grad - r.visc_bulk - r.damp_dissip - r.c_energy - r.cold_energy;

    r.cold_dissip = csys ? 0.0 : cold_dissipation(rho, p, bc);
    r.pgrad_dissip = integrate_cells(
        g, [&](std::size_t k) { return Pv[k] / (rho[k] * rho[k] * rho[k]) * hv[k] * grho.norm2_at(k); });
    r.bd_visc = integrate_cells(g, [&](std::size_t k) { return hv[k] * G.grad_norm2(k); });

    if (csys) {
        ScalarField v(g);
        for_cells(g, [&](std::size_t k) { v[k] = std::sqrt(rho[k]); });
        const VectorField gv = gradient(v, bc);
        r.qc_dissip_grad = eps * integrate_cells(g, [&](std::size_t k) {
            const double q = gv.norm2_at(k);
            return (q + q * q) * (1.0 + u.norm2_at(k));
        });
        std::vector<double> logs(g.size());
        for_cells(g, [&](std::size_t k) { logs[k] = (-2.0 * p.p0 - 1.0) * std::log(rho[k]); });
        const double lg = log_sum_exp(logs) + std::log(g.cell_volume());
        if (lg > 709.0) throw OverflowError("rho^{-2p0-1} integral overflows", 0);
        r.qc_dissip_floor = eps * eps * std::exp(lg);
    }

    // Chain-rule rates of the BD combination and the MV functional.
    const Rhs full = assemble(T);
    ScalarField divX(g);
    {
        ScalarField q(g);
        for (int a = 0; a < d; ++a) {
            for_cells(g, [&](std::size_t k) { q[k] = rho[k] * (kappa * dphi(a, k) + u(a, k)); });
            add_ddx(divX, q, a, Parity::Odd, 1.0);
        }
    }
    ScalarField dB(g);  // dB/drho per unit volume
    for_cells(g, [&](std::size_t k) {
        double ud = 0.0;
        for (int a = 0; a < d; ++a) ud += u(a, k) * dphi(a, k);
        dB[k] = 0.5 * kappa * dphi.norm2_at(k) + ud - phip[k] * divX[k];
    });
    r.bd_rate = integrate_cells(g, [&](std::size_t k) { return dB[k] * full.drho_dt[k]; }) +
                dot_cells(g, dphi, full.du_dt, &rho);
    r.bd_rate_G = integrate_cells(g, [&](std::size_t k) { return dB[k] * T.source[k]; });
    if (!csys && eps > 0.0) {
        r.bb8_bound = integrate_cells(g, [&](std::size_t k) {
            const double dv = G.div(k);
            return 0.5 / eps * phip[k] * T.source[k] * T.source[k] -
                   0.5 * eps * rho[k] * rho[k] * phip[k] * dv * dv;
        });
    }
    r.mv_rate = integrate_cells(g, [&](std::size_t k) {
        const double a = std::numbers::e + u.norm2_at(k);
        const double la = std::log(a);
        double udot = 0.0;
        for (int j = 0; j < d; ++j) udot += u(j, k) * full.du_dt(j, k);
        return a * la * full.drho_dt[k] + 2.0 * rho[k] * (la + 1.0) * udot;
    });

    // Energy rate by the chain rule must agree with the pairing sum above;
    // the pairing sum is kept since it separates the dissipations.

    r.rho_min = min_value(rho);
    r.rho_max = max_value(rho);
    r.power_sum = integrate_cells(g, [&](std::size_t k) {
        const double P2 = Pv[k] * Pv[k];
        return rho[k] + P2 * P2 / rho[k];
    });

    // Vanishing terms, always with the regularized coefficient law.
    r.van_e135p = eps * integrate_cells(g, [&](std::size_t k) { return hpreg[k] * std::sqrt(grho.norm2_at(k)); });
    r.van_e153 = eps * integrate_cells(g, [&](std::size_t k) { return hpreg[k] * grho.norm2_at(k) / rho[k]; });
    r.van_e153p = eps * integrate_cells(g, [&](std::size_t k) {
        return hpreg[k] * grho.norm2_at(k) / rho[k] * std::sqrt(u.norm2_at(k));
    });
    r.van_e152 = eps * integrate_cells(g, [&](std::size_t k) {
        return hpreg[k] * std::sqrt(grho.norm2_at(k) * u.norm2_at(k));
    });
    if (eps > 0.0) {
        const DampingField damp = damping_coefficient(rho, p);
        r.van_e52p = integrate_cells(g, [&](std::size_t k) { return damp.coef[k] * std::sqrt(u.norm2_at(k)); });
    }
    r.van_e52 = se * integrate_cells(g, [&](std::size_t k) {
        return (hreg[k] + std::abs(greg[k])) * std::sqrt(G.grad_norm2(k));
    });
    r.van_e53 = e13 * integrate_cells(g, [&](std::size_t k) {
        return low[k] * std::sqrt(G.grad_norm2(k));
    });

    const CoercivityResult coer = stress_coercivity_check(u, rho, p, bc);
    r.coercivity_min = coer.min_value;
    r.coercivity_scale = coer.scale;
    r.damping_underflow = T.damping_underflow;

    if (!levels.k_v.empty() || !levels.k_w.empty()) {
        ScalarField v(g), w(g);
        for_cells(g, [&](std::size_t k) {
            v[k] = std::sqrt(rho[k]);
            w[k] = 1.0 / v[k];
        });
        for (double k : levels.k_v) r.nu_v.push_back(level_set_measure(v, k, LevelSide::Above));
        for (double k : levels.k_w) r.nu_w.push_back(level_set_measure(w, k, LevelSide::Above));
    }
    return r;
}

LevelGrid default_levels(const ScalarField& rho0, int points) {
    if (points < 2) throw ConfigError("level grid needs at least two points");
    const double vmin = std::sqrt(std::max(min_value(rho0), 0.0));
    const double vmax = std::sqrt(max_value(rho0));
    LevelGrid lg;
    auto fill = [&](std::vector<double>& out, double lo, double hi) {
        lo *= 0.9;
        hi *= 1.1;
        for (int i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * i / (points - 1));
    };
    fill(lg.k_v, vmin, vmax);
    if (vmin > 0.0) fill(lg.k_w, 1.0 / vmax, 1.0 / vmin);
    return lg;
}

std::vector<double> accumulate(const std::vector<FunctionalRecord>& recs, double FunctionalRecord::*field) {
    std::vector<double> out(recs.size(), 0.0);
    for (std::size_t k = 1; k < recs.size(); ++k)
        out[k] = out[k - 1] + 0.5 * (recs[k].t - recs[k - 1].t) * (recs[k].*field + recs[k - 1].*field);
    return out;
}

namespace {

double max_interval(const std::vector<FunctionalRecord>& recs) {
    double m = 0.0;
    for (std::size_t k = 1; k < recs.size(); ++k) m = std::max(m, recs[k].t - recs[k - 1].t);
    return m;
}

// Two-sided chain-rule balance of a functional against its recorded rate:
// the secant over each record interval against the trapezoid mean of the
// endpoint rates, so smooth dynamics leave an O(dt^2) residual.
void balance(InequalityReport& rep, const std::vector<FunctionalRecord>& recs, double FunctionalRecord::*value,
             double FunctionalRecord::*rate, double scale, double c_tol, const char* label) {
    const double h2 = recs.front().h * recs.front().h;
    bool flagged = false;
    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
        const double dt = recs[k + 1].t - recs[k].t;
        const double res = (recs[k + 1].*value - recs[k].*value) / dt - 0.5 * (recs[k].*rate + recs[k + 1].*rate);
        const double tol = c_tol * (dt + h2) * scale;
        rep.residuals.push_back(res);
        const double viol = std::abs(res) - tol;
        if (k == 0 || viol > rep.worst_violation) {
            rep.worst_violation = viol;
            rep.worst_time = recs[k].t;
        }
        rep.worst_abs_residual = std::max(rep.worst_abs_residual, std::abs(res));
        if (viol > 0.0) flagged = true;
    }
    rep.tolerance = c_tol * (max_interval(recs) + h2) * scale;
    if (flagged) {
        rep.flagged = true;
        rep.flags.push_back(std::string(label) + " balance residual exceeds tolerance");
    }
}

bool too_few(InequalityReport& rep, const Trajectory& tr) {
    if (tr.records.size() >= 2) return false;
    rep.applicable = false;
    rep.flags.push_back("fewer than two records");
    return true;
}

}  // namespace

InequalityReport energy_budget(const Trajectory& tr, double c_tol) {
    InequalityReport rep;
    rep.name = "energy";
    if (too_few(rep, tr)) return rep;
    const auto& recs = tr.records;
    const double E0 = recs.front().energy;
    const double h2 = recs.front().h * recs.front().h;
    for (std::size_t k = 0; k + 1 < recs.size(); ++k) {
        const double dt = recs[k + 1].t - recs[k].t;
        const double dissip = -recs[k].energy_rate;
        const double res = (recs[k + 1].energy - recs[k].energy) / dt + dissip;
        const double tol = c_tol * (dt + h2) * E0;
        rep.residuals.push_back(res);
        if (k == 0 || res - tol > rep.worst_violation) {
            rep.worst_violation = res - tol;
            rep.worst_time = recs[k].t;
        }
        rep.worst_abs_residual = std::max(rep.worst_abs_residual, std::abs(res));
    }
    rep.tolerance = c_tol * (max_interval(recs) + h2) * E0;
    if (rep.worst_violation > 0.0) {
        rep.flagged = true;
        rep.flags.push_back("energy increases faster than the dissipation allows");
    }
    double sup_e = 0.0;
    for (const auto& r : recs) sup_e = std::max(sup_e, r.energy);
    rep.metrics["E0"] = E0;
    rep.metrics["sup_energy"] = sup_e;
    rep.metrics["max_dt"] = max_interval(recs);
    return rep;
}

InequalityReport bd_entropy_budget(const Trajectory& tr, double c_tol) {
    InequalityReport rep;
    rep.name = "bd_entropy";
    if (too_few(rep, tr)) return rep;
    const auto& recs = tr.records;
    const double E0 = recs.front().energy;
    const double span = recs.back().t - recs.front().t;
    const double h2 = recs.front().h * recs.front().h;

    double sup_rate = 0.0, sup_core = 0.0;
    for (const auto& r : recs) {
        sup_rate = std::max(sup_rate, std::abs(r.bd_rate));
        sup_core = std::max(sup_core, r.bd_core);
    }
    const double scale = E0 + std::abs(recs.front().bd_combo) + sup_rate * span;
    balance(rep, recs, &FunctionalRecord::bd_combo, &FunctionalRecord::bd_rate, scale, c_tol, "BD combination");

    // The cold-diffusion contribution must be at least as dissipative as its lower bound.
    double worst_sign = std::numeric_limits<double>::infinity();
    for (const auto& r : recs) {
        const double margin = -r.bd_rate_G - r.bb8_bound;
        const double tol = c_tol * h2 * (std::abs(r.bd_rate_G) + std::abs(r.bb8_bound)) + 1e-300;
        worst_sign = std::min(worst_sign, margin / tol);
        if (margin < -tol) {
            rep.flagged = true;
            rep.flags.push_back("cold-diffusion contribution to the BD rate has the wrong sign at t=" +
                                fmt17(r.t));
            break;
        }
    }
    rep.metrics["sign_margin_over_tol"] = worst_sign;

    const auto acc_visc = accumulate(recs, &FunctionalRecord::bd_visc);
    const auto acc_pgrad = accumulate(recs, &FunctionalRecord::pgrad_dissip);
    for (std::size_t k = 1; k < recs.size(); ++k) {
        if (!(acc_pgrad[k] >= acc_pgrad[k - 1]) || !(acc_visc[k] >= acc_visc[k - 1]) ||
            !std::isfinite(acc_pgrad[k]) || !std::isfinite(acc_visc[k])) {
            rep.flagged = true;
            rep.flags.push_back("accumulated dissipation not finite and non-decreasing");
            break;
        }
    }

    std::vector<double> L(recs.size());
    double c_obs = 0.0;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        L[k] = recs[k].bd_combo + recs[k].bd_exotic + acc_visc[k] + acc_pgrad[k];
        c_obs = std::max(c_obs, (L[k] - L[0]) / E0);
    }
    // Growth over the second half of the window against the first half.
    const double t_mid = recs.front().t + 0.5 * span;
    std::size_t mid = 0;
    while (mid + 1 < recs.size() && recs[mid + 1].t <= t_mid) ++mid;
    const double g1 = L[mid] - L[0];
    const double g2 = L.back() - L[mid];
    const double growth_tol = c_tol * (max_interval(recs) + h2) * scale;
    if (g2 > 2.0 * std::max(g1, 0.0) + growth_tol) {
        rep.flagged = true;
        rep.flags.push_back("BD combination grows super-linearly in time");
    }

    rep.metrics["C_obs"] = c_obs;
    rep.metrics["core_initial"] = recs.front().bd_core;
    rep.metrics["core_sup"] = sup_core;
    rep.metrics["core_ratio"] = recs.front().bd_core > 0.0 ? sup_core / recs.front().bd_core
                                                          : (sup_core > 0.0 ? INFINITY : 1.0);
    rep.metrics["accumulated_pgrad"] = acc_pgrad.back();
    rep.metrics["accumulated_visc"] = acc_visc.back();
    rep.metrics["growth_first_half"] = g1;
    rep.metrics["growth_second_half"] = g2;
    return rep;
}

InequalityReport mv_budget(const Trajectory& tr, double c_tol) {
    InequalityReport rep;
    rep.name = "mellet_vasseur";
    const ModelParams& p = tr.snapshots.front().params;
    if (p.gamma < 0.5 * (1.0 + p.alpha)) {
        rep.applicable = false;
        rep.flags.push_back("regime gate gamma >= (1 + alpha)/2 not met; check skipped");
        return rep;
    }
    if (too_few(rep, tr)) return rep;
    const auto& recs = tr.records;
    const double span = recs.back().t - recs.front().t;
    double sup_rate = 0.0, sup_mv = 0.0, sup_pow = 0.0;
    for (const auto& r : recs) {
        sup_rate = std::max(sup_rate, std::abs(r.mv_rate));
        sup_mv = std::max(sup_mv, r.mv);
        sup_pow = std::max(sup_pow, r.power_sum);
    }
    const double scale = recs.front().mv + sup_rate * span;
    balance(rep, recs, &FunctionalRecord::mv, &FunctionalRecord::mv_rate, scale, c_tol, "MV functional");
    if (!std::isfinite(sup_mv)) {
        rep.flagged = true;
        rep.flags.push_back("MV functional not finite");
    }
    rep.metrics["mv_initial"] = recs.front().mv;
    rep.metrics["sup_mv"] = sup_mv;
    rep.metrics["C_obs"] = span > 0.0 ? std::max(0.0, sup_mv - recs.front().mv) / (span * sup_pow) : 0.0;
    return rep;
}

InequalityReport mass_identity(const Trajectory& tr, double c_tol) {
    InequalityReport rep;
    rep.name = "mass_identity";
    if (tr.steps.empty()) {
        rep.applicable = false;
        rep.flags.push_back("no steps taken");
        return rep;
    }
    const double eps = tr.snapshots.front().params.epsilon;
    const double m0 = tr.steps.front().mass_before;
    const bool csys = tr.variant == SystemVariant::C3D;
    for (std::size_t k = 0; k < tr.steps.size(); ++k) {
        const StepLogEntry& s = tr.steps[k];
        const double S = csys ? eps * (-s.dirichlet - s.quartic + s.floor_integral) : s.source_integral;
        const double res = s.mass_after - s.mass_before - s.dt * S;
        const double tol = c_tol * s.dt * s.dt * m0;
        rep.residuals.push_back(res);
        if (k == 0 || std::abs(res) - tol > rep.worst_violation) {
            rep.worst_violation = std::abs(res) - tol;
            rep.worst_time = s.t;
            rep.tolerance = tol;
        }
        rep.worst_abs_residual = std::max(rep.worst_abs_residual, std::abs(res));
        if (!csys && S > 1e-12 * m0) {
            rep.flagged = true;
            rep.flags.push_back("cold diffusion increased the mass at t=" + fmt17(s.t));
        }
    }
    if (rep.worst_violation > 0.0) {
        rep.flagged = true;
        rep.flags.push_back("per-step mass identity violated");
    }
    return rep;
}

InequalityReport coercivity_report(const Trajectory& tr, double rel_tol) {
    InequalityReport rep;
    rep.name = "stress_coercivity";
    rep.worst_violation = -std::numeric_limits<double>::infinity();
    for (const auto& r : tr.records) {
        const double tol = rel_tol * r.coercivity_scale;
        if (-r.coercivity_min - tol > rep.worst_violation) {
            rep.worst_violation = -r.coercivity_min - tol;
            rep.worst_time = r.t;
            rep.tolerance = tol;
        }
    }
    if (rep.worst_violation > 0.0) {
        rep.flagged = true;
        rep.flags.push_back("pointwise coercivity of the stress fails");
    }
    return rep;
}

DeGiorgiReport density_bounds(const Trajectory& tr, const LevelGrid& levels) {
    DeGiorgiReport rep;
    rep.levels = levels;
    const auto& recs = tr.records;
    bool stored = !recs.empty();
    for (const auto& r : recs)
        stored = stored && r.nu_v.size() == levels.k_v.size() && r.nu_w.size() == levels.k_w.size();

    auto tables_of = [&](const ScalarField& rho, std::vector<double>& nv, std::vector<double>& nw) {
        ScalarField v(rho.grid()), w(rho.grid());
        for (std::size_t k = 0; k < rho.size(); ++k) {
            v[k] = std::sqrt(rho[k]);
            w[k] = 1.0 / v[k];
        }
        for (double k : levels.k_v) nv.push_back(level_set_measure(v, k, LevelSide::Above));
        for (double k : levels.k_w) nw.push_back(level_set_measure(w, k, LevelSide::Above));
    };

    std::vector<std::pair<double, double>> bounds;  // (rho_min, rho_max) per time
    if (stored) {
        for (const auto& r : recs) {
            rep.times.push_back(r.t);
            rep.nu_v.push_back(r.nu_v);
            rep.nu_w.push_back(r.nu_w);
            bounds.emplace_back(r.rho_min, r.rho_max);
        }
    } else {
        for (const auto& s : tr.snapshots) {
            rep.times.push_back(s.t);
            rep.nu_v.emplace_back();
            rep.nu_w.emplace_back();
            tables_of(s.rho, rep.nu_v.back(), rep.nu_w.back());
            bounds.emplace_back(min_value(s.rho), max_value(s.rho));
        }
    }

    auto monotone = [](const std::vector<double>& ks, const std::vector<double>& nu) {
        for (std::size_t j = 1; j < nu.size(); ++j)
            if (ks[j] >= ks[j - 1] && nu[j] > nu[j - 1]) return false;
        return true;
    };
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        rep.monotone = rep.monotone && monotone(levels.k_v, rep.nu_v[i]) && monotone(levels.k_w, rep.nu_w[i]);
        rep.sup_rho_max = std::max(rep.sup_rho_max, bounds[i].second);
        rep.sup_inv_rho_min = std::max(rep.sup_inv_rho_min, 1.0 / bounds[i].first);
        const double dt = rep.times[i] - rep.times.front();
        if (dt > 0.0)
            rep.decay_rate = std::max(rep.decay_rate, -std::log(bounds[i].first / bounds.front().first) / dt);
    }
    rep.finite = std::isfinite(rep.sup_rho_max) && std::isfinite(rep.sup_inv_rho_min);
    if (!rep.monotone) rep.flags.push_back("level-set measures not monotone in k");
    if (!rep.finite) rep.flags.push_back("density bounds not finite");
    rep.flagged = !rep.flags.empty();
    return rep;
}

void write_records_csv(const std::string& path, const std::vector<FunctionalRecord>& recs, const LevelGrid& levels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const auto cols = record_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    for (std::size_t j = 0; j < levels.k_v.size(); ++j) out << ",nu_v_" << fmt17(levels.k_v[j]);
    for (std::size_t j = 0; j < levels.k_w.size(); ++j) out << ",nu_w_" << fmt17(levels.k_w[j]);
    out << '\n';
    for (const auto& r : recs) {
        const auto vals = record_values(r);
        for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << fmt17(vals[i]);
        for (double v : r.nu_v) out << ',' << fmt17(v);
        for (double v : r.nu_w) out << ',' << fmt17(v);
        out << '\n';
    }
    if (!out) throw IoError("failed writing " + path);
}

namespace {

nlohmann::ordered_json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return fmt17(v);
}

}  // namespace

std::string report_json(const InequalityReport& r) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["applicable"] = r.applicable;
    j["status"] = !r.applicable ? "skipped" : (r.flagged ? "flag" : "pass");
    j["tolerance"] = finite_or_string(r.tolerance);
    j["worst_violation"] = finite_or_string(r.worst_violation);
    j["worst_time"] = finite_or_string(r.worst_time);
    j["worst_abs_residual"] = finite_or_string(r.worst_abs_residual);
    j["flags"] = r.flags;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.metrics) m[k] = finite_or_string(v);
    j["metrics"] = m;
    return j.dump(2);
}

std::string report_json(const DeGiorgiReport& r) {
    nlohmann::ordered_json j;
    j["name"] = "density_bounds";
    j["status"] = r.flagged ? "flag" : "pass";
    j["sup_rho_max"] = finite_or_string(r.sup_rho_max);
    j["sup_inv_rho_min"] = finite_or_string(r.sup_inv_rho_min);
    j["decay_rate"] = finite_or_string(r.decay_rate);
    j["monotone"] = r.monotone;
    j["k_v"] = r.levels.k_v;
    j["k_w"] = r.levels.k_w;
    j["times"] = r.times;
    j["nu_v"] = r.nu_v;
    j["nu_w"] = r.nu_w;
    j["flags"] = r.flags;
    return j.dump(2);
}

}  // namespace degvisc
