#include "degvisc/dynamics.hpp"

#include "degvisc/detail/stencil.hpp"
#include "degvisc/diagnostics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace degvisc {

using detail::for_axis_neighbors;
using detail::for_cells;

std::string to_string(Scheme s) { return s == Scheme::RK2 ? "rk2" : "imex"; }

Scheme parse_scheme(const std::string& name) {
    if (name == "rk2" || name == "RK2" || name == "RK2_explicit") return Scheme::RK2;
    if (name == "imex" || name == "IMEX" || name == "IMEX_diffusion") return Scheme::IMEX;
    throw ConfigError("unknown scheme '" + name + "' (expected rk2 or imex)");
}

namespace {

ScalarField component(const VectorField& u, int c) {
    ScalarField f(u.grid());
    f.values() = u.comp(c);
    return f;
}

// Viscous building blocks on a weight field w (all compact along the
// component's own axis so that the normal stress is a face form):
//   L[w]_j = sum_i d_i(w d_i u_j)
//   T[w]_j = sum_i d_i(w d_j u_i)
//   B[w]_j = d_j(w div u)
void add_L(std::vector<ScalarField>& out, const ScalarField& w, const std::vector<ScalarField>& uc, double scale) {
    const int d = w.grid().dim;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) add_face_diffusion(out[j], &w, uc[j], i, velocity_parity(j, i), scale);
}

void add_T(std::vector<ScalarField>& out, const ScalarField& w, const std::vector<ScalarField>& uc,
           const VelocityGradient& G, double scale) {
    const Grid& g = w.grid();
    const int d = g.dim;
    ScalarField q(g);
    for (int j = 0; j < d; ++j) {
        add_face_diffusion(out[j], &w, uc[j], j, Parity::Odd, scale);
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            const auto& dju = G.d[j][i];
            for_cells(g, [&](std::size_t k) { q[k] = w[k] * dju[k]; });
            add_ddx(out[j], q, i, Parity::Odd, scale);
        }
    }
}

void add_B(std::vector<ScalarField>& out, const ScalarField& w, const std::vector<ScalarField>& uc,
           const VelocityGradient& G, double scale) {
    const Grid& g = w.grid();
    const int d = g.dim;
    ScalarField q(g);
    for (int j = 0; j < d; ++j) {
        add_face_diffusion(out[j], &w, uc[j], j, Parity::Odd, scale);
        for (int i = 0; i < d; ++i) {
            if (i == j) continue;
            const auto& dii = G.d[i][i];
            for_cells(g, [&](std::size_t k) { q[k] = w[k] * dii[k]; });
            add_ddx(out[j], q, j, Parity::Even, scale);
        }
    }
}

std::vector<ScalarField> zeros(const Grid& g) {
    return std::vector<ScalarField>(static_cast<std::size_t>(g.dim), ScalarField(g));
}

VectorField divided_by_rho(std::vector<ScalarField>&& parts, const ScalarField& rho) {
    VectorField out(rho.grid());
    for (int j = 0; j < rho.grid().dim; ++j) {
        auto& v = parts[static_cast<std::size_t>(j)].values();
        for_cells(rho.grid(), [&](std::size_t k) { v[k] /= rho[k]; });
        out.comp(j) = std::move(v);
    }
    return out;
}

ModelParams params_for(const State& s, SystemVariant variant) {
    ModelParams p = s.params;
    p.system = variant;
    return p;
}

}  // namespace

RhsTerms rhs_terms(const State& state, SystemVariant variant, BCMode bc) {
    const Grid& g = state.grid();
    require_compatible(g, bc);
    require_positive(state.rho, "rhs");
    const ModelParams p = params_for(state, variant);
    const ScalarField& rho = state.rho;
    const VectorField& u = state.u;
    const int d = g.dim;
    const double se = std::sqrt(std::max(p.epsilon, 0.0));

    RhsTerms t;
    t.variant = variant;

    std::vector<ScalarField> uc;
    for (int c = 0; c < d; ++c) uc.push_back(component(u, c));
    const VelocityGradient G = sym_gradient(u, bc);

    // Mass flux and the skew-symmetric advection.
    ScalarField divF(g);
    {
        ScalarField q(g);
        for (int i = 0; i < d; ++i) {
            for_cells(g, [&](std::size_t k) { q[k] = rho[k] * u(i, k); });
            add_ddx(divF, q, i, Parity::Odd, 1.0);
        }
    }
    t.transport = ScalarField(g);
    for_cells(g, [&](std::size_t k) { t.transport[k] = -divF[k]; });

    {
        auto adv = zeros(g);
        ScalarField q(g);
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) {
                for_cells(g, [&](std::size_t k) { q[k] = rho[k] * u(i, k) * u(j, k); });
                add_ddx(adv[j], q, i, i == j ? Parity::Even : Parity::Odd, -0.5);
            }
            auto& a = adv[j];
            for_cells(g, [&](std::size_t k) {
                double conv = 0.0;
                for (int i = 0; i < d; ++i) conv += u(i, k) * G.d[i][j][k];
                a[k] += -0.5 * rho[k] * conv + 0.5 * u(j, k) * divF[k];
            });
        }
        t.advection = divided_by_rho(std::move(adv), rho);
    }

    // Pressure through the enthalpy: ∇P / rho = ∇(gamma/(gamma-1) rho^{gamma-1}).
    t.enthalpy = ScalarField(g);
    {
        const double c = p.gamma / (p.gamma - 1.0);
        for_cells(g, [&](std::size_t k) { t.enthalpy[k] = c * power(rho[k], p.gamma - 1.0); });
        t.pressure = VectorField(g);
        for (int j = 0; j < d; ++j) {
            ScalarField dj(g);
            add_ddx(dj, t.enthalpy, j, Parity::Even, -1.0);
            t.pressure.comp(j) = std::move(dj.values());
        }
    }

    // Viscosity.
    ScalarField hw(g), gw(g);
    const CoeffLaw law(p);
    for_cells(g, [&](std::size_t k) {
        const CoeffPoint c = law.viscosity(rho[k]);
        hw[k] = c.h_eps;
        gw[k] = c.g_eps;
    });
    {
        auto main = zeros(g), aug = zeros(g), bulk = zeros(g);
        switch (variant) {
            case SystemVariant::A2D:
                add_L(main, hw, uc, 0.5);
                add_T(main, hw, uc, G, 0.5);
                if (se > 0.0) add_L(aug, hw, uc, se);
                add_B(bulk, gw, uc, G, 1.0 + se);
                break;
            case SystemVariant::B3D:
                add_L(main, hw, uc, 1.0);
                add_B(bulk, gw, uc, G, 1.0);
                break;
            case SystemVariant::C3D:
                add_L(main, hw, uc, 0.5);
                add_T(main, hw, uc, G, 0.5);
                if (se > 0.0) add_L(aug, hw, uc, se);
                break;
        }
        t.visc_main = divided_by_rho(std::move(main), rho);
        t.visc_aug = divided_by_rho(std::move(aug), rho);
        t.visc_bulk = divided_by_rho(std::move(bulk), rho);
    }

    // Damping (A/B) and the System-C extras.
    t.damping = VectorField(g);
    t.c_extra = VectorField(g);
    if (variant == SystemVariant::C3D) {
        const QTerms q = qsystem_coeffs(rho, u, p, bc);
        const double e = p.epsilon;
        t.source = ScalarField(g);
        for_cells(g, [&](std::size_t k) {
            t.source[k] = e * (q.v_lap_v[k] + q.v_div_flux[k] + q.rho_mp0[k]);
            for (int j = 0; j < d; ++j)
                t.c_extra(j, k) =
                    e * (q.v_grad_work(j, k) - q.rho_mp0[k] * u(j, k) - q.rho_u3u(j, k)) / rho[k];
        });
        t.source_dirichlet = q.dirichlet;
        t.source_quartic = q.quartic;
        t.source_floor = integrate(q.rho_mp0);
    } else {
        const DampingField damp = damping_coefficient(rho, p);
        t.damping_underflow = damp.underflow;
        for_cells(g, [&](std::size_t k) {
            const double c = damp.coef[k] / rho[k];
            for (int j = 0; j < d; ++j) t.damping(j, k) = -c * u(j, k);
        });
        t.source = cold_diffusion_G(rho, p, bc);
    }
    return t;
}

Rhs assemble(const RhsTerms& t, const RhsOptions& opts) {
    const Grid& g = t.transport.grid();
    Rhs r{ScalarField(g), VectorField(g)};
    const bool src = !opts.disable_source;
    for_cells(g, [&](std::size_t k) {
        r.drho_dt[k] = t.transport[k] + (src ? t.source[k] : 0.0);
        for (int j = 0; j < g.dim; ++j)
            r.du_dt(j, k) = t.advection(j, k) + t.pressure(j, k) + t.visc_main(j, k) + t.visc_aug(j, k) +
                            t.visc_bulk(j, k) + t.damping(j, k) + t.c_extra(j, k);
    });
    return r;
}

Rhs rhs(const State& state, SystemVariant variant, BCMode bc, const RhsOptions& opts) {
    return assemble(rhs_terms(state, variant, bc), opts);
}

double stable_dt(const State& state, SystemVariant variant, double cfl, bool implicit_density) {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    const Grid& g = state.grid();
    require_positive(state.rho, "stable_dt");
    const ModelParams p = params_for(state, variant);
    const ScalarField& rho = state.rho;
    const int N = g.dim;
    double h = g.spacing(0);
    for (int a = 1; a < N; ++a) h = std::min(h, g.spacing(a));
    const double se = std::sqrt(std::max(p.epsilon, 0.0));
    const double e = std::max(p.epsilon, 0.0);
    const bool want_dv = !implicit_density && e > 0.0;

    ScalarField v(g);
    for_cells(g, [&](std::size_t k) { v[k] = std::sqrt(rho[k]); });
    VectorField gv;
    if (want_dv) gv = gradient(v, BCMode::for_grid(g));

    std::vector<double> bound(g.size());
    const CoeffLaw law(p);
    for_cells(g, [&](std::size_t k) {
        const double r = rho[k];
        const CoeffPoint c = law.viscosity(r);
        const double speed = std::sqrt(state.u.norm2_at(k));
        // sound speed^2 = gamma P / rho
        double b = h / (speed + std::sqrt(p.gamma * c.P / r));
        const double visc = std::max(c.h_eps, r * c.h_eps_prime);
        b = std::min(b, h * h * r / (2.0 * N * (1.0 + se) * visc));
        if (want_dv) {
            const double diff = std::max(c.h_eps_prime, 1.0 + gv.norm2_at(k));
            b = std::min(b, h * h / (2.0 * N * e * diff));
        }
        // Local relaxation rates of the zeroth-order terms.
        double rate = 0.0;
        if (variant == SystemVariant::C3D) {
            rate = e * ((p.p0 + 1.0) * std::exp(-(p.p0 + 1.0) * std::log(r)) + 4.0 * speed * speed * speed);
        } else {
            const double lg = log_damping(r, p.epsilon);
            if (lg > -700.0) rate = std::exp(std::min(lg, 700.0)) / r;
        }
        if (rate > 0.0) b = std::min(b, 1.0 / rate);
        bound[k] = b;
    });
    const double dt = cfl * *std::min_element(bound.begin(), bound.end());
    if (!(dt > 1e-14) || !std::isfinite(dt)) {
        std::ostringstream msg;
        msg << "stable time step underflows (dt=" << dt
            << "); the problem is too stiff for the explicit scheme, try scheme = imex";
        throw SolverError(msg.str());
    }
    return dt;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return deterministic_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

// Preconditioned conjugate gradients for a symmetric positive definite
// operator given matrix-free, with a Jacobi preconditioner.
template <class Apply>
std::vector<double> solve_cg(const Grid& g, Apply&& apply, const std::vector<double>& diag,
                             const std::vector<double>& b, double tol, int max_iter) {
    const std::size_t n = b.size();
    std::vector<double> x(n, 0.0), r = b, z(n), pdir(n), ap(n);
    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) return x;
    for_cells(g, [&](std::size_t i) { z[i] = r[i] / diag[i]; });
    pdir = z;
    double rz = dot(r, z);
    for (int it = 0; it < max_iter; ++it) {
        apply(pdir, ap);
        const double alpha = rz / dot(pdir, ap);
        for_cells(g, [&](std::size_t i) {
            x[i] += alpha * pdir[i];
            r[i] -= alpha * ap[i];
        });
        if (std::sqrt(dot(r, r)) <= tol * bnorm) return x;
        for_cells(g, [&](std::size_t i) { z[i] = r[i] / diag[i]; });
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for_cells(g, [&](std::size_t i) { pdir[i] = z[i] + beta * pdir[i]; });
    }
    std::ostringstream msg;
    msg << "IMEX density solve did not reach relative residual " << tol << " in " << max_iter << " iterations";
    throw SolverError(msg.str());
}

// Weighted face Laplacian sum_a d_a(c d_a x) with face weights `wf` per axis
// (entry i holds the weight of the face between i and its upper neighbour).
struct FaceOperator {
    const Grid& g;
    std::vector<std::vector<double>> up_weight;  // per axis, 0 on reflected faces

    FaceOperator(const Grid& grid, const std::function<double(std::size_t, std::size_t)>& weight) : g(grid) {
        for (int a = 0; a < g.dim; ++a) {
            std::vector<double> w(g.size(), 0.0);
            const double c = 1.0 / (g.spacing(a) * g.spacing(a));
            for_axis_neighbors(g, a, [&](std::size_t i, std::size_t up, std::size_t, bool ru, bool) {
                w[i] = ru ? 0.0 : c * weight(i, up);
            });
            up_weight.push_back(std::move(w));
        }
    }

    // y = -sum_a d_a(c d_a x), positive semidefinite
    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        std::fill(y.begin(), y.end(), 0.0);
        for (int a = 0; a < g.dim; ++a) {
            const double* w = up_weight[a].data();
            const double* xp = x.data();
            double* yp = y.data();
            for_axis_neighbors(g, a, [=](std::size_t i, std::size_t up, std::size_t dn, bool ru, bool rd) {
                const double fu = ru ? 0.0 : w[i] * (xp[up] - xp[i]);
                const double fd = rd ? 0.0 : w[dn] * (xp[i] - xp[dn]);
                yp[i] -= fu - fd;
            });
        }
    }

    std::vector<double> diagonal() const {
        std::vector<double> dg(g.size(), 0.0);
        for (int a = 0; a < g.dim; ++a) {
            const auto& w = up_weight[a];
            for_axis_neighbors(g, a, [&](std::size_t i, std::size_t, std::size_t dn, bool ru, bool rd) {
                dg[i] += (ru ? 0.0 : w[i]) + (rd ? 0.0 : w[dn]);
            });
        }
        return dg;
    }
};

// Solves (I - dt L) delta = rhs where L is the continuity diffusion frozen at rho.
std::vector<double> implicit_density_increment(const State& s, SystemVariant variant, double dt,
                                               const std::vector<double>& rhs, const StepOptions& opts) {
    const Grid& g = s.grid();
    const ModelParams p = params_for(s, variant);
    const double e = p.epsilon;
    const ScalarField& rho = s.rho;
    std::vector<double> v(g.size());
    for_cells(g, [&](std::size_t k) { v[k] = std::sqrt(rho[k]); });

    if (variant == SystemVariant::C3D) {
        // L delta = eps v Δ(delta / 2v); with w = delta / 2v: (2 - dt eps Δ) w = rhs / v.
        FaceOperator lap(g, [](std::size_t, std::size_t) { return 1.0; });
        std::vector<double> diag = lap.diagonal(), b(g.size());
        for_cells(g, [&](std::size_t k) {
            diag[k] = 2.0 + dt * e * diag[k];
            b[k] = rhs[k] / v[k];
        });
        auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
            lap.apply(x, y);
            for_cells(g, [&](std::size_t k) { y[k] = 2.0 * x[k] + dt * e * y[k]; });
        };
        std::vector<double> w = solve_cg(g, apply, diag, b, opts.solver_tol, opts.solver_max_iter);
        for_cells(g, [&](std::size_t k) { w[k] *= 2.0 * v[k]; });
        return w;
    }

    // L delta = eps sqrt(rho) div(a grad delta), a the cold-diffusion face coefficient.
    std::vector<double> b_cell(g.size());
    const CoeffLaw law(p);
    for_cells(g, [&](std::size_t k) { b_cell[k] = law.regularized(rho[k]).phi_prime; });
    FaceOperator op(g, [&](std::size_t i, std::size_t up) {
        return 0.25 * (b_cell[i] + b_cell[up]) * (v[i] + v[up]);
    });
    // Symmetric form: (S^{-1} - dt A) delta = S^{-1} rhs with S = eps sqrt(rho).
    std::vector<double> diag = op.diagonal(), b(g.size());
    for_cells(g, [&](std::size_t k) {
        const double sinv = 1.0 / (e * v[k]);
        diag[k] = sinv + dt * diag[k];
        b[k] = sinv * rhs[k];
    });
    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        op.apply(x, y);
        for_cells(g, [&](std::size_t k) { y[k] = x[k] / (e * v[k]) + dt * y[k]; });
    };
    return solve_cg(g, apply, diag, b, opts.solver_tol, opts.solver_max_iter);
}

void check_floor(const ScalarField& rho, double floor, const char* stage) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > floor)) {
            const auto c = rho.grid().coords(i);
            std::ostringstream msg;
            msg << "density " << rho[i] << " at cell (" << c[0];
            for (int a = 1; a < rho.grid().dim; ++a) msg << ',' << c[a];
            msg << ") fell to the floor " << floor << " during " << stage;
            throw PositivityError(msg.str(), i, rho[i]);
        }
    }
}

State axpy(const State& s, double dt, const Rhs& k) {
    State out = s;
    const Grid& g = s.grid();
    for_cells(g, [&](std::size_t i) {
        out.rho[i] += dt * k.drho_dt[i];
        for (int j = 0; j < g.dim; ++j) out.u(j, i) += dt * k.du_dt(j, i);
    });
    out.t = s.t + dt;
    return out;
}

}  // namespace

State step(const State& state, double dt, Scheme scheme, SystemVariant variant, BCMode bc,
           const StepOptions& opts, RhsTerms* first_terms) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("time step must be positive and finite");
    RhsTerms terms = rhs_terms(state, variant, bc);
    const Rhs k1 = assemble(terms, opts.rhs);
    const Grid& g = state.grid();
    State next;

    if (scheme == Scheme::RK2) {
        const State mid = axpy(state, dt, k1);
        check_floor(mid.rho, opts.density_floor, "the predictor stage");
        const Rhs k2 = rhs(mid, variant, bc, opts.rhs);
        next = state;
        for_cells(g, [&](std::size_t i) {
            next.rho[i] += 0.5 * dt * (k1.drho_dt[i] + k2.drho_dt[i]);
            for (int j = 0; j < g.dim; ++j) next.u(j, i) += 0.5 * dt * (k1.du_dt(j, i) + k2.du_dt(j, i));
        });
        next.t = state.t + dt;
    } else {
        next = axpy(state, dt, k1);
        const bool diffusive = !opts.rhs.disable_source && state.params.epsilon > 0.0;
        if (diffusive) {
            std::vector<double> r(g.size());
            for_cells(g, [&](std::size_t i) { r[i] = dt * k1.drho_dt[i]; });
            const std::vector<double> delta = implicit_density_increment(state, variant, dt, r, opts);
            for_cells(g, [&](std::size_t i) { next.rho[i] = state.rho[i] + delta[i]; });
        }
    }
    check_floor(next.rho, opts.density_floor, "the corrector stage");
    check_finite(next.rho, "density");
    check_finite(next.u, "velocity");
    if (first_terms) *first_terms = std::move(terms);
    return next;
}

Trajectory run(const State& initial, SystemVariant variant, BCMode bc, double t_end, const RunControls& ctl) {
    const Grid& g = initial.grid();
    require_compatible(g, bc);
    if (!(t_end >= initial.t)) throw ConfigError("t_end must not precede the initial time");
    if (ctl.record_stride < 1) throw ConfigError("record stride must be at least 1");
    if (ctl.snapshot_stride < 0) throw ConfigError("snapshot stride must be non-negative");
    require_positive(initial.rho, "initial density");

    Trajectory tr;
    tr.variant = variant;
    tr.bc = bc;

    StepOptions sopt;
    sopt.rhs = ctl.rhs;
    sopt.density_floor = ctl.floor_fraction * integrate(initial.rho) / g.volume();

    auto take_snapshot = [&](const State& s) {
        if (!tr.snapshots.empty() && tr.snapshots.back().t >= s.t) return;
        tr.snapshots.push_back(s);
        if (ctl.on_snapshot) ctl.on_snapshot(s);
    };
    auto take_record = [&](const State& s, const RhsTerms* cached) {
        if (!tr.records.empty() && tr.records.back().t >= s.t) return;
        tr.records.push_back(record(s, variant, bc, ctl.levels, cached));
        tr.damping_underflow = tr.damping_underflow || tr.records.back().damping_underflow;
    };

    State state = initial;
    take_snapshot(state);
    const double t_tol = 1e-12 * std::max(1.0, std::abs(t_end));
    bool record_due = true;
    double next_sync = ctl.sync_interval > 0.0 ? initial.t + ctl.sync_interval : t_end;

    try {
        while (state.t < t_end - t_tol) {
            if (tr.nsteps >= ctl.max_steps) throw SolverError("maximum number of steps reached");
            double dt = ctl.dt_override > 0.0 ? ctl.dt_override
                                               : stable_dt(state, variant, ctl.cfl, ctl.scheme == Scheme::IMEX);
            bool lands_on_sync = false;
            const double target = std::min(next_sync, t_end);
            if (state.t + dt >= target - t_tol) {
                dt = target - state.t;
                lands_on_sync = ctl.sync_interval > 0.0;
            }

            RhsTerms terms;
            State next;
            try {
                next = step(state, dt, ctl.scheme, variant, bc, sopt, &terms);
            } catch (const Error&) {
                if (record_due) take_record(state, nullptr);
                throw;
            }
            if (record_due) take_record(state, &terms);
            if (lands_on_sync) {
                next.t = target;
                next_sync = target + ctl.sync_interval;
            }

            StepLogEntry e;
            e.t = state.t;
            e.dt = next.t - state.t;
            e.mass_before = integrate(state.rho);
            e.mass_after = integrate(next.rho);
            e.source_integral = integrate(terms.source);
            e.dirichlet = terms.source_dirichlet;
            e.quartic = terms.source_quartic;
            e.floor_integral = terms.source_floor;
            tr.steps.push_back(e);
            tr.damping_underflow = tr.damping_underflow || terms.damping_underflow;

            state = std::move(next);
            ++tr.nsteps;
            if (ctl.on_step) {
                // a perturbed state that loses positivity is discarded
                State before = state;
                ctl.on_step(state, tr.nsteps);
                try {
                    require_positive(state.rho, "perturbed density");
                } catch (const PositivityError&) {
                    state = std::move(before);
                    throw;
                }
            }

            if (ctl.sync_interval > 0.0) {
                record_due = lands_on_sync;
                if (lands_on_sync) take_snapshot(state);
            } else {
                record_due = tr.nsteps % ctl.record_stride == 0;
                if (ctl.snapshot_stride > 0 && tr.nsteps % ctl.snapshot_stride == 0) take_snapshot(state);
            }
        }
    } catch (const PositivityError& err) {
        tr.aborted = true;
        tr.abort_reason = std::string("positivity: ") + err.what();
    } catch (const OverflowError& err) {
        tr.aborted = true;
        tr.abort_reason = std::string("overflow: ") + err.what();
    } catch (const SolverError& err) {
        tr.aborted = true;
        tr.abort_reason = std::string("solver: ") + err.what();
    } catch (const CorruptionError& err) {
        tr.aborted = true;
        tr.abort_reason = std::string("corruption: ") + err.what();
    }
    take_record(state, nullptr);
    take_snapshot(state);
    return tr;
}

}  // namespace degvisc
