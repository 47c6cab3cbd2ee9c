#include "degvisc/weakform.hpp"

#include "degvisc/constitutive.hpp"
#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/snapshot.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace degvisc {

using detail::for_cells;

namespace {

constexpr double kPi = std::numbers::pi;

struct Factor {
    double f, d1, d2;
};

Factor axis_factor(const Grid& g, int a, int k, bool cosine, double x) {
    const double L = g.length[a];
    const double xr = x - g.origin[a];
    const double w = 2.0 * kPi * k / L;
    const double s = std::sin(w * xr), c = std::cos(w * xr);
    const double T = cosine ? c : s;
    const double T1 = cosine ? -w * s : w * c;
    const double T2 = -w * w * T;
    if (g.topology == Topology::Periodic) return {T, T1, T2};
    const double b = 0.5 * (1.0 - std::cos(2.0 * kPi * xr / L));
    const double b1 = (kPi / L) * std::sin(2.0 * kPi * xr / L);
    const double b2 = (2.0 * kPi * kPi / (L * L)) * std::cos(2.0 * kPi * xr / L);
    return {T * b, T1 * b + T * b1, T2 * b + 2.0 * T1 * b1 + T * b2};
}

// Spatial samples of one test function on every cell.
struct Samples {
    std::vector<double> v;
    std::array<std::vector<double>, 3> grad;
    std::array<std::array<std::vector<double>, 3>, 3> hess;
};

Samples sample_all(const TestFunction& psi) {
    const Grid& g = psi.grid;
    const int d = g.dim;
    Samples s;
    s.v.resize(g.size());
    for (int a = 0; a < d; ++a) {
        s.grad[a].resize(g.size());
        for (int b = 0; b < d; ++b) s.hess[a][b].resize(g.size());
    }
    for_cells(g, [&](std::size_t i) {
        const auto x = psi.spatial(i);
        s.v[i] = x.value;
        for (int a = 0; a < d; ++a) {
            s.grad[a][i] = x.grad[a];
            for (int b = 0; b < d; ++b) s.hess[a][b][i] = x.hess[a][b];
        }
    });
    return s;
}

void require_snapshots(const Trajectory& tr) {
    if (tr.snapshots.size() < 2) throw ConfigError("weak-form residuals need at least two snapshots");
}

// Trapezoid over snapshot times of values f_k.
double trapezoid(const Trajectory& tr, const std::vector<double>& f) {
    double s = 0.0;
    for (std::size_t k = 1; k < f.size(); ++k)
        s += 0.5 * (tr.snapshots[k].t - tr.snapshots[k - 1].t) * (f[k] + f[k - 1]);
    return s;
}

void require_family_grid(const Trajectory& tr, const TestFunction& psi) {
    if (!(psi.grid == tr.grid())) throw ConfigError("test function grid differs from the trajectory grid");
    if (psi.comp < 0 || psi.comp >= psi.grid.dim) throw ConfigError("test function component out of range");
}

// Per-snapshot fields entering the momentum residual.
struct MomentumFields {
    const State* s;
    ScalarField q;    // rho^{alpha-1/2}
    VectorField gq;   // centered gradient of q
    VectorField mt;   // sqrt(rho) u
    ScalarField P;    // rho^gamma
};

MomentumFields momentum_fields(const State& s, BCMode bc) {
    const Grid& g = s.grid();
    MomentumFields m{&s, ScalarField(g), VectorField(), VectorField(g), ScalarField(g)};
    const double a = s.params.alpha;
    for_cells(g, [&](std::size_t i) {
        const double r = s.rho[i];
        m.q[i] = power(r, a - 0.5);
        m.P[i] = power(r, s.params.gamma);
        const double sr = std::sqrt(r);
        for (int c = 0; c < g.dim; ++c) m.mt(c, i) = sr * s.u(c, i);
    });
    m.gq = gradient(m.q, bc);
    return m;
}

// theta-free spatial part of the momentum residual at one snapshot:
// returns {∫rho u_c S, ∫(rho u_i u_c d_i S + P d_c S) - stress brackets}.
std::pair<double, double> momentum_parts(const Trajectory& tr, const MomentumFields& m, const Samples& S, int c,
                                         bool naive, const VelocityGradient* du) {
    const State& s = *m.s;
    const Grid& g = s.grid();
    const int d = g.dim;
    const double a = s.params.alpha;
    const double kappa = 2.0 * a / (2.0 * a - 1.0);
    const bool full_grad = tr.variant == SystemVariant::B3D;
    const double wh = full_grad ? 1.0 : 0.5;
    const double wt = full_grad ? 0.0 : 0.5;

    const double mom = integrate_cells(g, [&](std::size_t i) { return s.rho[i] * s.u(c, i) * S.v[i]; });
    const double rest = integrate_cells(g, [&](std::size_t i) {
        const double r = s.rho[i];
        double conv = 0.0;
        for (int k = 0; k < d; ++k) conv += r * s.u(k, i) * s.u(c, i) * S.grad[k][i];
        conv += m.P[i] * S.grad[c][i];
        double bh = 0.0, bt = 0.0, bg = 0.0;
        if (naive) {
            const double h = power(r, a);
            double div = 0.0;
            for (int k = 0; k < d; ++k) {
                bh += h * du->grad(k, c, i) * S.grad[k][i];
                bt += h * du->grad(c, k, i) * S.grad[k][i];
                div += du->grad(k, k, i);
            }
            bg = (a - 1.0) * h * div * S.grad[c][i];
        } else {
            double lap = 0.0, mdq = 0.0;
            for (int k = 0; k < d; ++k) {
                lap += S.hess[k][k][i];
                bh -= kappa * m.mt(c, i) * m.gq(k, i) * S.grad[k][i];
                bt -= m.q[i] * m.mt(k, i) * S.hess[k][c][i] + kappa * m.mt(k, i) * m.gq(c, i) * S.grad[k][i];
                mdq += m.mt(k, i) * m.gq(k, i);
            }
            bh -= m.q[i] * m.mt(c, i) * lap;
            double mhc = 0.0;
            for (int k = 0; k < d; ++k) mhc += m.mt(k, i) * S.hess[k][c][i];
            bg = -(a - 1.0) * m.q[i] * mhc - kappa * (a - 1.0) * mdq * S.grad[c][i];
        }
        return conv - wh * bh - wt * bt - bg;
    });
    return {mom, rest};
}

std::vector<MomentumFields> all_momentum_fields(const Trajectory& tr) {
    std::vector<MomentumFields> out;
    out.reserve(tr.snapshots.size());
    for (const State& s : tr.snapshots) out.push_back(momentum_fields(s, tr.bc));
    return out;
}

double momentum_impl(const Trajectory& tr, const std::vector<MomentumFields>& fields, const TestFunction& phi,
                     bool naive) {
    const Samples S = sample_all(phi);
    const int c = phi.comp;
    std::vector<double> f(tr.snapshots.size());
    double initial = 0.0;
    for (std::size_t k = 0; k < tr.snapshots.size(); ++k) {
        const State& s = tr.snapshots[k];
        VelocityGradient du;
        if (naive) du = sym_gradient(s.u, tr.bc);
        const auto [mom, rest] = momentum_parts(tr, fields[k], S, c, naive, naive ? &du : nullptr);
        f[k] = phi.theta_dot(s.t) * mom + phi.theta(s.t) * rest;
        if (k == 0) initial = phi.theta(s.t) * mom;
    }
    return initial + trapezoid(tr, f);
}

std::vector<ScalarField> all_sources(const Trajectory& tr) {
    std::vector<ScalarField> out;
    out.reserve(tr.snapshots.size());
    for (const State& s : tr.snapshots) out.push_back(rhs_terms(s, tr.variant, tr.bc).source);
    return out;
}

double source_pairing_impl(const Trajectory& tr, const std::vector<ScalarField>& sources, const TestFunction& psi) {
    const Samples S = sample_all(psi);
    const Grid& g = tr.grid();
    std::vector<double> f(tr.snapshots.size());
    for (std::size_t k = 0; k < tr.snapshots.size(); ++k) {
        const ScalarField& src = sources[k];
        f[k] = psi.theta(tr.snapshots[k].t) * integrate_cells(g, [&](std::size_t i) { return src[i] * S.v[i]; });
    }
    return trapezoid(tr, f);
}

}  // namespace

TestFunction::Sample TestFunction::spatial(std::size_t cell) const {
    const auto ix = grid.coords(cell);
    std::array<Factor, 3> fa{Factor{1, 0, 0}, Factor{1, 0, 0}, Factor{1, 0, 0}};
    for (int a = 0; a < grid.dim; ++a) {
        fa[a] = axis_factor(grid, a, k[a], cosine, grid.center(a, ix[a]));
        if (a == 0) fa[0] = {amplitude * fa[0].f, amplitude * fa[0].d1, amplitude * fa[0].d2};
    }
    Sample s{};
    s.value = fa[0].f * fa[1].f * fa[2].f;
    for (int a = 0; a < grid.dim; ++a) {
        for (int b = 0; b < grid.dim; ++b) {
            double p = 1.0;
            for (int e = 0; e < 3; ++e) {
                if (a == b && e == a) p *= fa[e].d2;
                else if (e == a || e == b) p *= fa[e].d1;
                else p *= fa[e].f;
            }
            s.hess[a][b] = p;
        }
        double p = 1.0;
        for (int e = 0; e < 3; ++e) p *= e == a ? fa[e].d1 : fa[e].f;
        s.grad[a] = p;
    }
    return s;
}

double TestFunction::theta(double t) const {
    const double r = 1.0 - (t - t0) / (T - t0);
    return r * r;
}

double TestFunction::theta_dot(double t) const {
    const double r = 1.0 - (t - t0) / (T - t0);
    return -2.0 * r / (T - t0);
}

std::string TestFunction::label() const {
    std::ostringstream s;
    s << "c" << comp << (cosine ? "-cos-k" : "-sin-k");
    for (int a = 0; a < grid.dim; ++a) s << (a ? "." : "") << k[a];
    return s.str();
}

std::vector<TestFunction> test_family(const Grid& g, double t0, double T, int modes) {
    if (!(T > t0)) throw ConfigError("test-function window must have positive length");
    if (modes < 1) throw ConfigError("test family needs at least one mode per axis");
    std::vector<TestFunction> out;
    int combos = 1;
    for (int a = 0; a < g.dim; ++a) combos *= modes;
    for (int c = 0; c < g.dim; ++c)
        for (int ph = 0; ph < 2; ++ph)
            for (int m = 0; m < combos; ++m) {
                TestFunction tf;
                tf.grid = g;
                tf.comp = c;
                tf.cosine = ph == 1;
                int r = m;
                for (int a = 0; a < g.dim; ++a) {
                    tf.k[a] = 1 + r % modes;
                    r /= modes;
                }
                tf.t0 = t0;
                tf.T = T;
                out.push_back(tf);
            }
    return out;
}

double continuity_residual(const Trajectory& tr, const TestFunction& psi) {
    require_snapshots(tr);
    require_family_grid(tr, psi);
    const Samples S = sample_all(psi);
    const Grid& g = tr.grid();
    std::vector<double> f(tr.snapshots.size());
    double initial = 0.0;
    for (std::size_t k = 0; k < tr.snapshots.size(); ++k) {
        const State& s = tr.snapshots[k];
        const double mass = integrate_cells(g, [&](std::size_t i) { return s.rho[i] * S.v[i]; });
        const double flux = integrate_cells(g, [&](std::size_t i) {
            double acc = 0.0;
            for (int a = 0; a < g.dim; ++a) acc += s.rho[i] * s.u(a, i) * S.grad[a][i];
            return acc;
        });
        f[k] = psi.theta_dot(s.t) * mass + psi.theta(s.t) * flux;
        if (k == 0) initial = psi.theta(s.t) * mass;
    }
    return initial + trapezoid(tr, f);
}

double continuity_source_pairing(const Trajectory& tr, const TestFunction& psi) {
    require_snapshots(tr);
    require_family_grid(tr, psi);
    return source_pairing_impl(tr, all_sources(tr), psi);
}

double momentum_residual(const Trajectory& tr, const TestFunction& phi) {
    require_snapshots(tr);
    require_family_grid(tr, phi);
    return momentum_impl(tr, all_momentum_fields(tr), phi, false);
}

double momentum_residual_naive(const Trajectory& tr, const TestFunction& phi) {
    require_snapshots(tr);
    require_family_grid(tr, phi);
    return momentum_impl(tr, all_momentum_fields(tr), phi, true);
}

std::vector<ResidualRow> residual_table(const Trajectory& tr, int modes) {
    require_snapshots(tr);
    const auto family = test_family(tr.grid(), tr.snapshots.front().t, tr.snapshots.back().t, modes);
    const auto fields = all_momentum_fields(tr);
    const auto sources = all_sources(tr);
    std::vector<ResidualRow> rows;
    rows.reserve(family.size());
    for (const auto& tf : family) {
        ResidualRow r;
        r.label = tf.label();
        r.r_c = continuity_residual(tr, tf);
        r.r_m = momentum_impl(tr, fields, tf, false);
        r.source_pairing = source_pairing_impl(tr, sources, tf);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_residual_csv(const std::string& path, const std::vector<ResidualRow>& rows, int level) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "label,R_c,R_m,source_pairing,level\n";
    for (const auto& r : rows)
        out << r.label << ',' << fmt17(r.r_c) << ',' << fmt17(r.r_m) << ',' << fmt17(r.source_pairing) << ','
            << level << '\n';
}

}  // namespace degvisc
