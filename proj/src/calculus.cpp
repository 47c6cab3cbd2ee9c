#include "degvisc/calculus.hpp"

#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"

#include <cmath>

namespace degvisc {

using detail::for_axis_neighbors;

void require_compatible(const Grid& g, BCMode bc) {
    const bool ok = (bc.kind == BCKind::Periodic) == (g.topology == Topology::Periodic);
    if (!ok)
        throw TopologyError(bc.kind == BCKind::SlipBox ? "SlipBox boundary mode requires a Box grid"
                                                       : "Periodic boundary mode requires a Periodic grid");
}

namespace {

inline double sign_of(Parity p) { return p == Parity::Even ? 1.0 : -1.0; }

}  // namespace

void add_ddx(ScalarField& out, const ScalarField& f, int axis, Parity parity, double scale) {
    const Grid& g = f.grid();
    const double c = scale / (2.0 * g.spacing(axis));
    const double s = sign_of(parity);
    const double* x = f.data();
    double* y = out.data();
    // by-value captures: the stores through y cannot alias the coefficients
    for_axis_neighbors(g, axis, [=](std::size_t i, std::size_t up, std::size_t dn, bool ru, bool rd) {
        const double fu = ru ? s * x[up] : x[up];
        const double fd = rd ? s * x[dn] : x[dn];
        y[i] += c * (fu - fd);
    });
}

ScalarField ddx(const ScalarField& f, int axis, Parity parity, BCMode bc) {
    require_compatible(f.grid(), bc);
    ScalarField out(f.grid());
    add_ddx(out, f, axis, parity, 1.0);
    return out;
}

void add_face_diffusion(ScalarField& out, const ScalarField* w, const ScalarField& f, int axis, Parity parity,
                        double scale) {
    const Grid& g = f.grid();
    const double h = g.spacing(axis);
    const double c = scale / (h * h);
    const double s = sign_of(parity);
    const double* x = f.data();
    const double* wt = w ? w->data() : nullptr;
    double* y = out.data();
    for_axis_neighbors(g, axis, [=](std::size_t i, std::size_t up, std::size_t dn, bool ru, bool rd) {
        const double fu = ru ? s * x[up] : x[up];
        const double fd = rd ? s * x[dn] : x[dn];
        if (wt) {
            const double wu = 0.5 * (wt[i] + wt[up]);
            const double wd = 0.5 * (wt[i] + wt[dn]);
            y[i] += c * (wu * (fu - x[i]) - wd * (x[i] - fd));
        } else {
            y[i] += c * (fu - 2.0 * x[i] + fd);
        }
    });
}

ScalarField face_diffusion(const ScalarField* w, const ScalarField& f, int axis, Parity parity, BCMode bc) {
    require_compatible(f.grid(), bc);
    ScalarField out(f.grid());
    add_face_diffusion(out, w, f, axis, parity, 1.0);
    return out;
}

VectorField gradient(const ScalarField& f, BCMode bc) {
    require_compatible(f.grid(), bc);
    VectorField out(f.grid());
    for (int a = 0; a < f.grid().dim; ++a) {
        ScalarField d = ddx(f, a, Parity::Even, bc);
        out.comp(a) = std::move(d.values());
    }
    return out;
}

ScalarField divergence(const VectorField& F, BCMode bc) {
    require_compatible(F.grid(), bc);
    ScalarField out(F.grid());
    ScalarField tmp(F.grid());
    for (int a = 0; a < F.dim(); ++a) {
        tmp.values() = F.comp(a);
        add_ddx(out, tmp, a, Parity::Odd, 1.0);
    }
    return out;
}

ScalarField laplacian(const ScalarField& f, BCMode bc) {
    require_compatible(f.grid(), bc);
    ScalarField out(f.grid());
    for (int a = 0; a < f.grid().dim; ++a) add_face_diffusion(out, nullptr, f, a, Parity::Even, 1.0);
    return out;
}

double VelocityGradient::div(std::size_t i) const {
    double s = 0.0;
    for (int a = 0; a < grid.dim; ++a) s += d[a][a][i];
    return s;
}

double VelocityGradient::grad_norm2(std::size_t i) const {
    double s = 0.0;
    for (int a = 0; a < grid.dim; ++a)
        for (int c = 0; c < grid.dim; ++c) s += d[a][c][i] * d[a][c][i];
    return s;
}

double VelocityGradient::sym_norm2(std::size_t i) const {
    double s = 0.0;
    for (int a = 0; a < grid.dim; ++a)
        for (int c = 0; c < grid.dim; ++c) {
            const double e = sym(a, c, i);
            s += e * e;
        }
    return s;
}

VelocityGradient sym_gradient(const VectorField& u, BCMode bc) {
    require_compatible(u.grid(), bc);
    VelocityGradient G;
    G.grid = u.grid();
    ScalarField comp(u.grid());
    for (int c = 0; c < u.dim(); ++c) {
        comp.values() = u.comp(c);
        for (int a = 0; a < u.dim(); ++a) {
            ScalarField out(u.grid());
            add_ddx(out, comp, a, velocity_parity(c, a), 1.0);
            G.d[a][c] = std::move(out.values());
        }
    }
    return G;
}

std::vector<ScalarField> vorticity(const VectorField& u, BCMode bc) {
    if (u.dim() < 2) throw TopologyError("vorticity needs at least two dimensions");
    const VelocityGradient G = sym_gradient(u, bc);
    auto curl = [&](int p, int q) {  // du_q/dx_p - du_p/dx_q
        ScalarField w(u.grid());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = G.grad(p, q, i) - G.grad(q, p, i);
        return w;
    };
    if (u.dim() == 2) return {curl(0, 1)};
    return {curl(1, 2), curl(2, 0), curl(0, 1)};
}

std::size_t GhostedState::interior_index(int i0, int i1, int i2) const {
    const int d = padded.dim;
    return padded.index(i0 + 1, d > 1 ? i1 + 1 : 0, d > 2 ? i2 + 1 : 0);
}

GhostedState apply_bc(const State& state, BCMode bc) {
    const Grid& g = state.grid();
    if (g.topology == Topology::Periodic || bc.kind != BCKind::SlipBox)
        throw TopologyError("apply_bc fills ghost layers of Box grids with the SlipBox mode only");

    GhostedState out;
    out.padded = g;
    for (int a = 0; a < g.dim; ++a) {
        const double h = g.spacing(a);
        out.padded.n[a] = g.n[a] + 2;
        out.padded.length[a] = g.length[a] + 2.0 * h;
        out.padded.origin[a] = g.origin[a] - h;
    }
    out.rho = ScalarField(out.padded);
    out.u = VectorField(out.padded);

    // Each padded cell takes the value of its mirror interior cell; every
    // reflection across a face normal to axis a flips the sign of u_a.
    const Grid& p = out.padded;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const auto c = p.coords(k);
        std::array<int, 3> src{0, 0, 0};
        std::array<bool, 3> reflected{false, false, false};
        for (int a = 0; a < g.dim; ++a) {
            int i = c[a] - 1;
            if (i < 0) { i = 0; reflected[a] = true; }
            if (i >= g.n[a]) { i = g.n[a] - 1; reflected[a] = true; }
            src[a] = i;
        }
        const std::size_t s = g.index(src[0], src[1], src[2]);
        out.rho[k] = state.rho[s];
        for (int comp = 0; comp < g.dim; ++comp) out.u(comp, k) = reflected[comp] ? -state.u(comp, s) : state.u(comp, s);
    }
    return out;
}

double boundary_mass_flux(const GhostedState& gs) {
    const Grid& p = gs.padded;
    double total = 0.0;
    for (int a = 0; a < p.dim; ++a) {
        double area = 1.0;
        for (int b = 0; b < p.dim; ++b)
            if (b != a) area *= p.spacing(b);
        for (std::size_t k = 0; k < p.size(); ++k) {
            const auto c = p.coords(k);
            bool interior_other = true;
            for (int b = 0; b < p.dim; ++b)
                if (b != a && (c[b] == 0 || c[b] == p.n[b] - 1)) interior_other = false;
            if (!interior_other) continue;
            // Faces between ghost 0 and interior 1, and interior n-2 and ghost n-1.
            const std::ptrdiff_t s = p.strides()[a];
            if (c[a] == 0) {
                const std::size_t in = k + s;
                total -= 0.5 * (gs.rho[k] + gs.rho[in]) * 0.5 * (gs.u(a, k) + gs.u(a, in)) * area;
            } else if (c[a] == p.n[a] - 1) {
                const std::size_t in = k - s;
                total += 0.5 * (gs.rho[k] + gs.rho[in]) * 0.5 * (gs.u(a, k) + gs.u(a, in)) * area;
            }
        }
    }
    return total;
}

}  // namespace degvisc
