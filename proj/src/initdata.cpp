#include "degvisc/initdata.hpp"

#include "degvisc/constitutive.hpp"
#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace degvisc {

using detail::for_cells;

RawDataCheck check_raw(const RawData& raw, const ModelParams& p) {
    const Grid& g = raw.grid();
    RawDataCheck c;
    std::size_t vacuum = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(raw.rho0[i] >= 0.0)) c.nonnegative = false;
        if (raw.rho0[i] == 0.0) {
            ++vacuum;
            if (raw.m0.norm2_at(i) != 0.0) c.momentum_vanishes_on_vacuum = false;
        }
    }
    c.vacuum_measure = static_cast<double>(vacuum) * g.cell_volume();
    c.mass = integrate_cells(g, [&](std::size_t i) { return raw.rho0[i]; });
    if (!c.nonnegative) return c;

    ScalarField q(g);
    for_cells(g, [&](std::size_t i) { q[i] = power(raw.rho0[i], p.alpha - 0.5); });
    const VectorField gq = gradient(q, BCMode::for_grid(g));
    c.grad_power_l2 = std::sqrt(integrate_cells(g, [&](std::size_t i) { return gq.norm2_at(i); }));
    const double r = 2.0 * p.gamma / (p.gamma + 1.0);
    c.momentum_norm = std::pow(
        integrate_cells(g, [&](std::size_t i) { return std::pow(std::sqrt(raw.m0.norm2_at(i)), r); }), 1.0 / r);
    c.kinetic_moment = integrate_cells(g, [&](std::size_t i) {
        const double rho = raw.rho0[i];
        if (rho == 0.0) return 0.0;
        return std::pow(rho, -1.0 - p.eta0) * std::pow(std::sqrt(raw.m0.norm2_at(i)), 2.0 + p.eta0);
    });
    return c;
}

namespace {

// Index of position j reflected or wrapped into [0, n); sign -1 when an odd
// field is reflected an odd number of times.
int fold(int j, int n, bool periodic, double& sign, bool odd) {
    if (periodic) return ((j % n) + n) % n;
    while (j < 0 || j >= n) {
        j = j < 0 ? -j - 1 : 2 * n - 1 - j;
        if (odd) sign = -sign;
    }
    return j;
}

}  // namespace

ScalarField gaussian_smooth(const ScalarField& f, double width_cells, int comp) {
    const Grid& g = f.grid();
    if (!(width_cells > 0.0)) return f;
    const int R = static_cast<int>(std::ceil(3.0 * width_cells));
    std::vector<double> k(2 * R + 1);
    double ksum = 0.0;
    for (int m = -R; m <= R; ++m) ksum += k[m + R] = std::exp(-0.5 * m * m / (width_cells * width_cells));
    for (double& v : k) v /= ksum;

    const bool periodic = g.topology == Topology::Periodic;
    ScalarField cur = f;
    for (int a = 0; a < g.dim; ++a) {
        ScalarField next(g);
        const int na = g.n[a];
        const auto stride = g.strides()[a];
        const bool odd = comp == a;
        for_cells(g, [&](std::size_t i) {
            const int ia = g.coords(i)[a];
            const std::size_t base = i - static_cast<std::size_t>(ia) * stride;
            double s = 0.0;
            for (int m = -R; m <= R; ++m) {
                double sign = 1.0;
                const int j = fold(ia + m, na, periodic, sign, odd);
                s += k[m + R] * sign * cur[base + static_cast<std::size_t>(j) * stride];
            }
            next[i] = s;
        });
        cur = std::move(next);
    }
    return cur;
}

int default_nu(double alpha) {
    if (!(alpha > 0.5)) throw ConfigError("alpha must exceed 1/2");
    int nu = 2;
    while (nu * (alpha - 0.5) < 5.0) ++nu;
    return nu;
}

double mollified_floor(const ModelParams& p) {
    if (p.epsilon <= 0.0) return 0.0;
    return std::pow(p.epsilon, 4.0 * p.sigma0);
}

ScalarField mollify_density(const RawData& raw, const ModelParams& p, int nu) {
    const Grid& g = raw.grid();
    const bool csys = p.system == SystemVariant::C3D;
    const double q = csys ? 6.0 : nu * (p.alpha - 0.5);
    if (!csys && q < 5.0) {
        std::ostringstream msg;
        msg << "nu = " << nu << " too small: nu (alpha - 1/2) = " << q << " < 5";
        throw ConfigError(msg.str());
    }
    const double e = std::max(p.epsilon, 0.0);
    const double ceiling = e > 0.0 ? std::pow(e, -4.0 * p.sigma0) : INFINITY;
    const double floor_q = e > 0.0 ? std::pow(e, 4.0 * p.sigma0 * q) : 0.0;
    ScalarField smooth = gaussian_smooth(raw.rho0, 2.0);
    ScalarField out(g);
    for_cells(g, [&](std::size_t i) {
        double r = std::max(smooth[i], 0.0);
        if (!csys) r = std::min(r, ceiling);
        out[i] = std::pow(std::pow(r, q) + floor_q, 1.0 / q);
    });
    return out;
}

VelocityLift lift_velocity(const RawData& raw, const ScalarField& rho0eps, const ModelParams& p, bool l4_data) {
    require_positive(rho0eps, "lift_velocity");
    const Grid& g = raw.grid();
    const int d = g.dim;
    const double qexp = l4_data ? 0.75 : (1.0 + p.eta0) / (2.0 + p.eta0);
    VelocityLift lift;
    lift.exponent = l4_data ? -0.25 : -1.0 / (2.0 + p.eta0);
    lift.u = VectorField(g);
    for (int c = 0; c < d; ++c) {
        ScalarField w(g);
        for_cells(g, [&](std::size_t i) {
            const double r = raw.rho0[i];
            w[i] = r > 0.0 ? raw.m0(c, i) / std::pow(r, qexp) : 0.0;
        });
        const ScalarField ws = gaussian_smooth(w, 2.0, c);
        for_cells(g, [&](std::size_t i) { lift.u(c, i) = std::pow(rho0eps[i], lift.exponent) * ws[i]; });
    }
    lift.moment = integrate_cells(g, [&](std::size_t i) {
        return rho0eps[i] * std::pow(std::sqrt(lift.u.norm2_at(i)), 2.0 + p.eta0);
    });
    lift.moment4 = integrate_cells(g, [&](std::size_t i) {
        const double s = lift.u.norm2_at(i);
        return rho0eps[i] * s * s;
    });
    lift.momentum_l1_error = integrate_cells(g, [&](std::size_t i) {
        double s = 0.0;
        for (int c = 0; c < d; ++c) {
            const double diff = rho0eps[i] * lift.u(c, i) - raw.m0(c, i);
            s += diff * diff;
        }
        return std::sqrt(s);
    });
    return lift;
}

namespace {

// Multilinear interpolation of a source field at a point; zero outside the
// source grid's extent (cell centers at the boundary are held constant out
// to the edge of the extent).
double sample(const ScalarField& f, const std::array<double, 3>& x) {
    const Grid& g = f.grid();
    std::array<int, 3> lo{0, 0, 0};
    std::array<double, 3> w{0.0, 0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) {
        const double rel = x[a] - g.origin[a];
        if (rel < 0.0 || rel > g.length[a]) return 0.0;
        const double s = rel / g.spacing(a) - 0.5;
        int i = static_cast<int>(std::floor(s));
        double t = s - i;
        if (i < 0) { i = 0; t = 0.0; }
        if (i >= g.n[a] - 1) { i = g.n[a] - 2; t = 1.0; }
        lo[a] = i;
        w[a] = t;
    }
    double acc = 0.0;
    const int corners = 1 << g.dim;
    for (int c = 0; c < corners; ++c) {
        double wt = 1.0;
        std::array<int, 3> idx{0, 0, 0};
        for (int a = 0; a < g.dim; ++a) {
            const int bit = (c >> a) & 1;
            idx[a] = lo[a] + bit;
            wt *= bit ? w[a] : 1.0 - w[a];
        }
        acc += wt * f[g.index(idx[0], idx[1], idx[2])];
    }
    return acc;
}

double smooth_step(double tau) {  // 1 at tau <= 0, 0 at tau >= 1, C-infinity
    if (tau <= 0.0) return 1.0;
    if (tau >= 1.0) return 0.0;
    const double a = std::exp(-1.0 / (1.0 - tau));
    const double b = std::exp(-1.0 / tau);
    return a / (a + b);
}

}  // namespace

Truncation truncate_to_box(const RawData& raw, const ModelParams& p, double box_scale, int n) {
    if (!(box_scale > 0.0)) throw ConfigError("box scale must be positive");
    const Grid& src = raw.grid();
    const double e = p.epsilon > 0.0 ? p.epsilon : 1.0;
    Truncation out;
    out.half_width = box_scale * std::pow(e, -p.sigma0);
    const Grid g = Grid::box(src.dim, n, out.half_width);
    const double R = out.half_width;

    double outside = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto c = src.coords(i);
        bool in = true;
        for (int a = 0; a < src.dim; ++a) in = in && std::abs(src.center(a, c[a])) < R;
        if (!in) outside += raw.rho0[i];
    }
    double total = 0.0;
    for (std::size_t i = 0; i < src.size(); ++i) total += raw.rho0[i];
    out.outside_fraction = total > 0.0 ? outside / total : 0.0;
    if (out.outside_fraction > 0.01) {
        out.warning = true;
        std::ostringstream msg;
        msg << "box of half-width " << R << " leaves " << 100.0 * out.outside_fraction
            << "% of the raw mass outside; increase the box scale";
        out.message = msg.str();
    }

    std::vector<ScalarField> mcomp;
    for (int c = 0; c < src.dim; ++c) {
        ScalarField m(src);
        m.values() = raw.m0.comp(c);
        mcomp.push_back(std::move(m));
    }
    out.raw.rho0 = ScalarField(g);
    out.raw.m0 = VectorField(g);
    for_cells(g, [&](std::size_t i) {
        const auto c = g.coords(i);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        double r2 = 0.0;
        for (int a = 0; a < g.dim; ++a) {
            x[a] = g.center(a, c[a]);
            r2 += x[a] * x[a];
        }
        const double psi = smooth_step((std::sqrt(r2) - 0.5 * R) / (0.5 * R));
        const double rho = std::max(sample(raw.rho0, x), 0.0) * psi;
        out.raw.rho0[i] = rho;
        for (int a = 0; a < g.dim; ++a) out.raw.m0(a, i) = rho > 0.0 ? sample(mcomp[a], x) * psi : 0.0;
    });
    return out;
}

InitialData regularize(const RawData& raw, const ModelParams& p, int nu) {
    InitialData out;
    out.raw_check = check_raw(raw, p);
    if (!out.raw_check.nonnegative) throw ConfigError("raw density has negative samples");
    if (!out.raw_check.momentum_vanishes_on_vacuum)
        throw ConfigError("raw momentum does not vanish on the vacuum set");
    const Grid& g = raw.grid();
    out.nu = nu > 0 ? nu : default_nu(p.alpha);
    out.floor = mollified_floor(p);
    out.state.rho = mollify_density(raw, p, out.nu);
    out.state.params = p;
    out.state.t = 0.0;
    const bool l4 = validate_regime(p.alpha, p.gamma, g.dim, p.system).needs_L4_data;
    out.lift = lift_velocity(raw, out.state.rho, p, l4);
    out.state.u = out.lift.u;
    out.l1_distance = integrate_cells(g, [&](std::size_t i) { return std::abs(out.state.rho[i] - raw.rho0[i]); });
    out.lgamma_distance = std::pow(integrate_cells(g, [&](std::size_t i) {
                                       return std::pow(std::abs(out.state.rho[i] - raw.rho0[i]), p.gamma);
                                   }),
                                   1.0 / p.gamma);
    return out;
}

State state_from_raw(const RawData& raw, const ModelParams& p) {
    const Grid& g = raw.grid();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!(raw.rho0[i] > 0.0)) throw ConfigError("raw density must be positive to be used directly");
    State s;
    s.rho = raw.rho0;
    s.u = VectorField(g);
    for_cells(g, [&](std::size_t i) {
        for (int j = 0; j < g.dim; ++j) s.u(j, i) = raw.m0(j, i) / raw.rho0[i];
    });
    s.params = p;
    return s;
}

std::string to_string(InitialDataMode m) { return m == InitialDataMode::Raw ? "raw" : "regularized"; }

InitialDataMode parse_initial_data_mode(const std::string& name) {
    if (name == "regularized") return InitialDataMode::Regularized;
    if (name == "raw") return InitialDataMode::Raw;
    throw ConfigError("unknown initial_data mode '" + name + "' (expected regularized or raw)");
}

InitialData prepare_initial(const RawData& raw, const ModelParams& p, InitialDataMode mode, int nu) {
    if (mode == InitialDataMode::Regularized) return regularize(raw, p, nu);
    InitialData out;
    out.raw_check = check_raw(raw, p);
    out.state = state_from_raw(raw, p);
    const Grid& g = raw.grid();
    out.lift.u = out.state.u;
    out.lift.moment = integrate_cells(g, [&](std::size_t i) {
        return raw.rho0[i] * std::pow(std::sqrt(out.state.u.norm2_at(i)), 2.0 + p.eta0);
    });
    out.lift.moment4 = integrate_cells(g, [&](std::size_t i) {
        const double s = out.state.u.norm2_at(i);
        return raw.rho0[i] * s * s;
    });
    return out;
}

}  // namespace degvisc
