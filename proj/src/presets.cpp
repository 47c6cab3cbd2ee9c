#include "degvisc/presets.hpp"

#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/manufactured_tables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace degvisc {

using detail::for_cells;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::array<double, 3> center_of(const Grid& g, std::size_t i) {
    const auto c = g.coords(i);
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (int a = 0; a < g.dim; ++a) x[a] = g.center(a, c[a]);
    return x;
}

double min_length(const Grid& g) {
    double L = g.length[0];
    for (int a = 1; a < g.dim; ++a) L = std::min(L, g.length[a]);
    return L;
}

// Squared distance to a point, using the nearest periodic image on the torus.
double dist2(const Grid& g, const std::array<double, 3>& x, const std::array<double, 3>& c) {
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        double d = x[a] - c[a];
        if (g.topology == Topology::Periodic) d -= g.length[a] * std::round(d / g.length[a]);
        s += d * d;
    }
    return s;
}

// Smooth bump of height 1 at c: von Mises product on the torus, Gaussian in a box.
double bump(const Grid& g, const std::array<double, 3>& x, const std::array<double, 3>& c, double kappa) {
    if (g.topology == Topology::Periodic) {
        double s = 0.0;
        for (int a = 0; a < g.dim; ++a) s += std::cos(kTwoPi * (x[a] - c[a]) / g.length[a]) - 1.0;
        return std::exp(kappa * s);
    }
    // kappa (cos - 1) ~ -kappa (2 pi d / L)^2 / 2 near the center
    const double L = min_length(g);
    return std::exp(-0.5 * kappa * kTwoPi * kTwoPi * dist2(g, x, c) / (L * L));
}

std::array<double, 3> relative(const Grid& g, double f0, double f1, double f2) {
    std::array<double, 3> c{0.0, 0.0, 0.0};
    const double f[3] = {f0, f1, f2};
    for (int a = 0; a < g.dim; ++a) c[a] = g.origin[a] + f[a] * g.length[a];
    return c;
}

// Smooth velocity profile; on a box the normal component vanishes at the walls.
double velocity_profile(const Grid& g, const std::array<double, 3>& x, int j, double amp, double phase) {
    const double xj = (x[j] - g.origin[j]) / g.length[j];
    if (g.topology == Topology::Periodic) {
        const int k = (j + 1) % g.dim;
        const double xk = (x[k] - g.origin[k]) / g.length[k];
        return amp * (std::sin(kTwoPi * xk + phase) + 0.5 * std::cos(kTwoPi * xj + 0.3 * phase));
    }
    double v = amp * std::sin(kTwoPi * xj + 0.0);
    if (g.dim > 1) {
        const int k = (j + 1) % g.dim;
        const double xk = (x[k] - g.origin[k]) / g.length[k];
        v *= 1.0 + 0.5 * std::cos(std::numbers::pi * xk + phase);
    }
    return v;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

RawData random_smooth(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int d = g.dim;
    const bool periodic = g.topology == Topology::Periodic;
    // Mode list in lexicographic order so the draw sequence is fixed.
    std::vector<std::array<int, 3>> modes;
    const int lo = periodic ? -3 : 0;
    for (int k0 = lo; k0 <= 3; ++k0)
        for (int k1 = d > 1 ? lo : 0; k1 <= (d > 1 ? 3 : 0); ++k1)
            for (int k2 = d > 2 ? lo : 0; k2 <= (d > 2 ? 3 : 0); ++k2) {
                const int n2 = k0 * k0 + k1 * k1 + k2 * k2;
                if (n2 == 0 || n2 > 9) continue;
                modes.push_back({k0, k1, k2});
            }
    const int nfields = 1 + d;
    std::vector<std::vector<std::array<double, 2>>> coef(nfields);
    for (int f = 0; f < nfields; ++f)
        for (std::size_t m = 0; m < modes.size(); ++m)
            coef[f].push_back({2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0});

    std::vector<ScalarField> raw(nfields, ScalarField(g));
    for_cells(g, [&](std::size_t i) {
        const auto x = center_of(g, i);
        for (int f = 0; f < nfields; ++f) {
            double s = 0.0;
            for (std::size_t m = 0; m < modes.size(); ++m) {
                const auto& k = modes[m];
                if (periodic) {
                    double phase = 0.0;
                    for (int a = 0; a < d; ++a) phase += kTwoPi * k[a] * (x[a] - g.origin[a]) / g.length[a];
                    s += coef[f][m][0] * std::cos(phase) + coef[f][m][1] * std::sin(phase);
                } else {
                    // Neumann modes; the normal velocity component uses sines along its axis.
                    const int normal = f - 1;
                    if (normal >= 0 && k[normal] == 0) continue;
                    double prod = coef[f][m][0];
                    for (int a = 0; a < d; ++a) {
                        const double arg = std::numbers::pi * k[a] * (x[a] - g.origin[a]) / g.length[a];
                        prod *= a == normal ? std::sin(arg) : std::cos(arg);
                    }
                    s += prod;
                }
            }
            raw[f][i] = s;
        }
    });
    auto normalized = [&](ScalarField& f) {
        double m = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
        if (m > 0.0)
            for (std::size_t i = 0; i < f.size(); ++i) f[i] /= m;
    };
    RawData out{ScalarField(g), VectorField(g)};
    for (auto& f : raw) normalized(f);
    for_cells(g, [&](std::size_t i) {
        out.rho0[i] = 1.0 + 0.2 * raw[0][i];
        for (int j = 0; j < d; ++j) out.m0(j, i) = out.rho0[i] * 0.5 * raw[1 + j][i];
    });
    return out;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"uniform", "gaussian-bump", "vacuum-patch", "two-bump",
                                                "random-smooth"};
    return names;
}

RawData preset(const std::string& name, const Grid& g, std::uint64_t seed) {
    g.validate();
    const int d = g.dim;
    RawData out{ScalarField(g), VectorField(g)};
    if (name == "uniform") {
        for (std::size_t i = 0; i < g.size(); ++i) out.rho0[i] = 1.0;
        return out;
    }
    if (name == "gaussian-bump") {
        const auto c = relative(g, 0.5, 0.5, 0.5);
        for_cells(g, [&](std::size_t i) { out.rho0[i] = 1.0 + 0.5 * bump(g, center_of(g, i), c, 2.5); });
        return out;
    }
    if (name == "vacuum-patch") {
        const auto c = relative(g, 0.5, 0.5, 0.5);
        const double L = min_length(g);
        const double r0 = 0.15 * L, w = 0.1 * L;
        for_cells(g, [&](std::size_t i) {
            const auto x = center_of(g, i);
            const double tau = std::clamp((std::sqrt(dist2(g, x, c)) - r0) / w, 0.0, 1.0);
            const double rho = tau * tau * (3.0 - 2.0 * tau);
            out.rho0[i] = rho;
            for (int j = 0; j < d; ++j) out.m0(j, i) = rho * velocity_profile(g, x, j, 0.3, 0.0);
        });
        return out;
    }
    if (name == "two-bump") {
        const auto c1 = relative(g, 0.3, 0.3, 0.3);
        const auto c2 = relative(g, 0.7, 0.55, 0.45);
        for_cells(g, [&](std::size_t i) {
            const auto x = center_of(g, i);
            const double rho = 1.0 + 0.6 * bump(g, x, c1, 3.0) + 0.3 * bump(g, x, c2, 6.0);
            out.rho0[i] = rho;
            for (int j = 0; j < d; ++j) out.m0(j, i) = rho * velocity_profile(g, x, j, 0.2, 0.4 + 0.7 * j);
        });
        return out;
    }
    if (name == "random-smooth") return random_smooth(g, seed);
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
}

// ---------------------------------------------------------------------------

namespace mt = manufactured_tables;

Manufactured::Manufactured(SystemVariant variant, int dim) : variant_(variant), dim_(dim) {
    if (dim != 1 && dim != 2) throw ConfigError("manufactured solutions exist for 1D and 2D only");
    double alpha = 0.0, gamma = 0.0;
    switch (variant) {
        case SystemVariant::A2D:
            alpha = mt::kA2D_alpha;
            gamma = mt::kA2D_gamma;
            table_ = dim == 1 ? mt::kA2D_1d : mt::kA2D_2d;
            break;
        case SystemVariant::B3D:
            alpha = mt::kB3D_alpha;
            gamma = mt::kB3D_gamma;
            table_ = dim == 1 ? mt::kB3D_1d : mt::kB3D_2d;
            break;
        case SystemVariant::C3D:
            alpha = mt::kC3D_alpha;
            gamma = mt::kC3D_gamma;
            table_ = dim == 1 ? mt::kC3D_1d : mt::kC3D_2d;
            break;
    }
    params_ = make_params(alpha, gamma, mt::kEpsilon, 1.0, variant, dim);
}

double Manufactured::series(const double* row, double s) const {
    double v = 0.0;
    for (int k = 0; k < mt::kModes; ++k) {
        const double arg = kTwoPi * k * s;
        v += row[2 * k] * std::cos(arg) + row[2 * k + 1] * std::sin(arg);
    }
    return v;
}

namespace {

double line_coordinate(const Grid& g, std::size_t i) {
    const auto c = g.coords(i);
    double s = g.center(0, c[0]);
    if (g.dim > 1) s += g.center(1, c[1]);
    return s;
}

void require_unit_torus(const Grid& g, int dim) {
    if (g.dim != dim || g.topology != Topology::Periodic) throw ConfigError("manufactured grid must be a torus");
    for (int a = 0; a < dim; ++a)
        if (g.length[a] != 1.0) throw ConfigError("manufactured grid must have unit length");
}

}  // namespace

State Manufactured::exact(const Grid& g, double t) const {
    require_unit_torus(g, dim_);
    State s;
    s.rho = ScalarField(g);
    s.u = VectorField(g);
    s.t = t;
    s.params = params_;
    const double amp[2] = {mt::kB, mt::kC};
    const double e = std::exp(-t);
    for_cells(g, [&](std::size_t i) {
        const double S = std::sin(kTwoPi * line_coordinate(g, i));
        s.rho[i] = 1.0 + mt::kA * S;
        for (int j = 0; j < dim_; ++j) s.u(j, i) = amp[j] * S * e;
    });
    return s;
}

Rhs Manufactured::exact_rate(const Grid& g, double t) const {
    const State s = exact(g, t);
    Rhs r{ScalarField(g), VectorField(g)};
    for_cells(g, [&](std::size_t i) {
        for (int j = 0; j < dim_; ++j) r.du_dt(j, i) = -s.u(j, i);
    });
    return r;
}

Rhs Manufactured::forcing(const Grid& g, double t) const {
    const State ex = exact(g, t);
    Rhs f{ScalarField(g), VectorField(g)};
    const int row_len = 2 * mt::kModes;
    const int comp_len = mt::kPowers * row_len;
    double epow[mt::kPowers];
    for (int p = 0; p < mt::kPowers; ++p) epow[p] = std::exp(-p * t);
    const double eps = params_.epsilon;
    for_cells(g, [&](std::size_t i) {
        const double s = line_coordinate(g, i);
        for (int comp = 0; comp <= dim_; ++comp) {
            double v = 0.0;
            for (int p = 0; p < mt::kPowers; ++p) v += epow[p] * series(table_ + comp * comp_len + p * row_len, s);
            if (comp == 0) {
                f.drho_dt[i] = v;
            } else {
                // the drag eps |u|^3 u is not in the tables
                if (variant_ == SystemVariant::C3D) {
                    const double speed = std::sqrt(ex.u.norm2_at(i));
                    v += eps * speed * speed * speed * ex.u(comp - 1, i);
                }
                f.du_dt(comp - 1, i) = v;
            }
        }
    });
    return f;
}

VectorField Manufactured::stress_difference(const Grid& g, double t) const {
    require_unit_torus(g, dim_);
    const double* tab = dim_ == 1 ? mt::kStressDiff_1d : mt::kStressDiff_2d;
    VectorField out(g);
    const double e = std::exp(-t);
    for_cells(g, [&](std::size_t i) {
        const double s = line_coordinate(g, i);
        for (int j = 0; j < dim_; ++j) out(j, i) = e * series(tab + j * 2 * mt::kModes, s);
    });
    return out;
}

}  // namespace degvisc
