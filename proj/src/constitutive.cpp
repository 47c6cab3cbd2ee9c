#include "degvisc/constitutive.hpp"

#include "degvisc/detail/stencil.hpp"
#include "degvisc/errors.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

namespace degvisc {

namespace {

// exp() of anything above this overflows a double; below the lower bound the
// result is subnormal and treated as underflow.
constexpr double kLogMax = 709.0;
constexpr double kLogMin = -708.0;

std::string cell_text(const Grid& g, std::size_t i) {
    const auto c = g.coords(i);
    std::ostringstream s;
    s << '(' << c[0];
    for (int a = 1; a < g.dim; ++a) s << ',' << c[a];
    s << ')';
    return s.str();
}

}  // namespace

CoeffLaw::CoeffLaw(const ModelParams& p)
    : alpha_(p.alpha), gamma_(p.gamma), gt_(p.gamma_tilde), e13_(std::cbrt(p.epsilon)),
      csys_(p.system == SystemVariant::C3D) {}

CoeffPoint CoeffLaw::regularized(double rho) const {
    const double L = std::log(rho);
    const double ra = alpha_ == 1.0 ? rho : std::exp(alpha_ * L);
    const double r78 = std::exp(0.875 * L);
    const double rg = std::exp(gt_ * L);
    CoeffPoint c;
    c.h = ra;
    c.g = (alpha_ - 1.0) * ra;
    c.h_eps = ra + e13_ * (r78 + rg);
    c.h_eps_prime = (alpha_ * ra + e13_ * (0.875 * r78 + gt_ * rg)) / rho;
    c.g_eps = rho * c.h_eps_prime - c.h_eps;
    c.P = gamma_ == 2.0 ? rho * rho : std::exp(gamma_ * L);
    c.phi_prime = c.h_eps_prime / rho;
    return c;
}

CoeffPoint CoeffLaw::viscosity(double rho) const {
    if (!csys_) return regularized(rho);
    CoeffPoint c;
    c.h = c.h_eps = rho;
    c.g = c.g_eps = 0.0;
    c.h_eps_prime = 1.0;
    c.P = power(rho, gamma_);
    c.phi_prime = 1.0 / rho;
    return c;
}

CoeffPoint coeffs_at(double rho, const ModelParams& p) { return CoeffLaw(p).regularized(rho); }

CoeffPoint viscosity_at(double rho, const ModelParams& p) { return CoeffLaw(p).viscosity(rho); }

void require_positive(const ScalarField& rho, const char* context) {
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0)) {
            std::ostringstream msg;
            msg << context << ": non-positive density " << rho[i] << " at cell " << cell_text(rho.grid(), i);
            throw PositivityError(msg.str(), i, rho[i]);
        }
    }
}

CoeffSet eval_coeffs(const ScalarField& rho, const ModelParams& p) {
    require_positive(rho, "eval_coeffs");
    const Grid& g = rho.grid();
    CoeffSet s{ScalarField(g), ScalarField(g), ScalarField(g), ScalarField(g),
               ScalarField(g), ScalarField(g), ScalarField(g)};
    const CoeffLaw law(p);
    detail::for_cells(g, [&](std::size_t i) {
        const CoeffPoint c = law.regularized(rho[i]);
        s.h[i] = c.h;
        s.g[i] = c.g;
        s.h_eps[i] = c.h_eps;
        s.h_eps_prime[i] = c.h_eps_prime;
        s.g_eps[i] = c.g_eps;
        s.P[i] = c.P;
        s.phi_prime[i] = c.phi_prime;
    });
    return s;
}

double log_damping(double rho, double epsilon) {
    if (epsilon <= 0.0) return -std::numeric_limits<double>::infinity();
    const double e2 = 1.0 / (epsilon * epsilon);
    const double e3 = e2 / epsilon;
    const double L = std::abs(std::log(rho));
    return -e3 + e2 * L + std::log1p(std::exp(-2.0 * e2 * L));
}

DampingField damping_coefficient(const ScalarField& rho, const ModelParams& p) {
    require_positive(rho, "damping_coefficient");
    DampingField out{ScalarField(rho.grid()), false};
    if (p.epsilon <= 0.0) return out;
    // The log coefficient grows with |ln rho|, so the density extremes decide
    // whether any cell can leave the underflow range.
    const auto [lo, hi] = std::minmax_element(rho.values().begin(), rho.values().end());
    if (std::max(log_damping(*lo, p.epsilon), log_damping(*hi, p.epsilon)) < kLogMin) {
        out.underflow = true;
        return out;
    }
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double lg = log_damping(rho[i], p.epsilon);
        if (lg > kLogMax) {
            std::ostringstream msg;
            msg << "damping coefficient overflows at cell " << cell_text(rho.grid(), i) << " (rho=" << rho[i]
                << ", log value " << lg << "): ε too small for this density range";
            throw OverflowError(msg.str(), i);
        }
        if (lg < kLogMin) {
            out.underflow = true;
        } else {
            out.coef[i] = std::exp(lg);
        }
    }
    return out;
}

namespace {

// Face coefficient of the cold-diffusion flux: the mean of rho^{-1} h_eps'
// times the mean of sqrt(rho), so that sqrt(rho) times the face-flux
// difference telescopes into the dissipation exactly.
struct ColdFaces {
    ScalarField b;   // rho^{-1} h_eps'
    ScalarField sq;  // sqrt(rho)
};

ColdFaces cold_faces(const ScalarField& rho, const ModelParams& p) {
    ColdFaces f{ScalarField(rho.grid()), ScalarField(rho.grid())};
    const CoeffLaw law(p);
    detail::for_cells(rho.grid(), [&](std::size_t i) {
        f.b[i] = law.regularized(rho[i]).phi_prime;
        f.sq[i] = std::sqrt(rho[i]);
    });
    return f;
}

}  // namespace

ScalarField cold_diffusion_G(const ScalarField& rho, const ModelParams& p, BCMode bc) {
    require_compatible(rho.grid(), bc);
    require_positive(rho, "cold_diffusion_G");
    const Grid& g = rho.grid();
    ScalarField G(g);
    if (p.epsilon <= 0.0) return G;
    const ColdFaces f = cold_faces(rho, p);
    const double* r = rho.data();
    const double* b = f.b.data();
    const double* sq = f.sq.data();
    double* out = G.data();
    for (int a = 0; a < g.dim; ++a) {
        const double c = p.epsilon / (g.spacing(a) * g.spacing(a));
        detail::for_axis_neighbors(g, a, [=](std::size_t i, std::size_t up, std::size_t dn, bool, bool) {
            const double au = 0.25 * (b[i] + b[up]) * (sq[i] + sq[up]);
            const double ad = 0.25 * (b[i] + b[dn]) * (sq[i] + sq[dn]);
            out[i] += c * sq[i] * (au * (r[up] - r[i]) - ad * (r[i] - r[dn]));
        });
    }
    return G;
}

double cold_dissipation(const ScalarField& rho, const ModelParams& p, BCMode bc) {
    require_compatible(rho.grid(), bc);
    require_positive(rho, "cold_dissipation");
    if (p.epsilon <= 0.0) return 0.0;
    const Grid& g = rho.grid();
    const ColdFaces f = cold_faces(rho, p);
    ScalarField per_cell(g);  // each cell owns its upper face on every axis
    const double* r = rho.data();
    const double* b = f.b.data();
    double* out = per_cell.data();
    for (int a = 0; a < g.dim; ++a) {
        const double c = 1.0 / (g.spacing(a) * g.spacing(a));
        detail::for_axis_neighbors(g, a, [=](std::size_t i, std::size_t up, std::size_t, bool, bool) {
            const double d = r[up] - r[i];
            out[i] += c * 0.5 * (b[i] + b[up]) * d * d;
        });
    }
    return p.epsilon * integrate(per_cell);
}

QTerms qsystem_coeffs(const ScalarField& rho, const VectorField& u, const ModelParams& p, BCMode bc) {
    if (p.system != SystemVariant::C3D) throw ConfigError("qsystem_coeffs requires the C3D variant");
    require_compatible(rho.grid(), bc);
    require_positive(rho, "qsystem_coeffs");
    const Grid& g = rho.grid();
    const int d = g.dim;

    ScalarField v(g);
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = std::sqrt(rho[i]);

    QTerms q{ScalarField(g), ScalarField(g), ScalarField(g), VectorField(g), VectorField(g), 0.0, 0.0};

    for (std::size_t i = 0; i < g.size(); ++i) {
        const double lg = -p.p0 * std::log(rho[i]);
        if (lg > kLogMax) {
            std::ostringstream msg;
            msg << "rho^{-p0} overflows at cell " << cell_text(g, i) << " (rho=" << rho[i] << ")";
            throw OverflowError(msg.str(), i);
        }
        q.rho_mp0[i] = std::exp(lg);
    }

    const ScalarField lap = laplacian(v, bc);
    const VectorField gv = gradient(v, bc);
    ScalarField k(g);  // |∇v|^2
    for (std::size_t i = 0; i < g.size(); ++i) k[i] = gv.norm2_at(i);
    ScalarField flux(g);
    for (int a = 0; a < d; ++a) add_face_diffusion(flux, &k, v, a, Parity::Even, 1.0);

    const VelocityGradient G = sym_gradient(u, bc);
    detail::for_cells(g, [&](std::size_t i) {
        q.v_lap_v[i] = v[i] * lap[i];
        q.v_div_flux[i] = v[i] * flux[i];
        const double speed = std::sqrt(u.norm2_at(i));
        for (int j = 0; j < d; ++j) {
            q.rho_u3u(j, i) = rho[i] * speed * speed * speed * u(j, i);
            double w = 0.0;
            for (int a = 0; a < d; ++a) w += gv(a, i) * G.grad(a, j, i);
            q.v_grad_work(j, i) = v[i] * k[i] * w;
        }
    });
    q.dirichlet = -integrate(q.v_lap_v);
    q.quartic = -integrate(q.v_div_flux);
    return q;
}

double coercivity_constant(int dim, double alpha) { return std::min(dim * alpha - (dim - 1), 1.0); }

CoercivityResult stress_coercivity_check(const VectorField& u, const ScalarField& rho, const ModelParams& p,
                                         BCMode bc) {
    require_positive(rho, "stress_coercivity_check");
    const VelocityGradient G = sym_gradient(u, bc);
    const double c = coercivity_constant(u.dim(), p.alpha);
    CoercivityResult r{std::numeric_limits<double>::infinity(), 0.0};
    const CoeffLaw law(p);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const CoeffPoint k = law.viscosity(rho[i]);
        const double du2 = G.sym_norm2(i);
        const double dv = G.div(i);
        const double value = 4.0 * (k.h_eps * du2 + k.g_eps * dv * dv) - c * k.h_eps * du2;
        r.min_value = std::min(r.min_value, value);
        r.scale = std::max(r.scale, 4.0 * k.h_eps * du2 + 4.0 * std::abs(k.g_eps) * dv * dv);
    }
    if (rho.size() == 0) r.min_value = 0.0;
    return r;
}

}  // namespace degvisc
