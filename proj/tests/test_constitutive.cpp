#include "doctest.h"

#include "degvisc/constitutive.hpp"
#include "degvisc/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace degvisc;

namespace {

// Independent evaluation of the regularized law straight from its definition.
double h_eps_ref(double r, const ModelParams& p) {
    return std::pow(r, p.alpha) + std::cbrt(p.epsilon) * (std::pow(r, 0.875) + std::pow(r, p.gamma + 1.0 / 6.0));
}

ScalarField smooth_density(const Grid& g, double amp) {
    ScalarField r(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.coords(i);
        double s = 0.0;
        for (int a = 0; a < g.dim; ++a) s += std::sin(2 * std::numbers::pi * (g.center(a, c[a]) - g.origin[a]) / g.length[a] + a);
        r[i] = 1.0 + amp * s / g.dim;
    }
    return r;
}

}  // namespace

TEST_CASE("regularized coefficients match their definitions") {
    const ModelParams p = make_params(1.3, 2.2, 0.04, 1.0, SystemVariant::A2D);
    for (double r : {1e-3, 0.2, 1.0, 3.7}) {
        const CoeffPoint c = coeffs_at(r, p);
        CHECK(c.h == doctest::Approx(std::pow(r, 1.3)));
        CHECK(c.g == doctest::Approx(0.3 * std::pow(r, 1.3)));
        CHECK(c.h_eps == doctest::Approx(h_eps_ref(r, p)));
        // central difference of the reference as the derivative oracle
        const double d = 1e-6 * r;
        const double fd = (h_eps_ref(r + d, p) - h_eps_ref(r - d, p)) / (2 * d);
        CHECK(c.h_eps_prime == doctest::Approx(fd).epsilon(1e-7));
        CHECK(c.g_eps == doctest::Approx(r * fd - h_eps_ref(r, p)).epsilon(1e-7));
        CHECK(c.P == doctest::Approx(std::pow(r, 2.2)));
        CHECK(c.phi_prime == doctest::Approx(c.h_eps_prime / r));
    }
}

TEST_CASE("epsilon = 0 recovers the unregularized law") {
    const ModelParams p = make_params(0.8, 1.4, 0.0, 1.0, SystemVariant::A2D);
    const CoeffPoint c = coeffs_at(2.0, p);
    CHECK(c.h_eps == doctest::Approx(c.h));
    CHECK(c.g_eps == doctest::Approx(c.g));
}

TEST_CASE("system C uses h = rho and g = 0") {
    const ModelParams p = make_params(1.0, 1.4, 0.1, 1.0, SystemVariant::C3D);
    const CoeffPoint c = viscosity_at(2.5, p);
    CHECK(c.h_eps == 2.5);
    CHECK(c.g_eps == 0.0);
    CHECK(c.phi_prime == doctest::Approx(0.4));
}

TEST_CASE("non-positive density is rejected with the cell") {
    const Grid g = Grid::torus(2, 4);
    ScalarField r(g, 1.0);
    r[g.index(2, 3)] = 0.0;
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D);
    try {
        eval_coeffs(r, p);
        FAIL("expected PositivityError");
    } catch (const PositivityError& e) {
        CHECK(e.cell() == g.index(2, 3));
        CHECK(e.value() == 0.0);
    }
}

TEST_CASE("damping coefficient in the log domain") {
    // eps = 0.5: e^{-8} (rho^4 + rho^{-4}) is representable directly
    const double e = 0.5;
    for (double r : {0.3, 1.0, 2.0}) {
        const double direct = std::exp(-8.0) * (std::pow(r, 4.0) + std::pow(r, -4.0));
        CHECK(std::exp(log_damping(r, e)) == doctest::Approx(direct).epsilon(1e-13));
    }
    CHECK(log_damping(1.0, 0.0) == -INFINITY);

    const Grid g = Grid::torus(1, 4);
    ScalarField r(g, 1.0);
    // desk epsilon: e^{-8000} underflows to zero and is flagged
    const auto under = damping_coefficient(r, make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D));
    CHECK(under.underflow);
    CHECK(under.coef[0] == 0.0);
    // rho^{400} e^{-8000} overflows once ln rho > (8000 + 709)/400
    r[1] = std::exp(22.0);
    CHECK_THROWS_AS(damping_coefficient(r, make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D)), OverflowError);
    r[1] = std::exp(-22.0);
    CHECK_THROWS_AS(damping_coefficient(r, make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D)), OverflowError);
}

TEST_CASE("cold diffusion integrates to minus half its dissipation") {
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D);
    for (int dim : {1, 2}) {
        const Grid g = Grid::torus(dim, 24);
        const ScalarField r = smooth_density(g, 0.4);
        const ScalarField G = cold_diffusion_G(r, p, BCMode::periodic());
        const double D = cold_dissipation(r, p, BCMode::periodic());
        CHECK(D > 0.0);
        CHECK(integrate(G) == doctest::Approx(-0.5 * D).epsilon(1e-12));
    }
    const Grid b = Grid::box(2, 16, 1.0);
    const ScalarField rb = smooth_density(b, 0.3);
    CHECK(integrate(cold_diffusion_G(rb, p, BCMode::slip_box())) ==
          doctest::Approx(-0.5 * cold_dissipation(rb, p, BCMode::slip_box())).epsilon(1e-12));
}

TEST_CASE("cold diffusion converges to its continuous form") {
    // G = eps sqrt(rho) (rho^{-1/2} h' rho')' in 1D for rho = 1 + 0.3 sin(2 pi x)
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D);
    auto exact = [&](double x) {
        const double k = 2 * std::numbers::pi;
        const double d = 1e-5;
        auto flux = [&](double y) {
            const double r = 1 + 0.3 * std::sin(k * y);
            return std::pow(r, -0.5) * coeffs_at(r, p).h_eps_prime * 0.3 * k * std::cos(k * y);
        };
        const double r = 1 + 0.3 * std::sin(k * x);
        return p.epsilon * std::sqrt(r) * (flux(x + d) - flux(x - d)) / (2 * d);
    };
    double prev = 0.0;
    for (int n : {32, 64, 128}) {
        const Grid g = Grid::torus(1, n);
        ScalarField r(g);
        for (int i = 0; i < n; ++i) r[i] = 1 + 0.3 * std::sin(2 * std::numbers::pi * g.center(0, i));
        const ScalarField G = cold_diffusion_G(r, p, BCMode::periodic());
        double err = 0.0;
        for (int i = 0; i < n; ++i) err = std::max(err, std::abs(G[i] - exact(g.center(0, i))));
        if (prev > 0) CHECK(std::log2(prev / err) > 1.8);
        prev = err;
    }
}

TEST_CASE("system C source terms") {
    const ModelParams p = make_params(1.0, 1.4, 0.1, 1.0, SystemVariant::C3D);
    const Grid g = Grid::torus(2, 16);
    const ScalarField r = smooth_density(g, 0.3);
    VectorField u(g, 0.2);
    const QTerms q = qsystem_coeffs(r, u, p, BCMode::periodic());
    CHECK(q.dirichlet > 0.0);
    CHECK(q.quartic > 0.0);
    CHECK(q.rho_mp0[3] == doctest::Approx(std::pow(r[3], -50.0)));
    // |u| = 0.2 sqrt(2): rho |u|^3 u
    const double s = 0.2 * std::sqrt(2.0);
    CHECK(q.rho_u3u(1, 5) == doctest::Approx(r[5] * s * s * s * 0.2));
    // constant u: the work term vanishes
    CHECK(q.v_grad_work(0, 7) == doctest::Approx(0.0));

    ScalarField tiny(g, 1e-7);
    CHECK_THROWS_AS(qsystem_coeffs(tiny, u, p, BCMode::periodic()), OverflowError);
    CHECK_THROWS_AS(qsystem_coeffs(r, u, make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D), BCMode::periodic()),
                    ConfigError);
}

TEST_CASE("coercivity constant") {
    CHECK(coercivity_constant(2, 1.0) == 1.0);
    CHECK(coercivity_constant(3, 0.75) == doctest::Approx(0.25));
    CHECK(coercivity_constant(3, 1.0) == 1.0);
    CHECK(coercivity_constant(2, 0.8) == doctest::Approx(0.6));
}

TEST_CASE("pointwise stress coercivity holds on random fields in admissible regimes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    struct Case { int dim; double alpha, gamma; SystemVariant v; };
    for (const Case c : {Case{2, 1.0, 2.0, SystemVariant::A2D}, Case{3, 0.75, 1.2, SystemVariant::B3D},
                         Case{3, 1.0, 2.0, SystemVariant::B3D}, Case{2, 0.6, 1.1, SystemVariant::A2D}}) {
        const ModelParams p = make_params(c.alpha, c.gamma, 0.05, 1.0, c.v, c.dim);
        const Grid g = Grid::torus(c.dim, c.dim == 3 ? 6 : 12);
        ScalarField r(g);
        VectorField u(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            r[i] = std::exp(2.0 * U(rng));
            for (int a = 0; a < c.dim; ++a) u(a, i) = U(rng);
        }
        const auto res = stress_coercivity_check(u, r, p, BCMode::periodic());
        CHECK(res.scale > 0.0);
        CHECK(res.holds());
    }
}
