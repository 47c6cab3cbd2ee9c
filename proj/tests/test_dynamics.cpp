#include "doctest.h"

#include "degvisc/dynamics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/parallel.hpp"
#include "degvisc/presets.hpp"

#include <cmath>
#include <numbers>

using namespace degvisc;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

State wavy_state(const Grid& g, const ModelParams& p) {
    State s;
    s.rho = ScalarField(g);
    s.u = VectorField(g);
    s.params = p;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.coords(i);
        const double x = g.center(0, c[0]);
        const double y = g.dim > 1 ? g.center(1, c[1]) : 0.0;
        s.rho[i] = 1.0 + 0.3 * std::sin(kTwoPi * x) * std::cos(kTwoPi * y);
        s.u(0, i) = 0.2 * std::cos(kTwoPi * y) + 0.1 * std::sin(kTwoPi * x);
        if (g.dim > 1) s.u(1, i) = -0.15 * std::sin(kTwoPi * x);
    }
    return s;
}

double manufactured_error(const Manufactured& m, int n) {
    const Grid g = Grid::torus(m.dim(), n);
    const double t = 0.3;
    const Rhs r = rhs(m.exact(g, t), m.variant(), BCMode::periodic());
    const Rhs f = m.forcing(g, t);
    const Rhs ex = m.exact_rate(g, t);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        err = std::max(err, std::abs(r.drho_dt[i] + f.drho_dt[i] - ex.drho_dt[i]));
        for (int j = 0; j < m.dim(); ++j) err = std::max(err, std::abs(r.du_dt(j, i) + f.du_dt(j, i) - ex.du_dt(j, i)));
    }
    return err;
}

double max_diff(const State& a, const State& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.rho.size(); ++i) {
        e = std::max(e, std::abs(a.rho[i] - b.rho[i]));
        for (int j = 0; j < a.grid().dim; ++j) e = std::max(e, std::abs(a.u(j, i) - b.u(j, i)));
    }
    return e;
}

}  // namespace

TEST_CASE("semi-discrete rhs is second-order consistent with the manufactured solution") {
    for (SystemVariant v : {SystemVariant::A2D, SystemVariant::B3D, SystemVariant::C3D}) {
        for (int dim : {1, 2}) {
            CAPTURE(to_string(v));
            CAPTURE(dim);
            const Manufactured m(v, dim);
            const double e1 = manufactured_error(m, 32);
            const double e2 = manufactured_error(m, 64);
            CHECK(std::log2(e1 / e2) > 1.9);
        }
    }
}

TEST_CASE("the uniform state at rest is an equilibrium") {
    const Grid g = Grid::torus(2, 8);
    for (SystemVariant v : {SystemVariant::A2D, SystemVariant::B3D}) {
        State s;
        s.rho = ScalarField(g, 1.0);
        s.u = VectorField(g, 0.0);
        s.params = make_params(1.0, 2.0, 0.1, 1.0, v, 2);
        const Rhs r = rhs(s, v, BCMode::periodic());
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(r.drho_dt[i] == 0.0);
            CHECK(r.du_dt(0, i) == 0.0);
            CHECK(r.du_dt(1, i) == 0.0);
        }
    }
}

TEST_CASE("rhs terms assemble into the rate and the ablation drops only the source") {
    const Grid g = Grid::torus(2, 12);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D);
    const State s = wavy_state(g, p);
    const RhsTerms t = rhs_terms(s, SystemVariant::A2D, BCMode::periodic());
    const Rhs full = assemble(t);
    const Rhs ablated = assemble(t, RhsOptions{true});
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(full.drho_dt[i] == doctest::Approx(t.transport[i] + t.source[i]).epsilon(1e-14));
        CHECK(ablated.drho_dt[i] == t.transport[i]);
        for (int j = 0; j < 2; ++j) {
            const double sum = t.advection(j, i) + t.pressure(j, i) + t.visc_main(j, i) + t.visc_aug(j, i) +
                               t.visc_bulk(j, i) + t.damping(j, i) + t.c_extra(j, i);
            CHECK(full.du_dt(j, i) == doctest::Approx(sum).epsilon(1e-12));
            CHECK(ablated.du_dt(j, i) == full.du_dt(j, i));
        }
    }
    // transport conserves mass exactly; the source changes it by its integral
    CHECK(std::abs(integrate(t.transport)) < 1e-13);
}

TEST_CASE("transport conserves mass on slip boxes") {
    const Grid g = Grid::box(2, 12, 0.5);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D);
    State s = wavy_state(g, p);
    const RhsTerms t = rhs_terms(s, SystemVariant::A2D, BCMode::slip_box());
    CHECK(std::abs(integrate(t.transport)) < 1e-13);
    CHECK_THROWS_AS(rhs_terms(s, SystemVariant::A2D, BCMode::periodic()), TopologyError);
}

TEST_CASE("rhs rejects non-positive density") {
    const Grid g = Grid::torus(1, 8);
    State s = wavy_state(g, make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1));
    s.rho[5] = -1e-3;
    CHECK_THROWS_AS(rhs(s, SystemVariant::A2D, BCMode::periodic()), PositivityError);
}

TEST_CASE("RK2 converges at second order in time") {
    const Grid g = Grid::torus(1, 32);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    const State s0 = wavy_state(g, p);
    const double T = 0.01;
    auto integrate_to = [&](int steps, Scheme sc) {
        State s = s0;
        for (int k = 0; k < steps; ++k) s = step(s, T / steps, sc, SystemVariant::A2D, BCMode::periodic());
        return s;
    };
    const State ref = integrate_to(1024, Scheme::RK2);
    const double e1 = max_diff(integrate_to(64, Scheme::RK2), ref);
    const double e2 = max_diff(integrate_to(128, Scheme::RK2), ref);
    CHECK(std::log2(e1 / e2) > 1.8);
    // IMEX is at least first order and agrees with the explicit solution
    const double i1 = max_diff(integrate_to(64, Scheme::IMEX), ref);
    const double i2 = max_diff(integrate_to(128, Scheme::IMEX), ref);
    CHECK(std::log2(i1 / i2) > 0.9);
    CHECK(i2 < 1e-3);
}

TEST_CASE("stable_dt is positive and shrinks under refinement") {
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D);
    const double d16 = stable_dt(wavy_state(Grid::torus(2, 16), p), SystemVariant::A2D, 0.4);
    const double d32 = stable_dt(wavy_state(Grid::torus(2, 32), p), SystemVariant::A2D, 0.4);
    CHECK(d16 > 0.0);
    CHECK(d32 < d16);
    CHECK(stable_dt(wavy_state(Grid::torus(2, 16), p), SystemVariant::A2D, 0.2) == doctest::Approx(d16 / 2));
    CHECK(stable_dt(wavy_state(Grid::torus(2, 16), p), SystemVariant::A2D, 0.4, true) >= d16);
}

TEST_CASE("run lands records and snapshots on sync times") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    RunControls c;
    c.sync_interval = 0.002;
    c.snapshot_stride = 1000000;
    c.record_stride = 1000000;
    const Trajectory tr = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 0.01, c);
    REQUIRE_FALSE(tr.aborted);
    REQUIRE(tr.snapshots.size() == 6);
    for (std::size_t k = 0; k < tr.snapshots.size(); ++k)
        CHECK(tr.snapshots[k].t == doctest::Approx(0.002 * k).epsilon(1e-12));
    CHECK(tr.records.size() == 6);
    CHECK(tr.steps.size() == static_cast<std::size_t>(tr.nsteps));
    // per-step mass identity: change equals dt times the source integral up to O(dt^2)
    for (const StepLogEntry& e : tr.steps)
        CHECK(std::abs(e.mass_after - e.mass_before - e.dt * e.source_integral) < 10.0 * e.dt * e.dt);
    RunControls ablated = c;
    ablated.rhs.disable_source = true;
    const Trajectory tc = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 0.01, ablated);
    for (const StepLogEntry& e : tc.steps) CHECK(std::abs(e.mass_after - e.mass_before) < 1e-14);

    CHECK_THROWS_AS(run(tr.snapshots.back(), SystemVariant::A2D, BCMode::periodic(), 0.0, c), ConfigError);
}

TEST_CASE("run aborts cleanly when positivity is lost") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    RunControls c;
    c.dt_override = 1e-4;
    c.on_step = [](State& s, long k) {
        if (k == 3) s.rho[4] = -1.0;
    };
    const Trajectory tr = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 0.01, c);
    CHECK(tr.aborted);
    CHECK_FALSE(tr.abort_reason.empty());
    CHECK(tr.snapshots.back().t < 0.01);
    CHECK(tr.snapshots.back().rho[4] > 0.0);
}

TEST_CASE("trajectories are bit-identical across thread counts") {
    const Grid g = Grid::torus(2, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D);
    RunControls c;
    c.dt_override = 1e-4;
    set_thread_count(1);
    const Trajectory a = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 2e-3, c);
    set_thread_count(3);
    const Trajectory b = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 2e-3, c);
    set_thread_count(1);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(max_diff(a.snapshots.back(), b.snapshots.back()) == 0.0);
    CHECK(a.records.back().energy == b.records.back().energy);
    CHECK(a.records.back().bd_combo == b.records.back().bd_combo);
}

TEST_CASE("a run of zero length keeps the initial state") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    State s = wavy_state(g, p);
    s.t = 0.25;
    const Trajectory tr = run(s, SystemVariant::A2D, BCMode::periodic(), 0.25, RunControls{});
    CHECK_FALSE(tr.aborted);
    CHECK(tr.nsteps == 0);
    REQUIRE(tr.snapshots.size() == 1);
    CHECK(max_diff(tr.snapshots[0], s) == 0.0);
    CHECK(tr.records.size() == 1);
}

TEST_CASE("an oversized fixed step aborts with a positive last snapshot") {
    const Grid g = Grid::torus(1, 64);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    RunControls c;
    c.dt_override = 50.0 * stable_dt(wavy_state(g, p), SystemVariant::A2D, 1.0);
    const Trajectory tr = run(wavy_state(g, p), SystemVariant::A2D, BCMode::periodic(), 1.0, c);
    CHECK(tr.aborted);
    CHECK_FALSE(tr.abort_reason.empty());
    const State& last = tr.snapshots.back();
    CHECK(last.t < 1.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(last.rho[i] > 0.0);
}

TEST_CASE("a density bump at rest flattens") {
    const Grid g = Grid::torus(1, 128);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    State s = prepare_initial(preset("gaussian-bump", g), p, InitialDataMode::Raw).state;
    RunControls c;
    const Trajectory tr = run(s, SystemVariant::A2D, BCMode::periodic(), 0.05, c);
    REQUIRE_FALSE(tr.aborted);
    REQUIRE(tr.records.size() > 10);
    for (std::size_t k = 1; k < tr.records.size(); ++k) CHECK(tr.records[k].rho_max < tr.records[k - 1].rho_max);

    // halving the step changes the final peak at second order
    RunControls half = c;
    half.cfl = c.cfl / 2;
    RunControls quarter = c;
    quarter.cfl = c.cfl / 4;
    const double a = run(s, SystemVariant::A2D, BCMode::periodic(), 0.05, c).records.back().rho_max;
    const double b = run(s, SystemVariant::A2D, BCMode::periodic(), 0.05, half).records.back().rho_max;
    const double q = run(s, SystemVariant::A2D, BCMode::periodic(), 0.05, quarter).records.back().rho_max;
    CHECK(std::abs(a - q) > 0.0);
    CHECK(std::abs(b - q) < 0.5 * std::abs(a - q));
}
