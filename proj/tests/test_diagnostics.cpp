#include "doctest.h"

#include "degvisc/diagnostics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/presets.hpp"

#include "json.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

using namespace degvisc;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

State wavy(const Grid& g, const ModelParams& p) {
    State s;
    s.rho = ScalarField(g);
    s.u = VectorField(g);
    s.params = p;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.coords(i);
        const double x = g.center(0, c[0]);
        const double y = g.dim > 1 ? g.center(1, c[1]) : 0.0;
        s.rho[i] = 1.0 + 0.3 * std::sin(kTwoPi * x) + 0.1 * std::cos(kTwoPi * y);
        s.u(0, i) = 0.2 * std::cos(kTwoPi * y) + 0.1 * std::sin(kTwoPi * x);
        if (g.dim > 1) s.u(1, i) = -0.15 * std::sin(kTwoPi * x);
    }
    return s;
}

// Composite Simpson on [a, b].
template <class F>
double simpson(F f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

Trajectory short_run(SystemVariant v, double t_end = 0.02) {
    const Grid g = Grid::torus(2, 16);
    // budgets compare consecutive records, so record every step
    RunControls c;
    c.snapshot_stride = 5;
    return run(wavy(g, make_params(1.0, 2.0, 0.1, 1.0, v, 2)), v, BCMode::periodic(), t_end, c);
}

}  // namespace

TEST_CASE("BD potential matches quadrature of h_eps'/rho") {
    const ModelParams p = make_params(1.3, 2.2, 0.05, 1.0, SystemVariant::A2D);
    for (double r : {0.2, 0.9, 1.0, 2.5}) {
        const double q = simpson([&](double s) { return coeffs_at(s, p).h_eps_prime / s; }, 1.0, r);
        CHECK(bd_potential(r, p) == doctest::Approx(q).epsilon(1e-9));
    }
    const ModelParams c = make_params(1.0, 1.4, 0.1, 1.0, SystemVariant::C3D);
    CHECK(bd_potential(3.0, c) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("record integrals on a simple state") {
    const Grid g = Grid::torus(2, 8);
    State s;
    s.rho = ScalarField(g, 2.0);
    s.u = VectorField(g, 0.5);
    s.params = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D);
    const FunctionalRecord r = record(s, SystemVariant::A2D, BCMode::periodic());
    CHECK(r.mass == doctest::Approx(2.0));
    CHECK(r.kinetic == doctest::Approx(0.5 * 2.0 * 0.5));
    CHECK(r.internal == doctest::Approx(4.0));
    CHECK(r.energy == doctest::Approx(r.kinetic + r.internal));
    CHECK(r.bd_core == 0.0);
    CHECK(r.rho_min == 2.0);
    CHECK(r.rho_max == 2.0);
    CHECK(r.visc_sym == doctest::Approx(0.0));
    CHECK(r.h == doctest::Approx(1.0 / 8));
}

TEST_CASE("cached rhs terms do not change the record") {
    const Grid g = Grid::torus(2, 12);
    const State s = wavy(g, make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D));
    const RhsTerms t = rhs_terms(s, SystemVariant::A2D, BCMode::periodic());
    const auto a = record_values(record(s, SystemVariant::A2D, BCMode::periodic(), {}, &t));
    const auto b = record_values(record(s, SystemVariant::A2D, BCMode::periodic()));
    CHECK(a == b);
}

TEST_CASE("functional rates agree with centered differences along the flow") {
    const Grid g = Grid::torus(2, 16);
    for (SystemVariant v : {SystemVariant::A2D, SystemVariant::B3D, SystemVariant::C3D}) {
        CAPTURE(to_string(v));
        const ModelParams p = make_params(1.0, v == SystemVariant::C3D ? 1.4 : 2.0, 0.1, 1.0, v, 2);
        State s = wavy(g, p);
        // keep rho >= 1 for C3D, where the floor term eps rho^{-p0} is otherwise enormous
        if (v == SystemVariant::C3D)
            for (double& r : s.rho.values()) r += 0.6;
        // s +- dt * rate: the centered quotient is the chain-rule derivative up to O(dt^2)
        const double dt = 1e-6;
        const Rhs rate = rhs(s, v, BCMode::periodic());
        State fwd = s, bwd = s;
        for (std::size_t i = 0; i < g.size(); ++i) {
            fwd.rho[i] += dt * rate.drho_dt[i];
            bwd.rho[i] -= dt * rate.drho_dt[i];
            for (int j = 0; j < 2; ++j) {
                fwd.u(j, i) += dt * rate.du_dt(j, i);
                bwd.u(j, i) -= dt * rate.du_dt(j, i);
            }
        }
        const FunctionalRecord r0 = record(s, v, BCMode::periodic());
        const FunctionalRecord rp = record(fwd, v, BCMode::periodic());
        const FunctionalRecord rm = record(bwd, v, BCMode::periodic());
        const double scale_e = std::abs(r0.energy_rate) + 1e-3;
        CHECK(std::abs((rp.energy - rm.energy) / (2 * dt) - r0.energy_rate) < 1e-4 * scale_e);
        const double scale_b = std::abs(r0.bd_rate) + 1e-3;
        CHECK(std::abs((rp.bd_combo - rm.bd_combo) / (2 * dt) - r0.bd_rate) < 1e-4 * scale_b);
        const double scale_m = std::abs(r0.mv_rate) + 1e-3;
        CHECK(std::abs((rp.mv - rm.mv) / (2 * dt) - r0.mv_rate) < 1e-4 * scale_m);
    }
}

TEST_CASE("energy decays for the regularized systems") {
    for (SystemVariant v : {SystemVariant::A2D, SystemVariant::B3D}) {
        const FunctionalRecord r = record(wavy(Grid::torus(2, 16), make_params(1.0, 2.0, 0.1, 1.0, v, 2)), v,
                                          BCMode::periodic());
        CHECK(r.energy_rate < 0.0);
        CHECK(r.visc_sym > 0.0);
        CHECK(r.cold_dissip > 0.0);
        CHECK(r.coercivity_min >= -1e-12 * r.coercivity_scale);
    }
}

TEST_CASE("default level grid") {
    const Grid g = Grid::torus(1, 8);
    ScalarField r(g, 1.0);
    r[2] = 4.0;
    r[3] = 0.25;
    const LevelGrid lg = default_levels(r, 5);
    REQUIRE(lg.k_v.size() == 5);
    CHECK(lg.k_v.front() == doctest::Approx(0.45));
    CHECK(lg.k_v.back() == doctest::Approx(2.2));
    CHECK(lg.k_w.front() == doctest::Approx(0.45));
    CHECK(lg.k_w.back() == doctest::Approx(2.2));
    CHECK_THROWS_AS(default_levels(r, 1), ConfigError);
}

TEST_CASE("accumulate is the trapezoid rule") {
    std::vector<FunctionalRecord> recs(4);
    for (int k = 0; k < 4; ++k) {
        recs[k].t = 0.5 * k * k;
        recs[k].energy = 2.0 * recs[k].t + 1.0;
    }
    const auto acc = accumulate(recs, &FunctionalRecord::energy);
    for (int k = 0; k < 4; ++k) CHECK(acc[k] == doctest::Approx(recs[k].t * recs[k].t + recs[k].t));
}

TEST_CASE("budgets pass on a smooth run and catch tampering") {
    Trajectory tr = short_run(SystemVariant::A2D);
    REQUIRE_FALSE(tr.aborted);
    CHECK(energy_budget(tr).pass());
    CHECK(bd_entropy_budget(tr).pass());
    CHECK(mass_identity(tr).pass());
    CHECK(coercivity_report(tr).pass());
    CHECK(mv_budget(tr).applicable);

    Trajectory bad = tr;
    for (std::size_t k = bad.records.size() / 2; k < bad.records.size(); ++k) bad.records[k].energy *= 1.01;
    CHECK_FALSE(energy_budget(bad).pass());

    Trajectory leak = tr;
    leak.steps[3].mass_after += 1e-6;
    CHECK_FALSE(mass_identity(leak).pass());
}

TEST_CASE("the ablated source breaks the BD balance") {
    const Grid g = Grid::torus(2, 16);
    RunControls c;
    c.record_stride = 5;
    c.rhs.disable_source = true;
    const ModelParams p = make_params(1.0, 2.0, 0.3, 1.0, SystemVariant::A2D, 2);
    const Trajectory tr = run(wavy(g, p), SystemVariant::A2D, BCMode::periodic(), 0.05, c);
    CHECK_FALSE(bd_entropy_budget(tr).pass());
}

TEST_CASE("density bounds from level sets") {
    const Trajectory tr = short_run(SystemVariant::B3D);
    const LevelGrid lg = default_levels(tr.snapshots.front().rho);
    const DeGiorgiReport rep = density_bounds(tr, lg);
    CHECK(rep.finite);
    CHECK_FALSE(rep.flagged);
    REQUIRE(rep.nu_v.size() == rep.times.size());
    CHECK(rep.times.size() == tr.snapshots.size());
    for (const auto& row : rep.nu_v) {
        for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j] <= row[j - 1]);
        CHECK(row.back() == 0.0);
    }
    CHECK(rep.sup_rho_max > 1.0);
    CHECK(rep.sup_inv_rho_min > 1.0);

    // the reported rate bounds the observed decay of the minimum
    CHECK(std::isfinite(rep.decay_rate));
    CHECK(rep.decay_rate >= 0.0);
    const double m0 = tr.snapshots.front().rho.values().front();
    double min0 = m0;
    for (double v : tr.snapshots.front().rho.values()) min0 = std::min(min0, v);
    for (const State& s : tr.snapshots) {
        double m = min0;
        for (double v : s.rho.values()) m = std::min(m, v);
        CHECK(m >= min0 * std::exp(-rep.decay_rate * (s.t - tr.snapshots.front().t)) * (1.0 - 1e-12));
    }
}

TEST_CASE("records csv and report json") {
    const Trajectory tr = short_run(SystemVariant::A2D, 0.005);
    const LevelGrid lg = default_levels(tr.snapshots.front().rho, 3);
    const std::string path = "diag_records_test.csv";
    write_records_csv(path, tr.records, lg);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    const std::size_t cols = std::count(header.begin(), header.end(), ',') + 1;
    CHECK(cols == record_columns().size() + 6);
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == tr.records.size());
    std::remove(path.c_str());

    const auto j = nlohmann::json::parse(report_json(energy_budget(tr)));
    CHECK(j.at("name") == "energy");
    CHECK(j.contains("tolerance"));
    CHECK(nlohmann::json::parse(report_json(density_bounds(tr, lg))).contains("nu_v"));
}
