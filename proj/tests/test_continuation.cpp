#include "doctest.h"

#include "degvisc/continuation.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/presets.hpp"

#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace degvisc;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Trajectory constant_run(const Grid& g, double rho, double u, double gamma, int nsnap, double T) {
    Trajectory tr;
    for (int k = 0; k < nsnap; ++k) {
        State s;
        s.t = T * k / (nsnap - 1);
        s.rho = ScalarField(g, rho);
        s.u = VectorField(g, u);
        s.params = make_params(1.0, gamma, 0.1, 1.0, SystemVariant::A2D, g.dim);
        tr.snapshots.push_back(s);
    }
    return tr;
}

SequenceOptions small_options() {
    SequenceOptions o;
    o.t_end = 0.02;
    o.init = InitialDataMode::Raw;
    o.sync_points = 4;
    o.parallel = false;
    return o;
}

RawSource bump() {
    return [](const Grid& g) { return preset("gaussian-bump", g); };
}

}  // namespace

TEST_CASE("loglog slope of a power law") {
    const std::vector<double> x{0.1, 0.05, 0.025, 0.0125};
    std::vector<double> y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 0.7));
    int used = 0;
    CHECK(loglog_slope(x, y, &used) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(used == 4);

    y[1] = 0.0;
    y[2] = -1.0;
    CHECK(loglog_slope(x, y, &used) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(used == 2);
    CHECK(std::isnan(loglog_slope({0.1}, {1.0}, &used)));
    CHECK(used == 1);
}

TEST_CASE("block restriction preserves the integral") {
    const Grid fine = Grid::torus(2, 16);
    const Grid coarse = Grid::torus(2, 4);
    ScalarField f(fine);
    for (std::size_t i = 0; i < fine.size(); ++i) {
        const auto c = fine.coords(i);
        f[i] = 1.0 + std::sin(kTwoPi * fine.center(0, c[0])) * std::cos(kTwoPi * fine.center(1, c[1])) + 0.01 * (i % 7);
    }
    const ScalarField r = restrict_to(f, coarse);
    double sf = 0.0, sr = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) sf += f[i] * fine.cell_volume();
    for (std::size_t i = 0; i < coarse.size(); ++i) sr += r[i] * coarse.cell_volume();
    CHECK(sr == doctest::Approx(sf).epsilon(1e-13));
    // first coarse cell is the mean of its 4x4 block
    double block = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) block += f[fine.index(a, b, 0)];
    CHECK(r[coarse.index(0, 0, 0)] == doctest::Approx(block / 16.0).epsilon(1e-14));

    CHECK_THROWS_AS(restrict_to(f, Grid::torus(2, 5)), ConfigError);
    CHECK_THROWS_AS(restrict_to(f, Grid::torus(1, 4)), ConfigError);
}

TEST_CASE("trajectory distance of constant states") {
    const Grid g = Grid::torus(2, 8, 2.0);
    const double gamma = 1.5, T = 0.4;
    const Trajectory a = constant_run(g, 1.0, 0.0, gamma, 5, T);
    CHECK(trajectory_distance(a, a, gamma).d_rho == 0.0);
    CHECK(trajectory_distance(a, a, gamma).d_m == 0.0);

    // |Omega| = 4: ||c||_{L^gamma} = c (|Omega| T)^{1/gamma}; sqrt(rho) u = 0.3 in every component
    const Trajectory b = constant_run(g, 1.25, 0.0, gamma, 5, T);
    const PairDistance d = trajectory_distance(a, b, gamma);
    CHECK(d.valid);
    CHECK(d.d_rho == doctest::Approx(0.25 * std::pow(4.0 * T, 1.0 / gamma)).epsilon(1e-12));
    CHECK(d.d_m == doctest::Approx(0.0).epsilon(1e-15));
    const Trajectory c = constant_run(g, 1.0, 0.3, gamma, 5, T);
    CHECK(trajectory_distance(a, c, gamma).d_m == doctest::Approx(0.3 * std::sqrt(2.0 * 4.0 * T)).epsilon(1e-12));

    // nested grids: constant fields restrict exactly
    const Trajectory fine = constant_run(Grid::torus(2, 16, 2.0), 1.25, 0.0, gamma, 5, T);
    CHECK(trajectory_distance(a, fine, gamma).d_rho == doctest::Approx(d.d_rho).epsilon(1e-12));
    CHECK(trajectory_distance(fine, a, gamma).d_rho == doctest::Approx(d.d_rho).epsilon(1e-12));

    // snapshot times must overlap in at least two points
    Trajectory shifted = b;
    for (auto& s : shifted.snapshots) s.t += 0.05;
    CHECK_THROWS_AS(trajectory_distance(a, shifted, gamma), ConfigError);
    CHECK_THROWS_AS(trajectory_distance(a, constant_run(Grid::torus(2, 12, 2.0), 1.0, 0.0, gamma, 5, T), gamma),
                    ConfigError);
}

TEST_CASE("sequence input validation") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    CHECK_THROWS_AS(run_sequence(bump(), g, p, {0.1, 0.05}, small_options()), ConfigError);
    CHECK_THROWS_AS(run_sequence(bump(), g, p, {0.1, 0.05, 0.1}, small_options()), ConfigError);
    CHECK_THROWS_AS(run_sequence(bump(), g, p, {0.1, -0.05, 0.02}, small_options()), ConfigError);
    SequenceOptions o = small_options();
    o.sync_points = 1;
    CHECK_THROWS_AS(run_sequence(bump(), g, p, {0.1, 0.05, 0.02}, o), ConfigError);
}

TEST_CASE("sequence on one grid") {
    const Grid g = Grid::torus(1, 32);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    SequenceOptions o = small_options();
    o.keep_trajectories = true;
    const ConvergenceReport r = run_sequence(bump(), g, p, {0.05, 0.2, 0.1, 0.2}, o);

    REQUIRE(r.members.size() == 3);
    CHECK(r.members[0].epsilon == 0.2);
    CHECK(r.members[1].epsilon == 0.1);
    CHECK(r.members[2].epsilon == 0.05);
    CHECK(r.warnings.size() == 2);  // duplicate and reorder
    for (const auto& m : r.members) {
        CHECK_FALSE(m.aborted);
        CHECK(m.level == 0);
        CHECK(m.vanishing.size() == vanishing_terms().size());
        CHECK(m.trajectory.snapshots.size() == 5);
    }
    REQUIRE(r.pairs.size() == 2);
    for (const auto& d : r.pairs) {
        CHECK(d.valid);
        CHECK(d.d_rho > 0.0);
        CHECK(std::isfinite(d.d_m));
    }
    CHECK(r.pairs[0].eps_a == 0.2);
    CHECK(r.pairs[0].eps_b == 0.1);
    // the reported distance is the one recomputed from the kept trajectories
    const PairDistance again = trajectory_distance(r.members[0].trajectory, r.members[1].trajectory, p.gamma);
    CHECK(again.d_rho == r.pairs[0].d_rho);
    CHECK(again.d_m == r.pairs[0].d_m);

    REQUIRE(r.slopes.size() == vanishing_terms().size());
    for (const auto& s : r.slopes) {
        CAPTURE(s.term);
        // the damping integral underflows to zero at small epsilon and drops out of the fit
        if (std::isnan(s.exponent)) CHECK(s.consistent);
        else CHECK(s.points == 3);
    }
    CHECK(r.flagged == !r.flags.empty());

    SequenceOptions par = o;
    par.parallel = true;
    const ConvergenceReport rp = run_sequence(bump(), g, p, {0.2, 0.1, 0.05}, par);
    CHECK(rp.pairs[1].d_rho == r.pairs[1].d_rho);
    CHECK(rp.members[2].vanishing == r.members[2].vanishing);
}

TEST_CASE("an aborted member invalidates its pairs") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    SequenceOptions o = small_options();
    o.refine = true;
    const ConvergenceReport full = run_sequence(bump(), g, p, {0.2, 0.1, 0.05}, o);
    REQUIRE(full.members.size() == 3);
    CHECK(full.members[2].grid.n[0] == 64);
    CHECK(full.members[2].level == 2);
    // refined members take more steps (finer grid and halved cfl)
    CHECK(full.members[2].nsteps > 2 * full.members[1].nsteps);
    CHECK(full.pairs[1].valid);

    o.controls.max_steps = full.members[1].nsteps + 1;
    const ConvergenceReport cut = run_sequence(bump(), g, p, {0.2, 0.1, 0.05}, o);
    CHECK_FALSE(cut.members[1].aborted);
    CHECK(cut.members[2].aborted);
    CHECK_FALSE(cut.members[2].abort_reason.empty());
    CHECK(cut.pairs[0].valid);
    CHECK_FALSE(cut.pairs[1].valid);
    CHECK(cut.flagged);
    for (const auto& s : cut.slopes) {
        CAPTURE(s.term);
        CHECK(s.points <= 2);
        CHECK(std::isnan(s.slope));
    }
}

TEST_CASE("convergence outputs") {
    const Grid g = Grid::torus(1, 16);
    const ModelParams p = make_params(1.0, 2.0, 0.1, 1.0, SystemVariant::A2D, 1);
    const ConvergenceReport r = run_sequence(bump(), g, p, {0.2, 0.1, 0.05}, small_options());

    const auto path = std::filesystem::temp_directory_path() / "degvisc_convergence_test.csv";
    write_convergence_csv(path.string(), r);
    std::ifstream in(path);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    std::filesystem::remove(path);
    REQUIRE(lines.size() == 1 + 3 + 1 + 1 + 2 + 1 + 1 + vanishing_terms().size());
    CHECK(lines[0].rfind("epsilon,level,aborted,nsteps,van_e135p", 0) == 0);
    CHECK(lines[5] == "eps_a,eps_b,valid,d_rho,d_m");
    CHECK(lines[9] == "term,exponent,slope,points,consistent");

    const auto j = nlohmann::json::parse(convergence_json(r));
    CHECK(j["variant"] == "A2D");
    CHECK(j["members"].size() == 3);
    CHECK(j["pairs"].size() == 2);
    CHECK(j["slopes"].size() == vanishing_terms().size());
    CHECK(j["members"][1]["epsilon"].get<double>() == 0.1);
    // NaN exponents are written as strings
    CHECK(j["slopes"][4]["exponent"].is_string());

    CHECK_THROWS_AS(write_convergence_csv("/nonexistent-dir/x.csv", r), IoError);
}

TEST_CASE("distances contract along a halving sequence") {
    const Grid g = Grid::torus(1, 64);
    const ModelParams p = make_params(1.0, 2.0, 0.08, 1.0, SystemVariant::A2D, 1);
    SequenceOptions o = small_options();
    o.t_end = 0.05;
    const ConvergenceReport r = run_sequence(bump(), g, p, {0.08, 0.04, 0.02}, o);
    REQUIRE(r.pairs.size() == 2);
    CHECK(r.pairs[1].d_rho < r.pairs[0].d_rho);
    CHECK(r.pairs[1].d_m < r.pairs[0].d_m);
    CHECK(r.contraction);

    // (e153) decays like eps^{2/3}: ratio at eps and eps/2 within 2^{-2/3} (1 + 0.5)
    std::size_t e153 = 0;
    while (vanishing_terms()[e153].name != "e153") ++e153;
    for (int k = 1; k < 3; ++k) {
        const double ratio = r.members[k].vanishing[e153] / r.members[k - 1].vanishing[e153];
        CAPTURE(ratio);
        CHECK(ratio > 0.0);
        CHECK(ratio <= std::pow(2.0, -2.0 / 3.0) * 1.5);
    }
}
