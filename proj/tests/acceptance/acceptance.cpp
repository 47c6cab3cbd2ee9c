// Acceptance checks AC-1..AC-11. Prints one PASS/FAIL line per criterion and
// exits non-zero when any fails. Progress goes to stderr.

#include "degvisc/cli.hpp"
#include "degvisc/config.hpp"
#include "degvisc/constitutive.hpp"
#include "degvisc/continuation.hpp"
#include "degvisc/diagnostics.hpp"
#include "degvisc/initdata.hpp"
#include "degvisc/parallel.hpp"
#include "degvisc/presets.hpp"
#include "degvisc/snapshot.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace degvisc;
namespace fs = std::filesystem;

namespace {

// Tolerances and run sizes, pinned here.
constexpr double kOrderMin = 1.9;           // AC-1
constexpr double kBudgetC = 10.0;           // AC-2, AC-3: c in c (dt + h^2) E0 and c dt^2 ∫rho0
constexpr double kRefineShrink = 2.0;       // AC-2: worst residual ratio under halving
constexpr double kAc2Cfl = 0.9;             // AC-2: fixed fine step = kAc2Cfl * stable_dt(rho0)
constexpr double kAc2Seconds = 300.0;
constexpr double kCoreGrowth = 5.0;         // AC-5: sup bd_core <= 5 bd_core(0)
constexpr double kMom4Growth = 5.0;         // AC-6
constexpr double kCoercivityTol = 1e-12;    // AC-4
constexpr double kFloorTol = 1e-12;         // AC-7
constexpr double kMomentSpread = 2.0;       // AC-8
constexpr double kAc9Seconds = 900.0;
constexpr double kDesk = 0.25;              // desk sigma0 for AC-8 (and the informative AC-7 line)

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}
std::string sci(double a) { return fmt("%.3e", a); }

void progress(const std::string& msg) { std::fprintf(stderr, "[acceptance] %s\n", msg.c_str()); }

// Every trajectory kept for the cross-cutting criteria (AC-4, AC-7).
struct Kept {
    std::string name;
    Trajectory tr;
};
std::deque<Kept> kept;  // deque: references stay valid

Trajectory& keep(const std::string& name, Trajectory tr) {
    kept.push_back({name, std::move(tr)});
    return kept.back().tr;
}

State raw_state(const std::string& name, const Grid& g, const ModelParams& p) {
    return prepare_initial(preset(name, g), p, InitialDataMode::Raw).state;
}

// ---------------------------------------------------------------- AC-1

ScalarField sample(const Grid& g, const std::function<double(double, double)>& f) {
    ScalarField out(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto c = g.coords(i);
        out[i] = f(g.center(0, c[0]), g.center(1, c[1]));
    }
    return out;
}

double max_err(const std::vector<double>& a, const ScalarField& b) {
    double e = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}
double max_err(const ScalarField& a, const ScalarField& b) { return max_err(a.values(), b); }

Outcome ac1() {
    const auto t0 = Clock::now();
    using std::cos, std::sin;
    const double w = kTwoPi;
    auto f = [&](double x, double y) { return sin(w * x) * cos(2 * w * y); };
    auto fx = [&](double x, double y) { return w * cos(w * x) * cos(2 * w * y); };
    auto fy = [&](double x, double y) { return -2 * w * sin(w * x) * sin(2 * w * y); };
    auto flap = [&](double x, double y) { return -5 * w * w * f(x, y); };
    auto u0 = [&](double x, double y) { return sin(w * x) * cos(w * y); };
    auto u1 = [&](double x, double y) { return cos(2 * w * x) * sin(w * y); };
    // d[a][c] = du_c/dx_a
    std::array<std::array<std::function<double(double, double)>, 2>, 2> du{{
        {[&](double x, double y) { return w * cos(w * x) * cos(w * y); },
         [&](double x, double y) { return -2 * w * sin(2 * w * x) * sin(w * y); }},
        {[&](double x, double y) { return -w * sin(w * x) * sin(w * y); },
         [&](double x, double y) { return w * cos(2 * w * x) * cos(w * y); }},
    }};
    auto div = [&](double x, double y) { return du[0][0](x, y) + du[1][1](x, y); };

    const std::vector<int> ns{32, 64, 128, 256};
    std::array<std::vector<double>, 4> err;  // gradient, divergence, laplacian, sym_gradient
    for (int n : ns) {
        const Grid g = Grid::torus(2, n);
        const BCMode bc = BCMode::periodic();
        const VectorField grad = gradient(sample(g, f), bc);
        err[0].push_back(std::max(max_err(grad.comp(0), sample(g, fx)), max_err(grad.comp(1), sample(g, fy))));
        VectorField u(g);
        u.comp(0) = sample(g, u0).values();
        u.comp(1) = sample(g, u1).values();
        err[1].push_back(max_err(divergence(u, bc), sample(g, div)));
        err[2].push_back(max_err(laplacian(sample(g, f), bc), sample(g, flap)));
        const VelocityGradient vg = sym_gradient(u, bc);
        double e = 0.0;
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c) {
                const ScalarField ex = sample(g, du[a][c]);
                for (std::size_t i = 0; i < g.size(); ++i) e = std::max(e, std::abs(vg.grad(a, c, i) - ex[i]));
            }
        err[3].push_back(e);
    }
    const char* names[] = {"gradient", "divergence", "laplacian", "sym_gradient"};
    Outcome o{true, ""};
    for (int op = 0; op < 4; ++op) {
        double worst = 1e9;
        for (std::size_t k = 1; k < ns.size(); ++k) worst = std::min(worst, std::log2(err[op][k - 1] / err[op][k]));
        o.pass = o.pass && worst >= kOrderMin;
        o.detail += std::string(op ? ", " : "") + names[op] + " min order " + fmt("%.3f", worst);
    }
    const double secs = seconds_since(t0);
    o.pass = o.pass && secs < 10.0;
    o.detail += " (n 32..256, " + fmt("%.1f", secs) + " s)";
    return o;
}

// ---------------------------------------------------------------- AC-2 / AC-5 / AC-6 (2D part)

struct Ac2Runs {
    Trajectory* fine = nullptr;
    Trajectory* coarse = nullptr;
    double dt = 0.0;
    double seconds = 0.0;
};

Ac2Runs ac2_runs() {
    const auto t0 = Clock::now();
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D, 2);
    const State fine0 = raw_state("gaussian-bump", Grid::torus(2, 64), p);
    const State coarse0 = raw_state("gaussian-bump", Grid::torus(2, 32), p);
    Ac2Runs r;
    r.dt = kAc2Cfl * stable_dt(fine0, SystemVariant::A2D, 1.0);
    RunControls c;
    c.levels = default_levels(fine0.rho);
    c.dt_override = r.dt;
    progress("AC-2 fine run (n=64, dt=" + sci(r.dt) + ")");
    r.fine = &keep("AC-2 n=64", run(fine0, SystemVariant::A2D, BCMode::periodic(), 0.5, c));
    c.dt_override = 2.0 * r.dt;
    c.levels = default_levels(coarse0.rho);
    progress("AC-2 coarse run (n=32)");
    r.coarse = &keep("AC-2 n=32", run(coarse0, SystemVariant::A2D, BCMode::periodic(), 0.5, c));
    r.seconds = seconds_since(t0);
    return r;
}

Outcome ac2(const Ac2Runs& r) {
    const InequalityReport ef = energy_budget(*r.fine, kBudgetC);
    const InequalityReport ec = energy_budget(*r.coarse, kBudgetC);
    const double ratio = ec.worst_abs_residual / ef.worst_abs_residual;
    Outcome o;
    o.pass = !r.fine->aborted && !r.coarse->aborted && ef.pass() && ec.pass() && ratio >= kRefineShrink &&
             r.seconds < kAc2Seconds;
    o.detail = "n=64 worst |r| " + sci(ef.worst_abs_residual) + " vs tol " + sci(ef.tolerance) + ", n=32 worst |r| " +
               sci(ec.worst_abs_residual) + " vs tol " + sci(ec.tolerance) + ", shrink " + fmt("%.2f", ratio) +
               "x (need >= 2), " + fmt("%.0f", r.seconds) + " s";
    return o;
}

Outcome ac5(const Ac2Runs& r) {
    const Trajectory& tr = *r.fine;
    const auto acc = accumulate(tr.records, &FunctionalRecord::pgrad_dissip);
    bool finite = true, monotone = true;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        finite = finite && std::isfinite(acc[k]);
        if (k) monotone = monotone && acc[k] >= acc[k - 1];
    }
    double core_sup = 0.0;
    for (const auto& rec : tr.records) core_sup = std::max(core_sup, rec.bd_core);
    const double core0 = tr.records.front().bd_core;
    const InequalityReport bd = bd_entropy_budget(tr, kBudgetC);

    // Negative control: the same data with the continuity source removed.
    const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D, 2);
    const State s0 = raw_state("gaussian-bump", Grid::torus(2, 64), p);
    RunControls c;
    c.dt_override = r.dt;
    c.rhs.disable_source = true;
    progress("AC-5 ablation run");
    const Trajectory& abl = keep("AC-5 ablation", run(s0, SystemVariant::A2D, BCMode::periodic(), 0.05, c));
    const InequalityReport bd_abl = bd_entropy_budget(abl, kBudgetC);

    Outcome o;
    o.pass = finite && monotone && core_sup <= kCoreGrowth * core0 && bd.pass() && bd_abl.flagged;
    o.detail = "∫∫rho^{g-3}h|grad rho|^2 = " + sci(acc.back()) + (monotone ? " non-decreasing" : " DECREASES") +
               ", sup core/core0 = " + fmt("%.3f", core_sup / core0) + ", BD balance " +
               (bd.pass() ? "clean" : "flagged") + ", ablation " + (bd_abl.flagged ? "flagged" : "NOT flagged");
    return o;
}

Outcome ac6(const Ac2Runs& r) {
    double mv_sup = 0.0;
    bool mv_finite = true;
    for (const auto& rec : r.fine->records) {
        mv_finite = mv_finite && std::isfinite(rec.mv);
        mv_sup = std::max(mv_sup, rec.mv);
    }

    const auto t0 = Clock::now();
    const ModelParams pb = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::B3D, 3);
    const State b0 = raw_state("two-bump", Grid::torus(3, 32), pb);
    RunControls c;
    c.record_stride = 10;
    progress("AC-6 B3D run (n=32^3, T=0.2)");
    const Trajectory& b = keep("AC-6 B3D n=32^3", run(b0, SystemVariant::B3D, BCMode::periodic(), 0.2, c));
    double m4_sup = 0.0;
    for (const auto& rec : b.records) m4_sup = std::max(m4_sup, rec.mom4);
    const double m4_0 = b.records.front().mom4;
    const double b_secs = seconds_since(t0);

    const ModelParams pc = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::C3D, 3);
    const State c0 = raw_state("two-bump", Grid::torus(3, 16), pc);
    progress("AC-6 C3D run (n=16^3, T=0.1)");
    RunControls cc;
    const Trajectory& cr = keep("AC-6 C3D n=16^3", run(c0, SystemVariant::C3D, BCMode::periodic(), 0.1, cc));
    const auto m5 = accumulate(cr.records, &FunctionalRecord::mom5_rate);

    Outcome o;
    o.pass = mv_finite && std::isfinite(mv_sup) && !b.aborted && m4_0 > 0.0 && m4_sup <= kMom4Growth * m4_0 &&
             !cr.aborted && !m5.empty() && std::isfinite(m5.back());
    o.detail = "sup mv (AC-2 run) = " + sci(mv_sup) + ", B3D sup ∫rho|u|^4 / initial = " + fmt("%.3f", m4_sup / m4_0) +
               " (" + fmt("%.0f", b_secs) + " s), C3D eps∫∫rho|u|^5 = " + sci(m5.empty() ? NAN : m5.back());
    return o;
}

// ---------------------------------------------------------------- AC-3

Outcome ac3() {
    Outcome o{true, ""};
    for (SystemVariant v : {SystemVariant::A2D, SystemVariant::B3D, SystemVariant::C3D}) {
        const auto t0 = Clock::now();
        const ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, v, 1);
        const State s0 = raw_state("two-bump", Grid::torus(1, 128), p);
        RunControls c;
        const Trajectory& tr = keep("AC-3 " + to_string(v), run(s0, v, BCMode::periodic(), 0.1, c));
        const InequalityReport m = mass_identity(tr, kBudgetC);
        const double secs = seconds_since(t0);
        const bool ok = !tr.aborted && m.applicable && m.pass() && secs < 60.0;
        o.pass = o.pass && ok;
        double ratio = 0.0;  // per-step |residual| / (c dt^2 ∫rho0)
        for (std::size_t k = 0; k < tr.steps.size(); ++k)
            ratio = std::max(ratio, std::abs(m.residuals[k]) /
                                        (kBudgetC * tr.steps[k].dt * tr.steps[k].dt * tr.steps.front().mass_before));
        o.detail += (o.detail.empty() ? "" : ", ") + to_string(v) + " max |r|/tol " + fmt("%.3f", ratio) + " (" +
                    std::to_string(tr.steps.size()) + " steps, " + fmt("%.1f", secs) + " s)";
    }
    return o;
}

// ---------------------------------------------------------------- AC-4 extra regime

void ac4_extra_run() {
    // (N, alpha) = (3, 3/4) needs gamma < 6 alpha - 3 = 3/2.
    const ModelParams p = make_params(0.75, 1.2, 0.05, 1.0, SystemVariant::B3D, 3);
    const State s0 = raw_state("two-bump", Grid::torus(3, 16), p);
    RunControls c;
    progress("AC-4 B3D alpha=3/4 run (n=16^3)");
    keep("AC-4 B3D alpha=0.75 n=16^3", run(s0, SystemVariant::B3D, BCMode::periodic(), 0.05, c));
}

Outcome ac4() {
    Outcome o{true, ""};
    bool seen21 = false, seen3q = false, seen31 = false;
    double worst = INFINITY;
    std::size_t checked = 0;
    for (const auto& k : kept) {
        const InequalityReport r = coercivity_report(k.tr, kCoercivityTol);
        o.pass = o.pass && r.pass();
        if (r.flagged) o.detail += k.name + " flagged; ";
        const int dim = k.tr.snapshots.front().rho.grid().dim;
        const double a = k.tr.snapshots.front().params.alpha;
        seen21 = seen21 || (dim == 2 && a == 1.0);
        seen3q = seen3q || (dim == 3 && a == 0.75);
        seen31 = seen31 || (dim == 3 && a == 1.0);
        for (const auto& rec : k.tr.records)
            if (rec.coercivity_scale > 0.0) worst = std::min(worst, rec.coercivity_min / rec.coercivity_scale);
        checked += k.tr.records.size();
    }
    o.pass = o.pass && seen21 && seen3q && seen31;
    o.detail += std::to_string(kept.size()) + " runs, " + std::to_string(checked) +
                " record times, worst min/scale = " + sci(worst) + ", regimes (2,1) " + (seen21 ? "yes" : "no") +
                " (3,3/4) " + (seen3q ? "yes" : "no") + " (3,1) " + (seen31 ? "yes" : "no");
    return o;
}

// ---------------------------------------------------------------- AC-7

double min_of(const ScalarField& f) { return *std::min_element(f.values().begin(), f.values().end()); }

Outcome ac7() {
    bool no_floor = true, monotone = true;
    std::string bad;
    for (const auto& k : kept) {
        if (k.tr.aborted) {
            no_floor = false;
            bad += k.name + " aborted (" + k.tr.abort_reason + "); ";
        }
        const DeGiorgiReport d = density_bounds(k.tr, default_levels(k.tr.snapshots.front().rho));
        if (!d.monotone) {
            monotone = false;
            bad += k.name + " nu not monotone; ";
        }
    }
    const Grid g = Grid::torus(2, 64);
    const RawData raw = preset("vacuum-patch", g);
    ModelParams p = make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D, 2);
    const InitialData paper = regularize(raw, p, 0);
    const double gap_paper = std::abs(min_of(paper.state.rho) - mollified_floor(p));
    p.sigma0 = kDesk;
    const InitialData desk = regularize(raw, p, 0);
    const double gap_desk = std::abs(min_of(desk.state.rho) - mollified_floor(p));

    Outcome o;
    o.pass = no_floor && monotone && gap_paper <= kFloorTol && gap_desk <= kFloorTol;
    o.detail = bad + std::to_string(kept.size()) + " runs without floor abort: " + (no_floor ? "yes" : "no") +
               ", nu tables monotone: " + (monotone ? "yes" : "no") + ", |min rho0eps - floor| = " + sci(gap_paper) +
               " (paper sigma0), " + sci(gap_desk) + " (sigma0=1/4, floor " + fmt("%.6f", mollified_floor(p)) + ")";
    return o;
}

// ---------------------------------------------------------------- AC-8

Outcome ac8() {
    const Grid g = Grid::torus(2, 64);
    const RawData raw = preset("two-bump", g);
    std::vector<double> l1, mom;
    std::string detail;
    for (double eps : {0.08, 0.04, 0.02}) {
        ModelParams p = make_params(1.0, 2.0, eps, 1.0, SystemVariant::A2D, 2);
        p.sigma0 = kDesk;
        const InitialData d = regularize(raw, p, 0);
        l1.push_back(d.l1_distance);
        mom.push_back(d.lift.moment);
        detail += (detail.empty() ? "" : "; ") + fmt("eps=%.2f: ", eps) + "L1 " + sci(d.l1_distance) + ", moment " +
                  sci(d.lift.moment);
    }
    const bool decreasing = l1[1] < l1[0] && l1[2] < l1[1];
    const double spread = *std::max_element(mom.begin(), mom.end()) / *std::min_element(mom.begin(), mom.end());
    Outcome o;
    o.pass = decreasing && spread <= kMomentSpread;
    o.detail = detail + "; moment spread " + fmt("%.4f", spread) + " (sigma0=1/4)";
    return o;
}

// ---------------------------------------------------------------- AC-9

Outcome ac9() {
    const auto t0 = Clock::now();
    const ModelParams p = make_params(1.0, 2.0, 0.08, 1.0, SystemVariant::A2D, 1);
    SequenceOptions opts;
    opts.t_end = 0.1;
    opts.init = InitialDataMode::Raw;
    opts.refine = true;
    opts.residuals = true;
    opts.keep_trajectories = true;
    progress("AC-9 refined sweep (1D, n=32/64/128)");
    ConvergenceReport rep = run_sequence([](const Grid& g) { return preset("two-bump", g); }, Grid::torus(1, 32), p,
                                         {0.08, 0.04, 0.02}, opts);
    const double secs = seconds_since(t0);
    bool aborted = false;
    for (auto& m : rep.members) {
        aborted = aborted || m.aborted;
        keep("AC-9 eps=" + fmt17(m.epsilon), std::move(m.trajectory));
    }
    std::size_t rc_ok = 0, rm_ok = 0, total = 0;
    std::string bad;
    if (!aborted) {
        total = rep.members[0].residuals.size();
        for (std::size_t f = 0; f < total; ++f) {
            bool c = true, m = true;
            for (int k = 1; k < 3; ++k) {
                c = c && std::abs(rep.members[k].residuals[f].r_c) < std::abs(rep.members[k - 1].residuals[f].r_c);
                m = m && std::abs(rep.members[k].residuals[f].r_m) < std::abs(rep.members[k - 1].residuals[f].r_m);
            }
            rc_ok += c;
            rm_ok += m;
            if (!m) {
                bad += " " + rep.members[0].residuals[f].label + " |R_m|:";
                for (int k = 0; k < 3; ++k) bad += " " + sci(std::abs(rep.members[k].residuals[f].r_m));
            }
        }
    }
    Outcome o;
    o.pass = !aborted && total > 0 && rc_ok == total && rm_ok == total && secs < kAc9Seconds;
    o.detail = "R_c monotone for " + std::to_string(rc_ok) + "/" + std::to_string(total) + ", R_m monotone for " +
               std::to_string(rm_ok) + "/" + std::to_string(total) + " test functions (" + fmt("%.0f", secs) + " s)" +
               (bad.empty() ? "" : ";" + bad);
    return o;
}

// ---------------------------------------------------------------- AC-10 / AC-11 (through the CLI)

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "degvisc");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac10(const fs::path& work) {
    const fs::path ini = work / "ac10.ini";
    std::ofstream(ini) << "[model]\nvariant = A2D\n[grid]\ndim = 1\nn = 128\n[data]\npreset = two-bump\n"
                          "initial_data = raw\n[run]\nt_end = 0.1\n[sweep]\neps_list = 0.2, 0.1, 0.05, 0.025\n";
    const fs::path out = work / "ac10";
    progress("AC-10 sweep through the CLI");
    const int code = cli({"sweep", "--config", ini.string(), "--out", out.string()});
    if (!fs::exists(out / "convergence.json")) return {false, "sweep exited " + std::to_string(code) + " without output"};
    const auto j = nlohmann::json::parse(slurp(out / "convergence.json"));
    bool fits = true, any_dev = false;
    std::string detail;
    for (const auto& s : j["slopes"]) {
        if (s["exponent"].is_string()) continue;  // exponentially small term, no power law
        const bool finite = s["slope"].is_number() && s["points"].get<int>() >= 3;
        fits = fits && finite;
        any_dev = any_dev || !s["consistent"].get<bool>();
        detail += (detail.empty() ? "" : ", ") + s["term"].get<std::string>() + " " +
                  (finite ? fmt("%.3f", s["slope"].get<double>()) : std::string("n/a")) + " vs " +
                  fmt("%.3f", s["exponent"].get<double>()) + (s["consistent"].get<bool>() ? "" : " (flag)");
    }
    const bool flagged = j["flagged"].get<bool>();
    const int expected = flagged ? kExitFlagged : kExitOk;
    Outcome o;
    o.pass = fits && code == expected && (!any_dev || flagged);
    o.detail = detail + "; exit " + std::to_string(code) + (flagged ? " (flagged)" : "");
    return o;
}

Outcome ac11(const fs::path& work) {
    const fs::path ini = work / "ac11.ini";
    std::ofstream(ini) << "[model]\nvariant = A2D\nepsilon = 0.05\n[grid]\ndim = 2\nn = 32\n[data]\npreset = two-bump\n"
                          "initial_data = raw\n[run]\nt_end = 0.02\nsnapshot_stride = 50\n[weakform]\nresiduals = true\n";
    progress("AC-11 runs with 1 and 4 threads");
    const int c1 = cli({"run", "--config", ini.string(), "--out", (work / "t1").string(), "--threads", "1"});
    const int c4 = cli({"run", "--config", ini.string(), "--out", (work / "t4").string(), "--threads", "4"});
    set_thread_count(1);
    bool same = c1 == c4;
    std::string detail = "exit codes " + std::to_string(c1) + "/" + std::to_string(c4);
    for (const char* f : {"records.csv", "steps.csv", "residuals.csv"}) {
        const std::string a = slurp(work / "t1" / f), b = slurp(work / "t4" / f);
        const bool eq = !a.empty() && a == b;
        same = same && eq;
        detail += std::string(", ") + f + (eq ? " identical" : " DIFFER") + " (" + std::to_string(a.size()) + " B)";
    }
    return {same, detail};
}

}  // namespace

int main() {
    const auto start = Clock::now();
    set_thread_count(std::max(1u, std::thread::hardware_concurrency()));
    const fs::path work = fs::temp_directory_path() / "degvisc_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    std::vector<Outcome> out(12);
    progress("AC-1 operator order");
    out[1] = ac1();
    progress("AC-3 mass identities");
    out[3] = ac3();
    progress("AC-8 initial data");
    out[8] = ac8();
    const Ac2Runs runs = ac2_runs();
    out[2] = ac2(runs);
    out[5] = ac5(runs);
    out[6] = ac6(runs);
    ac4_extra_run();
    out[9] = ac9();
    out[10] = ac10(work);
    out[11] = ac11(work);
    set_thread_count(std::max(1u, std::thread::hardware_concurrency()));
    out[4] = ac4();
    out[7] = ac7();

    int failed = 0;
    for (int k = 1; k <= 11; ++k) {
        std::printf("AC-%d %s: %s\n", k, out[k].pass ? "PASS" : "FAIL", out[k].detail.c_str());
        failed += !out[k].pass;
    }
    std::printf("acceptance: %d/11 passed in %.0f s\n", 11 - failed, seconds_since(start));
    fs::remove_all(work);
    return failed == 0 ? 0 : 1;
}
