#include "degvisc/continuation.hpp"

#include "degvisc/constitutive.hpp"
#include "degvisc/detail/stencil.hpp"
#include "degvisc/diagnostics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/snapshot.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

namespace degvisc {

using detail::for_cells;

const std::vector<VanishingTerm>& vanishing_terms() {
    static const std::vector<VanishingTerm> terms{
        {"e135p", &FunctionalRecord::van_e135p, 1.0},
        {"e153", &FunctionalRecord::van_e153, 2.0 / 3.0},
        {"e153p", &FunctionalRecord::van_e153p, 1.0 / 3.0},
        {"e152", &FunctionalRecord::van_e152, 1.0},
        {"e52p", &FunctionalRecord::van_e52p, std::numeric_limits<double>::quiet_NaN()},
        {"e52", &FunctionalRecord::van_e52, 0.5},
        {"e53", &FunctionalRecord::van_e53, 1.0 / 6.0},
    };
    return terms;
}

ScalarField restrict_to(const ScalarField& f, const Grid& coarse) {
    const Grid& fine = f.grid();
    if (fine.dim != coarse.dim) throw ConfigError("restriction between grids of different dimension");
    std::array<int, 3> r{1, 1, 1};
    for (int a = 0; a < fine.dim; ++a) {
        if (coarse.n[a] <= 0 || fine.n[a] % coarse.n[a] != 0) throw ConfigError("grids do not nest");
        r[a] = fine.n[a] / coarse.n[a];
    }
    if (r == std::array<int, 3>{1, 1, 1}) return f;
    const double w = 1.0 / (static_cast<double>(r[0]) * r[1] * r[2]);
    ScalarField out(coarse);
    for_cells(coarse, [&](std::size_t i) {
        const auto c = coarse.coords(i);
        double s = 0.0;
        for (int a = 0; a < r[0]; ++a)
            for (int b = 0; b < r[1]; ++b)
                for (int e = 0; e < r[2]; ++e) s += f[fine.index(c[0] * r[0] + a, c[1] * r[1] + b, c[2] * r[2] + e)];
        out[i] = s * w;
    });
    return out;
}

namespace {

struct Pair2 {
    ScalarField rho;
    std::vector<ScalarField> m;  // sqrt(rho) u per component
};

Pair2 on_grid(const State& s, const Grid& coarse) {
    const Grid& g = s.grid();
    Pair2 p;
    p.rho = restrict_to(s.rho, coarse);
    for (int c = 0; c < g.dim; ++c) {
        ScalarField m(g);
        for_cells(g, [&](std::size_t i) { m[i] = std::sqrt(s.rho[i]) * s.u(c, i); });
        p.m.push_back(restrict_to(m, coarse));
    }
    return p;
}

}  // namespace

PairDistance trajectory_distance(const Trajectory& a, const Trajectory& b, double gamma) {
    PairDistance d;
    const Grid& ga = a.grid();
    const Grid& gb = b.grid();
    const Grid& coarse = ga.size() <= gb.size() ? ga : gb;

    std::vector<double> times, frho, fm;
    std::size_t j = 0;
    for (const State& sa : a.snapshots) {
        const double tol = 1e-9 * std::max(1.0, std::abs(sa.t));
        while (j < b.snapshots.size() && b.snapshots[j].t < sa.t - tol) ++j;
        if (j == b.snapshots.size()) break;
        if (std::abs(b.snapshots[j].t - sa.t) > tol) continue;
        const Pair2 pa = on_grid(sa, coarse);
        const Pair2 pb = on_grid(b.snapshots[j], coarse);
        times.push_back(sa.t);
        frho.push_back(integrate_cells(coarse, [&](std::size_t i) {
            return std::pow(std::abs(pa.rho[i] - pb.rho[i]), gamma);
        }));
        fm.push_back(integrate_cells(coarse, [&](std::size_t i) {
            double s = 0.0;
            for (int c = 0; c < coarse.dim; ++c) {
                const double diff = pa.m[c][i] - pb.m[c][i];
                s += diff * diff;
            }
            return s;
        }));
    }
    if (times.size() < 2) throw ConfigError("runs share fewer than two snapshot times");
    double ir = 0.0, im = 0.0;
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double dt = times[k] - times[k - 1];
        ir += 0.5 * dt * (frho[k] + frho[k - 1]);
        im += 0.5 * dt * (fm[k] + fm[k - 1]);
    }
    d.eps_a = a.snapshots.front().params.epsilon;
    d.eps_b = b.snapshots.front().params.epsilon;
    d.d_rho = std::pow(ir, 1.0 / gamma);
    d.d_m = std::sqrt(im);
    d.valid = true;
    return d;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y, int* used) {
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
        if (x[k] > 0.0 && y[k] > 0.0 && std::isfinite(x[k]) && std::isfinite(y[k])) {
            lx.push_back(std::log(x[k]));
            ly.push_back(std::log(y[k]));
        }
    }
    if (used) *used = static_cast<int>(lx.size());
    if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        mx += lx[k];
        my += ly[k];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < lx.size(); ++k) {
        sxy += (lx[k] - mx) * (ly[k] - my);
        sxx += (lx[k] - mx) * (lx[k] - mx);
    }
    return sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
}

ConvergenceReport run_sequence(const RawSource& raw, const Grid& grid, const ModelParams& base,
                               std::vector<double> eps_list, const SequenceOptions& opts) {
    ConvergenceReport rep;
    rep.variant = base.system;
    std::vector<double> eps;
    for (double e : eps_list) {
        if (!(e >= 0.0) || !std::isfinite(e)) throw ConfigError("epsilon values must be finite and non-negative");
        if (std::find(eps.begin(), eps.end(), e) != eps.end()) {
            rep.warnings.push_back("duplicate epsilon " + fmt17(e) + " dropped");
            continue;
        }
        eps.push_back(e);
    }
    if (!std::is_sorted(eps.begin(), eps.end(), std::greater<>())) {
        rep.warnings.push_back("epsilon list reordered to decreasing order");
        std::sort(eps.begin(), eps.end(), std::greater<>());
    }
    if (eps.size() < 3) throw ConfigError("an epsilon sequence needs at least 3 distinct values");
    if (opts.sync_points < 2) throw ConfigError("a sequence needs at least 2 sync points");
    if (!(opts.t_end > 0.0)) throw ConfigError("sequence t_end must be positive");
    const auto regime = validate_regime(base.alpha, base.gamma, grid.dim, base.system);
    if (!regime.admissible) throw RegimeError("inadmissible regime for the sequence");

    const BCMode bc = BCMode::for_grid(grid);
    const std::size_t n = eps.size();
    std::vector<Trajectory> trs(n);
    rep.members.resize(n);

    auto run_member = [&](std::size_t k) {
        SequenceMember& mem = rep.members[k];
        mem.epsilon = eps[k];
        mem.level = opts.refine ? static_cast<int>(k) : 0;
        Grid g = grid;
        for (int a = 0; a < g.dim; ++a) g.n[a] <<= mem.level;
        mem.grid = g;
        ModelParams p = base;
        p.epsilon = eps[k];
        const InitialData init = prepare_initial(raw(g), p, opts.init, opts.nu);
        RunControls ctl = opts.controls;
        ctl.sync_interval = opts.t_end / opts.sync_points;
        ctl.on_snapshot = nullptr;
        ctl.on_step = nullptr;
        const double shrink = std::ldexp(1.0, -mem.level);
        if (ctl.dt_override > 0.0) ctl.dt_override *= shrink;
        else ctl.cfl *= shrink;
        trs[k] = run(init.state, base.system, bc, opts.t_end, ctl);
        const Trajectory& tr = trs[k];
        mem.aborted = tr.aborted;
        mem.abort_reason = tr.abort_reason;
        mem.nsteps = tr.nsteps;
        for (const auto& term : vanishing_terms()) {
            const auto acc = accumulate(tr.records, term.field);
            mem.vanishing.push_back(acc.empty() ? 0.0 : acc.back());
        }
        if (opts.residuals && !tr.aborted) mem.residuals = residual_table(tr, opts.test_modes);
    };

    if (opts.parallel) {
        std::vector<std::future<void>> jobs;
        for (std::size_t k = 0; k < n; ++k) jobs.push_back(std::async(std::launch::async, run_member, k));
        for (auto& j : jobs) j.get();
    } else {
        for (std::size_t k = 0; k < n; ++k) run_member(k);
    }

    for (std::size_t k = 0; k + 1 < n; ++k) {
        PairDistance d;
        d.eps_a = eps[k];
        d.eps_b = eps[k + 1];
        if (rep.members[k].aborted || rep.members[k + 1].aborted) {
            rep.flags.push_back("pair " + fmt17(eps[k]) + "/" + fmt17(eps[k + 1]) + " skipped: member aborted");
        } else {
            d = trajectory_distance(trs[k], trs[k + 1], base.gamma);
        }
        rep.pairs.push_back(d);
    }
    for (std::size_t k = 1; k < rep.pairs.size(); ++k) {
        const auto& a = rep.pairs[k - 1];
        const auto& b = rep.pairs[k];
        if (!a.valid || !b.valid) continue;
        if (!(b.d_rho < a.d_rho) || !(b.d_m < a.d_m)) rep.contraction = false;
    }
    if (!rep.contraction) rep.flags.push_back("consecutive distances do not contract");

    for (std::size_t t = 0; t < vanishing_terms().size(); ++t) {
        const auto& term = vanishing_terms()[t];
        SlopeFit fit;
        fit.term = term.name;
        fit.exponent = term.exponent;
        std::vector<double> x, y;
        for (const auto& m : rep.members) {
            if (m.aborted) continue;
            x.push_back(m.epsilon);
            y.push_back(m.vanishing[t]);
        }
        fit.slope = loglog_slope(x, y, &fit.points);
        if (fit.points < 3) fit.slope = std::numeric_limits<double>::quiet_NaN();
        if (std::isnan(term.exponent)) {
            fit.consistent = true;
        } else {
            fit.consistent = std::isfinite(fit.slope) && std::abs(fit.slope - fit.exponent) <= 0.5;
            if (!fit.consistent)
                rep.flags.push_back("vanishing term " + term.name + ": slope " + fmt17(fit.slope) + " vs exponent " +
                                    fmt17(fit.exponent));
        }
        rep.slopes.push_back(fit);
    }
    rep.flagged = !rep.flags.empty();
    if (opts.keep_trajectories)
        for (std::size_t k = 0; k < n; ++k) rep.members[k].trajectory = std::move(trs[k]);
    return rep;
}

void write_convergence_csv(const std::string& path, const ConvergenceReport& r) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "epsilon,level,aborted,nsteps";
    for (const auto& t : vanishing_terms()) out << ",van_" << t.name;
    out << '\n';
    for (const auto& m : r.members) {
        out << fmt17(m.epsilon) << ',' << m.level << ',' << (m.aborted ? 1 : 0) << ',' << m.nsteps;
        for (double v : m.vanishing) out << ',' << fmt17(v);
        out << '\n';
    }
    out << "\neps_a,eps_b,valid,d_rho,d_m\n";
    for (const auto& p : r.pairs)
        out << fmt17(p.eps_a) << ',' << fmt17(p.eps_b) << ',' << (p.valid ? 1 : 0) << ',' << fmt17(p.d_rho) << ','
            << fmt17(p.d_m) << '\n';
    out << "\nterm,exponent,slope,points,consistent\n";
    for (const auto& s : r.slopes)
        out << s.term << ',' << fmt17(s.exponent) << ',' << fmt17(s.slope) << ',' << s.points << ','
            << (s.consistent ? 1 : 0) << '\n';
}

namespace {

nlohmann::ordered_json num(double x) {
    if (std::isfinite(x)) return x;
    return fmt17(x);
}

}  // namespace

std::string convergence_json(const ConvergenceReport& r) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(r.variant);
    j["flagged"] = r.flagged;
    j["contraction"] = r.contraction;
    j["flags"] = r.flags;
    j["warnings"] = r.warnings;
    auto& members = j["members"] = nlohmann::ordered_json::array();
    for (const auto& m : r.members) {
        nlohmann::ordered_json e;
        e["epsilon"] = m.epsilon;
        e["level"] = m.level;
        e["aborted"] = m.aborted;
        e["abort_reason"] = m.abort_reason;
        e["nsteps"] = m.nsteps;
        for (std::size_t t = 0; t < m.vanishing.size(); ++t) e["van_" + vanishing_terms()[t].name] = num(m.vanishing[t]);
        members.push_back(e);
    }
    auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
    for (const auto& p : r.pairs)
        pairs.push_back({{"eps_a", p.eps_a}, {"eps_b", p.eps_b}, {"valid", p.valid}, {"d_rho", num(p.d_rho)},
                         {"d_m", num(p.d_m)}});
    auto& slopes = j["slopes"] = nlohmann::ordered_json::array();
    for (const auto& s : r.slopes)
        slopes.push_back({{"term", s.term}, {"exponent", num(s.exponent)}, {"slope", num(s.slope)},
                          {"points", s.points}, {"consistent", s.consistent}});
    return j.dump(2);
}

}  // namespace degvisc
