#include "degvisc/cli.hpp"

#include "degvisc/diagnostics.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/parallel.hpp"
#include "degvisc/snapshot.hpp"
#include "degvisc/weakform.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace degvisc {

namespace {

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << s;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string snapshot_stem(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snap_%06zu", k);
    return buf;
}

void write_steps_csv(const fs::path& p, const std::vector<StepLogEntry>& steps) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError("cannot write " + p.string());
    out << "t,dt,mass_before,mass_after,source_integral,dirichlet,quartic,floor_integral\n";
    for (const auto& e : steps)
        out << fmt17(e.t) << ',' << fmt17(e.dt) << ',' << fmt17(e.mass_before) << ',' << fmt17(e.mass_after) << ','
            << fmt17(e.source_integral) << ',' << fmt17(e.dirichlet) << ',' << fmt17(e.quartic) << ','
            << fmt17(e.floor_integral) << '\n';
}

std::vector<StepLogEntry> read_steps_csv(const fs::path& p) {
    std::istringstream in(read_text(p));
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,dt,", 0) != 0) throw IoError(p.string() + ": missing header");
    std::vector<StepLogEntry> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> v;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            char* end = nullptr;
            v.push_back(std::strtod(cell.c_str(), &end));
            if (end == cell.c_str()) throw IoError(p.string() + ": malformed value '" + cell + "'");
        }
        if (v.size() != 8) throw IoError(p.string() + ": malformed row");
        out.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    }
    return out;
}

struct Reports {
    InequalityReport energy, bd, mv, mass, coercivity;
    DeGiorgiReport bounds;

    bool flagged() const {
        for (const auto* r : {&energy, &bd, &mv, &mass, &coercivity})
            if (r->applicable && r->flagged) return true;
        return bounds.flagged;
    }
    ojson json() const {
        ojson j;
        j["energy"] = ojson::parse(report_json(energy));
        j["bd_entropy"] = ojson::parse(report_json(bd));
        j["mellet_vasseur"] = ojson::parse(report_json(mv));
        j["mass_identity"] = ojson::parse(report_json(mass));
        j["coercivity"] = ojson::parse(report_json(coercivity));
        j["density_bounds"] = ojson::parse(report_json(bounds));
        return j;
    }
};

Reports compute_reports(const Trajectory& tr, const RunConfig& cfg, const LevelGrid& levels) {
    Reports r;
    r.energy = energy_budget(tr, cfg.c_tol);
    r.bd = bd_entropy_budget(tr, cfg.c_tol);
    r.mv = mv_budget(tr, cfg.c_tol);
    r.mass = mass_identity(tr, cfg.c_tol);
    r.coercivity = coercivity_report(tr);
    r.bounds = density_bounds(tr, levels);
    return r;
}

ojson initdata_json(const InitialData& d) {
    ojson j;
    j["nonnegative"] = d.raw_check.nonnegative;
    j["momentum_vanishes_on_vacuum"] = d.raw_check.momentum_vanishes_on_vacuum;
    j["vacuum_measure"] = d.raw_check.vacuum_measure;
    j["raw_mass"] = d.raw_check.mass;
    j["grad_power_l2"] = d.raw_check.grad_power_l2;
    j["momentum_norm"] = d.raw_check.momentum_norm;
    j["kinetic_moment"] = d.raw_check.kinetic_moment;
    j["l1_distance"] = d.l1_distance;
    j["lgamma_distance"] = d.lgamma_distance;
    j["floor"] = d.floor;
    j["nu"] = d.nu;
    j["lift_moment"] = d.lift.moment;
    j["lift_moment4"] = d.lift.moment4;
    j["momentum_l1_error"] = d.lift.momentum_l1_error;
    return j;
}

void write_summary(const fs::path& dir, int code, const std::string& status, const std::string& reason, long nsteps) {
    ojson j;
    j["exit_code"] = code;
    j["status"] = status;
    j["reason"] = reason;
    j["nsteps"] = nsteps;
    write_text(dir / "summary.json", j.dump(2) + "\n");
}

}  // namespace

int run_command(const RunConfig& cfg, const std::string& out, std::ostream& log) {
    const fs::path dir(out);
    fs::create_directories(dir / "snapshots");
    write_text(dir / "config.ini", to_ini(cfg));
    const ModelParams p = cfg.params();
    const BCMode bc = cfg.bc();

    InitialData init;
    try {
        init = prepare_initial(cfg.raw(), p, cfg.init, cfg.nu);
    } catch (const PositivityError& e) {
        log << "abort: initial data not positive: " << e.what() << '\n';
        write_summary(dir, kExitAborted, "aborted", std::string("positivity: ") + e.what(), 0);
        return kExitAborted;
    }
    RunControls ctl = cfg.controls(init.state.rho);
    std::size_t count = 0;
    ctl.on_snapshot = [&](const State& s) {
        const std::string stem = snapshot_stem(count++);
        write_field(dir / "snapshots" / (stem + "_rho.bin"), s.rho, s.t);
        write_field(dir / "snapshots" / (stem + "_u.bin"), s.u, s.t);
    };
    const Trajectory tr = run(init.state, cfg.variant, bc, cfg.t_end, ctl);

    write_records_csv((dir / "records.csv").string(), tr.records, ctl.levels);
    write_steps_csv(dir / "steps.csv", tr.steps);
    const Reports rep = compute_reports(tr, cfg, ctl.levels);
    ojson j = rep.json();
    j["initial_data"] = initdata_json(init);
    write_text(dir / "reports.json", j.dump(2) + "\n");
    if (cfg.residuals && tr.snapshots.size() >= 2)
        write_residual_csv((dir / "residuals.csv").string(), residual_table(tr, cfg.test_modes), 0);

    int code = kExitOk;
    std::string status = "ok", reason;
    if (tr.aborted) {
        code = kExitAborted;
        status = "aborted";
        reason = tr.abort_reason;
        log << "abort at t=" << fmt17(tr.snapshots.back().t) << ": " << tr.abort_reason << '\n';
    } else if (rep.flagged()) {
        code = kExitFlagged;
        status = "flagged";
        for (const auto* r : {&rep.energy, &rep.bd, &rep.mv, &rep.mass, &rep.coercivity})
            if (r->applicable && r->flagged) reason += (reason.empty() ? "" : "; ") + r->name;
        if (rep.bounds.flagged) reason += (reason.empty() ? "" : "; ") + std::string("density_bounds");
        log << "flagged: " << reason << '\n';
    }
    write_summary(dir, code, status, reason, tr.nsteps);
    log << "steps " << tr.nsteps << ", records " << tr.records.size() << ", snapshots " << tr.snapshots.size()
        << ", status " << status << '\n';
    return code;
}

int sweep_command(const RunConfig& cfg, const std::string& out, std::ostream& log) {
    const fs::path dir(out);
    fs::create_directories(dir);
    write_text(dir / "config.ini", to_ini(cfg));
    const ModelParams base = cfg.params();
    const Grid g = cfg.grid();
    const InitialData init0 = prepare_initial(cfg.raw(), base, cfg.init, cfg.nu);
    const SequenceOptions opts = cfg.sequence_options(init0.state.rho);
    const ConvergenceReport rep =
        run_sequence([&](const Grid& grid) { return cfg.raw_on(grid); }, g, base, cfg.eps_list, opts);
    for (const auto& w : rep.warnings) log << "warning: " << w << '\n';
    write_convergence_csv((dir / "convergence.csv").string(), rep);
    write_text(dir / "convergence.json", convergence_json(rep) + "\n");
    for (std::size_t k = 0; k < rep.members.size(); ++k)
        if (!rep.members[k].residuals.empty())
            write_residual_csv((dir / ("residuals_member" + std::to_string(k) + ".csv")).string(),
                               rep.members[k].residuals, rep.members[k].level);
    const bool any_abort =
        std::any_of(rep.members.begin(), rep.members.end(), [](const SequenceMember& m) { return m.aborted; });
    for (const auto& f : rep.flags) log << "flag: " << f << '\n';
    if (any_abort) return kExitAborted;
    return rep.flagged ? kExitFlagged : kExitOk;
}

int check_command(const std::string& dir_s, std::ostream& log) {
    const fs::path dir(dir_s);
    if (!fs::is_directory(dir)) throw IoError(dir_s + ": not a directory");
    if (!fs::exists(dir / "config.ini")) throw IoError((dir / "config.ini").string() + ": missing");
    const RunConfig cfg = parse_config(read_text(dir / "config.ini"), true);
    const ModelParams p = cfg.params();

    std::vector<fs::path> rho_files;
    if (fs::is_directory(dir / "snapshots"))
        for (const auto& e : fs::directory_iterator(dir / "snapshots")) {
            const std::string name = e.path().filename().string();
            if (name.size() > 8 && name.ends_with("_rho.bin")) rho_files.push_back(e.path());
        }
    std::sort(rho_files.begin(), rho_files.end());
    if (rho_files.empty()) throw IoError((dir / "snapshots").string() + ": no snapshot files");

    Trajectory tr;
    tr.variant = cfg.variant;
    tr.bc = cfg.bc();
    for (const auto& rf : rho_files) {
        fs::path uf = rf;
        uf.replace_filename(rf.filename().string().substr(0, rf.filename().string().size() - 8) + "_u.bin");
        const FieldSnapshot r = read_field(rf);
        const FieldSnapshot u = read_field(uf);
        if (r.is_vector || !u.is_vector) throw IoError(rf.string() + ": unexpected field kind");
        if (!(r.grid == u.grid) || r.t != u.t) throw IoError(uf.string() + ": does not match " + rf.string());
        State s;
        s.rho = r.scalar;
        s.u = u.vector;
        s.t = r.t;
        s.params = p;
        tr.snapshots.push_back(std::move(s));
    }
    const LevelGrid levels = default_levels(tr.snapshots.front().rho, cfg.level_points);
    for (const State& s : tr.snapshots) tr.records.push_back(record(s, tr.variant, tr.bc, levels));
    if (fs::exists(dir / "steps.csv")) tr.steps = read_steps_csv(dir / "steps.csv");

    fs::create_directories(dir / "check");
    write_records_csv((dir / "check" / "records.csv").string(), tr.records, levels);
    const Reports rep = compute_reports(tr, cfg, levels);
    write_text(dir / "check" / "reports.json", rep.json().dump(2) + "\n");

    // Compare rows at common times with the in-run records.
    std::istringstream orig(read_text(dir / "records.csv"));
    std::istringstream redo(read_text(dir / "check" / "records.csv"));
    std::string oh, rh, line;
    std::getline(orig, oh);
    std::getline(redo, rh);
    if (oh != rh) throw IoError((dir / "records.csv").string() + ": header differs from the recomputed one");
    std::map<std::string, std::string> by_time;
    while (std::getline(orig, line))
        if (!line.empty()) by_time[line.substr(0, line.find(','))] = line;
    std::size_t matched = 0, differ = 0, total = 0;
    while (std::getline(redo, line)) {
        if (line.empty()) continue;
        ++total;
        const auto it = by_time.find(line.substr(0, line.find(',')));
        if (it == by_time.end()) continue;
        ++matched;
        if (it->second != line) ++differ;
    }
    const bool full = matched == total && by_time.size() == total;
    bool reports_equal = false;
    if (full) {
        ojson stored = ojson::parse(read_text(dir / "reports.json"));
        stored.erase("initial_data");
        reports_equal = stored == rep.json();
    }
    log << "snapshots " << total << ", matched records " << matched << ", differing " << differ;
    if (full) log << ", reports " << (reports_equal ? "identical" : "differ");
    log << '\n';
    if (differ > 0 || (full && !reports_equal)) return kExitFlagged;
    return rep.flagged() ? kExitFlagged : kExitOk;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"degvisc: regularized degenerate-viscosity compressible flow solver"};
    app.require_subcommand(1);
    std::string config_path, out_dir, check_dir;
    int threads = 0;
    long long seed = -1;
    bool strict = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "INI configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
        sub->add_option("--threads", threads, "worker threads (fallback: DEGVISC_THREADS)")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "seed for random presets (overrides data.seed)")->check(CLI::NonNegativeNumber);
        sub->add_flag("--strict", strict, "reject unknown configuration keys");
    };
    CLI::App* run_cmd = app.add_subcommand("run", "integrate one trajectory");
    add_common(run_cmd);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a decreasing-epsilon sequence");
    add_common(sweep_cmd);
    CLI::App* check_cmd = app.add_subcommand("check", "recompute diagnostics from stored snapshots");
    check_cmd->add_option("dir", check_dir, "trajectory directory written by run")->required();
    check_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (threads <= 0)
        if (const char* env = std::getenv("DEGVISC_THREADS")) threads = std::max(1, std::atoi(env));
    set_thread_count(threads > 0 ? threads : 1);

    try {
        if (check_cmd->parsed()) return check_command(check_dir, std::cout);
        std::vector<std::string> warnings;
        RunConfig cfg = load_config(config_path, strict, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (run_cmd->parsed()) return run_command(cfg, cfg.out_dir, std::cout);
        return sweep_command(cfg, cfg.out_dir, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "aborted: " << e.what() << '\n';
        return kExitAborted;
    }
}

}  // namespace degvisc
