#include "doctest.h"

#include "degvisc/cli.hpp"
#include "degvisc/config.hpp"
#include "degvisc/errors.hpp"
#include "degvisc/parallel.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace degvisc;
namespace fs = std::filesystem;

namespace {

// A fresh directory under the system temp dir, removed on destruction.
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("degvisc_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

const char* kSmallRun = R"([model]
variant = A2D
epsilon = 0.1
[grid]
dim = 1
n = 32
[data]
preset = gaussian-bump
initial_data = raw
[run]
t_end = 0.01
snapshot_stride = 1
)";

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("empty config gives the defaults") {
    const RunConfig c = parse_config("", true);
    const RunConfig d;
    CHECK(c.variant == d.variant);
    CHECK(c.epsilon == 0.05);
    CHECK(c.n == 64);
    CHECK(c.dim == 2);
    CHECK(c.preset == "uniform");
    CHECK_FALSE(c.sigma0.has_value());
    CHECK(c.eps_list.empty());
}

TEST_CASE("unknown keys") {
    const std::string text = "[model]\nepsilon = 0.1\nwobble = 3\n[extra]\nx = 1\n";
    CHECK_THROWS_AS(parse_config(text, true), ConfigError);
    std::vector<std::string> warnings;
    const RunConfig c = parse_config(text, false, &warnings);
    CHECK(c.epsilon == 0.1);
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("model.wobble") != std::string::npos);
    CHECK(warnings[1].find("extra.x") != std::string::npos);
}

TEST_CASE("invalid values are rejected") {
    for (const char* text : {
             "[model]\nepsilon = abc\n",
             "[model]\nepsilon = -0.1\n",
             "[model]\nvariant = D4D\n",
             "[grid]\ndim = 4\n",
             "[grid]\nn = 3\n",
             "[grid]\ntopology = sphere\n",
             "[run]\ncfl = 1.5\n",
             "[run]\nscheme = euler\n",
             "[run]\nrecord_stride = 0\n",
             "[run]\ndisable_source = maybe\n",
             "[data]\npreset = nope\n",
             "[data]\ninitial_data = smooth\n",
             "[sweep]\neps_list = 0.1, x\n",
             "[sweep]\neps_list = 0.1, -0.2, 0.3\n",
             "[output]\ndir =\n",
             "[model\nepsilon = 0.1\n",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(parse_config(text, true), ConfigError);
    }
    // gamma below 2 alpha - 1 in 2D
    CHECK_THROWS_AS(parse_config("[model]\nalpha = 3\n", true), RegimeError);
    CHECK_THROWS_AS(parse_config("[model]\nvariant = A2D\n[grid]\ndim = 3\n", true), RegimeError);
    CHECK_THROWS_WITH_AS(parse_config("[model]\ngamma = 1\n", true), doctest::Contains("γ>1"), RegimeError);
}

TEST_CASE("list, sigma0 and boolean parsing") {
    const RunConfig c = parse_config(
        "[model]\nsigma0 = 0.25\n[sweep]\neps_list = 0.1, 0.05 ,0.025,\nrefine = yes\n[weakform]\nresiduals = on\n", true);
    CHECK(c.eps_list == std::vector<double>{0.1, 0.05, 0.025});
    REQUIRE(c.sigma0.has_value());
    CHECK(*c.sigma0 == 0.25);
    CHECK(c.refine);
    CHECK(c.residuals);
    CHECK_FALSE(parse_config("[model]\nsigma0 = paper\n", true).sigma0.has_value());
    CHECK(c.params().sigma0 == 0.25);
    CHECK(parse_config("", true).params().sigma0 == make_params(1.0, 2.0, 0.05, 1.0, SystemVariant::A2D, 2).sigma0);
}

TEST_CASE("ini round trip") {
    RunConfig c = parse_config(kSmallRun, true);
    c.sigma0 = 0.1 + 0.2;  // not exactly representable in short decimal
    c.eps_list = {0.3, 1.0 / 3.0, 0.01};
    c.topology = Topology::Box;
    c.seed = 12345678901234ULL;
    const std::string text = to_ini(c);
    const RunConfig r = parse_config(text, true);
    CHECK(to_ini(r) == text);
    CHECK(*r.sigma0 == *c.sigma0);
    CHECK(r.eps_list == c.eps_list);
    CHECK(r.seed == c.seed);
    CHECK(r.topology == Topology::Box);
}

TEST_CASE("run and check commands") {
    TempDir tmp("cli_run");
    const RunConfig cfg = parse_config(kSmallRun, true);
    std::ostringstream log;
    CHECK(run_command(cfg, tmp.path.string(), log) == kExitOk);
    for (const char* f : {"config.ini", "records.csv", "steps.csv", "reports.json", "summary.json"})
        CHECK(fs::exists(tmp.path / f));
    CHECK(fs::exists(tmp.path / "snapshots" / "snap_000000_rho.bin"));
    const auto summary = nlohmann::json::parse(slurp(tmp.path / "summary.json"));
    CHECK(summary["exit_code"] == 0);
    CHECK(summary["status"] == "ok");
    CHECK(parse_config(slurp(tmp.path / "config.ini"), true).epsilon == 0.1);

    std::ostringstream clog;
    CHECK(check_command(tmp.path.string(), clog) == kExitOk);
    CHECK(clog.str().find("differing 0") != std::string::npos);
    CHECK(clog.str().find("reports identical") != std::string::npos);

    // truncate a snapshot
    fs::resize_file(tmp.path / "snapshots" / "snap_000001_rho.bin", 10);
    CHECK_THROWS_AS(check_command(tmp.path.string(), clog), IoError);
    CHECK_THROWS_AS(check_command((tmp.path / "missing").string(), clog), IoError);
}

TEST_CASE("run command aborts on vacuum without regularization") {
    TempDir tmp("cli_abort");
    RunConfig cfg = parse_config(kSmallRun, true);
    // the 2D patch is wider than the smoothing stencil, so its center stays exactly empty
    cfg.preset = "vacuum-patch";
    cfg.dim = 2;
    cfg.n = 64;
    cfg.epsilon = 0.0;
    cfg.init = InitialDataMode::Regularized;
    std::ostringstream log;
    CHECK(run_command(cfg, tmp.path.string(), log) == kExitAborted);
    const auto summary = nlohmann::json::parse(slurp(tmp.path / "summary.json"));
    CHECK(summary["status"] == "aborted");
}

TEST_CASE("sweep command") {
    TempDir tmp("cli_sweep");
    RunConfig cfg = parse_config(kSmallRun, true);
    cfg.eps_list = {0.2, 0.1, 0.05};
    cfg.sync_points = 4;
    std::ostringstream log;
    const int code = sweep_command(cfg, tmp.path.string(), log);
    CHECK((code == kExitOk || code == kExitFlagged));
    CHECK(fs::exists(tmp.path / "convergence.csv"));
    const auto j = nlohmann::json::parse(slurp(tmp.path / "convergence.json"));
    CHECK(j["members"].size() == 3);
    CHECK((code == kExitFlagged) == j["flagged"].get<bool>());

    cfg.eps_list = {0.2, 0.1};
    CHECK_THROWS_AS(sweep_command(cfg, tmp.path.string(), log), ConfigError);
}

TEST_CASE("command line entry point") {
    TempDir tmp("cli_main");
    const fs::path ini = tmp.path / "run.ini";
    std::ofstream(ini) << kSmallRun;
    std::ofstream(tmp.path / "bad.ini") << kSmallRun << "bogus = 1\n";

    auto call = [](std::vector<std::string> args) {
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        return cli_main(static_cast<int>(argv.size()), argv.data());
    };
    CHECK(call({"degvisc"}) == kExitConfig);
    CHECK(call({"degvisc", "fly"}) == kExitConfig);
    CHECK(call({"degvisc", "run"}) == kExitConfig);
    CHECK(call({"degvisc", "run", "--config", (tmp.path / "none.ini").string()}) == kExitConfig);
    CHECK(call({"degvisc", "run", "--config", (tmp.path / "bad.ini").string(), "--strict"}) == kExitConfig);

    std::ofstream(tmp.path / "minimal.ini") << "[model]\nvariant = A2D\n[grid]\nn = 16\n[data]\npreset = uniform\n[run]\nt_end = 0.001\n";
    CHECK(call({"degvisc", "run", "--config", (tmp.path / "minimal.ini").string(), "--out",
                (tmp.path / "minimal").string()}) == kExitOk);
    CHECK(fs::exists(tmp.path / "minimal" / "records.csv"));
    std::ofstream(tmp.path / "gamma1.ini") << "[model]\ngamma = 1\n";
    CHECK(call({"degvisc", "run", "--config", (tmp.path / "gamma1.ini").string()}) == kExitConfig);

    const std::string out = (tmp.path / "out").string();
    CHECK(call({"degvisc", "run", "--config", ini.string(), "--out", out, "--threads", "2"}) == kExitOk);
    CHECK(fs::exists(fs::path(out) / "records.csv"));
    CHECK(call({"degvisc", "check", out}) == kExitOk);
    CHECK(call({"degvisc", "check", (tmp.path / "nothing").string()}) == kExitConfig);
    set_thread_count(1);
}
