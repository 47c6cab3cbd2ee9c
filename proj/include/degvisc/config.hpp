#pragma once

#include "degvisc/continuation.hpp"
#include "degvisc/dynamics.hpp"
#include "degvisc/initdata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace degvisc {

/// Everything a `run` or `sweep` invocation needs. Parsed from an INI file
/// with sections [model], [grid], [data], [run], [diagnostics], [weakform],
/// [sweep] and [output]; see README for the key list.
struct RunConfig {
    // [model]
    SystemVariant variant = SystemVariant::A2D;
    double alpha = 1.0;
    double gamma = 2.0;
    double epsilon = 0.05;
    double eta0 = 1.0;
    int p0 = 50;
    std::optional<double> sigma0;

    // [grid]
    int dim = 2;
    int n = 64;
    Topology topology = Topology::Periodic;
    double length = 1.0;
    double half_width = 1.0;

    // [data]
    std::string preset = "uniform";
    std::string raw_rho;  ///< field snapshot file; overrides the preset when set
    std::string raw_m;
    std::uint64_t seed = 0;
    InitialDataMode init = InitialDataMode::Regularized;
    int nu = 0;

    // [run]
    double t_end = 0.1;
    double cfl = 0.4;
    Scheme scheme = Scheme::RK2;
    double dt = 0.0;
    int record_stride = 1;
    int snapshot_stride = 0;
    double sync_interval = 0.0;
    long max_steps = 50'000'000;
    double floor_fraction = 1e-12;
    bool disable_source = false;

    // [diagnostics]
    int level_points = 8;
    double c_tol = 10.0;

    // [weakform]
    bool residuals = false;
    int test_modes = 3;

    // [sweep]
    std::vector<double> eps_list;
    bool refine = false;
    int sync_points = 10;
    bool parallel = true;

    // [output]
    std::string out_dir = "out";

    /// \throws RegimeError for an inadmissible regime.
    ModelParams params() const;
    Grid grid() const;
    BCMode bc() const { return BCMode::for_grid(grid()); }
    /// Raw data from the snapshot files or the preset.
    RawData raw() const;
    RawData raw_on(const Grid& g) const;
    RunControls controls(const ScalarField& rho0) const;
    SequenceOptions sequence_options(const ScalarField& rho0) const;
};

/// Parses INI text. Unknown keys are errors in strict mode and warnings
/// otherwise. All values are validated before returning.
/// \throws ConfigError naming the offending key.
RunConfig parse_config(const std::string& text, bool strict, std::vector<std::string>* warnings = nullptr);
/// \throws ConfigError when the file cannot be read or parsed.
RunConfig load_config(const std::string& path, bool strict, std::vector<std::string>* warnings = nullptr);

/// Serializes every field (17 significant digits); parse_config(to_ini(c))
/// reproduces c.
std::string to_ini(const RunConfig& c);

}  // namespace degvisc
