/// @file config.hpp
/// @brief Sectioned key = value configuration for the velab CLI.
///
/// Grammar (one statement per line):
///   # comment           anything after '#' is ignored
///   [section]           one of grid, physics, init, run, sweep, mms
///   key = value         numbers, true/false (also on/off, yes/no, 1/0),
///                       names, or comma-separated number lists
/// Keys may appear at most once per section; unknown sections and keys are
/// errors.  Every field has a default, so the empty document is valid.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "velab/boundary.hpp"
#include "velab/initdata.hpp"
#include "velab/state.hpp"
#include "velab/sweep.hpp"

namespace velab {

struct GridConfig {
    int nx = 64;
    int ny = 65;
    double lx = 6.283185307179586;
    double ly = 6.283185307179586;
};

struct RunConfig {
    double t_end = 1.0;
    double cfl = 0.4;
    int sample_interval = 5;
    int snapshot_interval = 0;
    int m = 2;
    int z0_depth = 3;
    /// auto picks ideal for eps = 0 and viscous otherwise.
    std::string mode = "auto";
    bool ideal_slip = false;
    double sponge_sigma = 5.0;
    double sponge_fraction = 0.1;
};

struct SweepConfig {
    std::vector<double> eps_list{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    /// elastic (coupling on) or fluid (coupling off) for the sweep subcommand.
    std::string mode = "elastic";
};

struct MmsConfig {
    std::vector<int> resolutions{32, 64, 128};
    double t_end = 0.2;
    double amplitude = 0.1;
    double ly = 1.0;
    double cfl = 0.4;
};

struct Config {
    GridConfig grid;
    PhysParams physics;
    DisplacementSpec init;
    RunConfig run;
    SweepConfig sweep;
    MmsConfig mms;

    BcMode run_mode() const;
    BoundaryOptions boundary() const;
    SweepPlan sweep_plan() const;
};

/// Throws ValidationError with the line number on syntax errors and with the
/// key on constraint violations.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);

/// key = value dump of every field (17 significant digits), re-parseable.
std::string format_config(const Config& cfg);

}  // namespace velab
