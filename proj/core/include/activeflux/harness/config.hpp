#pragma once

#include "activeflux/grid.hpp"
#include "activeflux/reconstruction.hpp"
#include "activeflux/solver.hpp"

#include <string>
#include <vector>

namespace af::harness {

// Everything needed to reproduce one run. Serialised as flat "key = value"
// text with '#' comments.
struct RunConfig {
    std::string name;
    std::string description;
    int dimensions = 1;

    std::string model = "burgers";
    double gamma = 1.4;
    double kappa = 1.0;
    double advection_speed = 1.0;
    double advection_speed_y = 0.0;

    std::string ic = "gaussian";
    std::vector<double> ic_params;

    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    double dx = 0.01;
    // Extra cells on every side so waves never reach the boundary.
    double domain_padding = 0.0;

    double cfl = 0.45;
    double t_end = 0.1;
    LimiterMode::Kind limiter = LimiterMode::None;
    double n_cutoff = 50.0;
    Operator op = Operator::ScalarModified;
    BoundaryMode bc = BoundaryMode::Periodic;
    double rk_alpha = 0.5;

    // exact | self | none
    std::string reference = "none";
    int reference_cells = 0;
    Operator reference_operator = Operator::SystemRK2;

    // Initial data read off plots rather than given numerically.
    bool calibrated = false;

    bool operator==(const RunConfig&) const = default;
};

std::string limiter_name(LimiterMode::Kind k);
LimiterMode::Kind parse_limiter(const std::string& s);
std::string bc_name(BoundaryMode bc);
BoundaryMode parse_bc(const std::string& s);

std::string emit_config(const RunConfig& cfg);
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path);

// The ordered key/value pairs emit_config writes.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);

// Exact text form used in all outputs: 17 significant digits.
std::string format_double(double v);

} // namespace af::harness
