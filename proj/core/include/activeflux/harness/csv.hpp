#pragma once

#include "activeflux/harness/config.hpp"
#include "activeflux/solver.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace af::harness {

void write_solution_csv(std::ostream& os, const State1D& state, const Grid1D& grid,
                        const std::vector<std::string>& vars);
void write_points_csv(std::ostream& os, const State1D& state, const Grid1D& grid, BoundaryMode bc,
                      const std::vector<std::string>& vars);
void write_solution_csv(std::ostream& os, const State2D& state, const Grid2D& grid);

using MetaRows = std::vector<std::pair<std::string, std::string>>;

// Columns section, key, value: the config echo, free-form run facts and the step log.
void write_meta_csv(std::ostream& os, const RunConfig& cfg, const MetaRows& run_facts,
                    const std::vector<StepRecord>& log);
void write_meta_csv(std::ostream& os, const RunConfig& cfg, const MetaRows& run_facts,
                    const std::vector<StepRecord2D>& log);

struct ConvergenceRow {
    std::string op;
    std::string variable;
    double dx = 0.0;
    int cells = 0;
    double err_avg = 0.0;
    double err_point = 0.0;
    // NaN on the coarsest row of each (op, variable) series.
    double eoc_avg = 0.0;
    double eoc_point = 0.0;
};

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

struct RiemannRow {
    double q_left = 0.0, q_right = 0.0;
    std::string wave; // shock | rarefaction | contact
    double l1 = 0.0;
    double exact_speed = 0.0;    // shock speed, or NaN
    double measured_speed = 0.0; // NaN when not measured
    bool pass = false;
};

void write_riemann_csv(std::ostream& os, const std::vector<RiemannRow>& rows);

} // namespace af::harness
