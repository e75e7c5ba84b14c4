#pragma once

#include "activeflux/harness/csv.hpp"
#include "activeflux/harness/presets.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace af::harness {

RunResult1D run_problem(const Problem1D& pr, const Observer1D& observer = {});
RunResult2D run_problem(const Problem2D& pr, const Observer2D& observer = {});

// Runs cfg and writes solution.csv, meta.csv and, in 1D, points.csv (plus
// exact.csv when the problem has an exact solution) into dir.
void run_to_directory(const RunConfig& cfg, const std::string& dir, std::ostream& log);

std::vector<double> default_convergence_dxs(const RunConfig& cfg);

// One row per (operator, variable, dx); errors against the preset's reference.
std::vector<ConvergenceRow> converge(const RunConfig& cfg, const std::vector<double>& dxs,
                                     const std::vector<Operator>& ops, std::ostream* log = nullptr);

// Reference solution of a self-convergence study, run on cfg.reference_cells cells.
State1D self_reference(const RunConfig& cfg);

std::vector<std::pair<double, double>> default_battery(const std::string& model);
RiemannRow riemann_case(const RunConfig& base, double q_left, double q_right);
std::vector<RiemannRow> riemann_suite(const RunConfig& base, const std::vector<std::pair<double, double>>& pairs,
                                      std::ostream* log = nullptr);

} // namespace af::harness
