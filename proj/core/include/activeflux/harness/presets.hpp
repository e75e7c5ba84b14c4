#pragma once

#include "activeflux/harness/config.hpp"
#include "activeflux/models.hpp"
#include "activeflux/state.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace af::harness {

const std::vector<RunConfig>& presets();
std::vector<std::string> preset_names();
// Throws ContractViolation naming the valid presets.
RunConfig find_preset(const std::string& name);

std::shared_ptr<const Model> make_model(const RunConfig& cfg);
std::vector<std::string> variable_names(const Model& model);
SolverConfig make_solver_config(const RunConfig& cfg);

// Cells needed to cover length with spacing dx; throws unless dx divides length.
int cells_for(double length, double dx);

struct Problem1D {
    std::shared_ptr<const Model> model;
    Grid1D grid;
    InitialCondition1D ic;
    SolverConfig solver;
    // Exact solution (x, t) and its cell means (a, b, t), conservative variables.
    // Empty when the problem has no closed-form reference.
    std::function<Vec(double, double)> exact;
    std::function<Vec(double, double, double)> exact_mean;
};

Problem1D build_problem_1d(const RunConfig& cfg);

struct Problem2D {
    std::shared_ptr<const ScalarLaw> law;
    Grid2D grid;
    InitialCondition2D ic;
    SolverConfig solver;
};

Problem2D build_problem_2d(const RunConfig& cfg);

} // namespace af::harness
