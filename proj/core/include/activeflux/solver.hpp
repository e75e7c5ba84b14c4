#pragma once

#include "activeflux/grid.hpp"
#include "activeflux/models.hpp"
#include "activeflux/reconstruction.hpp"
#include "activeflux/state.hpp"

#include <functional>
#include <string>
#include <vector>

namespace af {

enum class Operator {
    ScalarSimple,
    ScalarModified,
    SystemProjector,
    SystemRK2,
    SystemRK2Fixed,
    SystemDiagonal,
};

std::string operator_name(Operator op);
Operator parse_operator(const std::string& name);

struct SolverConfig {
    double cfl = 0.45;
    double t_end = 0.0;
    LimiterMode limiter;
    Operator op = Operator::ScalarModified;
    BoundaryMode bc = BoundaryMode::Periodic;
    double rk_alpha = 0.5;
};

// Throws ContractViolation if the operator does not fit the model.
void validate(const Model& model, const SolverConfig& cfg);

struct StepRecord {
    double t = 0.0; // time after the step
    double dt = 0.0;
    Vec avg_min, avg_max, point_min, point_max;
};

double compute_dt(const State1D& state, const Grid1D& grid, const Model& model, double cfl, double t_end);
// Advance by the given dt.
State1D step(const State1D& state, const Grid1D& grid, const Model& model, const SolverConfig& cfg, double dt);
// Advance by the CFL time step clipped to cfg.t_end.
State1D step(const State1D& state, const Grid1D& grid, const Model& model, const SolverConfig& cfg);

using Observer1D = std::function<void(const State1D&, const StepRecord&)>;

struct RunResult1D {
    State1D state;
    std::vector<StepRecord> log;
};

RunResult1D run(State1D initial, const Grid1D& grid, const Model& model, const SolverConfig& cfg,
                const Observer1D& observer = {});

double compute_dt(const State2D& state, const Grid2D& grid, const ScalarLaw& law, double cfl, double t_end,
                  BoundaryMode bc);
State2D step(const State2D& state, const Grid2D& grid, const ScalarLaw& law, const SolverConfig& cfg, double dt);

struct StepRecord2D {
    double t = 0.0;
    double dt = 0.0;
    double avg_min = 0.0, avg_max = 0.0;
};

using Observer2D = std::function<void(const State2D&, const StepRecord2D&)>;

struct RunResult2D {
    State2D state;
    std::vector<StepRecord2D> log;
};

RunResult2D run(State2D initial, const Grid2D& grid, const ScalarLaw& law, const SolverConfig& cfg,
                const Observer2D& observer = {});

struct L1Errors {
    Vec avg;   // per variable
    Vec point; // per variable
};

// Cell means of the reference come from ref_mean(a, b) when given, else from
// Simpson's rule on ref_point.
L1Errors l1_errors(const State1D& state, const Grid1D& grid, BoundaryMode bc,
                   const std::function<Vec(double)>& ref_point,
                   const std::function<Vec(double, double)>& ref_mean = {});

} // namespace af
