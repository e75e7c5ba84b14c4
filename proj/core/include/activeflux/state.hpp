#pragma once

#include "activeflux/grid.hpp"
#include "activeflux/types.hpp"

#include <functional>
#include <vector>

namespace af {

class Model;

struct State1D {
    double t = 0.0;
    int num_vars = 1;
    std::vector<Vec> averages; // one per cell
    std::vector<Vec> points;   // one per stored interface
    // Time-integrated flux leaving through the domain ends (zero for periodic runs),
    // so that sum(averages)*dx + outflow is conserved.
    Vec outflow;
};

struct State2D {
    double t = 0.0;
    std::vector<double> averages; // Grid2D::cell(i, j)
    std::vector<double> corner;
    std::vector<double> xmid;
    std::vector<double> ymid;
    double outflow = 0.0;
};

// Conservative initial data. Breakpoints mark jumps: cell means are integrated
// piecewise between them and a point value sitting on a jump gets the mean of
// the two one-sided limits.
struct InitialCondition1D {
    std::function<Vec(double)> value;
    std::vector<double> breakpoints;
};

struct InitialCondition2D {
    std::function<double(double, double)> value;
    std::vector<double> x_breaks;
    std::vector<double> y_breaks;
};

State1D init_state(const Grid1D& grid, const Model& model, const InitialCondition1D& ic, BoundaryMode bc);
State1D init_state(const Grid1D& grid, const Model& model, const std::function<Vec(double)>& q0, BoundaryMode bc);
State2D init_state(const Grid2D& grid, const InitialCondition2D& ic, BoundaryMode bc);

// Simpson mean of f over [a, b] split at the given breakpoints.
Vec piecewise_simpson_mean(const std::function<Vec(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints);

} // namespace af
