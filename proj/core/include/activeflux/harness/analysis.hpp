#pragma once

#include "activeflux/solver.hpp"

#include <vector>

namespace af::harness {

// Compensated (Neumaier) summation.
double neumaier_sum(const std::vector<double>& values);

// sum(averages) * dx + outflow for one variable.
double total_mass(const State1D& state, const Grid1D& grid, int var = 0);
double total_mass(const State2D& state, const Grid2D& grid);

// Position where the cell averages cross level, by linear interpolation
// between neighbouring cell centres. Throws NumericalError unless there is
// exactly one crossing.
double front_position(const State1D& state, const Grid1D& grid, double level, int var = 0);

// Least-squares slope of front_position over the last half of the snapshots.
double measure_shock_speed(const std::vector<State1D>& snapshots, const Grid1D& grid, double level, int var = 0);

double least_squares_slope(const std::vector<double>& t, const std::vector<double>& x);

// log2(coarse / fine)
double eoc(double coarse, double fine);

// Strict local extrema of v[first..last] whose neighbouring differences both
// exceed tol in magnitude.
int count_extrema(const std::vector<double>& v, std::size_t first, std::size_t last, double tol);

} // namespace af::harness
