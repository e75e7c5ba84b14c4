#include "activeflux/harness/analysis.hpp"

#include <cmath>
#include <sstream>

namespace af::harness {

double neumaier_sum(const std::vector<double>& values) {
    double sum = 0.0, c = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            c += (sum - t) + v;
        else
            c += (v - t) + sum;
        sum = t;
    }
    return sum + c;
}

double total_mass(const State1D& state, const Grid1D& grid, int var) {
    std::vector<double> v;
    v.reserve(state.averages.size() + 1);
    for (const Vec& q : state.averages)
        v.push_back(q[var] * grid.dx);
    if (state.outflow.size() > var)
        v.push_back(state.outflow[var]);
    return neumaier_sum(v);
}

double total_mass(const State2D& state, const Grid2D& grid) {
    std::vector<double> v;
    v.reserve(state.averages.size() + 1);
    for (double q : state.averages)
        v.push_back(q * grid.dx * grid.dy);
    v.push_back(state.outflow);
    return neumaier_sum(v);
}

double front_position(const State1D& state, const Grid1D& grid, double level, int var) {
    int found = 0;
    double pos = 0.0;
    for (int i = 0; i + 1 < grid.n_cells; ++i) {
        const double a = state.averages[i][var] - level, b = state.averages[i + 1][var] - level;
        if ((a < 0.0 && b >= 0.0) || (a >= 0.0 && b < 0.0)) {
            ++found;
            pos = grid.center(i) + a / (a - b) * grid.dx;
        }
    }
    if (found != 1) {
        std::ostringstream os;
        os << "expected one crossing of level " << level << " at t = " << state.t << ", found " << found;
        throw NumericalError(os.str());
    }
    return pos;
}

double least_squares_slope(const std::vector<double>& t, const std::vector<double>& x) {
    const std::size_t n = t.size();
    if (n < 2 || x.size() != n)
        throw ContractViolation("least squares slope needs at least two matching samples");
    double tm = 0.0, xm = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        tm += t[k];
        xm += x[k];
    }
    tm /= double(n);
    xm /= double(n);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        num += (t[k] - tm) * (x[k] - xm);
        den += (t[k] - tm) * (t[k] - tm);
    }
    if (den == 0.0)
        throw ContractViolation("least squares slope needs distinct times");
    return num / den;
}

double measure_shock_speed(const std::vector<State1D>& snapshots, const Grid1D& grid, double level, int var) {
    if (snapshots.size() < 4)
        throw ContractViolation("measure_shock_speed needs at least four snapshots");
    std::vector<double> t, x;
    for (std::size_t k = snapshots.size() / 2; k < snapshots.size(); ++k) {
        t.push_back(snapshots[k].t);
        x.push_back(front_position(snapshots[k], grid, level, var));
    }
    return least_squares_slope(t, x);
}

double eoc(double coarse, double fine) { return std::log2(coarse / fine); }

int count_extrema(const std::vector<double>& v, std::size_t first, std::size_t last, double tol) {
    int n = 0;
    for (std::size_t i = std::max<std::size_t>(first, 1); i <= last && i + 1 < v.size(); ++i) {
        const double l = v[i] - v[i - 1], r = v[i + 1] - v[i];
        if (std::abs(l) > tol && std::abs(r) > tol && (l > 0.0) != (r > 0.0))
            ++n;
    }
    return n;
}

} // namespace af::harness
