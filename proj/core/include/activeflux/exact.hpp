#pragma once

#include "activeflux/types.hpp"

#include <vector>

namespace af {

// Exact Burgers evolution of piecewise linear data: every node travels with
// its own value, the solution stays linear in between until characteristics cross.
class PiecewiseLinearBurgers {
public:
    // period > 0 treats the node set as one period [nodes.front(), nodes.front() + period);
    // the node at nodes.front() + period is implicit.
    PiecewiseLinearBurgers(std::vector<double> nodes, std::vector<double> values, double period = 0.0);

    // First time at which two neighbouring nodes collide.
    double shock_time() const { return t_shock_; }
    double value(double t, double x) const;
    // Exact mean over [a, b].
    double average(double t, double a, double b) const;

private:
    void check_time(double t) const;
    double moved(int k, double t) const;
    double node_value(int k) const;
    int count() const { return int(x_.size()); }
    // Integral from the first moved node to x, x inside the base period.
    double primitive(double t, double x) const;

    std::vector<double> x_, q_;
    double period_;
    double t_shock_;
};

double exact_burgers_piecewise_linear(const std::vector<double>& nodes, const std::vector<double>& values,
                                      double t, double x);

// Exact Riemann solver for the ideal gas Euler equations, primitive variables (rho, v, p).
class EulerRiemann {
public:
    EulerRiemann(const Vec& left, const Vec& right, double gamma = 1.4);

    double p_star() const { return p_star_; }
    double v_star() const { return v_star_; }
    int newton_iterations() const { return iterations_; }
    Vec sample(double xi) const;

    // Signed speeds of the outer wave edges; for a shock head == tail.
    struct Wave {
        bool shock;
        double head;
        double tail;
    };
    Wave left_wave() const;
    Wave right_wave() const;
    double star_density_left() const;
    double star_density_right() const;

    // Pressure function f_L(p) + f_R(p) + v_R - v_L.
    double pressure_function(double p) const;

private:
    double side_function(double p, double rho, double pk, double c, double* deriv) const;

    double rl_, vl_, pl_, cl_;
    double rr_, vr_, pr_, cr_;
    double g_;
    double p_star_ = 0.0, v_star_ = 0.0;
    int iterations_ = 0;
};

Vec exact_euler_riemann(const Vec& left, const Vec& right, double xi, double gamma = 1.4);

} // namespace af
