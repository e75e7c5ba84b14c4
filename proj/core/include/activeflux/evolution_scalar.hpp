#pragma once

#include <array>
#include <cmath>

namespace af {

// data(x) evaluates the initial (reconstructed) function, speed(q) the wave
// speed of a value. Footpoints outside the domain are resolved by data itself.

struct FootpointResult {
    double footpoint;
    double value;
    int candidate; // winning offset index for the modified iteration, else -1
};

struct FootpointResult2D {
    double x, y;
    double value;
    int candidate;
};

template <class Data, class Speed>
FootpointResult fixpoint_simple(double x, double t, Data&& data, Speed&& speed, int n_iter = 2) {
    double xi = x;
    double q = data(xi);
    for (int n = 0; n < n_iter; ++n) {
        xi = x - speed(q) * t;
        q = data(xi);
    }
    return {xi, q, -1};
}

// Starts the iteration at x + dx and x - dx and keeps the candidate whose
// first iterate sees the larger |speed|. Ties go to +dx.
template <class Data, class Speed>
FootpointResult fixpoint_modified_1d(double x, double t, Data&& data, Speed&& speed, double dx) {
    const double offsets[2] = {dx, -dx};
    double best_speed = 0.0;
    int best = -1;
    for (int l = 0; l < 2; ++l) {
        const double xi1 = x - speed(data(x + offsets[l])) * t;
        const double s = speed(data(xi1));
        if (best < 0 || std::abs(s) > std::abs(best_speed)) {
            best = l;
            best_speed = s;
        }
    }
    const double xi2 = x - best_speed * t;
    return {xi2, data(xi2), best};
}

// 2D variants: speed(q) returns {a_x, a_y}.
template <class Data, class Speed>
FootpointResult2D fixpoint_simple_2d(double x, double y, double t, Data&& data, Speed&& speed, int n_iter = 2) {
    double px = x, py = y;
    double q = data(px, py);
    for (int n = 0; n < n_iter; ++n) {
        const std::array<double, 2> a = speed(q);
        px = x - a[0] * t;
        py = y - a[1] * t;
        q = data(px, py);
    }
    return {px, py, q, -1};
}

template <class Data, class Speed>
FootpointResult2D fixpoint_modified_2d(double x, double y, double t, Data&& data, Speed&& speed, double dx,
                                       double dy) {
    const double ox[4] = {dx, -dx, 0.0, 0.0};
    const double oy[4] = {0.0, 0.0, dy, -dy};
    std::array<double, 2> best_speed{0.0, 0.0};
    double best_norm = -1.0;
    int best = -1;
    for (int l = 0; l < 4; ++l) {
        const std::array<double, 2> a0 = speed(data(x + ox[l], y + oy[l]));
        const std::array<double, 2> a1 = speed(data(x - a0[0] * t, y - a0[1] * t));
        // squared Euclidean norm: same ordering, no hypot call
        const double norm = a1[0] * a1[0] + a1[1] * a1[1];
        if (norm > best_norm) {
            best = l;
            best_norm = norm;
            best_speed = a1;
        }
    }
    const double fx = x - best_speed[0] * t, fy = y - best_speed[1] * t;
    return {fx, fy, data(fx, fy), best};
}

} // namespace af
