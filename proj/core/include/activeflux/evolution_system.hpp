#pragma once

#include "activeflux/models.hpp"

#include <Eigen/LU>

#include <cmath>

namespace af {

// General operator with predicted eigen-structure. W(x) returns working
// variables; the result is in working variables as well.
template <class Working>
Vec evolve_point_projector_working(double x, double t, const SystemLaw& law, Working&& W) {
    const Vec w0 = W(x);
    if (t == 0.0)
        return w0;
    const int m = law.size();
    const Vec lam = law.eigenvalues(w0);
    const Mat R = law.left_eigenvectors(w0);
    const Mat Ri = law.right_eigenvectors(w0);

    // Everything is written as a deviation from w0, which leaves constant
    // data untouched bit for bit. c[i][k] = R_k . (W(x - t (lam_i + lam_k)/2) - w0);
    // the footpoint is symmetric in (i, k).
    double c[kMaxVars][kMaxVars];
    for (int i = 0; i < m; ++i) {
        for (int k = i; k < m; ++k) {
            const Vec dw = W(x - 0.5 * t * (lam[i] + lam[k])) - w0;
            c[i][k] = R.row(k).dot(dw);
            if (k != i)
                c[k][i] = R.row(i).dot(dw);
        }
    }

    Mat Rs(m, m);
    Vec rhs(m);
    for (int i = 0; i < m; ++i) {
        Vec qi = w0;
        for (int k = 0; k < m; ++k)
            qi += Ri.col(k) * c[i][k];
        law.check_working(qi);
        const double lam_star = law.eigenvalues(qi)[i];
        Rs.row(i) = law.left_eigenvectors(qi).row(i);
        rhs[i] = Rs.row(i).dot(W(x - lam_star * t) - w0);
    }
    Vec w = w0 + Rs.partialPivLu().solve(rhs);
    law.check_working(w);
    return w;
}

// Same operator on conservative data, returning conservative values.
template <class Data>
Vec evolve_point_projector(double x, double t, const SystemLaw& law, Data&& data) {
    if (t == 0.0)
        return data(x);
    auto W = [&](double xi) { return law.to_working(data(xi)); };
    const Vec q0 = data(x);
    const Vec w = evolve_point_projector_working(x, t, law, W);
    // Added as an increment so an unchanged state comes back unchanged.
    return q0 + (law.to_conservative(w) - law.to_conservative(law.to_working(q0)));
}

// Diagonal predictor for systems in characteristic variables. Q(x) returns
// the characteristic vector, speeds(Q) the eigenvalues. The *_characteristic_*
// forms take the speed function directly so any diagonal system can be used.
template <class QData, class Speeds>
Vec evolve_characteristic_diagonal(double x, double t, QData&& Q, Speeds&& speeds) {
    const Vec q0 = Q(x);
    if (t == 0.0)
        return q0;
    const int m = int(q0.size());
    const Vec lam = speeds(q0);
    Vec cache[kMaxVars][kMaxVars];
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            cache[i][j] = Q(x - 0.5 * t * (lam[i] + lam[j]));
            cache[j][i] = cache[i][j];
        }
    Vec out(m);
    for (int i = 0; i < m; ++i) {
        Vec z(m);
        for (int j = 0; j < m; ++j)
            z[j] = cache[i][j][j];
        out[i] = Q(x - t * speeds(z)[i])[i];
    }
    return out;
}

template <class QData>
Vec evolve_point_diagonal_predictor(double x, double t, const SystemLaw& law, QData&& Q) {
    return evolve_characteristic_diagonal(x, t, Q, [&](const Vec& q) { return law.characteristic_speeds(q); });
}

struct RK2Config {
    double alpha = 0.5;
    bool fix_enabled = false;
    double dx = 0.0;
};

// Footpoints of all families; the initial speeds are taken at x_speed (x itself
// unless the shock modification offsets it).
template <class QData, class Speeds>
Vec rk2_footpoints(double x, double x_speed, double t, double alpha, QData&& Q, Speeds&& speeds) {
    const Vec lam0 = speeds(Q(x_speed));
    const int m = int(lam0.size());
    Vec xi(m);
    for (int i = 0; i < m; ++i) {
        const double ys = x - alpha * t * lam0[i];
        const Vec mu = speeds(Q(ys));
        Vec z(m);
        for (int j = 0; j < m; ++j)
            z[j] = Q(ys - alpha * t * mu[j])[j];
        const double lam_star = speeds(z)[i];
        xi[i] = x - t * (1.0 - 0.5 / alpha) * lam0[i] - t * (0.5 / alpha) * lam_star;
    }
    return xi;
}

template <class QData, class Speeds>
Vec evolve_characteristic_rk2(double x, double t, QData&& Q, Speeds&& speeds, const RK2Config& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0))
        throw ContractViolation("RK2 parameter alpha must lie in (0, 1]");
    if (t == 0.0)
        return Q(x);
    Vec xi;
    if (!cfg.fix_enabled) {
        xi = rk2_footpoints(x, x, t, cfg.alpha, Q, speeds);
    } else {
        const Vec a = rk2_footpoints(x, x + cfg.dx, t, cfg.alpha, Q, speeds);
        const Vec b = rk2_footpoints(x, x - cfg.dx, t, cfg.alpha, Q, speeds);
        xi = b;
        // Strictly larger displacement wins; otherwise the -dx candidate is kept.
        for (int i = 0; i < int(a.size()); ++i)
            if (std::abs(a[i] - x) > std::abs(b[i] - x))
                xi[i] = a[i];
    }
    Vec out(xi.size());
    for (int i = 0; i < int(xi.size()); ++i)
        out[i] = Q(xi[i])[i];
    return out;
}

template <class QData>
Vec evolve_point_rk2(double x, double t, const SystemLaw& law, QData&& Q, const RK2Config& cfg) {
    return evolve_characteristic_rk2(x, t, Q, [&](const Vec& q) { return law.characteristic_speeds(q); }, cfg);
}

} // namespace af
