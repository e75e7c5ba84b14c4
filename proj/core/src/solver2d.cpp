#include "activeflux/evolution_scalar.hpp"
#include "activeflux/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace af {

double compute_dt(const State2D& state, const Grid2D& grid, const ScalarLaw& law, double cfl, double t_end,
                  BoundaryMode) {
    double lmax = 0.0;
    auto scan = [&](const std::vector<double>& v) {
        for (double q : v) {
            const std::array<double, 2> a = law.speed2d(q);
            lmax = std::max(lmax, std::hypot(a[0], a[1]));
        }
    };
    scan(state.xmid);
    scan(state.ymid);
    const double remaining = t_end - state.t;
    if (lmax == 0.0)
        return remaining;
    return std::min(cfl * std::min(grid.dx, grid.dy) / (2.0 * lmax), remaining);
}

State2D step(const State2D& state, const Grid2D& g, const ScalarLaw& law, const SolverConfig& cfg, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        std::ostringstream os;
        os << "invalid time step " << dt << " at t = " << state.t;
        throw NumericalError(os.str());
    }
    if (cfg.op != Operator::ScalarSimple && cfg.op != Operator::ScalarModified)
        throw ContractViolation("2D runs support the scalar operators only");
    const BoundaryMode bc = cfg.bc;
    const Reconstruction2D rec(state, g, bc);
    auto data = [&](double x, double y) { return rec(x, y); };
    auto speed = [&](double q) { return law.speed2d(q); };
    auto evolve = [&](double x, double y, double t) {
        if (cfg.op == Operator::ScalarSimple)
            return fixpoint_simple_2d(x, y, t, data, speed).value;
        return fixpoint_modified_2d(x, y, t, data, speed, g.dx, g.dy).value;
    };

    State2D next;
    next.t = state.t + dt;
    next.corner.resize(state.corner.size());
    next.xmid.resize(state.xmid.size());
    next.ymid.resize(state.ymid.size());
    // Time-Simpson combination of each normal flux at each point.
    std::vector<double> fx_c(state.corner.size()), fy_c(state.corner.size());
    std::vector<double> fy_x(state.xmid.size()), fx_y(state.ymid.size());

    for (int j = 0; j < g.py(bc); ++j) {
        const double y = g.y_min + j * g.dy;
        for (int i = 0; i < g.px(bc); ++i) {
            const std::size_t k = g.corner(i, j, bc);
            const double x = g.x_min + i * g.dx;
            const double q0 = state.corner[k], qh = evolve(x, y, 0.5 * dt), q1 = evolve(x, y, dt);
            fx_c[k] = (law.fx(q0) + 4.0 * law.fx(qh) + law.fx(q1)) / 6.0;
            fy_c[k] = (law.fy(q0) + 4.0 * law.fy(qh) + law.fy(q1)) / 6.0;
            next.corner[k] = q1;
        }
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.xmid(i, j, bc);
            const double x = g.x_min + (i + 0.5) * g.dx;
            const double q0 = state.xmid[k], qh = evolve(x, y, 0.5 * dt), q1 = evolve(x, y, dt);
            fy_x[k] = (law.fy(q0) + 4.0 * law.fy(qh) + law.fy(q1)) / 6.0;
            next.xmid[k] = q1;
        }
    }
    for (int j = 0; j < g.ny; ++j) {
        const double y = g.y_min + (j + 0.5) * g.dy;
        for (int i = 0; i < g.px(bc); ++i) {
            const std::size_t k = g.ymid(i, j, bc);
            const double x = g.x_min + i * g.dx;
            const double q0 = state.ymid[k], qh = evolve(x, y, 0.5 * dt), q1 = evolve(x, y, dt);
            fx_y[k] = (law.fx(q0) + 4.0 * law.fx(qh) + law.fx(q1)) / 6.0;
            next.ymid[k] = q1;
        }
    }

    // Edge fluxes: Simpson along the edge of the time-integrated point fluxes.
    auto F = [&](int i, int j) {
        return (fx_c[g.corner(i, j, bc)] + 4.0 * fx_y[g.ymid(i, j, bc)] + fx_c[g.corner(i, j + 1, bc)]) / 6.0;
    };
    auto G = [&](int i, int j) {
        return (fy_c[g.corner(i, j, bc)] + 4.0 * fy_x[g.xmid(i, j, bc)] + fy_c[g.corner(i + 1, j, bc)]) / 6.0;
    };
    next.averages.resize(state.averages.size());
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            next.averages[g.cell(i, j)] =
                state.averages[g.cell(i, j)] - dt * ((F(i + 1, j) - F(i, j)) / g.dx + (G(i, j + 1) - G(i, j)) / g.dy);

    next.outflow = state.outflow;
    if (bc == BoundaryMode::Extrapolate) {
        double out = 0.0;
        for (int j = 0; j < g.ny; ++j)
            out += (F(g.nx, j) - F(0, j)) * g.dy;
        for (int i = 0; i < g.nx; ++i)
            out += (G(i, g.ny) - G(i, 0)) * g.dx;
        next.outflow += dt * out;
    }
    for (double v : next.averages)
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "non-finite cell average after step at t = " << state.t;
            throw NumericalError(os.str());
        }
    return next;
}

RunResult2D run(State2D initial, const Grid2D& grid, const ScalarLaw& law, const SolverConfig& cfg,
                const Observer2D& observer) {
    validate(law, cfg);
    RunResult2D res;
    res.state = std::move(initial);
    while (res.state.t < cfg.t_end) {
        double dt = compute_dt(res.state, grid, law, cfg.cfl, cfg.t_end, cfg.bc);
        const bool last = res.state.t + dt >= cfg.t_end * (1.0 - 1e-14);
        if (last)
            dt = cfg.t_end - res.state.t;
        res.state = step(res.state, grid, law, cfg, dt);
        if (last)
            res.state.t = cfg.t_end;
        StepRecord2D rec;
        rec.t = res.state.t;
        rec.dt = dt;
        const auto [lo, hi] = std::minmax_element(res.state.averages.begin(), res.state.averages.end());
        rec.avg_min = *lo;
        rec.avg_max = *hi;
        res.log.push_back(rec);
        if (observer)
            observer(res.state, rec);
    }
    return res;
}

} // namespace af
