#include "activeflux/solver.hpp"

#include "activeflux/evolution_scalar.hpp"
#include "activeflux/evolution_system.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace af {

std::string operator_name(Operator op) {
    switch (op) {
    case Operator::ScalarSimple: return "simple";
    case Operator::ScalarModified: return "modified";
    case Operator::SystemProjector: return "projector";
    case Operator::SystemRK2: return "rk2";
    case Operator::SystemRK2Fixed: return "rk2-fixed";
    case Operator::SystemDiagonal: return "diagonal";
    }
    return "?";
}

Operator parse_operator(const std::string& name) {
    for (Operator op : {Operator::ScalarSimple, Operator::ScalarModified, Operator::SystemProjector,
                        Operator::SystemRK2, Operator::SystemRK2Fixed, Operator::SystemDiagonal})
        if (operator_name(op) == name)
            return op;
    throw ContractViolation("unknown operator '" + name + "' (simple, modified, projector, rk2, rk2-fixed, diagonal)");
}

void validate(const Model& model, const SolverConfig& cfg) {
    if (!(cfg.cfl > 0.0 && cfg.cfl < 1.0))
        throw ContractViolation("cfl must lie in (0, 1)");
    if (!(cfg.limiter.n_cutoff > 1.0))
        throw ContractViolation("limiter cutoff must exceed 1");
    const bool scalar_op = cfg.op == Operator::ScalarSimple || cfg.op == Operator::ScalarModified;
    if (scalar_op != (model.as_scalar() != nullptr))
        throw ContractViolation("operator '" + operator_name(cfg.op) + "' does not apply to model " + model.name());
    if (!scalar_op && cfg.op != Operator::SystemProjector && !model.as_system()->has_characteristic_variables())
        throw ContractViolation("operator '" + operator_name(cfg.op) + "' needs characteristic variables, " +
                                model.name() + " has none");
    if (cfg.op == Operator::SystemRK2 || cfg.op == Operator::SystemRK2Fixed)
        if (!(cfg.rk_alpha > 0.0 && cfg.rk_alpha <= 1.0))
            throw ContractViolation("rk_alpha must lie in (0, 1]");
}

double compute_dt(const State1D& state, const Grid1D& grid, const Model& model, double cfl, double t_end) {
    double lmax = 0.0;
    for (const Vec& p : state.points)
        lmax = std::max(lmax, model.max_speed(p));
    const double remaining = t_end - state.t;
    if (lmax == 0.0)
        return remaining;
    return std::min(cfl * grid.dx / lmax, remaining);
}

namespace {

// Evolves one point value of a frozen reconstruction to time t.
Vec evolve_point(double x, double t, const Reconstruction1D& rec, const Model& model, const SolverConfig& cfg,
                 const Vec& q_here) {
    const double dx = rec.grid().dx;
    if (const ScalarLaw* law = model.as_scalar()) {
        auto data = [&](double xi) { return rec.scalar(xi); };
        auto speed = [&](double q) { return law->a(q); };
        const FootpointResult r = cfg.op == Operator::ScalarSimple ? fixpoint_simple(x, t, data, speed)
                                                                   : fixpoint_modified_1d(x, t, data, speed, dx);
        return scalar_vec(r.value);
    }
    const SystemLaw& law = *model.as_system();
    if (cfg.op == Operator::SystemProjector)
        return evolve_point_projector(x, t, law, rec);

    auto Q = [&](double xi) { return law.to_characteristic(law.to_working(rec(xi))); };
    Vec out;
    if (cfg.op == Operator::SystemDiagonal) {
        out = evolve_point_diagonal_predictor(x, t, law, Q);
    } else {
        RK2Config rk;
        rk.alpha = cfg.rk_alpha;
        rk.fix_enabled = cfg.op == Operator::SystemRK2Fixed;
        rk.dx = dx;
        out = evolve_point_rk2(x, t, law, Q, rk);
    }
    const Vec w = law.from_characteristic(out);
    law.check_working(w);
    // Increment form: data that did not move come back bit for bit.
    const Vec w_here = law.from_characteristic(Q(x));
    return q_here + (law.to_conservative(w) - law.to_conservative(w_here));
}

void minmax(const std::vector<Vec>& v, Vec& lo, Vec& hi) {
    lo = v.front();
    hi = v.front();
    for (const Vec& a : v) {
        lo = lo.cwiseMin(a);
        hi = hi.cwiseMax(a);
    }
}

} // namespace

State1D step(const State1D& state, const Grid1D& grid, const Model& model, const SolverConfig& cfg, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        std::ostringstream os;
        os << "invalid time step " << dt << " at t = " << state.t;
        throw NumericalError(os.str());
    }
    const BoundaryMode bc = cfg.bc;
    const int np = grid.n_interfaces(bc);
    const int m = state.num_vars;
    const Reconstruction1D rec(state, grid, bc, cfg.limiter);

    State1D next;
    next.num_vars = m;
    next.t = state.t + dt;
    next.points.resize(np);
    std::vector<Vec> flux(np);
    int j = 0;
    try {
        for (j = 0; j < np; ++j) {
            const double x = grid.interface(j);
            const Vec& qn = state.points[j];
            const Vec half = evolve_point(x, 0.5 * dt, rec, model, cfg, qn);
            const Vec full = evolve_point(x, dt, rec, model, cfg, qn);
            flux[j] = (model.flux(qn) + 4.0 * model.flux(half) + model.flux(full)) / 6.0;
            next.points[j] = full;
        }
    } catch (const NumericalError& e) {
        std::ostringstream os;
        os << e.what() << " (point " << j << " at x = " << grid.interface(j) << ", t = " << state.t
           << ", dt = " << dt << ")";
        throw NumericalError(os.str());
    }

    const double r = dt / grid.dx;
    next.averages.resize(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i)
        next.averages[i] = state.averages[i] - r * (flux[grid.right_point(i, bc)] - flux[grid.left_point(i)]);
    next.outflow = state.outflow;
    if (bc == BoundaryMode::Extrapolate)
        next.outflow += dt * (flux[np - 1] - flux[0]);
    return next;
}

State1D step(const State1D& state, const Grid1D& grid, const Model& model, const SolverConfig& cfg) {
    return step(state, grid, model, cfg, compute_dt(state, grid, model, cfg.cfl, cfg.t_end));
}

RunResult1D run(State1D initial, const Grid1D& grid, const Model& model, const SolverConfig& cfg,
                const Observer1D& observer) {
    validate(model, cfg);
    RunResult1D res;
    res.state = std::move(initial);
    if (res.state.outflow.size() != res.state.num_vars)
        res.state.outflow = Vec::Zero(res.state.num_vars);
    while (res.state.t < cfg.t_end) {
        double dt = compute_dt(res.state, grid, model, cfg.cfl, cfg.t_end);
        // Avoid a sliver of a final step caused by round-off.
        const bool last = res.state.t + dt >= cfg.t_end * (1.0 - 1e-14);
        if (last)
            dt = cfg.t_end - res.state.t;
        res.state = step(res.state, grid, model, cfg, dt);
        if (last)
            res.state.t = cfg.t_end;
        StepRecord rec;
        rec.t = res.state.t;
        rec.dt = dt;
        minmax(res.state.averages, rec.avg_min, rec.avg_max);
        minmax(res.state.points, rec.point_min, rec.point_max);
        res.log.push_back(rec);
        if (observer)
            observer(res.state, rec);
    }
    return res;
}

L1Errors l1_errors(const State1D& state, const Grid1D& grid, BoundaryMode bc,
                   const std::function<Vec(double)>& ref_point, const std::function<Vec(double, double)>& ref_mean) {
    const int m = state.num_vars;
    L1Errors e{Vec::Zero(m), Vec::Zero(m)};
    for (int i = 0; i < grid.n_cells; ++i) {
        const double a = grid.interface(i), b = grid.interface(i + 1);
        Vec ref;
        if (ref_mean)
            ref = ref_mean(a, b);
        else
            ref = (ref_point(a) + 4.0 * ref_point(0.5 * (a + b)) + ref_point(b)) / 6.0;
        e.avg += (state.averages[i] - ref).cwiseAbs() * grid.dx;
    }
    for (int j = 0; j < grid.n_interfaces(bc); ++j)
        e.point += (state.points[j] - ref_point(grid.interface(j))).cwiseAbs() * grid.dx;
    return e;
}

} // namespace af
