#include "activeflux/harness/commands.hpp"

#include "activeflux/harness/analysis.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace af::harness {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    return f;
}

std::string fmt(double v) { return format_double(v); }

} // namespace

RunResult1D run_problem(const Problem1D& pr, const Observer1D& observer) {
    const State1D s0 = init_state(pr.grid, *pr.model, pr.ic, pr.solver.bc);
    return run(s0, pr.grid, *pr.model, pr.solver, observer);
}

RunResult2D run_problem(const Problem2D& pr, const Observer2D& observer) {
    const State2D s0 = init_state(pr.grid, pr.ic, pr.solver.bc);
    return run(s0, pr.grid, *pr.law, pr.solver, observer);
}

void run_to_directory(const RunConfig& cfg, const std::string& dir, std::ostream& log) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const fs::path out(dir);
    MetaRows facts;
    if (cfg.dimensions == 2) {
        const Problem2D pr = build_problem_2d(cfg);
        const State2D s0 = init_state(pr.grid, pr.ic, pr.solver.bc);
        const double m0 = total_mass(s0, pr.grid);
        const RunResult2D res = run(s0, pr.grid, *pr.law, pr.solver);
        const double m1 = total_mass(res.state, pr.grid);
        facts = {{"cells_x", std::to_string(pr.grid.nx)},
                 {"cells_y", std::to_string(pr.grid.ny)},
                 {"steps", std::to_string(res.log.size())},
                 {"t_final", fmt(res.state.t)},
                 {"mass_initial", fmt(m0)},
                 {"mass_final", fmt(m1)}};
        auto f = open_out(out / "solution.csv");
        write_solution_csv(f, res.state, pr.grid);
        auto m = open_out(out / "meta.csv");
        write_meta_csv(m, cfg, facts, res.log);
        log << cfg.name << ": " << res.log.size() << " steps to t = " << res.state.t << ", mass drift "
            << (m1 - m0) << '\n';
        return;
    }

    const Problem1D pr = build_problem_1d(cfg);
    const std::vector<std::string> vars = variable_names(*pr.model);
    const State1D s0 = init_state(pr.grid, *pr.model, pr.ic, pr.solver.bc);
    const RunResult1D res = run(s0, pr.grid, *pr.model, pr.solver);
    facts = {{"cells", std::to_string(pr.grid.n_cells)},
             {"steps", std::to_string(res.log.size())},
             {"t_final", fmt(res.state.t)}};
    for (int k = 0; k < s0.num_vars; ++k) {
        facts.push_back({"mass_initial_" + vars[k], fmt(total_mass(s0, pr.grid, k))});
        facts.push_back({"mass_final_" + vars[k], fmt(total_mass(res.state, pr.grid, k))});
    }
    if (pr.exact) {
        const double t = res.state.t;
        std::function<Vec(double, double)> mean;
        if (pr.exact_mean)
            mean = [&](double a, double b) { return pr.exact_mean(a, b, t); };
        const L1Errors e =
            l1_errors(res.state, pr.grid, pr.solver.bc, [&](double x) { return pr.exact(x, t); }, mean);
        for (int k = 0; k < s0.num_vars; ++k) {
            facts.push_back({"l1_avg_" + vars[k], fmt(e.avg[k])});
            facts.push_back({"l1_point_" + vars[k], fmt(e.point[k])});
        }
        auto f = open_out(out / "exact.csv");
        f << "t,x";
        for (const std::string& v : vars)
            f << ',' << v;
        f << '\n';
        const int per_cell = 4;
        for (int k = 0; k <= per_cell * pr.grid.n_cells; ++k) {
            const double x = pr.grid.x_min + k * (pr.grid.dx / per_cell);
            const Vec q = pr.exact(x, t);
            f << fmt(t) << ',' << fmt(x);
            for (int v = 0; v < q.size(); ++v)
                f << ',' << fmt(q[v]);
            f << '\n';
        }
    }
    auto f = open_out(out / "solution.csv");
    write_solution_csv(f, res.state, pr.grid, vars);
    auto p = open_out(out / "points.csv");
    write_points_csv(p, res.state, pr.grid, pr.solver.bc, vars);
    auto m = open_out(out / "meta.csv");
    write_meta_csv(m, cfg, facts, res.log);
    log << cfg.name << ": " << pr.grid.n_cells << " cells, " << res.log.size() << " steps to t = " << res.state.t
        << '\n';
}

std::vector<double> default_convergence_dxs(const RunConfig& cfg) {
    const double length = cfg.x_max - cfg.x_min + 2.0 * cfg.domain_padding;
    if (cfg.reference == "self")
        return {length / 32, length / 64, length / 128, length / 256};
    return {2.0 * cfg.dx, cfg.dx, cfg.dx / 2.0, cfg.dx / 4.0};
}

State1D self_reference(const RunConfig& cfg) {
    if (cfg.reference_cells <= 0)
        throw ContractViolation("preset '" + cfg.name + "' has no reference grid size");
    RunConfig r = cfg;
    r.dx = (cfg.x_max - cfg.x_min + 2.0 * cfg.domain_padding) / cfg.reference_cells;
    r.op = cfg.reference_operator;
    return run_problem(build_problem_1d(r)).state;
}

std::vector<ConvergenceRow> converge(const RunConfig& cfg, const std::vector<double>& dxs,
                                     const std::vector<Operator>& ops, std::ostream* log) {
    if (cfg.reference != "exact" && cfg.reference != "self")
        throw ContractViolation("preset '" + cfg.name + "' has no reference solution for a convergence study");
    if (dxs.empty() || ops.empty())
        throw ContractViolation("convergence study needs grids and operators");

    State1D ref;
    Grid1D ref_grid;
    if (cfg.reference == "self") {
        if (log)
            *log << cfg.name << ": reference run on " << cfg.reference_cells << " cells\n";
        ref = self_reference(cfg);
        RunConfig r = cfg;
        r.dx = (cfg.x_max - cfg.x_min + 2.0 * cfg.domain_padding) / cfg.reference_cells;
        ref_grid = build_problem_1d(r).grid;
    }

    std::vector<ConvergenceRow> rows;
    for (Operator op : ops) {
        std::vector<ConvergenceRow> series;
        for (double dx : dxs) {
            RunConfig c = cfg;
            c.dx = dx;
            c.op = op;
            const Problem1D pr = build_problem_1d(c);
            const RunResult1D res = run_problem(pr);
            const double t = res.state.t;
            L1Errors e;
            if (cfg.reference == "exact") {
                std::function<Vec(double, double)> mean;
                if (pr.exact_mean)
                    mean = [&](double a, double b) { return pr.exact_mean(a, b, t); };
                e = l1_errors(res.state, pr.grid, c.bc, [&](double x) { return pr.exact(x, t); }, mean);
            } else {
                if (ref_grid.n_cells % pr.grid.n_cells != 0)
                    throw ContractViolation("reference grid is not a refinement of the study grid");
                const int ratio = ref_grid.n_cells / pr.grid.n_cells;
                auto point = [&](double x) {
                    const long j = std::lround((x - ref_grid.x_min) / ref_grid.dx);
                    if (std::abs(ref_grid.interface(int(j)) - x) < 1e-9 * ref_grid.dx &&
                        j < long(ref.points.size()))
                        return ref.points[j];
                    if (j == ref_grid.n_cells && c.bc == BoundaryMode::Periodic)
                        return ref.points[0];
                    return eval_reconstruction(ref, ref_grid, c.bc, x);
                };
                auto mean = [&](double a, double) {
                    const long i0 = std::lround((a - ref_grid.x_min) / ref_grid.dx);
                    Vec s = Vec::Zero(ref.num_vars);
                    for (int k = 0; k < ratio; ++k)
                        s += ref.averages[i0 + k];
                    return Vec(s / double(ratio));
                };
                e = l1_errors(res.state, pr.grid, c.bc, point, mean);
            }
            const std::vector<std::string> vars = variable_names(*pr.model);
            for (int k = 0; k < res.state.num_vars; ++k) {
                ConvergenceRow r;
                r.op = operator_name(op);
                r.variable = vars[k];
                r.dx = dx;
                r.cells = pr.grid.n_cells;
                r.err_avg = e.avg[k];
                r.err_point = e.point[k];
                r.eoc_avg = r.eoc_point = nan;
                series.push_back(r);
            }
            if (log) {
                *log << operator_name(op) << " dx = " << dx << ":";
                for (int k = 0; k < res.state.num_vars; ++k)
                    *log << ' ' << vars[k] << " avg " << e.avg[k] << " point " << e.point[k];
                *log << '\n';
            }
        }
        const std::size_t m = series.size() / dxs.size();
        for (std::size_t g = 1; g < dxs.size(); ++g)
            for (std::size_t k = 0; k < m; ++k) {
                ConvergenceRow& fine = series[g * m + k];
                const ConvergenceRow& coarse = series[(g - 1) * m + k];
                fine.eoc_avg = eoc(coarse.err_avg, fine.err_avg);
                fine.eoc_point = eoc(coarse.err_point, fine.err_point);
            }
        rows.insert(rows.end(), series.begin(), series.end());
    }
    return rows;
}

std::vector<std::pair<double, double>> default_battery(const std::string& model) {
    if (model == "burgers")
        return {{1.0, 0.0},  {0.0, 1.0},   {-1.0, 1.0}, {1.0, -1.0}, {2.0, -1.0},
                {-0.5, -1.5}, {-2.0, 0.5}, {0.0, -1.0}, {1.5, 0.5}};
    if (model == "quartic")
        return {{1.0, -5.0}, {-1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}, {-1.0, 0.5}, {2.0, 1.0}};
    throw ContractViolation("no Riemann battery for model '" + model + "' (burgers, quartic)");
}

RiemannRow riemann_case(const RunConfig& base, double ql, double qr) {
    if (base.ic != "steps" || base.ic_params.size() != 3)
        throw ContractViolation("Riemann cases need a scalar two-state 'steps' preset");
    RunConfig c = base;
    c.ic_params = {ql, base.ic_params[1], qr};
    c.reference = "exact";
    const Problem1D pr = build_problem_1d(c);
    const ScalarLaw& law = *pr.model->as_scalar();

    std::vector<State1D> snaps;
    const RunResult1D res = run_problem(pr, [&](const State1D& s, const StepRecord&) { snaps.push_back(s); });
    const double t = res.state.t;
    const L1Errors e = l1_errors(res.state, pr.grid, c.bc, [&](double x) { return pr.exact(x, t); });

    RiemannRow r;
    r.q_left = ql;
    r.q_right = qr;
    r.l1 = e.avg[0];
    r.exact_speed = nan;
    r.measured_speed = nan;
    const double al = law.a(ql), ar = law.a(qr);
    const double jump = std::abs(qr - ql);
    if (al > ar) {
        r.wave = "shock";
        r.exact_speed = law.shock_speed(ql, qr);
        const double level = 0.5 * (ql + qr);
        if (snaps.size() >= 4)
            r.measured_speed = measure_shock_speed(snaps, pr.grid, level);
        // 5 % of the characteristic speed scale on either side. Short runs move
        // the front by only a few cells, so a final front within one cell of
        // the exact shock also counts.
        const double tol = 0.05 * std::max(std::abs(r.exact_speed), 0.5 * (al - ar));
        const double front = front_position(res.state, pr.grid, level);
        const double exact_front = base.ic_params[1] + r.exact_speed * t;
        r.pass = std::abs(r.measured_speed - r.exact_speed) <= tol || std::abs(front - exact_front) <= pr.grid.dx;
    } else {
        r.wave = al == ar ? "contact" : "rarefaction";
        r.pass = r.l1 <= 2.0 * pr.grid.dx * jump;
    }
    return r;
}

std::vector<RiemannRow> riemann_suite(const RunConfig& base, const std::vector<std::pair<double, double>>& pairs,
                                      std::ostream* log) {
    std::vector<RiemannRow> rows;
    for (const auto& [ql, qr] : pairs) {
        rows.push_back(riemann_case(base, ql, qr));
        if (log) {
            const RiemannRow& r = rows.back();
            *log << "(" << ql << ", " << qr << ") " << r.wave << " l1 " << r.l1;
            if (r.wave == "shock")
                *log << " speed " << r.measured_speed << " exact " << r.exact_speed;
            *log << (r.pass ? "  pass" : "  FAIL") << '\n';
        }
    }
    return rows;
}

} // namespace af::harness
