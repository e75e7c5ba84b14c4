#include "activeflux/harness/presets.hpp"

#include "activeflux/exact.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace af::harness {

namespace {

RunConfig base(const std::string& name, const std::string& model, const std::string& description) {
    RunConfig c;
    c.name = name;
    c.model = model;
    c.description = description;
    return c;
}

std::vector<RunConfig> make_presets() {
    std::vector<RunConfig> v;

    RunConfig c = base("linear-advection", "linear-advection",
                       "Gaussian plus square pulse advected once around a periodic domain");
    c.ic = "square-gauss";
    c.ic_params = {1.0, 20.0, 2.0, 2.8};
    c.x_min = 0.0;
    c.x_max = 3.5;
    c.dx = 3.5 / 250.0;
    c.cfl = 0.45;
    c.t_end = 3.5;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.reference = "exact";
    c.calibrated = true;
    v.push_back(c);

    c = base("burgers-gauss", "burgers", "Smooth Gaussian before shock formation, convergence study");
    c.ic = "gaussian";
    c.ic_params = {0.5, 100.0, 0.0, 1.0};
    c.dx = 0.01;
    c.cfl = 0.45;
    c.t_end = 0.05;
    c.reference = "exact";
    c.reference_cells = 12000;
    c.calibrated = true;
    v.push_back(c);

    c = base("burgers-rp-11-1", "burgers", "Fast shock from 11 to 1 with the simple iteration");
    c.ic = "steps";
    c.ic_params = {11.0, 0.3, 1.0};
    c.x_max = 1.2;
    c.dx = 3e-3;
    c.cfl = 0.45;
    c.t_end = 0.1;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarSimple;
    c.bc = BoundaryMode::Extrapolate;
    c.reference = "exact";
    c.calibrated = true;
    v.push_back(c);

    c = base("burgers-rp-stationary", "burgers", "Shock from 1 to 0; the simple iteration leaves it in place");
    c.ic = "steps";
    c.ic_params = {1.0, 0.0, 0.0};
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.dx = 0.01;
    c.cfl = 0.9;
    c.t_end = 0.6;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    c.reference = "exact";
    v.push_back(c);

    c = base("burgers-erf-steepening", "burgers", "Inverse error function steepening into a shock of speed 0.75 at t = 0.3");
    c.ic = "erf";
    c.ic_params = {0.75, 1.25, 0.423, 0.0};
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.domain_padding = 1.0;
    c.dx = 0.01;
    c.cfl = 0.9;
    c.t_end = 0.6;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    c.calibrated = true;
    v.push_back(c);

    c = base("burgers-gauss-steepening", "burgers", "Gaussian over a negative background steepening into a shock");
    c.ic = "gaussian";
    c.ic_params = {0.0, 4.0, -0.5, 1.5};
    c.x_min = -2.0;
    c.x_max = 2.0;
    c.domain_padding = 1.0;
    c.dx = 0.01;
    c.cfl = 0.9;
    c.t_end = 0.6;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    c.calibrated = true;
    v.push_back(c);

    c.name = "burgers-gauss-osci";
    c.description = "Coarse unlimited version of the steepening Gaussian";
    c.dx = 1.0 / 25.0;
    c.cfl = 0.45;
    c.limiter = LimiterMode::None;
    v.push_back(c);

    c = base("burgers-riemann", "burgers", "Single Burgers Riemann problem; base of the Riemann battery");
    c.ic = "steps";
    c.ic_params = {-1.0, 0.0, 1.0};
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.dx = 2.0 / 100.0;
    c.cfl = 0.45;
    c.t_end = 0.1;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    c.reference = "exact";
    v.push_back(c);

    c = base("quartic-riemann", "quartic", "Quartic flux Riemann problem; base of the Riemann battery");
    c.ic = "steps";
    c.ic_params = {1.0, 0.0, -5.0};
    c.x_min = -1.0;
    c.x_max = 1.0;
    c.dx = 2.0 / 100.0;
    c.cfl = 0.45;
    c.t_end = 0.01;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    c.reference = "exact";
    v.push_back(c);

    c = base("psystem-gauss", "p-system", "Density pulse at rest, convergence study");
    c.ic = "gaussian";
    c.ic_params = {0.5, 80.0, 1.0, 0.5, 0.0, 0.0};
    c.dx = 0.01;
    c.cfl = 0.45;
    c.t_end = 0.2;
    c.op = Operator::SystemRK2;
    c.reference = "self";
    c.reference_cells = 16384;
    c.reference_operator = Operator::SystemRK2;
    c.calibrated = true;
    v.push_back(c);

    c = base("psystem-rp", "p-system", "Dense block moving right inside a thin background");
    c.ic = "steps";
    c.ic_params = {0.1, -0.5, 0.3, 2.0, 1.0, 0.7, 0.1, -0.5};
    c.dx = 0.01;
    c.cfl = 0.45;
    c.t_end = 0.1;
    c.limiter = LimiterMode::SymmetrizedPowerLaw;
    c.op = Operator::SystemRK2;
    v.push_back(c);

    c = base("isentropic-gauss", "isentropic-euler", "Density pulse at rest, convergence study");
    c.ic = "gaussian";
    c.ic_params = {0.5, 80.0, 1.0, 0.5, 0.0, 0.0};
    c.dx = 0.01;
    c.cfl = 0.45;
    c.t_end = 0.2;
    c.op = Operator::SystemRK2;
    c.reference = "self";
    c.reference_cells = 16384;
    c.reference_operator = Operator::SystemRK2;
    c.calibrated = true;
    v.push_back(c);

    c = base("isentropic-rp1", "isentropic-euler", "Dense block at rest in a thin background; transonic rarefaction");
    c.ic = "steps";
    c.ic_params = {0.1, 0.0, 0.3, 1.0, 0.0, 0.7, 0.1, 0.0};
    c.dx = 1.0 / 200.0;
    c.cfl = 0.45;
    c.t_end = 0.05;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::SystemRK2Fixed;
    c.calibrated = true;
    v.push_back(c);

    c.name = "isentropic-rp2";
    c.description = "Colliding and separating flows: strong shocks and a double rarefaction";
    c.ic_params = {1.0, 1.8, 0.3, 2.0, -1.4, 0.7, 1.0, 1.8};
    v.push_back(c);

    c = base("euler-gauss", "euler", "Density and pressure pulse at rest, convergence study");
    c.ic = "gaussian";
    c.ic_params = {0.5, 80.0, 1.0, 0.5, 0.0, 0.0, 1.0, 0.5};
    c.dx = 0.01;
    c.cfl = 0.7;
    c.t_end = 0.25;
    c.op = Operator::SystemProjector;
    c.reference = "self";
    c.reference_cells = 2048;
    c.reference_operator = Operator::SystemProjector;
    v.push_back(c);

    c = base("sod", "euler", "Sod shock tube");
    c.ic = "steps";
    c.ic_params = {1.0, 0.0, 1.0, 0.5, 0.125, 0.0, 0.1};
    c.dx = 1.0 / 200.0;
    c.cfl = 0.7;
    c.t_end = 0.1;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::SystemProjector;
    c.bc = BoundaryMode::Extrapolate;
    c.reference = "exact";
    v.push_back(c);

    c.name = "lax";
    c.description = "Lax shock tube";
    c.ic_params = {0.445, 0.698, 3.528, 0.5, 0.5, 0.0, 0.571};
    v.push_back(c);

    c = base("shu-osher", "euler", "Mach 3 shock running into a density sine wave, domain scaled to [0, 1]");
    c.ic = "shu-osher";
    c.ic_params = {0.1, 3.857143, 2.629369, 10.33333, 0.2, 50.0, -25.0, 0.0, 1.0};
    c.dx = 1.0 / 240.0;
    c.cfl = 0.7;
    c.t_end = 0.18;
    c.limiter = LimiterMode::PowerLaw;
    c.op = Operator::SystemProjector;
    c.bc = BoundaryMode::Extrapolate;
    v.push_back(c);

    c = base("burgers2d-quadrant", "burgers", "Two-dimensional Burgers four-quadrant Riemann problem");
    c.dimensions = 2;
    c.ic = "quadrant";
    c.ic_params = {0.5, 0.5, -1.0, -0.2, 0.5, 0.8};
    c.domain_padding = 0.5;
    c.dx = 1.0 / 200.0;
    c.cfl = 0.9;
    c.t_end = 0.3;
    c.op = Operator::ScalarModified;
    c.bc = BoundaryMode::Extrapolate;
    v.push_back(c);

    return v;
}

void need_params(const RunConfig& c, std::size_t n) {
    if (c.ic_params.size() < n)
        throw ContractViolation("initial condition '" + c.ic + "' needs at least " + std::to_string(n) +
                                " parameters");
}

// Working-variable initial data w(x) plus breakpoints.
struct WorkingIC {
    std::function<Vec(double)> w;
    std::vector<double> breaks;
};

WorkingIC working_ic(const RunConfig& c, int m) {
    const std::vector<double>& p = c.ic_params;
    if (c.ic == "gaussian") {
        need_params(c, 2 + 2 * std::size_t(m));
        return {[p, m](double x) {
                    const double g = std::exp(-p[1] * (x - p[0]) * (x - p[0]));
                    Vec w(m);
                    for (int k = 0; k < m; ++k)
                        w[k] = p[2 + 2 * k] + p[3 + 2 * k] * g;
                    return w;
                },
                {}};
    }
    if (c.ic == "steps") {
        // v0..., x1, v1..., x2, v2...
        if (p.size() < std::size_t(m) || (p.size() - m) % (m + 1) != 0)
            throw ContractViolation("initial condition 'steps' expects m values, then (x, m values) groups");
        std::vector<double> breaks;
        for (std::size_t k = m; k < p.size(); k += m + 1)
            breaks.push_back(p[k]);
        return {[p, m, breaks](double x) {
                    std::size_t piece = 0;
                    while (piece < breaks.size() && x >= breaks[piece])
                        ++piece;
                    const std::size_t off = piece * (m + 1);
                    Vec w(m);
                    for (int k = 0; k < m; ++k)
                        w[k] = p[off + k];
                    return w;
                },
                breaks};
    }
    if (c.ic == "erf") {
        need_params(c, 4);
        if (m != 1)
            throw ContractViolation("initial condition 'erf' is scalar");
        return {[p](double x) { return scalar_vec(p[0] - p[1] * std::erf((x - p[3]) / p[2])); }, {}};
    }
    if (c.ic == "square-gauss") {
        need_params(c, 4);
        if (m != 1)
            throw ContractViolation("initial condition 'square-gauss' is scalar");
        return {[p](double x) {
                    const double g = std::exp(-p[1] * (x - p[0]) * (x - p[0]));
                    return scalar_vec(g + ((x >= p[2] && x < p[3]) ? 1.0 : 0.0));
                },
                {p[2], p[3]}};
    }
    if (c.ic == "shu-osher") {
        need_params(c, 9);
        if (m != 3)
            throw ContractViolation("initial condition 'shu-osher' needs the full Euler model");
        return {[p](double x) {
                    Vec w(3);
                    if (x < p[0])
                        w << p[1], p[2], p[3];
                    else
                        w << 1.0 + p[4] * std::sin(p[5] * x + p[6]), p[7], p[8];
                    return w;
                },
                {p[0]}};
    }
    if (c.ic == "sine") {
        // wavenumber, then (base, amplitude) per variable: base + amplitude sin(2 pi k x)
        need_params(c, 1 + 2 * std::size_t(m));
        return {[p, m](double x) {
                    const double s = std::sin(2.0 * std::numbers::pi * p[0] * x);
                    Vec w(m);
                    for (int k = 0; k < m; ++k)
                        w[k] = p[1 + 2 * k] + p[2 + 2 * k] * s;
                    return w;
                },
                {}};
    }
    throw ContractViolation("unknown initial condition '" + c.ic +
                            "' (gaussian, steps, erf, square-gauss, shu-osher, sine, quadrant)");
}

} // namespace

const std::vector<RunConfig>& presets() {
    static const std::vector<RunConfig> all = make_presets();
    return all;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const RunConfig& c : presets())
        names.push_back(c.name);
    return names;
}

RunConfig find_preset(const std::string& name) {
    for (const RunConfig& c : presets())
        if (c.name == name)
            return c;
    std::string list;
    for (const std::string& n : preset_names())
        list += (list.empty() ? "" : ", ") + n;
    throw ContractViolation("unknown preset '" + name + "'; valid presets: " + list);
}

std::shared_ptr<const Model> make_model(const RunConfig& c) {
    if (c.model == "burgers")
        return burgers();
    if (c.model == "quartic")
        return quartic();
    if (c.model == "linear-advection")
        return linear_advection(c.advection_speed, c.advection_speed_y);
    if (c.model == "p-system")
        return p_system(c.gamma);
    if (c.model == "isentropic-euler")
        return isentropic_euler(c.kappa, c.gamma);
    if (c.model == "euler")
        return full_euler(c.gamma);
    throw ContractViolation("unknown model '" + c.model +
                            "' (burgers, quartic, linear-advection, p-system, isentropic-euler, euler)");
}

std::vector<std::string> variable_names(const Model& model) {
    const std::string n = model.name();
    if (n == "p-system")
        return {"rho", "v"};
    if (n == "isentropic-euler")
        return {"rho", "m"};
    if (n == "euler")
        return {"rho", "m", "e"};
    return {"q"};
}

SolverConfig make_solver_config(const RunConfig& c) {
    SolverConfig s;
    s.cfl = c.cfl;
    s.t_end = c.t_end;
    s.limiter.kind = c.limiter;
    s.limiter.n_cutoff = c.n_cutoff;
    s.op = c.op;
    s.bc = c.bc;
    s.rk_alpha = c.rk_alpha;
    return s;
}

int cells_for(double length, double dx) {
    if (!(dx > 0.0))
        throw ContractViolation("dx must be positive");
    const double n = length / dx;
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 1e-6 * std::max(1.0, n)) {
        std::ostringstream os;
        os << "dx = " << dx << " does not divide the domain length " << length;
        throw ContractViolation(os.str());
    }
    return int(rounded);
}

Problem1D build_problem_1d(const RunConfig& c) {
    if (c.dimensions != 1)
        throw ContractViolation("build_problem_1d needs a one-dimensional configuration");
    Problem1D pr;
    pr.model = make_model(c);
    const int m = pr.model->size();
    const WorkingIC wic = working_ic(c, m);

    double lo = c.x_min - c.domain_padding, hi = c.x_max + c.domain_padding;
    const int n = cells_for(hi - lo, c.dx);
    const double dx = (hi - lo) / n;

    // Periodic data repeat with the domain length; a mismatch at the ends is one more jump.
    std::function<Vec(double)> w = wic.w;
    std::vector<double> jumps = wic.breaks;
    if (c.bc == BoundaryMode::Periodic) {
        const double lo0 = lo, period = hi - lo;
        w = [w0 = wic.w, lo0, period](double x) {
            if (x >= lo0 && x < lo0 + period)
                return w0(x);
            double y = std::fmod(x - lo0, period);
            if (y < 0.0)
                y += period;
            return w0(lo0 + y);
        };
        const Vec a = wic.w(lo), b = wic.w(std::nextafter(hi, lo));
        if ((a - b).cwiseAbs().maxCoeff() > 1e-6 * (1.0 + a.cwiseAbs().maxCoeff()))
            jumps.push_back(lo);
    }
    // Jumps go inside a cell, never onto an interface: shift the grid by half a cell if needed.
    for (double b : jumps) {
        const double s = (b - lo) / dx;
        if (std::abs(s - std::round(s)) < 1e-9 * std::max(1.0, std::abs(s))) {
            lo -= 0.5 * dx;
            hi -= 0.5 * dx;
            break;
        }
    }
    pr.grid = Grid1D(lo, hi, n);
    pr.solver = make_solver_config(c);
    validate(*pr.model, pr.solver);

    const SystemLaw* sys = pr.model->as_system();
    auto model = pr.model;
    if (sys)
        pr.ic.value = [model, sys, w](double x) { return sys->to_conservative(w(x)); };
    else
        pr.ic.value = w;
    // Plain pointwise sampling and cell Simpson; the jump sits at a cell centre.
    pr.ic.breakpoints = {};

    if (c.reference != "exact")
        return pr;

    const ScalarLaw* law = pr.model->as_scalar();
    const double length = hi - lo;
    if (c.model == "linear-advection") {
        auto ic = pr.ic;
        ic.breakpoints = wic.breaks;
        const double a = c.advection_speed;
        auto wrap = [lo, length](double x) {
            double y = std::fmod(x - lo, length);
            if (y < 0.0)
                y += length;
            return lo + y;
        };
        pr.exact = [ic, a, wrap](double x, double t) { return ic.value(wrap(x - a * t)); };
        pr.exact_mean = [ic, a, wrap, length](double xa, double xb, double t) {
            std::vector<double> shifted;
            for (double b : ic.breakpoints)
                for (int k = -2; k <= 2; ++k)
                    shifted.push_back(b + a * t + k * length);
            auto f = [&](double x) { return ic.value(wrap(x - a * t)); };
            return piecewise_simpson_mean(f, xa, xb, shifted);
        };
    } else if (c.model == "burgers" && c.ic == "gaussian") {
        if (c.bc != BoundaryMode::Periodic)
            throw ContractViolation("the piecewise linear Burgers reference needs periodic boundaries");
        const int nodes = std::max(c.reference_cells, 30 * pr.grid.n_cells);
        std::vector<double> xs(nodes), qs(nodes);
        for (int k = 0; k < nodes; ++k) {
            xs[k] = lo + k * (length / nodes);
            qs[k] = pr.ic.value(xs[k])[0];
        }
        auto pl = std::make_shared<PiecewiseLinearBurgers>(xs, qs, length);
        pr.exact = [pl](double x, double t) { return scalar_vec(pl->value(t, x)); };
        pr.exact_mean = [pl](double a, double b, double t) { return scalar_vec(pl->average(t, a, b)); };
    } else if (c.ic == "steps" && wic.breaks.size() == 1) {
        const double x0 = wic.breaks[0];
        const Vec wl = wic.w(x0 - 1.0), wr = wic.w(x0 + 1.0);
        const auto ic = pr.ic;
        if (law) {
            auto keep = pr.model;
            const double ql = wl[0], qr = wr[0];
            pr.exact = [keep, law, ql, qr, x0, ic](double x, double t) {
                if (t == 0.0)
                    return ic.value(x);
                return scalar_vec(exact_scalar_riemann(*law, ql, qr, (x - x0) / t));
            };
        } else if (c.model == "euler") {
            auto rs = std::make_shared<EulerRiemann>(wl, wr, c.gamma);
            const double g = c.gamma;
            pr.exact = [rs, x0, g, ic](double x, double t) {
                if (t == 0.0)
                    return ic.value(x);
                return euler_primitive_to_conservative(rs->sample((x - x0) / t), g);
            };
        } else {
            throw ContractViolation("no exact Riemann solution for model " + c.model);
        }
    } else {
        throw ContractViolation("preset '" + c.name + "' has no exact reference");
    }
    return pr;
}

Problem2D build_problem_2d(const RunConfig& c) {
    if (c.dimensions != 2)
        throw ContractViolation("build_problem_2d needs a two-dimensional configuration");
    Problem2D pr;
    auto model = make_model(c);
    pr.law = std::dynamic_pointer_cast<const ScalarLaw>(model);
    if (!pr.law)
        throw ContractViolation("two-dimensional runs need a scalar model");
    const double x0 = c.x_min - c.domain_padding, x1 = c.x_max + c.domain_padding;
    const double y0 = c.y_min - c.domain_padding, y1 = c.y_max + c.domain_padding;
    pr.grid = Grid2D(x0, x1, cells_for(x1 - x0, c.dx), y0, y1, cells_for(y1 - y0, c.dx));
    pr.solver = make_solver_config(c);
    validate(*pr.law, pr.solver);
    const std::vector<double>& p = c.ic_params;
    if (c.ic == "quadrant") {
        need_params(c, 6);
        // centre (x0, y0), then NE, NW, SW, SE
        pr.ic.value = [p](double x, double y) {
            const bool east = x >= p[0], north = y >= p[1];
            if (north)
                return east ? p[2] : p[3];
            return east ? p[5] : p[4];
        };
        pr.ic.x_breaks = {p[0]};
        pr.ic.y_breaks = {p[1]};
    } else if (c.ic == "gaussian") {
        need_params(c, 5);
        // centre (x, y), k, base, amplitude
        pr.ic.value = [p](double x, double y) {
            const double r2 = (x - p[0]) * (x - p[0]) + (y - p[1]) * (y - p[1]);
            return p[3] + p[4] * std::exp(-p[2] * r2);
        };
    } else {
        throw ContractViolation("unknown two-dimensional initial condition '" + c.ic + "' (quadrant, gaussian)");
    }
    return pr;
}

} // namespace af::harness
