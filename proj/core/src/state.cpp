#include "activeflux/state.hpp"

#include "activeflux/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace af {

namespace {

bool on_break(double x, const std::vector<double>& breaks, double scale) {
    for (double b : breaks)
        if (std::abs(x - b) <= 1e-12 * scale)
            return true;
    return false;
}

double below(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
double above(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

void require_finite(const Vec& v, double x) {
    if (!v.allFinite()) {
        std::ostringstream os;
        os << "initial data not finite at x = " << x;
        throw NumericalError(os.str());
    }
}

// Sub-interval endpoints of [a, b] cut at interior breakpoints.
std::vector<double> cuts(double a, double b, const std::vector<double>& breaks) {
    std::vector<double> c{a};
    const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
    for (double x : breaks)
        if (x > a + 1e-12 * scale && x < b - 1e-12 * scale)
            c.push_back(x);
    std::sort(c.begin() + 1, c.end());
    c.push_back(b);
    return c;
}

} // namespace

Vec piecewise_simpson_mean(const std::function<Vec(double)>& f, double a, double b,
                           const std::vector<double>& breakpoints) {
    const std::vector<double> c = cuts(a, b, breakpoints);
    const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
    // Increment form throughout, so a constant integrand comes back bit for bit.
    Vec first, sum;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const double l = c[k], r = c[k + 1];
        const Vec fl = f(on_break(l, breakpoints, scale) ? above(l) : l);
        const Vec fr = f(on_break(r, breakpoints, scale) ? below(r) : r);
        const Vec fm = f(0.5 * (l + r));
        const Vec mean = fm + ((fl - fm) + (fr - fm)) / 6.0;
        if (k == 0) {
            first = mean;
            sum = Vec::Zero(mean.size());
        } else {
            sum += (r - l) / (b - a) * (mean - first);
        }
    }
    return first + sum;
}

State1D init_state(const Grid1D& grid, const Model& model, const InitialCondition1D& ic, BoundaryMode bc) {
    State1D s;
    s.num_vars = model.size();
    s.outflow = Vec::Zero(s.num_vars);
    const double scale = std::max({1.0, std::abs(grid.x_min), std::abs(grid.x_max)});
    const SystemLaw* sys = model.as_system();

    const int np = grid.n_interfaces(bc);
    s.points.resize(np);
    for (int j = 0; j < np; ++j) {
        const double x = grid.interface(j);
        Vec v;
        if (on_break(x, ic.breakpoints, scale)) {
            const Vec l = ic.value(below(x)), r = ic.value(above(x));
            if (sys)
                v = sys->to_conservative(0.5 * (sys->to_working(l) + sys->to_working(r)));
            else
                v = 0.5 * (l + r);
        } else {
            v = ic.value(x);
        }
        require_finite(v, x);
        if (v.size() != s.num_vars)
            throw ContractViolation("initial data size does not match the model");
        s.points[j] = v;
    }
    s.averages.resize(grid.n_cells);
    for (int i = 0; i < grid.n_cells; ++i) {
        s.averages[i] = piecewise_simpson_mean(ic.value, grid.interface(i), grid.interface(i + 1), ic.breakpoints);
        require_finite(s.averages[i], grid.center(i));
    }
    if (sys) {
        for (const Vec& v : s.points)
            sys->to_working(v);
        for (const Vec& v : s.averages)
            sys->to_working(v);
    }
    return s;
}

State1D init_state(const Grid1D& grid, const Model& model, const std::function<Vec(double)>& q0, BoundaryMode bc) {
    return init_state(grid, model, InitialCondition1D{q0, {}}, bc);
}

State2D init_state(const Grid2D& g, const InitialCondition2D& ic, BoundaryMode bc) {
    const double sx = std::max({1.0, std::abs(g.x_min), std::abs(g.x_max())});
    const double sy = std::max({1.0, std::abs(g.y_min), std::abs(g.y_max())});
    auto sample = [&](double x, double y) {
        const bool bx = on_break(x, ic.x_breaks, sx), by = on_break(y, ic.y_breaks, sy);
        double v;
        if (bx && by)
            v = 0.25 * (ic.value(below(x), below(y)) + ic.value(above(x), below(y)) + ic.value(below(x), above(y)) +
                        ic.value(above(x), above(y)));
        else if (bx)
            v = 0.5 * (ic.value(below(x), y) + ic.value(above(x), y));
        else if (by)
            v = 0.5 * (ic.value(x, below(y)) + ic.value(x, above(y)));
        else
            v = ic.value(x, y);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "initial data not finite at (" << x << ", " << y << ")";
            throw NumericalError(os.str());
        }
        return v;
    };

    State2D s;
    s.corner.resize(g.n_corners(bc));
    s.xmid.resize(g.n_xmid(bc));
    s.ymid.resize(g.n_ymid(bc));
    for (int j = 0; j < g.py(bc); ++j) {
        const double y = g.y_min + j * g.dy;
        for (int i = 0; i < g.px(bc); ++i)
            s.corner[g.corner(i, j, bc)] = sample(g.x_min + i * g.dx, y);
        for (int i = 0; i < g.nx; ++i)
            s.xmid[g.xmid(i, j, bc)] = sample(g.x_min + (i + 0.5) * g.dx, y);
    }
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.px(bc); ++i)
            s.ymid[g.ymid(i, j, bc)] = sample(g.x_min + i * g.dx, g.y_min + (j + 0.5) * g.dy);

    s.averages.resize(std::size_t(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j) {
        const double y0 = g.y_min + j * g.dy, y1 = y0 + g.dy;
        const std::vector<double> cy = cuts(y0, y1, ic.y_breaks);
        for (int i = 0; i < g.nx; ++i) {
            const double x0 = g.x_min + i * g.dx, x1 = x0 + g.dx;
            const std::vector<double> cx = cuts(x0, x1, ic.x_breaks);
            double first = 0.0, sum = 0.0;
            bool have_first = false;
            for (std::size_t a = 0; a + 1 < cx.size(); ++a) {
                const double xl = cx[a], xr = cx[a + 1];
                const double xs[3] = {on_break(xl, ic.x_breaks, sx) ? above(xl) : xl, 0.5 * (xl + xr),
                                      on_break(xr, ic.x_breaks, sx) ? below(xr) : xr};
                for (std::size_t b = 0; b + 1 < cy.size(); ++b) {
                    const double yl = cy[b], yr = cy[b + 1];
                    const double ys[3] = {on_break(yl, ic.y_breaks, sy) ? above(yl) : yl, 0.5 * (yl + yr),
                                          on_break(yr, ic.y_breaks, sy) ? below(yr) : yr};
                    const double w[3] = {1.0 / 6.0, 4.0 / 6.0, 1.0 / 6.0};
                    const double mid = ic.value(xs[1], ys[1]);
                    double part = 0.0;
                    for (int p = 0; p < 3; ++p)
                        for (int q = 0; q < 3; ++q)
                            part += w[p] * w[q] * (ic.value(xs[p], ys[q]) - mid);
                    const double mean = mid + part;
                    if (!have_first) {
                        first = mean;
                        have_first = true;
                    } else {
                        sum += (mean - first) * ((xr - xl) * (yr - yl) / (g.dx * g.dy));
                    }
                }
            }
            s.averages[g.cell(i, j)] = first + sum;
        }
    }
    return s;
}

} // namespace af
