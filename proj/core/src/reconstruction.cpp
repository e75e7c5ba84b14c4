#include "activeflux/reconstruction.hpp"

#include "activeflux/state.hpp"

#include <algorithm>
#include <cmath>

namespace af {

double CellReconstruction1D::eval_power(double u) const {
    const double ul = reflected ? 1.0 - u : u;
    if (mode == ReconMode::PowerLaw) {
        const double w = std::pow(ul, c);
        return a * (1.0 - w) + b * w;
    }
    const double w = std::pow(1.0 - ul, 1.0 / c);
    return b * (1.0 - w) + a * w;
}

CellReconstruction1D build_parabola(double q_bar, double q_left, double q_right) {
    CellReconstruction1D r;
    r.mode = ReconMode::Parabola;
    r.a = q_left;
    r.b = q_right;
    // 6 qbar - 3 (q_L + q_R), grouped so that constant data give exactly zero
    r.c = 3.0 * ((q_bar - q_left) + (q_bar - q_right));
    return r;
}

CellRegion classify_cell(double q_bar, double q_left, double q_right) {
    const double lo = std::min(q_left, q_right);
    const double hi = std::max(q_left, q_right);
    if (q_bar < lo || q_bar > hi)
        return CellRegion::A_Overshoot;
    if (q_left == q_right)
        return CellRegion::C_Monotone;
    const double r = std::abs(q_right - q_left) / 3.0;
    if (q_bar >= lo + r && q_bar <= hi - r)
        return CellRegion::C_Monotone;
    return CellRegion::B_Limitable;
}

double power_law_exponent(double q_bar, double q_left, double q_right) {
    if (classify_cell(q_bar, q_left, q_right) != CellRegion::B_Limitable)
        throw ContractViolation("power_law_exponent: average is not in the limitable band");
    const double lo = std::min(q_left, q_right);
    const double hi = std::max(q_left, q_right);
    return (hi - q_bar) / (q_bar - lo);
}

CellReconstruction1D reconstruct_cell(double q_bar, double q_left, double q_right, const LimiterMode& limiter) {
    if (limiter.kind == LimiterMode::None || classify_cell(q_bar, q_left, q_right) != CellRegion::B_Limitable)
        return build_parabola(q_bar, q_left, q_right);
    const double lo = std::min(q_left, q_right);
    const double hi = std::max(q_left, q_right);
    const double n = (hi - q_bar) / (q_bar - lo);
    // q_bar on an endpoint gives n = 0 or inf, which the cutoff also catches.
    if (!(std::max(n, 1.0 / n) <= limiter.n_cutoff))
        return build_parabola(q_bar, q_left, q_right);
    CellReconstruction1D r;
    r.a = lo;
    r.b = hi;
    r.c = n;
    r.reflected = q_left > q_right;
    r.mode = ReconMode::PowerLaw;
    if (limiter.kind == LimiterMode::SymmetrizedPowerLaw && n < 1.0)
        r.mode = ReconMode::PowerLawMirrored;
    return r;
}

namespace {
constexpr double kWeight[3] = {1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0};
}

double Biquadratic::mean() const {
    double s = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            s += kWeight[a] * kWeight[b] * d[a][b];
    return mean_value + s;
}

Biquadratic build_biquadratic_2d(double q_bar, const std::array<double, 8>& bnd) {
    static constexpr int ia[8] = {0, 1, 2, 2, 2, 1, 0, 0};
    static constexpr int ib[8] = {0, 0, 0, 1, 2, 2, 2, 1};
    Biquadratic r;
    r.mean_value = q_bar;
    double rest = 0.0;
    for (int k = 0; k < 8; ++k) {
        r.d[ia[k]][ib[k]] = bnd[k] - q_bar;
        rest += kWeight[ia[k]] * kWeight[ib[k]] * r.d[ia[k]][ib[k]];
    }
    r.d[1][1] = -rest / (kWeight[1] * kWeight[1]);
    return r;
}

Reconstruction1D::Reconstruction1D(const State1D& state, const Grid1D& grid, BoundaryMode bc,
                                   const LimiterMode& limiter)
    : grid_(grid), bc_(bc), m_(state.num_vars) {
    cells_.resize(std::size_t(grid.n_cells) * m_);
    for (int i = 0; i < grid.n_cells; ++i) {
        const Vec& ql = state.points[grid.left_point(i)];
        const Vec& qr = state.points[grid.right_point(i, bc)];
        const Vec& qa = state.averages[i];
        for (int k = 0; k < m_; ++k)
            cells_[std::size_t(i) * m_ + k] = reconstruct_cell(qa[k], ql[k], qr[k], limiter);
    }
}

Reconstruction2D::Reconstruction2D(const State2D& s, const Grid2D& g, BoundaryMode bc) : grid_(g), bc_(bc) {
    cells_.resize(std::size_t(g.nx) * g.ny);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const std::array<double, 8> bnd = {
                s.corner[g.corner(i, j, bc)],     s.xmid[g.xmid(i, j, bc)],
                s.corner[g.corner(i + 1, j, bc)], s.ymid[g.ymid(i + 1, j, bc)],
                s.corner[g.corner(i + 1, j + 1, bc)], s.xmid[g.xmid(i, j + 1, bc)],
                s.corner[g.corner(i, j + 1, bc)], s.ymid[g.ymid(i, j, bc)],
            };
            cells_[g.cell(i, j)] = build_biquadratic_2d(s.averages[g.cell(i, j)], bnd);
        }
    }
}

Vec eval_reconstruction(const State1D& state, const Grid1D& grid, BoundaryMode bc, double x,
                        const LimiterMode& limiter) {
    const CellLocation loc = locate_cell(grid, x, bc);
    const Vec& ql = state.points[grid.left_point(loc.index)];
    const Vec& qr = state.points[grid.right_point(loc.index, bc)];
    const Vec& qa = state.averages[loc.index];
    Vec r(state.num_vars);
    for (int k = 0; k < state.num_vars; ++k)
        r[k] = reconstruct_cell(qa[k], ql[k], qr[k], limiter)(loc.local);
    return r;
}

} // namespace af
