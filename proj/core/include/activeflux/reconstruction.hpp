#pragma once

#include "activeflux/grid.hpp"
#include "activeflux/types.hpp"

#include <array>
#include <vector>

namespace af {

enum class ReconMode { Parabola, PowerLaw, PowerLawMirrored };

// One conserved component on one cell, evaluated in the local coordinate
// u = (x - x_left)/dx in [0, 1].
//
// Parabola is stored as q_L (1-u) + q_R u + K u (1-u) with K = 6 qbar - 3 (q_L + q_R).
// Power laws are stored in increasing orientation: lo/hi are the smaller/larger
// endpoint value and u is reflected when the larger value sits on the left.
struct CellReconstruction1D {
    ReconMode mode = ReconMode::Parabola;
    double a = 0.0; // q_L, or lo
    double b = 0.0; // q_R, or hi
    double c = 0.0; // K, or N
    bool reflected = false;

    double operator()(double u) const {
        if (mode == ReconMode::Parabola) {
            // Anchored at the nearer endpoint so that u = 0, u = 1 and constant
            // data are reproduced bit for bit.
            const double bump = c * u * (1.0 - u);
            return u <= 0.5 ? a + (b - a) * u + bump : b - (b - a) * (1.0 - u) + bump;
        }
        return eval_power(u);
    }
    double at_s(double s) const { return (*this)(s + 0.5); }

    // Coefficients of c2 s^2 + c1 s + c0 with s = u - 1/2 (parabola only).
    double c2() const { return -c; }
    double c1() const { return b - a; }
    double c0() const { return 0.5 * (a + b) + 0.25 * c; }
    double exponent() const { return c; }

private:
    double eval_power(double u) const;
};

struct LimiterMode {
    enum Kind { None, PowerLaw, SymmetrizedPowerLaw };
    Kind kind = None;
    double n_cutoff = 50.0;
};

enum class CellRegion { A_Overshoot, B_Limitable, C_Monotone };

CellReconstruction1D build_parabola(double q_bar, double q_left, double q_right);
CellRegion classify_cell(double q_bar, double q_left, double q_right);
// Exponent of the power law in increasing orientation: (hi - qbar)/(qbar - lo).
double power_law_exponent(double q_bar, double q_left, double q_right);
CellReconstruction1D reconstruct_cell(double q_bar, double q_left, double q_right, const LimiterMode& limiter);

// Biquadratic on a cell in local coordinates (u, v) in [0,1]^2 in the
// Lagrange basis on {0, 1/2, 1}^2. d[a][b] holds nodal values minus the cell
// mean (a along x, b along y); the centre entry is the coefficient fixed by
// the mean rather than a nodal value.
struct Biquadratic {
    double mean_value = 0.0;
    std::array<std::array<double, 3>, 3> d{};

    double operator()(double u, double v) const {
        const double lu[3] = {(2.0 * u - 1.0) * (u - 1.0), 4.0 * u * (1.0 - u), u * (2.0 * u - 1.0)};
        const double lv[3] = {(2.0 * v - 1.0) * (v - 1.0), 4.0 * v * (1.0 - v), v * (2.0 * v - 1.0)};
        double r = 0.0;
        for (int a = 0; a < 3; ++a)
            r += lu[a] * (lv[0] * d[a][0] + lv[1] * d[a][1] + lv[2] * d[a][2]);
        return mean_value + r;
    }
    double coefficient(int a, int b) const { return mean_value + d[a][b]; }
    // Exact integral mean of the polynomial.
    double mean() const;
};

// Boundary values ordered SW, S, SE, E, NE, N, NW, W.
Biquadratic build_biquadratic_2d(double q_bar, const std::array<double, 8>& boundary);

struct State1D;
struct State2D;

// Reconstructions of all cells for all components, built once per step.
class Reconstruction1D {
public:
    Reconstruction1D(const State1D& state, const Grid1D& grid, BoundaryMode bc, const LimiterMode& limiter);

    const Grid1D& grid() const { return grid_; }
    BoundaryMode bc() const { return bc_; }
    int num_vars() const { return m_; }
    const CellReconstruction1D& cell(int i, int k) const { return cells_[std::size_t(i) * m_ + k]; }

    Vec operator()(double x) const {
        const CellLocation loc = locate_cell(grid_, x, bc_);
        Vec r(m_);
        for (int k = 0; k < m_; ++k)
            r[k] = cell(loc.index, k)(loc.local);
        return r;
    }
    double scalar(double x) const {
        const CellLocation loc = locate_cell(grid_, x, bc_);
        return cells_[loc.index](loc.local);
    }

private:
    Grid1D grid_;
    BoundaryMode bc_;
    int m_;
    std::vector<CellReconstruction1D> cells_;
};

class Reconstruction2D {
public:
    Reconstruction2D(const State2D& state, const Grid2D& grid, BoundaryMode bc);

    const Biquadratic& cell(int i, int j) const { return cells_[grid_.cell(i, j)]; }
    double operator()(double x, double y) const {
        const CellLocation2D loc = locate_cell(grid_, x, y, bc_);
        return cells_[grid_.cell(loc.i, loc.j)](loc.u, loc.v);
    }

private:
    Grid2D grid_;
    BoundaryMode bc_;
    std::vector<Biquadratic> cells_;
};

// Reconstruction of a state evaluated at x; at an interface the left cell is used.
Vec eval_reconstruction(const State1D& state, const Grid1D& grid, BoundaryMode bc, double x,
                        const LimiterMode& limiter = {});

} // namespace af
