#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

namespace af {

enum class BoundaryMode { Periodic, Extrapolate };

struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_cells = 0;
    double dx = 0.0;

    Grid1D() = default;
    Grid1D(double lo, double hi, int n);

    double center(int i) const { return x_min + (i + 0.5) * dx; }
    double interface(int j) const { return x_min + j * dx; }
    double length() const { return x_max - x_min; }
    int n_interfaces(BoundaryMode bc) const { return bc == BoundaryMode::Periodic ? n_cells : n_cells + 1; }
    // Interface to the left/right of cell i, in storage indices.
    int left_point(int i) const { return i; }
    int right_point(int i, BoundaryMode bc) const {
        return (bc == BoundaryMode::Periodic && i == n_cells - 1) ? 0 : i + 1;
    }
};

// Position inside a cell: local is (x - x_left)/dx in [0, 1]; x is the
// coordinate after periodic wrapping or clamping.
struct CellLocation {
    int index;
    double local;
    double x;
};

namespace detail {

struct AxisHit {
    int index;
    double local;
    double x;
};

[[noreturn]] void throw_non_finite();

// Inline because every reconstruction lookup goes through here.
inline AxisHit locate_axis(double x_min, double dx, int n, double x, BoundaryMode bc) {
    if (!std::isfinite(x))
        throw_non_finite();
    double xi = (x - x_min) / dx;
    if (bc == BoundaryMode::Periodic) {
        xi = std::fmod(xi, double(n));
        if (xi < 0.0)
            xi += n;
    } else {
        xi = xi < 0.0 ? 0.0 : (xi > n ? double(n) : xi);
    }
    // Coordinates within a few ulp of an interface count as on it, so that
    // the stored point value is returned exactly. xi >= 0 from here on.
    const double nearest = double(static_cast<long>(xi + 0.5));
    if (std::abs(xi - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * (xi > 1.0 ? xi : 1.0))
        xi = nearest;
    const int fl = static_cast<int>(xi);
    int i = double(fl) == xi ? fl - 1 : fl;
    double u;
    if (i < 0) {
        // xi == 0: left edge. Periodic maps it to the right end of the last cell.
        if (bc == BoundaryMode::Periodic) {
            i = n - 1;
            u = 1.0;
        } else {
            i = 0;
            u = 0.0;
        }
    } else {
        if (i >= n)
            i = n - 1;
        u = xi - i;
    }
    return {i, u, x_min + xi * dx};
}

} // namespace detail

inline CellLocation locate_cell(const Grid1D& grid, double x, BoundaryMode bc) {
    const detail::AxisHit h = detail::locate_axis(grid.x_min, grid.dx, grid.n_cells, x, bc);
    return {h.index, h.local, h.x};
}

// Point values of a 2D cell live at the corners and edge midpoints.
// "xmid" are midpoints of edges parallel to x (south/north edges),
// "ymid" are midpoints of edges parallel to y (west/east edges).
// With periodic boundaries the last row/column of points coincides with the
// first and is not stored.
struct Grid2D {
    double x_min = 0.0, y_min = 0.0;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    Grid2D() = default;
    Grid2D(double x0, double x1, int nx_, double y0, double y1, int ny_);

    double x_max() const { return x_min + nx * dx; }
    double y_max() const { return y_min + ny * dy; }

    int px(BoundaryMode bc) const { return bc == BoundaryMode::Periodic ? nx : nx + 1; }
    int py(BoundaryMode bc) const { return bc == BoundaryMode::Periodic ? ny : ny + 1; }

    std::size_t n_corners(BoundaryMode bc) const { return std::size_t(px(bc)) * py(bc); }
    std::size_t n_xmid(BoundaryMode bc) const { return std::size_t(nx) * py(bc); }
    std::size_t n_ymid(BoundaryMode bc) const { return std::size_t(px(bc)) * ny; }

    // (i, j) counted in point indices; i may equal nx only without periodic wrap.
    std::size_t corner(int i, int j, BoundaryMode bc) const {
        return std::size_t(wrap(i, nx, bc)) + std::size_t(px(bc)) * wrap(j, ny, bc);
    }
    std::size_t xmid(int i, int j, BoundaryMode bc) const {
        return std::size_t(i) + std::size_t(nx) * wrap(j, ny, bc);
    }
    std::size_t ymid(int i, int j, BoundaryMode bc) const {
        return std::size_t(wrap(i, nx, bc)) + std::size_t(px(bc)) * j;
    }
    std::size_t cell(int i, int j) const { return std::size_t(i) + std::size_t(nx) * j; }

private:
    static int wrap(int k, int n, BoundaryMode bc) { return (bc == BoundaryMode::Periodic && k == n) ? 0 : k; }
};

struct CellLocation2D {
    int i, j;
    double u, v;
    double x, y;
};

inline CellLocation2D locate_cell(const Grid2D& grid, double x, double y, BoundaryMode bc) {
    const detail::AxisHit hx = detail::locate_axis(grid.x_min, grid.dx, grid.nx, x, bc);
    const detail::AxisHit hy = detail::locate_axis(grid.y_min, grid.dy, grid.ny, y, bc);
    return {hx.index, hy.index, hx.local, hy.local, hx.x, hy.x};
}

} // namespace af
