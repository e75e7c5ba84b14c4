#include "activeflux/grid.hpp"

#include "activeflux/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace af {

Grid1D::Grid1D(double lo, double hi, int n) : x_min(lo), x_max(hi), n_cells(n) {
    if (n < 3)
        throw ContractViolation("Grid1D needs at least 3 cells, got " + std::to_string(n));
    if (!(hi > lo))
        throw ContractViolation("Grid1D needs x_max > x_min");
    dx = (hi - lo) / n;
}

Grid2D::Grid2D(double x0, double x1, int nx_, double y0, double y1, int ny_)
    : x_min(x0), y_min(y0), nx(nx_), ny(ny_) {
    if (nx < 3 || ny < 3)
        throw ContractViolation("Grid2D needs at least 3 cells per direction");
    if (!(x1 > x0) || !(y1 > y0))
        throw ContractViolation("Grid2D needs a positive extent");
    dx = (x1 - x0) / nx;
    dy = (y1 - y0) / ny;
}


namespace detail {

void throw_non_finite() { throw NumericalError("locate_cell: non-finite coordinate"); }

} // namespace detail

} // namespace af
