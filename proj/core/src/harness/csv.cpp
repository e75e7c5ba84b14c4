#include "activeflux/harness/csv.hpp"

namespace af::harness {

namespace {

void header(std::ostream& os, std::initializer_list<std::string> first, const std::vector<std::string>& vars) {
    bool comma = false;
    for (const std::string& h : first) {
        os << (comma ? "," : "") << h;
        comma = true;
    }
    for (const std::string& v : vars)
        os << ',' << v;
    os << '\n';
}

void row(std::ostream& os, double t, double x, const Vec& q) {
    os << format_double(t) << ',' << format_double(x);
    for (int k = 0; k < q.size(); ++k)
        os << ',' << format_double(q[k]);
    os << '\n';
}

// Values never contain commas except ic_params, which gets quoted.
std::string field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

void meta_head(std::ostream& os, const RunConfig& cfg, const MetaRows& facts) {
    os << "section,key,value\n";
    for (const auto& [k, v] : config_entries(cfg))
        os << "config," << k << ',' << field(v) << '\n';
    for (const auto& [k, v] : facts)
        os << "run," << k << ',' << field(v) << '\n';
}

} // namespace

void write_solution_csv(std::ostream& os, const State1D& state, const Grid1D& grid,
                        const std::vector<std::string>& vars) {
    header(os, {"t", "x_center"}, vars);
    for (int i = 0; i < grid.n_cells; ++i)
        row(os, state.t, grid.center(i), state.averages[i]);
}

void write_points_csv(std::ostream& os, const State1D& state, const Grid1D& grid, BoundaryMode bc,
                      const std::vector<std::string>& vars) {
    header(os, {"t", "x_interface"}, vars);
    for (int j = 0; j < grid.n_interfaces(bc); ++j)
        row(os, state.t, grid.interface(j), state.points[j]);
}

void write_solution_csv(std::ostream& os, const State2D& state, const Grid2D& grid) {
    os << "x,y,average\n";
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            os << format_double(grid.x_min + (i + 0.5) * grid.dx) << ','
               << format_double(grid.y_min + (j + 0.5) * grid.dy) << ','
               << format_double(state.averages[grid.cell(i, j)]) << '\n';
}

void write_meta_csv(std::ostream& os, const RunConfig& cfg, const MetaRows& facts,
                    const std::vector<StepRecord>& log) {
    meta_head(os, cfg, facts);
    for (std::size_t n = 0; n < log.size(); ++n) {
        const StepRecord& r = log[n];
        const std::string s = "step:" + std::to_string(n + 1);
        os << s << ",t," << format_double(r.t) << '\n';
        os << s << ",dt," << format_double(r.dt) << '\n';
        for (int k = 0; k < r.avg_min.size(); ++k) {
            const std::string v = std::to_string(k);
            os << s << ",avg_min_" << v << ',' << format_double(r.avg_min[k]) << '\n';
            os << s << ",avg_max_" << v << ',' << format_double(r.avg_max[k]) << '\n';
            os << s << ",point_min_" << v << ',' << format_double(r.point_min[k]) << '\n';
            os << s << ",point_max_" << v << ',' << format_double(r.point_max[k]) << '\n';
        }
    }
}

void write_meta_csv(std::ostream& os, const RunConfig& cfg, const MetaRows& facts,
                    const std::vector<StepRecord2D>& log) {
    meta_head(os, cfg, facts);
    for (std::size_t n = 0; n < log.size(); ++n) {
        const StepRecord2D& r = log[n];
        const std::string s = "step:" + std::to_string(n + 1);
        os << s << ",t," << format_double(r.t) << '\n';
        os << s << ",dt," << format_double(r.dt) << '\n';
        os << s << ",avg_min_0," << format_double(r.avg_min) << '\n';
        os << s << ",avg_max_0," << format_double(r.avg_max) << '\n';
    }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << "operator,variable,dx,cells,l1_avg,l1_point,eoc_avg,eoc_point\n";
    for (const ConvergenceRow& r : rows)
        os << r.op << ',' << r.variable << ',' << format_double(r.dx) << ',' << r.cells << ','
           << format_double(r.err_avg) << ',' << format_double(r.err_point) << ',' << format_double(r.eoc_avg)
           << ',' << format_double(r.eoc_point) << '\n';
}

void write_riemann_csv(std::ostream& os, const std::vector<RiemannRow>& rows) {
    os << "q_left,q_right,wave,l1,exact_speed,measured_speed,pass\n";
    for (const RiemannRow& r : rows)
        os << format_double(r.q_left) << ',' << format_double(r.q_right) << ',' << r.wave << ','
           << format_double(r.l1) << ',' << format_double(r.exact_speed) << ','
           << format_double(r.measured_speed) << ',' << (r.pass ? 1 : 0) << '\n';
}

} // namespace af::harness
