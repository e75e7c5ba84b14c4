#include "activeflux/harness/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace af;
using namespace af::harness;

namespace {

struct Overrides {
    std::string preset, config, out = "out";
    std::optional<double> dx, cfl, t_end;
    std::optional<std::string> limiter, op, bc;
};

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--preset", o.preset, "Named problem preset (see list-presets)");
    app->add_option("--config", o.config, "key = value configuration file, applied over the preset");
    app->add_option("--dx", o.dx, "Grid spacing");
    app->add_option("--cfl", o.cfl, "CFL number");
    app->add_option("--t-end", o.t_end, "Final time");
    app->add_option("--limiter", o.limiter, "none, power or sym-power");
    app->add_option("--operator", o.op, "simple, modified, projector, rk2, rk2-fixed or diagonal");
    app->add_option("--bc", o.bc, "periodic or extrapolate");
    app->add_option("--out", o.out, "Output directory");
}

RunConfig resolve(const Overrides& o) {
    if (o.preset.empty() && o.config.empty())
        throw ContractViolation("give --preset or --config");
    RunConfig c = o.preset.empty() ? RunConfig{} : find_preset(o.preset);
    if (!o.config.empty())
        c = parse_config(
            [&] {
                std::ifstream f(o.config);
                if (!f)
                    throw ContractViolation("cannot read config file " + o.config);
                std::stringstream ss;
                ss << f.rdbuf();
                return ss.str();
            }(),
            c);
    if (o.dx)
        c.dx = *o.dx;
    if (o.cfl)
        c.cfl = *o.cfl;
    if (o.t_end)
        c.t_end = *o.t_end;
    if (o.limiter)
        c.limiter = parse_limiter(*o.limiter);
    if (o.op)
        c.op = parse_operator(*o.op);
    if (o.bc)
        c.bc = parse_bc(*o.bc);
    return c;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(std::stod(item));
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active Flux solver for one- and two-dimensional conservation laws"};
    app.require_subcommand(1);

    Overrides run_o;
    auto* run_cmd = app.add_subcommand("run", "Run one problem and write CSV output");
    add_common(run_cmd, run_o);

    Overrides conv_o;
    std::string dx_list, ops_list;
    auto* conv_cmd = app.add_subcommand("converge", "Grid refinement study against the preset reference");
    add_common(conv_cmd, conv_o);
    conv_cmd->add_option("--dx-list", dx_list, "Comma-separated grid spacings, coarse to fine");
    conv_cmd->add_option("--operators", ops_list, "Comma-separated operators (default: the preset's)");

    Overrides rs_o;
    std::string rs_model = "burgers";
    auto* rs_cmd = app.add_subcommand("riemann-suite", "Battery of scalar Riemann problems");
    add_common(rs_cmd, rs_o);
    rs_cmd->add_option("--model", rs_model, "burgers or quartic");

    auto* list_cmd = app.add_subcommand("list-presets", "Print the preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list_cmd) {
            for (const RunConfig& c : presets())
                std::cout << c.name << "  " << c.description << (c.calibrated ? "  [figure-calibrated]" : "")
                          << '\n';
            return 0;
        }
        if (*run_cmd) {
            run_to_directory(resolve(run_o), run_o.out, std::cout);
            return 0;
        }
        if (*conv_cmd) {
            const RunConfig c = resolve(conv_o);
            const std::vector<double> dxs = dx_list.empty() ? default_convergence_dxs(c) : parse_list(dx_list);
            std::vector<Operator> ops;
            std::stringstream ss(ops_list);
            std::string item;
            while (std::getline(ss, item, ','))
                ops.push_back(parse_operator(item));
            if (ops.empty())
                ops.push_back(c.op);
            const auto rows = converge(c, dxs, ops, &std::cout);
            std::filesystem::create_directories(conv_o.out);
            std::ofstream f(std::filesystem::path(conv_o.out) / "convergence.csv", std::ios::binary);
            write_convergence_csv(f, rows);
            write_convergence_csv(std::cout, rows);
            return 0;
        }
        if (*rs_cmd) {
            if (rs_o.preset.empty() && rs_o.config.empty())
                rs_o.preset = rs_model == "quartic" ? "quartic-riemann" : "burgers-riemann";
            const RunConfig c = resolve(rs_o);
            const auto rows = riemann_suite(c, default_battery(c.model), &std::cout);
            std::filesystem::create_directories(rs_o.out);
            std::ofstream f(std::filesystem::path(rs_o.out) / "riemann.csv", std::ios::binary);
            write_riemann_csv(f, rows);
            return 0;
        }
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical abort: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
