#include "activeflux/harness/config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace af::harness {

std::string limiter_name(LimiterMode::Kind k) {
    switch (k) {
    case LimiterMode::None: return "none";
    case LimiterMode::PowerLaw: return "power";
    case LimiterMode::SymmetrizedPowerLaw: return "sym-power";
    }
    return "?";
}

LimiterMode::Kind parse_limiter(const std::string& s) {
    if (s == "none")
        return LimiterMode::None;
    if (s == "power")
        return LimiterMode::PowerLaw;
    if (s == "sym-power")
        return LimiterMode::SymmetrizedPowerLaw;
    throw ContractViolation("unknown limiter '" + s + "' (none, power, sym-power)");
}

std::string bc_name(BoundaryMode bc) { return bc == BoundaryMode::Periodic ? "periodic" : "extrapolate"; }

BoundaryMode parse_bc(const std::string& s) {
    if (s == "periodic")
        return BoundaryMode::Periodic;
    if (s == "extrapolate")
        return BoundaryMode::Extrapolate;
    throw ContractViolation("unknown boundary mode '" + s + "' (periodic, extrapolate)");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double to_double(const std::string& key, const std::string& s) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE)
        throw ContractViolation("config key '" + key + "': not a number: '" + s + "'");
    return v;
}

int to_int(const std::string& key, const std::string& s) {
    const double v = to_double(key, s);
    if (v != double(int(v)))
        throw ContractViolation("config key '" + key + "': not an integer: '" + s + "'");
    return int(v);
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
    std::string params;
    for (std::size_t k = 0; k < c.ic_params.size(); ++k)
        params += (k ? "," : "") + num(c.ic_params[k]);
    return {
        {"name", c.name},
        {"description", c.description},
        {"dimensions", std::to_string(c.dimensions)},
        {"model", c.model},
        {"gamma", num(c.gamma)},
        {"kappa", num(c.kappa)},
        {"advection_speed", num(c.advection_speed)},
        {"advection_speed_y", num(c.advection_speed_y)},
        {"ic", c.ic},
        {"ic_params", params},
        {"x_min", num(c.x_min)},
        {"x_max", num(c.x_max)},
        {"y_min", num(c.y_min)},
        {"y_max", num(c.y_max)},
        {"dx", num(c.dx)},
        {"domain_padding", num(c.domain_padding)},
        {"cfl", num(c.cfl)},
        {"t_end", num(c.t_end)},
        {"limiter", limiter_name(c.limiter)},
        {"n_cutoff", num(c.n_cutoff)},
        {"operator", operator_name(c.op)},
        {"bc", bc_name(c.bc)},
        {"rk_alpha", num(c.rk_alpha)},
        {"reference", c.reference},
        {"reference_cells", std::to_string(c.reference_cells)},
        {"reference_operator", operator_name(c.reference_operator)},
        {"calibrated", c.calibrated ? "true" : "false"},
    };
}

std::string emit_config(const RunConfig& cfg) {
    std::ostringstream os;
    for (const auto& [k, v] : config_entries(cfg))
        os << k << " = " << v << "\n";
    return os.str();
}

RunConfig parse_config(const std::string& text, RunConfig c) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ContractViolation("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "name") c.name = val;
        else if (key == "description") c.description = val;
        else if (key == "dimensions") c.dimensions = to_int(key, val);
        else if (key == "model") c.model = val;
        else if (key == "gamma") c.gamma = to_double(key, val);
        else if (key == "kappa") c.kappa = to_double(key, val);
        else if (key == "advection_speed") c.advection_speed = to_double(key, val);
        else if (key == "advection_speed_y") c.advection_speed_y = to_double(key, val);
        else if (key == "ic") c.ic = val;
        else if (key == "ic_params") {
            c.ic_params.clear();
            std::istringstream ps(val);
            std::string item;
            while (std::getline(ps, item, ','))
                if (!trim(item).empty())
                    c.ic_params.push_back(to_double(key, trim(item)));
        }
        else if (key == "x_min") c.x_min = to_double(key, val);
        else if (key == "x_max") c.x_max = to_double(key, val);
        else if (key == "y_min") c.y_min = to_double(key, val);
        else if (key == "y_max") c.y_max = to_double(key, val);
        else if (key == "dx") c.dx = to_double(key, val);
        else if (key == "domain_padding") c.domain_padding = to_double(key, val);
        else if (key == "cfl") c.cfl = to_double(key, val);
        else if (key == "t_end") c.t_end = to_double(key, val);
        else if (key == "limiter") c.limiter = parse_limiter(val);
        else if (key == "n_cutoff") c.n_cutoff = to_double(key, val);
        else if (key == "operator") c.op = parse_operator(val);
        else if (key == "bc") c.bc = parse_bc(val);
        else if (key == "rk_alpha") c.rk_alpha = to_double(key, val);
        else if (key == "reference") {
            if (val != "exact" && val != "self" && val != "none")
                throw ContractViolation("config key 'reference': expected exact, self or none");
            c.reference = val;
        }
        else if (key == "reference_cells") c.reference_cells = to_int(key, val);
        else if (key == "reference_operator") c.reference_operator = parse_operator(val);
        else if (key == "calibrated") {
            if (val != "true" && val != "false")
                throw ContractViolation("config key 'calibrated': expected true or false");
            c.calibrated = val == "true";
        }
        else throw ContractViolation("unknown config key '" + key + "'");
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ContractViolation("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace af::harness
