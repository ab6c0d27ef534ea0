#include "annular/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"

namespace annular {

namespace {

using nlohmann::json;

std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const char* ctx) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigError("parse_config: unknown key " + std::string(ctx) + it.key());
    }
}

const json& need(const json& j, const char* key, const char* ctx) {
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError("parse_config: missing " + std::string(ctx) + key);
    return *it;
}

double need_num(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_number())
        throw ConfigError("parse_config: " + std::string(ctx) + key + " must be a number");
    return v.get<double>();
}

std::string need_str(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_string())
        throw ConfigError("parse_config: " + std::string(ctx) + key + " must be a string");
    return v.get<std::string>();
}

const json& need_obj(const json& j, const char* key, const char* ctx) {
    const json& v = need(j, key, ctx);
    if (!v.is_object())
        throw ConfigError("parse_config: " + std::string(ctx) + key + " must be an object");
    return v;
}

}  // namespace

const char* to_string(Problem p) {
    switch (p) {
        case Problem::OutwardSmooth: return "I";
        case Problem::InwardSmooth: return "II";
        case Problem::OutwardShock: return "III";
        case Problem::InwardShock: return "IV";
        case Problem::Circulatory: return "circulatory";
    }
    return "unknown";
}

Problem problem_from_string(const std::string& s) {
    if (s == "I") return Problem::OutwardSmooth;
    if (s == "II") return Problem::InwardSmooth;
    if (s == "III") return Problem::OutwardShock;
    if (s == "IV") return Problem::InwardShock;
    if (s == "circulatory") return Problem::Circulatory;
    throw ConfigError("problem_from_string: unknown problem " + s);
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(single_line(std::string("parse_config: ") + e.what()));
    }
    if (!j.is_object()) throw ConfigError("parse_config: top level must be an object");
    check_keys(j,
               {"gamma", "problem", "annulus", "boundary", "exit_pressure", "samples", "output",
                "tolerances"},
               "");

    RunConfig cfg;
    cfg.gas.gamma = need_num(j, "gamma", "");
    cfg.problem = problem_from_string(need_str(j, "problem", ""));

    const json& an = need_obj(j, "annulus", "");
    check_keys(an, {"r_inner", "r_outer"}, "annulus.");
    cfg.r_inner = need_num(an, "r_inner", "annulus.");
    cfg.r_outer = need_num(an, "r_outer", "annulus.");

    const json& bd = need_obj(j, "boundary", "");
    check_keys(bd, {"radius", "rho", "u1", "u2", "A"}, "boundary.");
    cfg.boundary.r = need_num(bd, "radius", "boundary.");
    cfg.boundary.rho = need_num(bd, "rho", "boundary.");
    cfg.boundary.u1 = need_num(bd, "u1", "boundary.");
    cfg.boundary.u2 = need_num(bd, "u2", "boundary.");
    cfg.boundary.A = need_num(bd, "A", "boundary.");

    if (j.contains("exit_pressure")) {
        if (!j["exit_pressure"].is_number())
            throw ConfigError("parse_config: exit_pressure must be a number");
        cfg.exit_pressure = j["exit_pressure"].get<double>();
    }
    if (j.contains("samples")) {
        if (!j["samples"].is_number_integer())
            throw ConfigError("parse_config: samples must be an integer");
        cfg.samples = j["samples"].get<int>();
    }
    if (j.contains("output")) {
        const json& out = need_obj(j, "output", "");
        check_keys(out, {"format", "path"}, "output.");
        if (out.contains("format")) cfg.output.format = need_str(out, "format", "output.");
        if (out.contains("path")) cfg.output.path = need_str(out, "path", "output.");
    }
    if (j.contains("tolerances")) {
        const json& tol = need_obj(j, "tolerances", "");
        check_keys(tol, {"tol_residual", "tol_root", "eps_sonic"}, "tolerances.");
        if (tol.contains("tol_residual"))
            cfg.gas.tol_residual = need_num(tol, "tol_residual", "tolerances.");
        if (tol.contains("tol_root")) cfg.gas.tol_root = need_num(tol, "tol_root", "tolerances.");
        if (tol.contains("eps_sonic"))
            cfg.gas.eps_sonic = need_num(tol, "eps_sonic", "tolerances.");
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("load_config: cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const RunConfig& cfg) {
    cfg.gas.validate();
    if (!(cfg.r_inner > 0.0) || !(cfg.r_inner < cfg.r_outer))
        throw ConfigError("validate: annulus must satisfy 0 < r_inner < r_outer");
    const BoundaryState& b = cfg.boundary;
    if (!(b.rho > 0.0)) throw ConfigError("validate: boundary.rho must be positive");
    if (!(b.A > 0.0)) throw ConfigError("validate: boundary.A must be positive");
    auto on_ring = [&](double ring) { return std::fabs(b.r - ring) <= 1e-12 * ring; };
    switch (cfg.problem) {
        case Problem::OutwardSmooth:
        case Problem::OutwardShock:
            if (!on_ring(cfg.r_inner))
                throw ConfigError(
                    "validate: boundary.radius must equal r_inner for outward problems");
            if (!(b.u1 > 0.0))
                throw ConfigError("validate: outward problems require u1 > 0");
            break;
        case Problem::InwardSmooth:
        case Problem::InwardShock:
            if (!on_ring(cfg.r_outer))
                throw ConfigError(
                    "validate: boundary.radius must equal r_outer for inward problems");
            if (!(b.u1 < 0.0))
                throw ConfigError("validate: inward problems require u1 < 0");
            break;
        case Problem::Circulatory:
            if (b.u1 != 0.0)
                throw ConfigError("validate: circulatory flow requires u1 = 0");
            if (b.u2 == 0.0)
                throw ConfigError("validate: circulatory flow requires nonzero u2");
            if (!(b.r >= cfg.r_inner) || !(b.r <= cfg.r_outer))
                throw ConfigError("validate: boundary.radius must lie inside the annulus");
            break;
    }
    const bool needs_pressure =
        cfg.problem == Problem::OutwardShock || cfg.problem == Problem::InwardShock;
    if (needs_pressure && !cfg.exit_pressure)
        throw ConfigError("validate: shock problems require exit_pressure");
    if (!needs_pressure && cfg.exit_pressure)
        throw ConfigError("validate: exit_pressure only applies to the shock problems");
    if (needs_pressure && !(*cfg.exit_pressure > 0.0))
        throw ConfigError("validate: exit_pressure must be positive");
    if (cfg.samples < 2) throw ConfigError("validate: samples must be at least 2");
    if (cfg.output.format != "csv" && cfg.output.format != "json")
        throw ConfigError("validate: output.format must be csv or json");
}

}  // namespace annular
