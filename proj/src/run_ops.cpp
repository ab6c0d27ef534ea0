#include "annular/run_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "annular/shock_flow.hpp"
#include "annular/smooth_flow.hpp"

namespace annular {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// writes through a temporary in the same directory; the target appears only
// on commit, an abort leaves nothing behind
class AtomicFile {
  public:
    explicit AtomicFile(const std::string& path)
        : path_(path), tmp_(path + ".tmp"), out_(tmp_, std::ios::binary) {
        if (!out_) throw ConfigError("run: cannot open " + tmp_ + " for writing");
    }
    ~AtomicFile() {
        if (!committed_) {
            out_.close();
            std::remove(tmp_.c_str());
        }
    }
    std::ostream& stream() { return out_; }
    void commit() {
        out_.flush();
        if (!out_) throw ConfigError("run: write to " + tmp_ + " failed");
        out_.close();
        if (std::rename(tmp_.c_str(), path_.c_str()) != 0)
            throw ConfigError("run: cannot rename " + tmp_ + " to " + path_);
        committed_ = true;
    }

  private:
    std::string path_;
    std::string tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

json state_json(const FlowState& s) {
    json j;
    j["r"] = s.r;
    j["rho"] = s.rho;
    j["u1"] = s.u1;
    j["u2"] = s.u2;
    j["p"] = s.p;
    j["c2"] = s.c2;
    j["m1sq"] = s.m1sq;
    j["m2sq"] = s.m2sq;
    j["msq"] = s.msq;
    return j;
}

json shock_solution_json(const ShockSolution& sol) {
    const ShockRegime& rg = sol.regime;
    json j;
    j["regime"] = to_string(rg.kind);
    j["table_case"] = rg.table_case;
    j["r_b"] = sol.r_b;
    j["p_exit"] = sol.p_exit;
    j["A_plus"] = sol.A_plus;
    j["x"] = sol.x;
    j["r_star"] = rg.r_star;
    j["r_star_prime"] = rg.r_star_prime;
    j["p0"] = rg.p0;
    j["p1"] = rg.p1;
    if (rg.p_star_prime) j["p_star_prime"] = *rg.p_star_prime;
    j["f2_at_rho_sharp"] = rg.f2_at_rho_sharp;
    j["rho_sharp"] = rg.rho_sharp;
    if (rg.rho_sharp_sharp) j["rho_sharp_sharp"] = *rg.rho_sharp_sharp;
    if (rg.f2_at_rho_sharp_sharp) j["f2_at_rho_sharp_sharp"] = *rg.f2_at_rho_sharp_sharp;
    if (rg.r_sharp_minus) j["r_sharp_minus"] = *rg.r_sharp_minus;
    if (rg.r_sharp_plus) j["r_sharp_plus"] = *rg.r_sharp_plus;
    j["pressure_margin"] = rg.pressure_margin;
    j["f2_margin"] = rg.f2_margin;
    return j;
}

ShockSolution solve_shock_problem(const RunConfig& cfg) {
    if (cfg.problem == Problem::OutwardShock)
        return classify_outward_shock(cfg.gas, cfg.boundary, cfg.r_outer, *cfg.exit_pressure);
    return classify_inward_shock(cfg.gas, cfg.boundary, cfg.r_inner, *cfg.exit_pressure);
}

// identical decision rule to the shock classifier, with the shock radius
// known directly instead of recovered from a prescribed pressure
ShockRegimeKind sweep_label(const GasModel& gas, const FlowInvariants& inv, double r_b,
                            double p_exit, double r_star_prime, double r_exit, bool outward) {
    if (std::fabs(r_b - r_star_prime) <= gas.eps_sonic * r_star_prime)
        return ShockRegimeKind::SupSonicCoincident;
    const ExitStateTest et = exit_state_test_f2(gas, inv, p_exit, r_exit);
    if (outward) {
        if (r_b < r_star_prime) {
            if (et.regime_sign > 0) return ShockRegimeKind::SupSupUniform;
            if (et.regime_sign == 0) return ShockRegimeKind::SupSupSonicAtExit;
            return ShockRegimeKind::SupSupToSubsonicDownstream;
        }
        return ShockRegimeKind::SupSubUniform;
    }
    if (r_b < r_star_prime) return ShockRegimeKind::SupSupUniform;
    if (et.regime_sign < 0) return ShockRegimeKind::SupSubUniform;
    if (et.regime_sign == 0) return ShockRegimeKind::SonicAtExit;
    return ShockRegimeKind::SubToSupersonicDownstream;
}

void write_profile_rows(const RunConfig& cfg,
                        const std::vector<std::pair<RadialProfile, double>>& segments,
                        const std::string& out_path) {
    AtomicFile file(out_path);
    std::ostream& os = file.stream();
    if (cfg.output.format == "csv") {
        os << "r,rho,u1,u2,p,c2,m1sq,m2sq,msq,A,region\n";
        for (const auto& [prof, a] : segments)
            for (const FlowState& s : prof.states)
                os << fmt17(s.r) << ',' << fmt17(s.rho) << ',' << fmt17(s.u1) << ','
                   << fmt17(s.u2) << ',' << fmt17(s.p) << ',' << fmt17(s.c2) << ','
                   << fmt17(s.m1sq) << ',' << fmt17(s.m2sq) << ',' << fmt17(s.msq) << ','
                   << fmt17(a) << ',' << prof.region << '\n';
    } else {
        json rows = json::array();
        for (const auto& [prof, a] : segments)
            for (const FlowState& s : prof.states) {
                json row = state_json(s);
                row["A"] = a;
                row["region"] = prof.region;
                rows.push_back(std::move(row));
            }
        os << rows.dump(2) << '\n';
    }
    file.commit();
}

}  // namespace

int run_classify(const RunConfig& cfg, std::ostream& out) {
    const GasModel& gas = cfg.gas;
    const BoundaryState& b = cfg.boundary;
    json j;
    int code = 0;
    try {
        switch (cfg.problem) {
            case Problem::OutwardSmooth:
            case Problem::InwardSmooth: {
                const FlowInvariants inv = invariants_from_boundary(gas, b);
                const SmoothRegime reg = cfg.problem == Problem::OutwardSmooth
                                             ? classify_outward(gas, b, cfg.r_outer)
                                             : classify_inward(gas, b, cfg.r_inner);
                j["regime"] = to_string(reg.kind);
                if (reg.r_c) {
                    j["r_c"] = *reg.r_c;
                    j["rho_c"] = critical_density(gas, inv);
                }
                if (reg.r_sharp) j["r_sharp"] = *reg.r_sharp;
                if (reg.kind == SmoothRegimeKind::NoGlobalSolution) code = 3;
                break;
            }
            case Problem::OutwardShock:
            case Problem::InwardShock:
                j = shock_solution_json(solve_shock_problem(cfg));
                break;
            case Problem::Circulatory: {
                const CirculatoryFlow flow =
                    purely_circulatory(gas, b, cfg.r_inner, cfg.r_outer, 2);
                j["regime"] = to_string(flow.regime.kind);
                if (flow.regime.r_c) j["r_c"] = *flow.regime.r_c;
                break;
            }
        }
    } catch (const PressureOutOfRangeError& e) {
        j = json();
        j["regime"] = "NoSolution";
        j["error"] = e.what();
        j["p1"] = e.p1;
        j["p0"] = e.p0;
        j["p_exit"] = e.p_ex;
        code = 3;
    } catch (const NoSolutionError& e) {
        j = json();
        j["regime"] = "NoSolution";
        j["error"] = e.what();
        j["f2_at_rho_sharp_sharp"] = e.f2_at_rho_sharp_sharp;
        j["rho_sharp_sharp"] = e.rho_sharp_sharp;
        code = 3;
    } catch (const SolverError& e) {
        j = json();
        j["error"] = e.what();
        code = 3;
    }
    out << j.dump(2) << '\n';
    return code;
}

int run_shock(const RunConfig& cfg, std::ostream& out) {
    if (cfg.problem != Problem::OutwardShock && cfg.problem != Problem::InwardShock)
        throw ConfigError("run_shock: requires a shock problem");
    json j;
    int code = 0;
    try {
        const ShockSolution sol = solve_shock_problem(cfg);
        j = shock_solution_json(sol);
        j["upstream"] = state_json(sol.upstream);
        j["downstream"] = state_json(sol.downstream);
    } catch (const PressureOutOfRangeError& e) {
        j = json();
        j["regime"] = "NoSolution";
        j["error"] = e.what();
        j["p1"] = e.p1;
        j["p0"] = e.p0;
        j["p_exit"] = e.p_ex;
        code = 3;
    } catch (const NoSolutionError& e) {
        j = json();
        j["regime"] = "NoSolution";
        j["error"] = e.what();
        j["f2_at_rho_sharp_sharp"] = e.f2_at_rho_sharp_sharp;
        j["rho_sharp_sharp"] = e.rho_sharp_sharp;
        code = 3;
    } catch (const SolverError& e) {
        j = json();
        j["error"] = e.what();
        code = 3;
    }
    out << j.dump(2) << '\n';
    return code;
}

int run_limits(const RunConfig& cfg, std::ostream& out) {
    const FlowInvariants inv = invariants_from_boundary(cfg.gas, cfg.boundary);
    json j;
    auto put = [&](const char* key, auto&& value) {
        try {
            j[key] = value();
        } catch (const SolverError&) {
            j[key] = nullptr;
        }
    };
    j["r_tilde"] = vacuum_radius(inv);
    put("r_star", [&] { return swirl_sonic_radius(cfg.gas, inv); });
    put("r_star_prime", [&] { return coincidence_radius(cfg.gas, inv); });
    put("r_c", [&] { return sonic_radius(cfg.gas, inv); });
    put("r_sharp", [&] { return limiting_radius(cfg.gas, inv); });
    try {
        const PressureInterval pi = pressure_interval(cfg.gas, inv, cfg.r_inner, cfg.r_outer);
        j["p1"] = pi.p1;
        j["p0"] = pi.p0;
    } catch (const SolverError&) {
        j["p1"] = nullptr;
        j["p0"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return 0;
}

void run_profile(const RunConfig& cfg, const std::string& out_path) {
    const GasModel& gas = cfg.gas;
    const BoundaryState& b = cfg.boundary;
    std::vector<std::pair<RadialProfile, double>> segments;
    switch (cfg.problem) {
        case Problem::OutwardSmooth:
        case Problem::InwardSmooth: {
            const FlowInvariants inv = invariants_from_boundary(gas, b);
            const FlowState s0 = make_state(gas, b.A, b.r, b.rho, b.u1, b.u2);
            const Branch branch =
                s0.m1sq > 1.0 ? Branch::RadialSupersonic : Branch::RadialSubsonic;
            segments.emplace_back(profile(gas, inv, branch, cfg.r_inner, cfg.r_outer, cfg.samples),
                                  b.A);
            break;
        }
        case Problem::OutwardShock:
        case Problem::InwardShock: {
            if (cfg.samples < 4)
                throw ConfigError("run_profile: shock profiles need at least 4 samples");
            const FlowInvariants inv = invariants_from_boundary(gas, b);
            const ShockSolution sol = solve_shock_problem(cfg);
            FlowInvariants inv_plus = inv;
            inv_plus.A = sol.A_plus;
            // ascending radius: split [r_inner, r_b] and [r_b, r_outer] in
            // proportion to their widths, shock radius on both sides
            const double w_lo = sol.r_b - cfg.r_inner;
            const double w_hi = cfg.r_outer - sol.r_b;
            int n_lo = static_cast<int>(std::lround(cfg.samples * w_lo / (w_lo + w_hi)));
            n_lo = std::clamp(n_lo, 2, cfg.samples - 2);
            const int n_hi = cfg.samples - n_lo;
            if (cfg.problem == Problem::OutwardShock) {
                segments.emplace_back(profile(gas, inv, Branch::RadialSupersonic, cfg.r_inner,
                                              sol.r_b, n_lo, "upstream"),
                                      inv.A);
                segments.emplace_back(profile(gas, inv_plus, Branch::RadialSubsonic, sol.r_b,
                                              cfg.r_outer, n_hi, "downstream"),
                                      sol.A_plus);
            } else {
                segments.emplace_back(profile(gas, inv_plus, Branch::RadialSubsonic, cfg.r_inner,
                                              sol.r_b, n_lo, "downstream"),
                                      sol.A_plus);
                segments.emplace_back(profile(gas, inv, Branch::RadialSupersonic, sol.r_b,
                                              cfg.r_outer, n_hi, "upstream"),
                                      inv.A);
            }
            break;
        }
        case Problem::Circulatory: {
            CirculatoryFlow flow = purely_circulatory(gas, b, cfg.r_inner, cfg.r_outer, cfg.samples);
            segments.emplace_back(std::move(flow.profile), b.A);
            break;
        }
    }
    write_profile_rows(cfg, segments, out_path);
}

void run_sweep(const RunConfig& cfg, int n_points, const std::string& out_path) {
    if (cfg.problem != Problem::OutwardShock && cfg.problem != Problem::InwardShock)
        throw ConfigError("run_sweep: requires a shock problem");
    if (n_points < 1) throw ConfigError("run_sweep: need at least one point");
    const GasModel& gas = cfg.gas;
    const FlowInvariants inv = invariants_from_boundary(gas, cfg.boundary);
    const bool outward = cfg.problem == Problem::OutwardShock;
    const double r_exit = outward ? cfg.r_outer : cfg.r_inner;
    const double r_star_prime = coincidence_radius(gas, inv);

    struct Row {
        double r_b, p_exit, a_plus, x, downstream_msq;
        ShockRegimeKind regime;
    };
    std::vector<Row> rows;
    rows.reserve(n_points);
    const double h = (cfg.r_outer - cfg.r_inner) / n_points;
    double prev_p = 0.0;
    for (int i = 0; i < n_points; ++i) {
        const double r_b = cfg.r_inner + (i + 0.5) * h;
        const FlowState up = state_from_density(
            gas, inv, r_b, solve_density(gas, inv, r_b, Branch::RadialSupersonic));
        const JumpResult jump = rh_jump(gas, inv, up);
        FlowInvariants inv_plus = inv;
        inv_plus.A = jump.A_plus;
        const double rho_exit = solve_density(gas, inv_plus, r_exit, Branch::RadialSubsonic);
        const double p_exit = jump.A_plus * std::pow(rho_exit, gas.gamma);
        if (i > 0 && !(p_exit < prev_p))
            throw SolverError("run_sweep: exit pressures not strictly decreasing");
        prev_p = p_exit;
        rows.push_back(Row{r_b, p_exit, jump.A_plus, jump.x, jump.downstream.msq,
                           sweep_label(gas, inv, r_b, p_exit, r_star_prime, r_exit, outward)});
    }

    AtomicFile file(out_path);
    std::ostream& os = file.stream();
    if (cfg.output.format == "csv") {
        os << "r_b,p_exit,a_plus,x,downstream_msq,regime\n";
        for (const Row& row : rows)
            os << fmt17(row.r_b) << ',' << fmt17(row.p_exit) << ',' << fmt17(row.a_plus) << ','
               << fmt17(row.x) << ',' << fmt17(row.downstream_msq) << ','
               << to_string(row.regime) << '\n';
    } else {
        json arr = json::array();
        for (const Row& row : rows) {
            json r;
            r["r_b"] = row.r_b;
            r["p_exit"] = row.p_exit;
            r["a_plus"] = row.a_plus;
            r["x"] = row.x;
            r["downstream_msq"] = row.downstream_msq;
            r["regime"] = to_string(row.regime);
            arr.push_back(std::move(r));
        }
        os << arr.dump(2) << '\n';
    }
    file.commit();
}

}  // namespace annular
