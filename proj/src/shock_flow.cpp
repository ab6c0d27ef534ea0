#include "annular/shock_flow.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "root_find.hpp"

namespace annular {

const char* to_string(ShockRegimeKind kind) {
    switch (kind) {
        case ShockRegimeKind::SupSubUniform: return "SupSubUniform";
        case ShockRegimeKind::SupSupUniform: return "SupSupUniform";
        case ShockRegimeKind::SupSupToSubsonicDownstream: return "SupSupToSubsonicDownstream";
        case ShockRegimeKind::SupSupSonicAtExit: return "SupSupSonicAtExit";
        case ShockRegimeKind::SupSonicCoincident: return "SupSonicCoincident";
        case ShockRegimeKind::SubToSupersonicDownstream: return "SubToSupersonicDownstream";
        case ShockRegimeKind::SonicAtExit: return "SonicAtExit";
        case ShockRegimeKind::NoSolution: return "NoSolution";
    }
    return "unknown";
}

namespace {

// geometry, interval and coincidence data shared by classification and sweeps
struct RegimeInputs {
    double r_star = 0.0;
    double r_star_prime = 0.0;
    PressureInterval pi{0.0, 0.0};
    std::optional<double> p_star_prime;
    int table_case = 0;
};

RegimeInputs regime_inputs(const GasModel& gas, const FlowInvariants& inv, double r0, double r1) {
    RegimeInputs ri;
    ri.r_star = swirl_sonic_radius(gas, inv);
    ri.r_star_prime = coincidence_radius(gas, inv);
    ri.pi = pressure_interval(gas, inv, r0, r1);
    const bool outward = inv.direction == FlowDirection::Outward;
    const double eps = gas.eps_sonic;
    if (ri.r_star_prime >= r1 * (1.0 - eps)) {
        // every admissible shock sits below the coincidence radius
        ri.table_case = outward ? 1 : 3;
    } else if (ri.r_star_prime <= r0 * (1.0 + eps)) {
        ri.table_case = outward ? 3 : 1;
    } else {
        ri.table_case = 2;
        const double r_exit = outward ? r1 : r0;
        try {
            ri.p_star_prime = exit_pressure_of_shock(gas, inv, ri.r_star_prime, r_exit);
        } catch (const NoRootError&) {
            // coincident shock cannot reach the exit; leave the pressure unset
        }
    }
    return ri;
}

ShockRegimeKind regime_label(const GasModel& gas, FlowDirection direction, double r_b,
                             double p_ex, const RegimeInputs& ri, int exit_sign) {
    const double eps = gas.eps_sonic;
    if (ri.p_star_prime && std::fabs(p_ex - *ri.p_star_prime) <= eps * std::fabs(*ri.p_star_prime))
        return ShockRegimeKind::SupSonicCoincident;
    if (ri.table_case == 2 && std::fabs(r_b - ri.r_star_prime) <= eps * ri.r_star_prime)
        return ShockRegimeKind::SupSonicCoincident;
    const bool down_supersonic_at_shock = r_b < ri.r_star_prime;
    if (direction == FlowDirection::Outward) {
        if (down_supersonic_at_shock) {
            if (exit_sign > 0) return ShockRegimeKind::SupSupUniform;
            if (exit_sign == 0) return ShockRegimeKind::SupSupSonicAtExit;
            return ShockRegimeKind::SupSupToSubsonicDownstream;
        }
        return ShockRegimeKind::SupSubUniform;
    }
    if (down_supersonic_at_shock) return ShockRegimeKind::SupSupUniform;
    if (exit_sign < 0) return ShockRegimeKind::SupSubUniform;
    if (exit_sign == 0) return ShockRegimeKind::SonicAtExit;
    return ShockRegimeKind::SubToSupersonicDownstream;
}

ShockSolution place_shock(const GasModel& gas, const FlowInvariants& inv, double r0, double r1,
                          double p_ex, const RegimeInputs& ri) {
    const bool outward = inv.direction == FlowDirection::Outward;
    const double r_exit = outward ? r1 : r0;
    double lo = r0 * (1.0 + 1e-8);  // pressure above p_ex here
    double hi = r1 * (1.0 - 1e-8);  // pressure below p_ex (or infeasible, inward)
    for (int i = 0; i < detail::max_root_iter; ++i) {
        if (hi - lo <= gas.tol_root * (lo + hi)) break;
        const double mid = 0.5 * (lo + hi);
        double pm;
        try {
            pm = exit_pressure_of_shock(gas, inv, mid, r_exit);
        } catch (const NoRootError&) {
            // downstream of a shock this far out cannot reach the exit; the
            // attainable pressures there are below the target
            hi = mid;
            continue;
        }
        if (pm > p_ex) {
            lo = mid;
        } else if (pm < p_ex) {
            hi = mid;
        } else {
            lo = hi = mid;
        }
    }
    const double r_b = 0.5 * (lo + hi);

    ShockSolution sol;
    sol.r_b = r_b;
    sol.upstream =
        state_from_density(gas, inv, r_b, solve_density(gas, inv, r_b, Branch::RadialSupersonic));
    const JumpResult jump = rh_jump(gas, inv, sol.upstream);
    sol.downstream = jump.downstream;
    sol.A_plus = jump.A_plus;
    sol.x = jump.x;
    FlowInvariants inv_plus = inv;
    inv_plus.A = jump.A_plus;
    const double rho_exit = solve_density(gas, inv_plus, r_exit, Branch::RadialSubsonic);
    sol.p_exit = jump.A_plus * std::pow(rho_exit, gas.gamma);

    const ExitStateTest et = exit_state_test_f2(gas, inv, p_ex, r_exit);
    ShockRegime regime{};
    regime.table_case = ri.table_case;
    regime.r_star = ri.r_star;
    regime.r_star_prime = ri.r_star_prime;
    regime.p0 = ri.pi.p0;
    regime.p1 = ri.pi.p1;
    regime.p_star_prime = ri.p_star_prime;
    regime.f2_at_rho_sharp = et.f2_at_rho_sharp;
    regime.rho_sharp = et.rho_sharp;
    regime.f2_margin = et.margin;
    regime.pressure_margin = std::min(p_ex - ri.pi.p1, ri.pi.p0 - p_ex);
    regime.kind = regime_label(gas, inv.direction, r_b, p_ex, ri, et.regime_sign);
    sol.regime = regime;
    return sol;
}

// f2 evaluated at an arbitrary density with the terms' magnitude scale
double f2_value(const GasModel& gas, const FlowInvariants& inv, double p_ex, double r_exit,
                double rho, double* scale) {
    const double g = gas.gamma;
    const double t1 = g * p_ex * rho / (g - 1.0);
    const double t2 = (inv.B0 - inv.kappa2 * inv.kappa2 / (2.0 * r_exit * r_exit)) * rho * rho;
    const double t3 = inv.kappa1 * inv.kappa1 / (2.0 * r_exit * r_exit);
    if (scale) *scale = std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
    return t1 - t2 + t3;
}

}  // namespace

JumpResult rh_jump(const GasModel& gas, const FlowInvariants& inv, const FlowState& upstream) {
    if (!(upstream.m1sq > 1.0 + gas.eps_sonic))
        throw NotSupersonicError("rh_jump: upstream state must be radial-supersonic");
    const double g = gas.gamma;
    const double r = upstream.r;
    const double k0 = swirl_bernoulli_k(gas, inv, r);
    if (!(k0 > 0.0)) throw ConfigError("rh_jump: shock radius inside the vacuum circle");
    const double u1p = k0 / upstream.u1;
    const double rhop = inv.kappa1 / (r * u1p);
    const double au1m = std::fabs(upstream.u1);
    const double au1p = std::fabs(u1p);
    const double a_plus = std::pow(r / std::fabs(inv.kappa1), g - 1.0) * std::pow(au1p, g) *
                          ((g + 1.0) * au1m / (2.0 * g) - (g - 1.0) * au1p / (2.0 * g));
    JumpResult out;
    out.downstream = make_state(gas, a_plus, r, rhop, u1p, upstream.u2);
    out.A_plus = a_plus;
    out.x = u1p / upstream.u1;
    return out;
}

double exit_pressure_of_shock(const GasModel& gas, const FlowInvariants& inv, double r_b,
                              double r_exit) {
    const bool outward = inv.direction == FlowDirection::Outward;
    if (outward ? !(r_b < r_exit) : !(r_exit < r_b))
        throw ConfigError("exit_pressure_of_shock: exit must lie downstream of the shock");
    const FlowState up =
        state_from_density(gas, inv, r_b, solve_density(gas, inv, r_b, Branch::RadialSupersonic));
    const JumpResult jump = rh_jump(gas, inv, up);
    FlowInvariants inv_plus = inv;
    inv_plus.A = jump.A_plus;
    const double rho_exit = solve_density(gas, inv_plus, r_exit, Branch::RadialSubsonic);
    return jump.A_plus * std::pow(rho_exit, gas.gamma);
}

PressureInterval pressure_interval(const GasModel& gas, const FlowInvariants& inv, double r0,
                                   double r1) {
    if (!(r0 > 0.0) || !(r0 < r1)) throw ConfigError("pressure_interval: need 0 < r0 < r1");
    const bool outward = inv.direction == FlowDirection::Outward;
    const double r_exit = outward ? r1 : r0;
    const double rb_lo = r0 * (1.0 + 1e-8);
    const double rb_hi = r1 * (1.0 - 1e-8);
    PressureInterval out{};
    out.p0 = exit_pressure_of_shock(gas, inv, rb_lo, r_exit);
    try {
        out.p1 = exit_pressure_of_shock(gas, inv, rb_hi, r_exit);
        return out;
    } catch (const NoRootError&) {
        if (outward) throw;
    }
    // Inward flow with the outermost shock infeasible: the shocked flow hits
    // its limiting circle before the exit. Feasibility is monotone in r_b
    // (downstream entropy grows with the shock radius, pushing the limiting
    // circle outward), so bisect for the outermost feasible position.
    double lo = rb_lo;
    double hi = rb_hi;
    for (int i = 0; i < detail::max_root_iter; ++i) {
        if (hi - lo <= gas.tol_root * (lo + hi)) break;
        const double mid = 0.5 * (lo + hi);
        try {
            exit_pressure_of_shock(gas, inv, mid, r_exit);
            lo = mid;
        } catch (const NoRootError&) {
            hi = mid;
        }
    }
    out.p1 = exit_pressure_of_shock(gas, inv, lo, r_exit);
    return out;
}

ShockSolution shock_from_exit_pressure(const GasModel& gas, const FlowInvariants& inv, double r0,
                                       double r1, double p_ex) {
    if (!(p_ex > 0.0))
        throw ConfigError("shock_from_exit_pressure: exit pressure must be positive");
    const RegimeInputs ri = regime_inputs(gas, inv, r0, r1);
    if (!(p_ex > ri.pi.p1) || !(p_ex < ri.pi.p0))
        throw PressureOutOfRangeError(
            "shock_from_exit_pressure: exit pressure outside the attainable interval", ri.pi.p1,
            ri.pi.p0, p_ex);
    return place_shock(gas, inv, r0, r1, p_ex, ri);
}

double swirl_fraction_a(const FlowInvariants& inv, double r) {
    const double denom = 2.0 * r * r * inv.B0 - inv.kappa2 * inv.kappa2;
    if (!(denom > 0.0)) throw ConfigError("swirl_fraction_a: radius inside the vacuum circle");
    return inv.kappa2 * inv.kappa2 / denom;
}

double classifier_f1(const GasModel& gas, const FlowInvariants& inv, double r) {
    const double a = swirl_fraction_a(inv, r);
    const FlowState s =
        state_from_density(gas, inv, r, solve_density(gas, inv, r, Branch::RadialSupersonic));
    return (1.0 - (gas.gamma + 1.0) * a / (gas.gamma - 1.0)) * s.m1sq;
}

double swirl_sonic_radius(const GasModel& gas, const FlowInvariants& inv) {
    if (inv.kappa2 == 0.0) return 0.0;
    return std::sqrt(gas.gamma * inv.kappa2 * inv.kappa2 / ((gas.gamma - 1.0) * inv.B0));
}

double coincidence_radius(const GasModel& gas, const FlowInvariants& inv) {
    const double r_sharp = limiting_radius(gas, inv);
    // without swirl f1 equals the squared radial Mach number, which stays
    // above 1 and reaches it only at the limiting circle
    if (inv.kappa2 == 0.0) return r_sharp;
    const double r_star = swirl_sonic_radius(gas, inv);
    auto h = [&](double r) { return classifier_f1(gas, inv, r) - 1.0; };
    const double lo = std::max(r_star, r_sharp) * (1.0 + 1e-10);
    const double flo = h(lo);
    const double hi = detail::expand_upper(h, 2.0 * lo, flo, 2.0, "coincidence_radius");
    return detail::bisect(h, lo, hi, flo, h(hi), gas.tol_root, "coincidence_radius");
}

double downstream_sonic_g(const GasModel& gas, double a, double x) {
    const double g = gas.gamma;
    return (1.0 - x) * (2.0 / (g + 1.0) + (g - 1.0) * x / (g + 1.0)) +
           a * x * (x + 2.0 / (g - 1.0));
}

GRoots downstream_sonic_g_roots(const GasModel& gas, double a) {
    const double g = gas.gamma;
    GRoots out;
    out.x1 = -2.0 / (g - 1.0);
    const double pole = 1.0 - (g + 1.0) * a / (g - 1.0);
    if (pole > 0.0) out.x2 = 1.0 / pole;
    return out;
}

ExitStateTest exit_state_test_f2(const GasModel& gas, const FlowInvariants& inv, double p_ex,
                                 double r_exit) {
    if (!(p_ex > 0.0)) throw ConfigError("exit_state_test_f2: exit pressure must be positive");
    if (!(r_exit > 0.0)) throw ConfigError("exit_state_test_f2: exit radius must be positive");
    const double g = gas.gamma;
    ExitStateTest out;
    out.rho_sharp = g * (g + 1.0) * p_ex / (2.0 * (g - 1.0) * inv.B0);
    double scale = 0.0;
    out.f2_at_rho_sharp = f2_value(gas, inv, p_ex, r_exit, out.rho_sharp, &scale);
    out.margin = scale > 0.0 ? out.f2_at_rho_sharp / scale : 0.0;
    if (std::fabs(out.f2_at_rho_sharp) <= gas.eps_sonic * scale)
        out.regime_sign = 0;
    else
        out.regime_sign = out.f2_at_rho_sharp > 0.0 ? 1 : -1;
    return out;
}

ShockSolution classify_outward_shock(const GasModel& gas, const BoundaryState& b, double r1,
                                     double p_ex) {
    const FlowInvariants inv = invariants_from_boundary(gas, b);
    if (!(b.u1 > 0.0))
        throw ConfigError("classify_outward_shock: outward data requires u1 > 0");
    if (!(r1 > b.r))
        throw ConfigError("classify_outward_shock: exit radius must exceed the inlet radius");
    if (!(p_ex > 0.0))
        throw ConfigError("classify_outward_shock: exit pressure must be positive");
    const FlowState s0 = make_state(gas, b.A, b.r, b.rho, b.u1, b.u2);
    if (std::fabs(s0.m1sq - 1.0) <= gas.eps_sonic)
        throw SonicBoundaryError("classify_outward_shock: inlet data is radial-sonic");
    if (s0.m1sq < 1.0)
        throw NotSupersonicError("classify_outward_shock: inlet data must be radial-supersonic");
    const RegimeInputs ri = regime_inputs(gas, inv, b.r, r1);
    if (!(p_ex > ri.pi.p1) || !(p_ex < ri.pi.p0))
        throw PressureOutOfRangeError(
            "classify_outward_shock: exit pressure outside the attainable interval", ri.pi.p1,
            ri.pi.p0, p_ex);
    return place_shock(gas, inv, b.r, r1, p_ex, ri);
}

ShockSolution classify_inward_shock(const GasModel& gas, const BoundaryState& b, double r0,
                                    double p_ex) {
    const FlowInvariants inv = invariants_from_boundary(gas, b);
    if (!(b.u1 < 0.0)) throw ConfigError("classify_inward_shock: inward data requires u1 < 0");
    if (!(r0 > 0.0) || !(r0 < b.r))
        throw ConfigError("classify_inward_shock: exit radius must lie inside the inlet radius");
    if (!(p_ex > 0.0))
        throw ConfigError("classify_inward_shock: exit pressure must be positive");
    const FlowState s0 = make_state(gas, b.A, b.r, b.rho, b.u1, b.u2);
    if (std::fabs(s0.m1sq - 1.0) <= gas.eps_sonic)
        throw SonicBoundaryError("classify_inward_shock: inlet data is radial-sonic");
    if (s0.m1sq < 1.0)
        throw NotSupersonicError("classify_inward_shock: inlet data must be radial-supersonic");
    const double k_exit = swirl_bernoulli_k(gas, inv, r0);
    if (!(k_exit > 0.0))
        throw ConfigError("classify_inward_shock: exit radius inside the vacuum circle");

    // A radial-supersonic exit state cannot sit downstream of any shock.
    const double rho_ss = gas.gamma * p_ex / k_exit;
    double scale = 0.0;
    const double f2_ss = f2_value(gas, inv, p_ex, r0, rho_ss, &scale);
    if (f2_ss > gas.eps_sonic * scale)
        throw NoSolutionError(
            "classify_inward_shock: prescribed exit pressure forces a radial-supersonic exit",
            f2_ss, rho_ss);

    const double r_sharp_minus = limiting_radius(gas, inv);
    if (r0 < r_sharp_minus * (1.0 - gas.eps_sonic))
        throw NoSolutionError(
            "classify_inward_shock: the supersonic inflow cannot reach the exit radius and no "
            "shocked flow can either",
            f2_ss, rho_ss);

    RegimeInputs ri;
    try {
        ri = regime_inputs(gas, inv, r0, b.r);
    } catch (const NoRootError&) {
        throw NoSolutionError(
            "classify_inward_shock: no shock position admits a downstream flow reaching the exit",
            f2_ss, rho_ss);
    }
    if (!(p_ex > ri.pi.p1) || !(p_ex < ri.pi.p0))
        throw NoSolutionError(
            "classify_inward_shock: exit pressure outside the attainable interval", f2_ss, rho_ss);

    ShockSolution sol = place_shock(gas, inv, r0, b.r, p_ex, ri);
    FlowInvariants inv_plus = inv;
    inv_plus.A = sol.A_plus;
    const double r_sharp_plus = limiting_radius_power_eq(gas, inv_plus);
    if (!(r_sharp_minus < r_sharp_plus))
        throw SolverError(
            "classify_inward_shock: downstream limiting circle not outside the upstream one");
    if (r0 < r_sharp_plus * (1.0 - gas.eps_sonic))
        throw NoSolutionError(
            "classify_inward_shock: downstream limiting circle lies outside the exit radius",
            f2_ss, rho_ss);
    sol.regime.rho_sharp_sharp = rho_ss;
    sol.regime.f2_at_rho_sharp_sharp = f2_ss;
    sol.regime.r_sharp_minus = r_sharp_minus;
    sol.regime.r_sharp_plus = r_sharp_plus;
    return sol;
}

ShockInequalities verify_shock_inequalities(const GasModel& gas, const FlowInvariants& inv,
                                            const ShockSolution& solution) {
    if (!(solution.x < 1.0))
        throw ConfigError("verify_shock_inequalities: requires a shock of nonzero strength");
    const double g = gas.gamma;
    const FlowState& um = solution.upstream;
    const FlowState& dn = solution.downstream;
    ShockInequalities out;
    out.radial_mach_sum_minus_2 = um.m1sq + dn.m1sq - 2.0;
    out.cross_mach_combination =
        dn.m1sq * um.m2sq + um.m1sq * dn.m2sq - dn.m2sq - um.m2sq;
    out.dK0_dr_b = 2.0 * (g - 1.0) * um.u2 * um.u2 / ((g + 1.0) * solution.r_b);
    const double h = 1e-6 * solution.r_b;
    auto a_plus_at = [&](double r_b) {
        const FlowState up = state_from_density(
            gas, inv, r_b, solve_density(gas, inv, r_b, Branch::RadialSupersonic));
        return rh_jump(gas, inv, up).A_plus;
    };
    out.dA_plus_dr_b = (a_plus_at(solution.r_b + h) - a_plus_at(solution.r_b - h)) / (2.0 * h);
    const double cross_scale = dn.m1sq * um.m2sq + um.m1sq * dn.m2sq + dn.m2sq + um.m2sq;
    out.all_hold = out.radial_mach_sum_minus_2 > 0.0 &&
                   out.cross_mach_combination >= -gas.tol_residual * std::max(cross_scale, 1.0) &&
                   out.dK0_dr_b >= 0.0 && out.dA_plus_dr_b > 0.0;
    return out;
}

}  // namespace annular
