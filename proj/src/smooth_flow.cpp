#include "annular/smooth_flow.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "root_find.hpp"

namespace annular {

const char* to_string(SmoothRegimeKind kind) {
    switch (kind) {
        case SmoothRegimeKind::Supersonic: return "Supersonic";
        case SmoothRegimeKind::Subsonic: return "Subsonic";
        case SmoothRegimeKind::TransonicSmooth: return "TransonicSmooth";
        case SmoothRegimeKind::SupersonicToSonicAtOuter: return "SupersonicToSonicAtOuter";
        case SmoothRegimeKind::SonicAtInner: return "SonicAtInner";
        case SmoothRegimeKind::NoGlobalSolution: return "NoGlobalSolution";
        case SmoothRegimeKind::PurelyCirculatory: return "PurelyCirculatory";
    }
    return "unknown";
}

namespace {

double fr_derivative(const GasModel& gas, const FlowInvariants& inv, double r, double rho) {
    const double g = gas.gamma;
    return g * (g + 1.0) / (g - 1.0) * inv.A * std::pow(rho, g) -
           2.0 * (inv.B0 - inv.kappa2 * inv.kappa2 / (2.0 * r * r)) * rho;
}

// magnitude scale of the three terms of F_r, used for relative residual tests
double fr_scale(const GasModel& gas, const FlowInvariants& inv, double r, double rho) {
    const double g = gas.gamma;
    return g / (g - 1.0) * inv.A * std::pow(rho, g + 1.0) +
           std::fabs(inv.B0 - inv.kappa2 * inv.kappa2 / (2.0 * r * r)) * rho * rho +
           inv.kappa1 * inv.kappa1 / (2.0 * r * r);
}

// closed-form lower bound for the limiting radius, exact when kappa2 = 0
double limiting_radius_estimate(const GasModel& gas, const FlowInvariants& inv) {
    const double g = gas.gamma;
    return std::pow(g * inv.A, 1.0 / (g - 1.0)) *
           std::pow((g + 1.0) / (2.0 * (g - 1.0) * inv.B0), (g + 1.0) / (2.0 * (g - 1.0))) *
           std::fabs(inv.kappa1);
}

// start of the limiting-radius search: strictly between the vacuum circle and
// the root, on the positive side of G
double limiting_search_start(const GasModel& gas, const FlowInvariants& inv) {
    return std::max(vacuum_radius(inv) * (1.0 + 1e-12),
                    limiting_radius_estimate(gas, inv) * (1.0 - 1e-8));
}

std::vector<double> build_grid(double r_lo, double r_hi, int n, bool refine_lo, bool refine_hi) {
    std::vector<double> grid(n);
    grid[0] = r_lo;
    grid[n - 1] = r_hi;
    if (refine_lo == refine_hi) {
        for (int i = 1; i + 1 < n; ++i) grid[i] = r_lo + (r_hi - r_lo) * i / (n - 1.0);
        return grid;
    }
    // geometric step shrink toward the refined end; the exponent cap keeps
    // every step large enough to stay strictly monotone in double precision
    const int cap = 120;
    std::vector<double> w(n - 1);
    double total = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const int e = refine_lo ? (n - 2 - i) : i;
        w[i] = std::pow(0.9, std::min(e, cap));
        total += w[i];
    }
    for (int i = 1; i + 1 < n; ++i) grid[i] = grid[i - 1] + (r_hi - r_lo) * w[i - 1] / total;
    return grid;
}

}  // namespace

double solve_density(const GasModel& gas, const FlowInvariants& inv, double r, Branch branch) {
    if (!(r > 0.0)) throw ConfigError("solve_density: radius must be positive");
    if (inv.kappa1 == 0.0)
        throw ConfigError("solve_density: zero mass flux has no density branches");
    const double rho_star = minimizer_density(gas, inv, r);
    const double f_star = mass_flux_residual(gas, inv, r, rho_star);
    if (f_star >= 0.0) {
        // the two branches have merged (or nearly so) at the minimizer
        if (f_star <= gas.tol_residual * fr_scale(gas, inv, r, rho_star)) return rho_star;
        throw NoRootError("solve_density: no density root, radius inside the limiting circle");
    }
    auto f = [&](double rho) { return mass_flux_residual(gas, inv, r, rho); };
    auto df = [&](double rho) { return fr_derivative(gas, inv, r, rho); };
    double lo, hi, flo, fhi;
    if (branch == Branch::RadialSupersonic) {
        lo = 1e-6 * std::sqrt(inv.kappa1 * inv.kappa1 / (2.0 * r * r * inv.B0));
        hi = rho_star;
        flo = f(lo);
        fhi = f_star;
    } else {
        lo = rho_star;
        flo = f_star;
        hi = detail::expand_upper(f, 2.0 * rho_star, flo, 2.0, "solve_density");
        fhi = f(hi);
    }
    const double root = detail::bisect(f, lo, hi, flo, fhi, gas.tol_root, "solve_density");
    return detail::polish_newton(f, df, root, lo, hi);
}

double sonic_radius(const GasModel& gas, const FlowInvariants& inv) {
    if (!(inv.B0 > 0.0)) throw ConfigError("sonic_radius: Bernoulli constant must be positive");
    const double g = gas.gamma;
    const double rho_c = critical_density(gas, inv);
    const double num =
        (g + 1.0) * (inv.kappa1 * inv.kappa1 + inv.kappa2 * inv.kappa2 * rho_c * rho_c);
    return std::sqrt(num / (2.0 * (g - 1.0) * inv.B0 * rho_c * rho_c));
}

double limiting_radius(const GasModel& gas, const FlowInvariants& inv) {
    if (inv.kappa1 == 0.0)
        throw ConfigError("limiting_radius: needs nonzero mass flux");
    auto g_fun = [&](double r) {
        return mass_flux_residual(gas, inv, r, minimizer_density(gas, inv, r));
    };
    const double lo0 = limiting_search_start(gas, inv);
    const double flo = g_fun(lo0);
    const double hi = detail::expand_upper(g_fun, 2.0 * lo0, flo, 2.0, "limiting_radius");
    return detail::bisect(g_fun, lo0, hi, flo, g_fun(hi), gas.tol_root, "limiting_radius");
}

double limiting_radius_power_eq(const GasModel& gas, const FlowInvariants& inv) {
    if (inv.kappa1 == 0.0)
        throw ConfigError("limiting_radius_power_eq: needs nonzero mass flux");
    const double g = gas.gamma;
    const double a = 2.0 * (g - 1.0) * inv.B0 / (g + 1.0);
    const double b = std::pow(g * inv.A, 2.0 / (g + 1.0)) *
                     std::pow(inv.kappa1 * inv.kappa1, (g - 1.0) / (g + 1.0));
    const double c = (g - 1.0) * inv.kappa2 * inv.kappa2 / (g + 1.0);
    auto h = [&](double x) { return a * x * x - b * std::pow(x, 4.0 / (g + 1.0)) - c; };
    const double lo0 = limiting_search_start(gas, inv);
    const double flo = h(lo0);
    const double hi = detail::expand_upper(h, 2.0 * lo0, flo, 2.0, "limiting_radius_power_eq");
    return detail::bisect(h, lo0, hi, flo, h(hi), gas.tol_root, "limiting_radius_power_eq");
}

SmoothRegime classify_outward(const GasModel& gas, const BoundaryState& b, double r1) {
    const FlowInvariants inv = invariants_from_boundary(gas, b);
    if (!(b.u1 > 0.0)) throw ConfigError("classify_outward: outward data requires u1 > 0");
    if (!(r1 > b.r))
        throw ConfigError("classify_outward: outer radius must exceed the data radius");
    const FlowState s0 = make_state(gas, b.A, b.r, b.rho, b.u1, b.u2);
    const double eps = gas.eps_sonic;
    if (std::fabs(s0.m1sq - 1.0) <= eps)
        throw SonicBoundaryError("classify_outward: boundary data is radial-sonic");
    SmoothRegime out{};
    if (s0.m1sq > 1.0) {
        out.kind = SmoothRegimeKind::Supersonic;
        return out;
    }
    if (std::fabs(s0.msq - 1.0) <= eps) {
        out.kind = SmoothRegimeKind::SonicAtInner;
        out.r_c = b.r;
        return out;
    }
    if (s0.msq < 1.0) {
        out.kind = SmoothRegimeKind::Subsonic;
        return out;
    }
    // total-supersonic, radial-subsonic: the total Mach number decays outward
    // and reaches 1 exactly at the sonic circle
    const double r_c = sonic_radius(gas, inv);
    out.r_c = r_c;
    if (std::fabs(r1 - r_c) <= eps * r_c)
        out.kind = SmoothRegimeKind::SupersonicToSonicAtOuter;
    else if (r1 > r_c)
        out.kind = SmoothRegimeKind::TransonicSmooth;
    else
        out.kind = SmoothRegimeKind::Supersonic;
    return out;
}

SmoothRegime classify_inward(const GasModel& gas, const BoundaryState& b, double r0) {
    const FlowInvariants inv = invariants_from_boundary(gas, b);
    if (!(b.u1 < 0.0)) throw ConfigError("classify_inward: inward data requires u1 < 0");
    if (!(r0 > 0.0) || !(r0 < b.r))
        throw ConfigError("classify_inward: inner radius must lie inside the data radius");
    const FlowState s0 = make_state(gas, b.A, b.r, b.rho, b.u1, b.u2);
    const double eps = gas.eps_sonic;
    if (std::fabs(s0.m1sq - 1.0) <= eps)
        throw SonicBoundaryError("classify_inward: boundary data is radial-sonic");
    SmoothRegime out{};
    const double r_sharp = limiting_radius(gas, inv);
    out.r_sharp = r_sharp;
    if (r0 < r_sharp * (1.0 - eps)) {
        out.kind = SmoothRegimeKind::NoGlobalSolution;
        return out;
    }
    if (s0.m1sq > 1.0) {
        out.kind = SmoothRegimeKind::Supersonic;
        return out;
    }
    if (std::fabs(s0.msq - 1.0) <= eps) {
        // exactly sonic at the outer boundary, supersonic everywhere inside
        out.kind = SmoothRegimeKind::SupersonicToSonicAtOuter;
        out.r_c = b.r;
        return out;
    }
    if (s0.msq > 1.0) {
        out.kind = SmoothRegimeKind::Supersonic;
        return out;
    }
    // total-subsonic at the outer boundary: the total Mach number grows inward
    const double r_c = sonic_radius(gas, inv);
    out.r_c = r_c;
    if (std::fabs(r0 - r_c) <= eps * r_c)
        out.kind = SmoothRegimeKind::SonicAtInner;
    else if (r0 > r_c)
        out.kind = SmoothRegimeKind::Subsonic;
    else
        out.kind = SmoothRegimeKind::TransonicSmooth;
    return out;
}

CirculatoryFlow purely_circulatory(const GasModel& gas, const BoundaryState& b, double r_lo,
                                   double r_hi, int n) {
    gas.validate();
    if (b.u1 != 0.0) throw ConfigError("purely_circulatory: requires u1 = 0");
    if (b.u2 == 0.0) throw ConfigError("purely_circulatory: static gas, u2 must be nonzero");
    if (!(b.r > 0.0) || !(b.rho > 0.0) || !(b.A > 0.0))
        throw ConfigError("purely_circulatory: r, rho and A must be positive");
    if (!(r_lo > 0.0) || !(r_lo < r_hi))
        throw ConfigError("purely_circulatory: invalid radius interval");
    if (n < 2) throw ConfigError("purely_circulatory: need at least two samples");
    const double g = gas.gamma;
    const double kappa2 = b.r * b.u2;
    const double c2_0 = g * b.A * std::pow(b.rho, g - 1.0);
    const double B0 = 0.5 * b.u2 * b.u2 + c2_0 / (g - 1.0);
    if (!(B0 - kappa2 * kappa2 / (2.0 * r_lo * r_lo) > 0.0))
        throw NoRootError("purely_circulatory: annulus reaches the vacuum circle");
    const double coef = std::pow((g - 1.0) / (b.A * g), 1.0 / (g - 1.0));
    CirculatoryFlow out;
    out.profile.region = "circulatory";
    out.profile.branch = Branch::RadialSubsonic;
    out.profile.states.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double r = i + 1 == n ? r_hi : r_lo + (r_hi - r_lo) * i / (n - 1.0);
        const double rho =
            coef * std::pow(B0 - kappa2 * kappa2 / (2.0 * r * r), 1.0 / (g - 1.0));
        out.profile.states.push_back(make_state(gas, b.A, r, rho, 0.0, kappa2 / r));
    }
    out.regime = SmoothRegime{};
    if (b.u2 * b.u2 < c2_0) {
        out.regime.kind = SmoothRegimeKind::Subsonic;
    } else {
        out.regime.kind = SmoothRegimeKind::TransonicSmooth;
        out.regime.r_c = std::fabs(kappa2) * std::sqrt((g + 1.0) / (2.0 * (g - 1.0) * B0));
    }
    return out;
}

RadialProfile profile(const GasModel& gas, const FlowInvariants& inv, Branch branch, double r_lo,
                      double r_hi, int n, const std::string& region) {
    gas.validate();
    if (n < 2) throw ConfigError("profile: need at least two samples");
    if (!(r_lo > 0.0) || !(r_lo < r_hi)) throw ConfigError("profile: invalid radius interval");
    bool refine_lo = false;
    bool refine_hi = false;
    if (inv.kappa1 != 0.0) {
        const double r_sharp = limiting_radius(gas, inv);
        refine_lo = std::fabs(r_lo - r_sharp) <= 1e-2;
        refine_hi = std::fabs(r_hi - r_sharp) <= 1e-2;
    }
    RadialProfile prof;
    prof.region = region;
    prof.branch = branch;
    prof.states.reserve(n);
    for (double r : build_grid(r_lo, r_hi, n, refine_lo, refine_hi))
        prof.states.push_back(state_from_density(gas, inv, r, solve_density(gas, inv, r, branch)));
    return prof;
}

StateDerivatives ode_rhs(const GasModel& gas, const FlowState& s) {
    if (std::fabs(s.m1sq - 1.0) <= gas.eps_sonic)
        throw SonicSingularityError("ode_rhs: radial-sonic state, derivatives are unbounded");
    const double d = s.r * (1.0 - s.m1sq);
    StateDerivatives out;
    out.drho_dr = s.msq * s.rho / d;
    out.du1_dr = -(1.0 + s.m2sq) * s.u1 / d;
    out.du2_dr = -s.u2 / s.r;
    return out;
}

MachDerivatives mach_derivatives(const GasModel& gas, const FlowState& s) {
    if (std::fabs(s.m1sq - 1.0) <= gas.eps_sonic)
        throw SonicSingularityError(
            "mach_derivatives: radial-sonic state, derivatives are unbounded");
    const double g = gas.gamma;
    const double d = s.r * (s.m1sq - 1.0);
    MachDerivatives out;
    out.dm1sq_dr = s.m1sq * (2.0 + (g - 1.0) * s.m1sq + (g + 1.0) * s.m2sq) / d;
    out.dm2sq_dr = s.m2sq * (2.0 + (g - 3.0) * s.m1sq + (g - 1.0) * s.m2sq) / d;
    out.dmsq_dr = s.msq * (2.0 + (g - 1.0) * s.msq) / d;
    return out;
}

}  // namespace annular
