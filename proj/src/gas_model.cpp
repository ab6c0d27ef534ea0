#include "annular/gas_model.hpp"

#include <cmath>
#include <string>

namespace annular {

namespace {

void check_tol(double value, const char* name) {
    if (!(value > 0.0) || !(value < 1e-3))
        throw ConfigError(std::string("GasModel::validate: ") + name + " must lie in (0, 1e-3)");
}

}  // namespace

void GasModel::validate() const {
    if (!std::isfinite(gamma) || !(gamma > 1.0))
        throw ConfigError("GasModel::validate: gamma must be finite and greater than 1");
    check_tol(tol_residual, "tol_residual");
    check_tol(tol_root, "tol_root");
    check_tol(eps_sonic, "eps_sonic");
}

FlowInvariants invariants_from_boundary(const GasModel& gas, const BoundaryState& b) {
    gas.validate();
    if (!(b.r > 0.0))
        throw ConfigError("invariants_from_boundary: boundary radius must be positive");
    if (!(b.rho > 0.0))
        throw ConfigError("invariants_from_boundary: boundary density must be positive");
    if (!(b.A > 0.0))
        throw ConfigError("invariants_from_boundary: entropy constant must be positive");
    if (b.u1 == 0.0)
        throw ConfigError(
            "invariants_from_boundary: u1 = 0 carries no mass flux, use purely_circulatory");
    FlowInvariants inv;
    inv.kappa1 = b.r * b.rho * b.u1;
    inv.kappa2 = b.r * b.u2;
    const double c2 = gas.gamma * b.A * std::pow(b.rho, gas.gamma - 1.0);
    inv.B0 = 0.5 * (b.u1 * b.u1 + b.u2 * b.u2) + c2 / (gas.gamma - 1.0);
    inv.A = b.A;
    inv.direction = b.u1 > 0.0 ? FlowDirection::Outward : FlowDirection::Inward;
    return inv;
}

FlowState make_state(const GasModel& gas, double A, double r, double rho, double u1, double u2) {
    if (!(r > 0.0) || !(rho > 0.0) || !(A > 0.0))
        throw ConfigError("make_state: r, rho and A must be positive");
    FlowState s;
    s.r = r;
    s.rho = rho;
    s.u1 = u1;
    s.u2 = u2;
    s.p = A * std::pow(rho, gas.gamma);
    s.c2 = gas.gamma * s.p / rho;
    s.m1sq = u1 * u1 / s.c2;
    s.m2sq = u2 * u2 / s.c2;
    s.msq = s.m1sq + s.m2sq;
    return s;
}

FlowState state_from_density(const GasModel& gas, const FlowInvariants& inv, double r, double rho) {
    if (!(r > 0.0) || !(rho > 0.0))
        throw ConfigError("state_from_density: r and rho must be positive");
    const double u1 = inv.kappa1 / (r * rho);
    const double u2 = inv.kappa2 / r;
    return make_state(gas, inv.A, r, rho, u1, u2);
}

double bernoulli(const GasModel& gas, const FlowState& s) {
    return 0.5 * (s.u1 * s.u1 + s.u2 * s.u2) + s.c2 / (gas.gamma - 1.0);
}

double mass_flux_residual(const GasModel& gas, const FlowInvariants& inv, double r, double rho) {
    const double g = gas.gamma;
    return g / (g - 1.0) * inv.A * std::pow(rho, g + 1.0) -
           (inv.B0 - inv.kappa2 * inv.kappa2 / (2.0 * r * r)) * rho * rho +
           inv.kappa1 * inv.kappa1 / (2.0 * r * r);
}

double swirl_bernoulli_k(const GasModel& gas, const FlowInvariants& inv, double r) {
    const double g = gas.gamma;
    return (g - 1.0) / (g + 1.0) * (2.0 * inv.B0 - inv.kappa2 * inv.kappa2 / (r * r));
}

double critical_density(const GasModel& gas, const FlowInvariants& inv) {
    const double g = gas.gamma;
    return std::pow(2.0 * (g - 1.0) * inv.B0 / ((g + 1.0) * g * inv.A), 1.0 / (g - 1.0));
}

double minimizer_density(const GasModel& gas, const FlowInvariants& inv, double r) {
    const double k = swirl_bernoulli_k(gas, inv, r);
    if (!(k > 0.0))
        throw NoRootError("minimizer_density: radius inside the vacuum circle");
    return std::pow(k / (gas.gamma * inv.A), 1.0 / (gas.gamma - 1.0));
}

double entropy_ratio_t1(const GasModel& gas, double x) {
    const double g = gas.gamma;
    if (!(x > (g - 1.0) / (g + 1.0)) || !(x < (g + 1.0) / (g - 1.0)))
        throw ConfigError("entropy_ratio_t1: velocity ratio outside the admissible interval");
    return std::pow(x, g) / (g + 1.0) * (-(g - 1.0) + 4.0 * g / ((g + 1.0) * x - (g - 1.0)));
}

double pressure_ratio_t2(const GasModel& gas, double x) {
    const double g = gas.gamma;
    if (!(x > (g - 1.0) / (g + 1.0)) || !(x < (g + 1.0) / (g - 1.0)))
        throw ConfigError("pressure_ratio_t2: velocity ratio outside the admissible interval");
    return std::pow(x, g) / (g + 1.0) * (-(g - 1.0) + 4.0 * g / ((g + 1.0) * x - (g - 1.0)));
}

double vacuum_radius(const FlowInvariants& inv) {
    return std::fabs(inv.kappa2) / std::sqrt(2.0 * inv.B0);
}

}  // namespace annular
