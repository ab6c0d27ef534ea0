// Transonic shock solutions: the jump relations across a circular shock,
// exit-pressure maps, the admissible pressure interval, shock placement by
// prescribed exit pressure, and the full regime classification for outward
// and inward transonic shock problems.
#pragma once

#include <optional>

#include "annular/gas_model.hpp"
#include "annular/smooth_flow.hpp"

namespace annular {

enum class ShockRegimeKind {
    SupSubUniform,              // supersonic upstream, subsonic downstream throughout
    SupSupUniform,              // downstream supersonic all the way to the exit
    SupSupToSubsonicDownstream, // downstream starts supersonic, crosses sonic inside
    SupSupSonicAtExit,          // downstream supersonic, exactly sonic at the exit
    SupSonicCoincident,         // shock at the coincidence radius, downstream exactly sonic
    SubToSupersonicDownstream,  // inward: downstream starts subsonic, crosses sonic inside
    SonicAtExit,                // inward: downstream exactly sonic at the exit
    NoSolution                  // prescribed pressure not attainable by any shock
};

const char* to_string(ShockRegimeKind kind);

struct ShockRegime {
    ShockRegimeKind kind;
    int table_case;  // 1, 2 or 3 by the position of r_star_prime vs the annulus
    double r_star;        // swirl sonic radius, a(r_star) = (gamma-1)/(gamma+1)
    double r_star_prime;  // coincidence radius, f1(r_star_prime) = 1
    double p0;            // exit pressure of a shock just inside r0
    double p1;            // exit pressure of a shock just inside r1
    std::optional<double> p_star_prime;  // exit pressure of the coincident shock
    double f2_at_rho_sharp;  // exit sonic test value for the prescribed pressure
    double rho_sharp;        // candidate sonic exit density for that pressure
    std::optional<double> rho_sharp_sharp;        // inward: radial-sonic exit density
    std::optional<double> f2_at_rho_sharp_sharp;  // inward: feasibility test value
    std::optional<double> r_sharp_minus;  // inward: upstream limiting circle
    std::optional<double> r_sharp_plus;   // inward: downstream limiting circle
    double pressure_margin;  // signed distance of p_ex from the nearest interval end
    double f2_margin;        // relative margin of the f2 sign decision
};

struct JumpResult {
    FlowState downstream;
    double A_plus;  // downstream entropy parameter
    double x;       // downstream-to-upstream radial velocity ratio
};

// Rankine-Hugoniot jump across a circular shock at the radius of `upstream`,
// which must be radial-supersonic (|u1| > c). Tangential velocity and mass
// flux are continuous, the radial velocity flips across the radial-sonic
// speed: u1_plus = K(r_b)/u1_minus. Entropy rises downstream.
JumpResult rh_jump(const GasModel& gas, const FlowInvariants& inv, const FlowState& upstream);

struct ShockSolution {
    double r_b;
    FlowState upstream;
    FlowState downstream;
    double A_plus;
    double x;
    double p_exit;
    ShockRegime regime;
};

// Pressure at r_exit reached by continuing the downstream branch of a shock
// placed at r_b. The flow direction of `inv` decides which side r_exit is on:
// outward flows exit at r_exit > r_b, inward flows at r_exit < r_b. Throws
// NoRootError when the downstream flow hits its limiting circle first.
double exit_pressure_of_shock(const GasModel& gas, const FlowInvariants& inv,
                              double r_b, double r_exit);

struct PressureInterval {
    double p1;  // infimum, shock just inside r1
    double p0;  // supremum, shock just inside r0
};

// Exit pressures of the two extreme shock positions. The map r_b -> p_exit is
// strictly decreasing, so (p1, p0) is exactly the attainable open interval.
// The extreme positions are evaluated just inside the annulus. For inward
// flows a shock placed too close to r1 can lose downstream feasibility (the
// shocked flow hits its limiting circle before the exit); the infimum is then
// taken at the outermost feasible shock position instead.
PressureInterval pressure_interval(const GasModel& gas, const FlowInvariants& inv,
                                   double r0, double r1);

// Shock position realizing the prescribed exit pressure, found by bisecting
// the monotone map r_b -> p_exit. Throws PressureOutOfRangeError when p_ex
// lies outside the attainable interval.
ShockSolution shock_from_exit_pressure(const GasModel& gas, const FlowInvariants& inv,
                                       double r0, double r1, double p_ex);

// Swirl fraction a(r) = kappa2^2 / (2 r^2 B0 - kappa2^2), the ratio of swirl
// kinetic energy to the rest of the Bernoulli budget. Decreasing in r,
// blows up at the vacuum radius.
double swirl_fraction_a(const FlowInvariants& inv, double r);

// f1(r) = (1 - (gamma+1)a(r)/(gamma-1)) * M1^2(r) along the radial-supersonic
// branch. The downstream flow of a shock at r is total-supersonic exactly
// when f1(r) < 1.
double classifier_f1(const GasModel& gas, const FlowInvariants& inv, double r);

// Radius r_star where a(r) = (gamma-1)/(gamma+1):
// r_star = sqrt(gamma kappa2^2 / ((gamma-1) B0)). Inside it f1 < 0 and every
// shock has subsonic downstream flow.
double swirl_sonic_radius(const GasModel& gas, const FlowInvariants& inv);

// Coincidence radius r_star_prime: unique root of f1 = 1 beyond
// max(r_star, r_sharp). A shock there has exactly sonic total downstream
// Mach number. Without swirl f1 = 1/M1^2 reaches 1 only in the limit at the
// limiting circle, which is returned in that case.
double coincidence_radius(const GasModel& gas, const FlowInvariants& inv);

// Quadratic deciding the downstream total Mach regime. With x the squared
// radial Mach number of the upstream state and a the swirl fraction at the
// shock radius,
//   g_a(x) = (1 - x)(2/(gamma+1) + (gamma-1)x/(gamma+1)) + a x (x + 2/(gamma-1))
// has the sign of |M_plus|^2 - 1.
double downstream_sonic_g(const GasModel& gas, double a, double x);

struct GRoots {
    double x1;                // always -2/(gamma-1)
    std::optional<double> x2; // 1/(1 - (gamma+1)a/(gamma-1)) unless that pole vanishes
};

GRoots downstream_sonic_g_roots(const GasModel& gas, double a);

struct ExitStateTest {
    double f2_at_rho_sharp;
    double rho_sharp;
    int regime_sign;  // +1 exit supersonic, 0 exactly sonic, -1 subsonic
    double margin;    // |f2| relative to the magnitude scale of its terms
};

// Exit sonic test. The exit density for pressure p_ex is the unique positive
// root of the downward parabola
//   f2(rho) = gamma p_ex rho/(gamma-1) - (B0 - kappa2^2/(2 r_exit^2)) rho^2
//             + kappa1^2/(2 r_exit^2),
// and the exit flow is total-supersonic exactly when
// f2(rho_sharp) > 0 at rho_sharp = gamma(gamma+1) p_ex / (2(gamma-1) B0).
ExitStateTest exit_state_test_f2(const GasModel& gas, const FlowInvariants& inv,
                                 double p_ex, double r_exit);

// Outward transonic shock problem: radial-supersonic inflow at r0 = b.r,
// prescribed pressure at the exit r1. Places the shock when p_ex is
// attainable and classifies the downstream regime. Throws
// PressureOutOfRangeError outside [p1, p0] and NotSupersonicError for
// non-supersonic inflow.
ShockSolution classify_outward_shock(const GasModel& gas, const BoundaryState& b,
                                     double r1, double p_ex);

// Inward transonic shock problem: radial-supersonic inflow at r1 = b.r,
// prescribed pressure at the exit r0 < r1. The inflow must stay supersonic
// down to r0, which requires r0 at or outside the upstream limiting circle;
// the exit pressure must also be high enough for the shocked flow to reach
// the exit ahead of its own limiting circle. Throws NoSolutionError when no
// shock position can realize any exit state, PressureOutOfRangeError when
// p_ex falls outside the attainable interval.
ShockSolution classify_inward_shock(const GasModel& gas, const BoundaryState& b,
                                    double r0, double p_ex);

struct ShockInequalities {
    double radial_mach_sum_minus_2;  // M1_plus^2 + M1_minus^2 - 2, positive
    double cross_mach_combination;   // M1+^2 M2-^2 + M1-^2 M2+^2 - M2+^2 - M2-^2, nonneg
    double dK0_dr_b;                 // derivative of the jump constant, nonneg
    double dA_plus_dr_b;             // entropy growth with shock radius, positive
    bool all_hold;
};

// Evaluates the structural inequalities behind the monotonicity of the
// exit-pressure map at a computed shock. dK0/dr_b = 2(gamma-1)u2^2/((gamma+1) r_b)
// analytically; dA_plus/dr_b by central difference of the jump.
ShockInequalities verify_shock_inequalities(const GasModel& gas, const FlowInvariants& inv,
                                            const ShockSolution& solution);

}  // namespace annular
