// Smooth (shock-free) radially symmetric flows in an annulus: branch-resolved
// density solving, sonic and limiting radii, regime classification for
// outward and inward boundary data, profile sampling and the differential
// form of the flow relations used for cross-validation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annular/gas_model.hpp"

namespace annular {

// The mass-flux polynomial has two positive roots separated by the
// minimizer rho_*(r): rho^- < rho_* (radial Mach > 1) and rho^+ > rho_*
// (radial Mach < 1).
enum class Branch { RadialSupersonic, RadialSubsonic };

enum class SmoothRegimeKind {
    Supersonic,                // total Mach > 1 on the whole annulus
    Subsonic,                  // total Mach < 1 on the whole annulus
    TransonicSmooth,           // total Mach crosses 1 at r_c inside the annulus
    SupersonicToSonicAtOuter,  // supersonic inside, exactly sonic at r = r1
    SonicAtInner,              // exactly sonic at r = r0
    NoGlobalSolution,          // annulus reaches inside the limiting circle
    PurelyCirculatory          // zero radial velocity special case
};

const char* to_string(SmoothRegimeKind kind);

struct SmoothRegime {
    SmoothRegimeKind kind;
    std::optional<double> r_c;      // sonic circle, when it enters the analysis
    std::optional<double> r_sharp;  // limiting circle, when it enters the analysis
};

struct RadialProfile {
    std::vector<FlowState> states;  // ascending radius
    std::string region;             // label carried into serialized output
    Branch branch;
};

// Root of F_r on the requested branch side of rho_*(r). Throws NoRootError
// when F_r(rho_*(r)) > 0 (radius inside the limiting circle) and
// BracketFailure when no sign change can be bracketed.
double solve_density(const GasModel& gas, const FlowInvariants& inv, double r, Branch branch);

// Radius of the sonic circle:
// r_c = sqrt((gamma+1)(kappa1^2 + kappa2^2 rho_c^2) / (2(gamma-1) B0 rho_c^2)).
double sonic_radius(const GasModel& gas, const FlowInvariants& inv);

// Limiting circle r_sharp: unique root in (r_tilde, inf) of
//   G(r) = F_r(rho_*(r))
//        = -0.5 (gamma A)^{-2/(gamma-1)} K(r)^{(gamma+1)/(gamma-1)} + kappa1^2/(2 r^2),
// which is strictly decreasing. The two density branches merge there with
// radial Mach exactly 1; no smooth continuation exists inside.
double limiting_radius(const GasModel& gas, const FlowInvariants& inv);

// Same radius from the equivalent scaling form
//   2(gamma-1)B0 x^2/(gamma+1) = (gamma A)^{2/(gamma+1)} |kappa1|^{2(gamma-1)/(gamma+1)}
//                                 x^{4/(gamma+1)} + (gamma-1) kappa2^2/(gamma+1),
// solved independently of G. Used to cross-check limiting_radius and to
// locate the downstream limiting circle of shocked inward flows.
double limiting_radius_power_eq(const GasModel& gas, const FlowInvariants& inv);

// Classification for outward data at r0 = b.r on an annulus reaching r1.
// Requires b.u1 > 0. Throws SonicBoundaryError when the data is exactly
// radial-sonic.
SmoothRegime classify_outward(const GasModel& gas, const BoundaryState& b, double r1);

// Classification for inward data at r1 = b.r on an annulus reaching r0 < r1.
// Requires b.u1 < 0.
SmoothRegime classify_inward(const GasModel& gas, const BoundaryState& b, double r0);

struct CirculatoryFlow {
    RadialProfile profile;
    SmoothRegime regime;
};

// Zero-radial-velocity gas rotating in the annulus [r_lo, r_hi]:
//   rho(r) = ((gamma-1)/(A gamma))^{1/(gamma-1)} (B0 - kappa2^2/(2 r^2))^{1/(gamma-1)}.
// Subsonic when the boundary swirl is subsonic, otherwise transonic with the
// sonic circle at r_c = sqrt((gamma+1)/(2(gamma-1)B0)) |kappa2|.
CirculatoryFlow purely_circulatory(const GasModel& gas, const BoundaryState& b,
                                   double r_lo, double r_hi, int n);

// Samples the branch on [r_lo, r_hi] with n points. The grid is uniform; when
// an endpoint sits within 1e-2 of the limiting circle the spacing is refined
// geometrically (ratio 0.9) toward that endpoint to resolve the square-root
// degeneracy. Smooth flows never change branch: only the total Mach number
// crosses 1 at r_c, the radial branch is fixed by the boundary data.
RadialProfile profile(const GasModel& gas, const FlowInvariants& inv, Branch branch,
                      double r_lo, double r_hi, int n, const std::string& region = "smooth");

struct StateDerivatives {
    double drho_dr;
    double du1_dr;
    double du2_dr;
};

// Differential form of the flow relations:
//   rho' = |M|^2 rho / (r (1 - M1^2)),
//   u1'  = -(1 + M2^2) u1 / (r (1 - M1^2)),
//   u2'  = -u2 / r.
// Throws SonicSingularityError when M1^2 is within eps_sonic of 1.
StateDerivatives ode_rhs(const GasModel& gas, const FlowState& s);

struct MachDerivatives {
    double dm1sq_dr;
    double dm2sq_dr;
    double dmsq_dr;
};

// Closed forms for the derivatives of the squared Mach numbers:
//   (M1^2)'  = M1^2 (2 + (gamma-1)M1^2 + (gamma+1)M2^2) / (r (M1^2 - 1)),
//   (M2^2)'  = M2^2 (2 + (gamma-3)M1^2 + (gamma-1)M2^2) / (r (M1^2 - 1)),
//   (|M|^2)' = |M|^2 (2 + (gamma-1)|M|^2) / (r (M1^2 - 1)).
MachDerivatives mach_derivatives(const GasModel& gas, const FlowState& s);

}  // namespace annular
