// Thermodynamic algebra for steady radially symmetric flow of a polytropic
// gas (p = A rho^gamma). A smooth flow region is fully described by four
// conserved quantities: the mass flux kappa1 = r rho u1, the angular momentum
// kappa2 = r u2, the Bernoulli constant B0 and the entropy constant A.
#pragma once

#include "annular/errors.hpp"

namespace annular {

struct GasModel {
    double gamma = 1.4;           // adiabatic exponent, > 1
    double tol_residual = 1e-10;  // absolute residual tolerance (natural scale)
    double tol_root = 1e-12;      // relative tolerance for root arguments
    double eps_sonic = 1e-9;      // relative tolerance for sonic classification

    // Throws ConfigError when gamma <= 1 or a tolerance is outside (0, 1e-3).
    void validate() const;
};

// Pointwise boundary data prescribed on one circle of the annulus.
struct BoundaryState {
    double r;    // radius
    double rho;  // density
    double u1;   // radial velocity (sign fixes the flow direction)
    double u2;   // angular velocity component
    double A;    // entropy constant
};

enum class FlowDirection { Outward, Inward };

struct FlowInvariants {
    double kappa1;  // mass flux constant r*rho*u1
    double kappa2;  // angular momentum constant r*u2
    double B0;      // Bernoulli constant
    double A;       // entropy constant
    FlowDirection direction;
};

// Full pointwise description of the flow at one radius.
struct FlowState {
    double r;
    double rho;
    double u1;
    double u2;
    double p;     // A*rho^gamma
    double c2;    // squared sound speed, gamma*p/rho
    double m1sq;  // squared radial Mach number
    double m2sq;  // squared angular Mach number
    double msq;   // squared total Mach number, m1sq + m2sq
};

// Extracts the conserved quantities from boundary data. Rejects u1 = 0
// (purely circulatory gas has no mass flux; see purely_circulatory).
FlowInvariants invariants_from_boundary(const GasModel& gas, const BoundaryState& b);

// Builds a FlowState from explicit velocities; fills p, c2 and Mach fields.
FlowState make_state(const GasModel& gas, double A, double r, double rho, double u1, double u2);

// Builds the state at (r, rho) with velocities taken from the invariants.
FlowState state_from_density(const GasModel& gas, const FlowInvariants& inv, double r, double rho);

// Bernoulli function 0.5*(u1^2+u2^2) + c2/(gamma-1) of a state.
double bernoulli(const GasModel& gas, const FlowState& s);

// Mass-flux polynomial
//   F_r(rho) = gamma/(gamma-1) A rho^{gamma+1} - (B0 - kappa2^2/(2 r^2)) rho^2
//              + kappa1^2/(2 r^2).
// Its roots are the densities compatible with the invariants at radius r.
double mass_flux_residual(const GasModel& gas, const FlowInvariants& inv, double r, double rho);

// K(r) = 2(gamma-1)B0/(gamma+1) - (gamma-1) kappa2^2 / ((gamma+1) r^2).
// This is the squared radial-sonic speed: u1^2 = c2 = K exactly when the
// radial Mach number is 1. Strictly increasing in r for kappa2 != 0.
double swirl_bernoulli_k(const GasModel& gas, const FlowInvariants& inv, double r);

// Density at which the full state is exactly total-sonic (|M| = 1):
// rho_c = (2(gamma-1)B0 / ((gamma+1) gamma A))^{1/(gamma-1)}.
double critical_density(const GasModel& gas, const FlowInvariants& inv);

// Density minimizing F_r at radius r: rho_*(r) = (K(r)/(gamma A))^{1/(gamma-1)}.
// F_r decreases on (0, rho_*) and increases on (rho_*, inf). At rho_* the
// sound speed equals the radial-sonic speed K(r), so a state there that also
// satisfies the Bernoulli law is exactly radial-sonic. Rejects r inside the
// vacuum circle where K(r) <= 0.
double minimizer_density(const GasModel& gas, const FlowInvariants& inv, double r);

// Entropy ratio A_plus/A_minus across a shock as a function of the radial
// velocity ratio x = u1_plus/u1_minus:
//   T1(x) = x^gamma/(gamma+1) * (-(gamma-1) + 4 gamma / ((gamma+1) x - (gamma-1))).
// Strictly decreasing on ((gamma-1)/(gamma+1), (gamma+1)/(gamma-1)); T1(1)=1.
// Rejects x outside the open interval (infinite-strength shocks).
double entropy_ratio_t1(const GasModel& gas, double x);

// Exposed alongside entropy_ratio_t1; evaluates the same closed form.
// Downstream pressure is never derived from this ratio: rh_jump computes it
// independently as p_plus = A_plus * rho_plus^gamma.
double pressure_ratio_t2(const GasModel& gas, double x);

// Vacuum radius r_tilde = |kappa2| / sqrt(2 B0). For r <= r_tilde the
// mass-flux polynomial has no root (the swirl alone exhausts the energy).
double vacuum_radius(const FlowInvariants& inv);

}  // namespace annular
