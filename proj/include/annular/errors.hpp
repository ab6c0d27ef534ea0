// Error types shared by the flow solvers. Solver failures derive from
// SolverError so front ends can map them to a common exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace annular {

// Invalid or inconsistent user input (bad config, bad boundary data).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Base class for failures of the numerical solvers.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The mass-flux relation has no root at the requested radius: the radius
// lies inside the limiting circle of the invariants.
struct NoRootError : SolverError {
    using SolverError::SolverError;
};

// A bracketing search could not enclose a sign change.
struct BracketFailure : SolverError {
    using SolverError::SolverError;
};

// Boundary data sits exactly on the radial-sonic circle, where the flow
// derivatives are unbounded and no smooth continuation exists.
struct SonicBoundaryError : SolverError {
    using SolverError::SolverError;
};

// A derivative evaluation was requested at a radial-sonic state.
struct SonicSingularityError : SolverError {
    using SolverError::SolverError;
};

// Shock construction requires radial-supersonic upstream data.
struct NotSupersonicError : SolverError {
    using SolverError::SolverError;
};

// Prescribed exit pressure lies outside the attainable interval (p1, p0).
struct PressureOutOfRangeError : SolverError {
    PressureOutOfRangeError(const std::string& msg, double p1_, double p0_, double p_ex_)
        : SolverError(msg), p1(p1_), p0(p0_), p_ex(p_ex_) {}
    double p1;
    double p0;
    double p_ex;
};

// No piecewise smooth shock solution exists for the prescribed data
// (inward exit-pressure problem). Carries the diagnostics that decided it.
struct NoSolutionError : SolverError {
    NoSolutionError(const std::string& msg, double f2_value, double rho_tested)
        : SolverError(msg), f2_at_rho_sharp_sharp(f2_value), rho_sharp_sharp(rho_tested) {}
    double f2_at_rho_sharp_sharp;
    double rho_sharp_sharp;
};

}  // namespace annular
