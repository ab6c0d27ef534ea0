// Subcommand implementations shared by the command-line tool and the tests.
// Report commands print a JSON object; table commands write CSV or JSON files
// through a temporary with an atomic rename so aborted runs leave nothing
// behind.
#pragma once

#include <iosfwd>
#include <string>

#include "annular/run_config.hpp"

namespace annular {

// Classifies the configured problem and prints the regime report as a JSON
// object with sorted keys: regime label, the diagnostic radii and densities
// the classification touched, and the admissible pressure interval for the
// shock problems. Returns the process exit code: 0 for a solvable regime,
// 3 when the classification is NoSolution or NoGlobalSolution or a solver
// error had to be folded into the report.
int run_classify(const RunConfig& cfg, std::ostream& out);

// Solves the configured shock problem and prints the full solution (shock
// position, upstream and downstream states, entropy parameter, velocity
// ratio, exit pressure, regime) as a JSON object. Exit code as run_classify.
int run_shock(const RunConfig& cfg, std::ostream& out);

// Prints the analytical radii and the pressure interval of the configured
// data: r_tilde, r_star, r_star_prime, r_c, r_sharp, p1, p0.
int run_limits(const RunConfig& cfg, std::ostream& out);

// Writes the radial profile with header r,rho,u1,u2,p,c2,m1sq,m2sq,msq,A,region
// and exactly cfg.samples rows at 17 significant digits. Shock problems split
// the rows between the regions in proportion to their widths (at least two
// rows each) and the shock radius appears as the boundary row of both.
// Solver errors propagate after the temporary file is removed.
void run_profile(const RunConfig& cfg, const std::string& out_path);

// Writes the shock-position sweep with header r_b,p_exit,a_plus,x,downstream_msq,regime
// for n_points positions at the cell midpoints of a uniform partition of
// (r_inner, r_outer). The p_exit column is strictly decreasing.
void run_sweep(const RunConfig& cfg, int n_points, const std::string& out_path);

}  // namespace annular
