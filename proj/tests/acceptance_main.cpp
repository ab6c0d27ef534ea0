// Acceptance gate for the annular flow solver. Each criterion prints one
// PASS/FAIL line; the process exits nonzero when any criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "annular/shock_flow.hpp"
#include "annular/smooth_flow.hpp"

using namespace annular;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Checker {
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
    void close(const std::string& what, double got, double want, double tol) {
        if (!(rel(got, want) <= tol))
            failures.push_back(what + ": got " + fmt(got) + ", want " + fmt(want));
    }
};

GasModel reference_gas() {
    GasModel gas;
    gas.gamma = 2.0;
    return gas;
}

// gamma=2, A=1, B0=3, kappa1=kappa2=1
FlowInvariants reference_invariants() {
    return invariants_from_boundary(reference_gas(), BoundaryState{1.0, 1.0, 1.0, 1.0, 1.0});
}

FlowInvariants reference_invariants_inward() {
    return invariants_from_boundary(reference_gas(), BoundaryState{1.0, 1.0, -1.0, 1.0, 1.0});
}

// gamma=1.4, A=1, B0=3.5, kappa1=+-1, no swirl
FlowInvariants nozzle_invariants(GasModel& gas, double u1_sign) {
    gas = GasModel{};
    gas.gamma = 1.4;
    const double rho = 0.5;
    const double c2 = gas.gamma * std::pow(rho, gas.gamma - 1.0);
    const double u1 = std::sqrt(2.0 * (3.5 - c2 / (gas.gamma - 1.0)));
    return invariants_from_boundary(gas,
                                    BoundaryState{1.0 / (rho * u1), rho, u1_sign * u1, 0.0, 1.0});
}

BoundaryState boundary_on_branch(const GasModel& gas, const FlowInvariants& inv, double r,
                                 Branch branch) {
    const FlowState s = state_from_density(gas, inv, r, solve_density(gas, inv, r, branch));
    return BoundaryState{s.r, s.rho, s.u1, s.u2, inv.A};
}

// random radially supersonic boundary data, gamma drawn from three values
FlowInvariants random_invariants(std::mt19937& rng, GasModel& gas, double* r_data) {
    std::uniform_real_distribution<double> pick(0.0, 1.0), rr(0.6, 1.8), rho_d(0.4, 1.6),
        a_d(0.5, 2.0), mach(1.05, 2.5), swirl(0.1, 1.2);
    const double gammas[3] = {1.4, 5.0 / 3.0, 2.0};
    gas = GasModel{};
    gas.gamma = gammas[static_cast<int>(pick(rng) * 3.0) % 3];
    const double r = rr(rng), rho = rho_d(rng), A = a_d(rng);
    const double c = std::sqrt(gas.gamma * A * std::pow(rho, gas.gamma - 1.0));
    const BoundaryState b{r, rho, mach(rng) * c, swirl(rng) * c, A};
    if (r_data) *r_data = r;
    return invariants_from_boundary(gas, b);
}

// one classical RK4 step of the differential flow relations
FlowState rk4_step(const GasModel& gas, const FlowInvariants& inv, const FlowState& s, double h) {
    const auto at = [&](double dr, double drho, double du1, double du2) {
        return make_state(gas, inv.A, s.r + dr, s.rho + drho, s.u1 + du1, s.u2 + du2);
    };
    const StateDerivatives k1 = ode_rhs(gas, s);
    const FlowState s2 = at(h / 2, h / 2 * k1.drho_dr, h / 2 * k1.du1_dr, h / 2 * k1.du2_dr);
    const StateDerivatives k2 = ode_rhs(gas, s2);
    const FlowState s3 = at(h / 2, h / 2 * k2.drho_dr, h / 2 * k2.du1_dr, h / 2 * k2.du2_dr);
    const StateDerivatives k3 = ode_rhs(gas, s3);
    const FlowState s4 = at(h, h * k3.drho_dr, h * k3.du1_dr, h * k3.du2_dr);
    const StateDerivatives k4 = ode_rhs(gas, s4);
    return make_state(gas, inv.A, s.r + h,
                      s.rho + h / 6 * (k1.drho_dr + 2 * k2.drho_dr + 2 * k3.drho_dr + k4.drho_dr),
                      s.u1 + h / 6 * (k1.du1_dr + 2 * k2.du1_dr + 2 * k3.du1_dr + k4.du1_dr),
                      s.u2 + h / 6 * (k1.du2_dr + 2 * k2.du2_dr + 2 * k3.du2_dr + k4.du2_dr));
}

// exit pressure at which the exit state is exactly total-sonic, bisecting the
// sign of f2(rho_sharp) independently of any shock placement
double sonic_exit_pressure_oracle(const GasModel& gas, const FlowInvariants& inv, double r_exit,
                                  double p_lo, double p_hi, Checker& ck) {
    const auto f2 = [&](double p) { return exit_state_test_f2(gas, inv, p, r_exit).f2_at_rho_sharp; };
    double f_lo = f2(p_lo);
    for (int i = 0; i < 60 && f_lo <= 0.0; ++i) f_lo = f2(p_lo /= 2.0);
    double f_hi = f2(p_hi);
    for (int i = 0; i < 60 && f_hi >= 0.0; ++i) f_hi = f2(p_hi *= 2.0);
    ck.require(f_lo > 0.0 && f_hi < 0.0, "sonic pressure oracle: no sign change in bracket");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (p_lo + p_hi);
        if (mid == p_lo || mid == p_hi) break;
        const double f_mid = f2(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            p_lo = mid;
            f_lo = f_mid;
        } else {
            p_hi = mid;
        }
    }
    return 0.5 * (p_lo + p_hi);
}

// continues the downstream flow of a placed shock to the exit radius
FlowState continue_to_exit(const GasModel& gas, const ShockSolution& sol, double r_exit) {
    const BoundaryState b{sol.downstream.r, sol.downstream.rho, sol.downstream.u1,
                          sol.downstream.u2, sol.A_plus};
    const FlowInvariants inv_plus = invariants_from_boundary(gas, b);
    return state_from_density(gas, inv_plus, r_exit,
                              solve_density(gas, inv_plus, r_exit, Branch::RadialSubsonic));
}

// regime label, case number and the f2 sign test against the directly
// continued exit state
void check_solution(Checker& ck, const GasModel& gas, const FlowInvariants& inv,
                    const ShockSolution& sol, double r_exit, double p_ex, ShockRegimeKind want,
                    int want_case, std::set<std::string>& seen) {
    seen.insert(to_string(sol.regime.kind));
    const std::string tag = std::string(" (") + to_string(want) + " at p=" + fmt(p_ex) + ")";
    ck.require(sol.regime.kind == want,
               std::string("expected ") + to_string(want) + ", got " +
                   to_string(sol.regime.kind) + " at p=" + fmt(p_ex));
    ck.require(sol.regime.table_case == want_case,
               "wrong table case " + std::to_string(sol.regime.table_case) + tag);
    const ExitStateTest t = exit_state_test_f2(gas, inv, p_ex, r_exit);
    const FlowState exit_state = continue_to_exit(gas, sol, r_exit);
    ck.require(rel(exit_state.p, p_ex) < 1e-8, "continued exit pressure mismatch" + tag);
    if (t.regime_sign > 0)
        ck.require(exit_state.msq > 1.0 - 1e-6, "f2 says supersonic exit, profile disagrees" + tag);
    else if (t.regime_sign < 0)
        ck.require(exit_state.msq < 1.0 + 1e-6, "f2 says subsonic exit, profile disagrees" + tag);
    else
        ck.require(std::fabs(exit_state.msq - 1.0) <= 1e-6,
                   "f2 says sonic exit, profile disagrees" + tag);
}

std::string workdir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/annular_accept_XXXXXX";
        const char* d = mkdtemp(tmpl);
        return std::string(d ? d : "/tmp");
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, std::string* out) {
    const std::string dir = workdir();
    const std::string cmd =
        std::string(ANNULAR_CLI_PATH) + " " + args + " > " + dir + "/out.txt 2> " + dir + "/err.txt";
    const int rc = std::system(cmd.c_str());
    if (out) *out = slurp(dir + "/out.txt");
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double cap_ms;  // 0 means no cap
        std::function<void(Checker&)> body;
    };

    const std::vector<Criterion> criteria = {
        {1, "closed-form anchors at the exact-arithmetic setup", 1.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             const FlowInvariants inv = reference_invariants();
             ck.close("critical density", critical_density(gas, inv), 1.0, 1e-12);
             ck.close("sonic radius", sonic_radius(gas, inv), 1.0, 1e-12);
             const double f = mass_flux_residual(gas, inv, 1.0, 1.0);
             ck.require(f == 0.0, "mass flux residual at (1,1) is " + fmt(f) + ", want exact 0");
             ck.close("radially supersonic root at r=1",
                      solve_density(gas, inv, 1.0, Branch::RadialSupersonic),
                      (0.5 + std::sqrt(4.25)) / 4.0, 1e-12);
         }},

        {2, "limiting radius bracket and lower bound", 10.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             const FlowInvariants inv = reference_invariants();
             const double r_sharp = limiting_radius(gas, inv);
             ck.require(r_sharp >= 0.953 && r_sharp <= 0.957,
                        "limiting radius " + fmt(r_sharp) + " outside [0.953, 0.957]");
             const double est =
                 std::pow(gas.gamma * inv.A, 1.0 / (gas.gamma - 1.0)) *
                 std::pow((gas.gamma + 1.0) / (2.0 * (gas.gamma - 1.0) * inv.B0),
                          (gas.gamma + 1.0) / (2.0 * (gas.gamma - 1.0))) *
                 std::fabs(inv.kappa1);
             ck.require(r_sharp >= est, "lower bound estimate " + fmt(est) + " exceeds " +
                                            fmt(r_sharp));
             ck.close("power-form cross-check", limiting_radius_power_eq(gas, inv), r_sharp,
                      1e-10);
         }},

        {3, "rk4 integration matches the algebraic branch", 1000.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             const FlowInvariants inv = reference_invariants();
             const int n = 500, substeps = 4;
             const double r_from = 1.05, r_to = 1.5;
             FlowState s = state_from_density(
                 gas, inv, r_from, solve_density(gas, inv, r_from, Branch::RadialSupersonic));
             double worst = 0.0;
             for (int i = 1; i < n; ++i) {
                 const double r_next = r_from + i * (r_to - r_from) / (n - 1);
                 const double h = (r_next - s.r) / substeps;
                 for (int k = 0; k < substeps; ++k) s = rk4_step(gas, inv, s, h);
                 const FlowState alg = state_from_density(
                     gas, inv, r_next, solve_density(gas, inv, r_next, Branch::RadialSupersonic));
                 worst = std::max({worst, rel(s.rho, alg.rho), rel(s.u1, alg.u1),
                                   rel(s.u2, alg.u2)});
             }
             ck.require(worst <= 1e-8,
                        "worst pointwise deviation " + fmt(worst) + " exceeds 1e-8");
         }},

        {4, "jump conditions, entropy rise and structural inequalities", 1000.0,
         [](Checker& ck) {
             std::mt19937 rng(42);
             for (int trial = 0; trial < 100 && ck.failures.size() < 4; ++trial) {
                 GasModel gas;
                 double r_b = 0.0;
                 const FlowInvariants inv = random_invariants(rng, gas, &r_b);
                 const FlowState up = state_from_density(
                     gas, inv, r_b, solve_density(gas, inv, r_b, Branch::RadialSupersonic));
                 const JumpResult j = rh_jump(gas, inv, up);
                 const FlowState& dn = j.downstream;
                 const std::string tag = " in trial " + std::to_string(trial);
                 ck.require(rel(dn.rho * dn.u1, up.rho * up.u1) <= 1e-10,
                            "mass flux residual" + tag);
                 ck.require(rel(dn.rho * dn.u1 * dn.u1 + dn.p, up.rho * up.u1 * up.u1 + up.p) <=
                                1e-10,
                            "momentum flux residual" + tag);
                 ck.require(rel(dn.u2, up.u2) <= 1e-10, "tangential velocity residual" + tag);
                 ck.require(rel(bernoulli(gas, dn), bernoulli(gas, up)) <= 1e-10,
                            "energy residual" + tag);
                 ck.require(dn.p > up.p, "pressure does not rise" + tag);
                 ck.require(rel(j.A_plus / inv.A, entropy_ratio_t1(gas, j.x)) <= 1e-10,
                            "entropy ratio disagrees with its closed form" + tag);
                 ShockSolution sol;
                 sol.r_b = r_b;
                 sol.upstream = up;
                 sol.downstream = dn;
                 sol.A_plus = j.A_plus;
                 sol.x = j.x;
                 sol.p_exit = dn.p;
                 const ShockInequalities iq = verify_shock_inequalities(gas, inv, sol);
                 ck.require(iq.all_hold, "structural inequalities fail" + tag);
             }
         }},

        {5, "exit pressure monotonicity and placement round-trips", 5000.0,
         [](Checker& ck) {
             std::mt19937 rng(7);
             std::uniform_real_distribution<double> widen(0.15, 0.6);
             for (int cfg = 0; cfg < 10 && ck.failures.size() < 4; ++cfg) {
                 GasModel gas;
                 double r0 = 0.0;
                 const FlowInvariants inv = random_invariants(rng, gas, &r0);
                 const double r1 = r0 * (1.0 + widen(rng));
                 const std::string tag = " in config " + std::to_string(cfg);
                 double prev = 0.0;
                 for (int i = 0; i < 50; ++i) {
                     const double r_b = r0 + (i + 0.5) * (r1 - r0) / 50.0;
                     const double p = exit_pressure_of_shock(gas, inv, r_b, r1);
                     if (i > 0 && !(p < prev)) {
                         ck.require(false, "exit pressure not strictly decreasing" + tag);
                         break;
                     }
                     prev = p;
                     const ShockSolution sol = shock_from_exit_pressure(gas, inv, r0, r1, p);
                     if (rel(sol.r_b, r_b) > 1e-9) {
                         ck.require(false, "round-trip shock position off by " +
                                               fmt(rel(sol.r_b, r_b)) + tag);
                         break;
                     }
                 }
             }
         }},

        {6, "coincident shock at the sonic coincidence radius", 100.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             const FlowInvariants inv = reference_invariants();
             const double r_cp = coincidence_radius(gas, inv);
             ck.require(std::fabs(classifier_f1(gas, inv, r_cp) - 1.0) <= 1e-10,
                        "f1 at the coincidence radius is " + fmt(classifier_f1(gas, inv, r_cp)));
             const FlowState up = state_from_density(
                 gas, inv, r_cp, solve_density(gas, inv, r_cp, Branch::RadialSupersonic));
             const JumpResult j = rh_jump(gas, inv, up);
             ck.require(std::fabs(j.downstream.msq - 1.0) <= 1e-6,
                        "downstream total Mach squared is " + fmt(j.downstream.msq));
             const double p_cp = exit_pressure_of_shock(gas, inv, r_cp, 1.2);
             const BoundaryState b = boundary_on_branch(gas, inv, 0.97, Branch::RadialSupersonic);
             const ShockSolution sol = classify_outward_shock(gas, b, 1.2, p_cp);
             ck.require(sol.regime.kind == ShockRegimeKind::SupSonicCoincident,
                        std::string("regime at the coincident pressure is ") +
                            to_string(sol.regime.kind));
             ck.close("coincident shock position", sol.r_b, r_cp, 1e-7);
         }},

        {7, "full regime table coverage with exit Mach agreement", 10000.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             std::set<std::string> seen;

             // outward, entrance data radially supersonic at r0
             const FlowInvariants inv = reference_invariants();
             const auto out_case = [&](double r0, double r1, double p, ShockRegimeKind want,
                                       int want_case) {
                 const BoundaryState b = boundary_on_branch(gas, inv, r0, Branch::RadialSupersonic);
                 check_solution(ck, gas, inv, classify_outward_shock(gas, b, r1, p), r1, p, want,
                                want_case, seen);
             };
             {
                 // coincidence radius beyond the annulus: supersonic downstream
                 const PressureInterval pi = pressure_interval(gas, inv, 0.97, 1.02);
                 const double p_se = sonic_exit_pressure_oracle(gas, inv, 1.02, pi.p1, pi.p0, ck);
                 out_case(0.97, 1.02, 0.5 * (pi.p1 + p_se), ShockRegimeKind::SupSupUniform, 1);
                 out_case(0.97, 1.02, p_se, ShockRegimeKind::SupSupSonicAtExit, 1);
                 out_case(0.97, 1.02, 0.5 * (p_se + pi.p0),
                          ShockRegimeKind::SupSupToSubsonicDownstream, 1);
             }
             {
                 // coincidence radius inside the annulus
                 const double r_cp = coincidence_radius(gas, inv);
                 const PressureInterval pi = pressure_interval(gas, inv, 0.97, 1.031);
                 const double p_cp = exit_pressure_of_shock(gas, inv, r_cp, 1.031);
                 const double p_se = sonic_exit_pressure_oracle(gas, inv, 1.031, pi.p1, pi.p0, ck);
                 ck.require(p_se < p_cp,
                            "sonic exit pressure should fall below the coincident pressure");
                 out_case(0.97, 1.031, 0.5 * (p_cp + pi.p0),
                          ShockRegimeKind::SupSupToSubsonicDownstream, 2);
                 out_case(0.97, 1.031, p_cp, ShockRegimeKind::SupSonicCoincident, 2);
                 out_case(0.97, 1.031, 0.5 * (pi.p1 + p_cp), ShockRegimeKind::SupSubUniform, 2);
             }
             {
                 // coincidence radius inside the inner circle: subsonic downstream
                 const PressureInterval pi = pressure_interval(gas, inv, 1.05, 1.2);
                 out_case(1.05, 1.2, 0.5 * (pi.p1 + pi.p0), ShockRegimeKind::SupSubUniform, 3);
             }

             // inward, entrance data radially supersonic at r1
             const FlowInvariants inv_in = reference_invariants_inward();
             const auto in_case = [&](double r0, double r1, double p, ShockRegimeKind want,
                                      int want_case) {
                 const BoundaryState b =
                     boundary_on_branch(gas, inv_in, r1, Branch::RadialSupersonic);
                 check_solution(ck, gas, inv_in, classify_inward_shock(gas, b, r0, p), r0, p, want,
                                want_case, seen);
             };
             {
                 const PressureInterval pi = pressure_interval(gas, inv_in, 1.1, 1.2);
                 const double p_se =
                     sonic_exit_pressure_oracle(gas, inv_in, 1.1, pi.p1 * (1 + 1e-9), pi.p0, ck);
                 in_case(1.1, 1.2, 0.5 * (p_se + pi.p0), ShockRegimeKind::SupSubUniform, 1);
                 in_case(1.1, 1.2, p_se, ShockRegimeKind::SonicAtExit, 1);
                 in_case(1.1, 1.2, 0.5 * (pi.p1 + p_se), ShockRegimeKind::SubToSupersonicDownstream,
                         1);
             }
             {
                 const double r_cp = coincidence_radius(gas, inv_in);
                 const PressureInterval pi = pressure_interval(gas, inv_in, 1.02, 1.2);
                 const double p_cp = exit_pressure_of_shock(gas, inv_in, r_cp, 1.02);
                 const double p_se =
                     sonic_exit_pressure_oracle(gas, inv_in, 1.02, pi.p1 * (1 + 1e-9), pi.p0, ck);
                 ck.require(p_cp < p_se,
                            "coincident pressure should fall below the sonic exit pressure");
                 in_case(1.02, 1.2, 0.5 * (p_cp + pi.p0), ShockRegimeKind::SupSupUniform, 2);
                 in_case(1.02, 1.2, p_cp, ShockRegimeKind::SupSonicCoincident, 2);
                 in_case(1.02, 1.2, 0.5 * (pi.p1 + p_cp),
                         ShockRegimeKind::SubToSupersonicDownstream, 2);
             }
             {
                 const PressureInterval pi = pressure_interval(gas, inv_in, 0.98, 1.02);
                 in_case(0.98, 1.02, 0.5 * (pi.p1 + pi.p0), ShockRegimeKind::SupSupUniform, 3);
             }

             // infeasible prescriptions
             const BoundaryState b12 =
                 boundary_on_branch(gas, inv_in, 1.2, Branch::RadialSupersonic);
             const auto expect_no_solution = [&](double r0, double p, const char* why) {
                 try {
                     classify_inward_shock(gas, b12, r0, p);
                     ck.require(false, std::string("expected no solution: ") + why);
                 } catch (const NoSolutionError&) {
                     seen.insert("NoSolution");
                 }
             };
             expect_no_solution(1.1, 0.5, "pressure below the radial-sonic exit floor");
             expect_no_solution(1.1, 0.985, "pressure above the attainable interval");
             expect_no_solution(0.9, 0.8, "exit inside the upstream limiting circle");
             try {
                 const BoundaryState b =
                     boundary_on_branch(gas, inv, 0.97, Branch::RadialSupersonic);
                 classify_outward_shock(gas, b, 1.2, 2.0);
                 ck.require(false, "expected out-of-range rejection for p=2.0");
             } catch (const PressureOutOfRangeError&) {
                 seen.insert("NoSolution");
             }

             const char* want_labels[] = {
                 "SupSubUniform",           "SupSupUniform",
                 "SupSupToSubsonicDownstream", "SupSupSonicAtExit",
                 "SupSonicCoincident",      "SubToSupersonicDownstream",
                 "SonicAtExit",             "NoSolution"};
             for (const char* label : want_labels)
                 ck.require(seen.count(label) == 1, std::string("regime never reached: ") + label);
         }},

        {8, "no-swirl reduction to the classical nozzle", 0.0,
         [](Checker& ck) {
             GasModel gas;
             const FlowInvariants inv = nozzle_invariants(gas, 1.0);
             const double r_sharp = limiting_radius(gas, inv);
             const double est =
                 std::pow(gas.gamma * inv.A, 1.0 / (gas.gamma - 1.0)) *
                 std::pow((gas.gamma + 1.0) / (2.0 * (gas.gamma - 1.0) * inv.B0),
                          (gas.gamma + 1.0) / (2.0 * (gas.gamma - 1.0))) *
                 std::fabs(inv.kappa1);
             ck.close("limiting radius equals its closed form without swirl", r_sharp, est, 1e-10);

             // outward: every admissible exit pressure gives a shock with
             // subsonic downstream flow all the way to the exit
             const BoundaryState b0 = boundary_on_branch(gas, inv, 1.6, Branch::RadialSupersonic);
             const PressureInterval pi = pressure_interval(gas, inv, 1.6, 2.2);
             for (int i = 0; i < 9; ++i) {
                 const double p = pi.p1 + (i + 0.5) * (pi.p0 - pi.p1) / 9.0;
                 const ShockSolution sol = classify_outward_shock(gas, b0, 2.2, p);
                 const std::string tag = " at p=" + fmt(p);
                 ck.require(sol.regime.kind == ShockRegimeKind::SupSubUniform,
                            std::string("outward regime ") + to_string(sol.regime.kind) + tag);
                 ck.require(sol.regime.table_case == 3, "outward case is not 3" + tag);
                 ck.require(sol.downstream.msq < 1.0, "downstream not subsonic at the shock" + tag);
                 ck.require(continue_to_exit(gas, sol, 2.2).msq < 1.0,
                            "downstream not subsonic at the exit" + tag);
             }

             // inward with prescribed exit pressure: only the uniformly
             // subsonic and sonic-at-exit patterns can occur
             GasModel gas_in;
             const FlowInvariants inv_in = nozzle_invariants(gas_in, -1.0);
             const BoundaryState b1 =
                 boundary_on_branch(gas_in, inv_in, 2.2, Branch::RadialSupersonic);
             const PressureInterval pin = pressure_interval(gas_in, inv_in, 1.5, 2.2);
             const double k0 = swirl_bernoulli_k(gas_in, inv_in, 1.5);
             const double p_rs = std::fabs(inv_in.kappa1) * std::sqrt(k0) / (gas_in.gamma * 1.5);
             ck.close("infimum equals the radial-sonic exit pressure", pin.p1, p_rs, 1e-6);
             std::set<std::string> seen;
             for (int i = 0; i < 9; ++i) {
                 const double p = pin.p1 + (i + 0.5) * (pin.p0 - pin.p1) / 9.0;
                 const ShockSolution sol = classify_inward_shock(gas_in, b1, 1.5, p);
                 seen.insert(to_string(sol.regime.kind));
                 const std::string tag = " at p=" + fmt(p);
                 ck.require(sol.regime.table_case == 1, "inward case is not 1" + tag);
                 ck.require(sol.regime.rho_sharp_sharp.has_value() &&
                                rel(*sol.regime.rho_sharp_sharp, sol.regime.rho_sharp) <= 1e-12,
                            "sonic and radial-sonic exit densities should coincide" + tag);
             }
             // the sonic-exit pattern sits exactly at the interval edge
             const ShockSolution edge =
                 classify_inward_shock(gas_in, b1, 1.5, pin.p1 * (1.0 + 1e-10));
             seen.insert(to_string(edge.regime.kind));
             for (const std::string& label : seen)
                 ck.require(label == "SupSubUniform" || label == "SonicAtExit",
                            "unexpected regime without swirl: " + label);
             ck.require(seen.count("SupSubUniform") == 1,
                        "uniformly subsonic downstream flow never reached");
             ck.require(seen.count("SonicAtExit") == 1,
                        "sonic exit never reached at the interval edge");
         }},

        {9, "cli determinism and output self-consistency", 0.0,
         [](Checker& ck) {
             const GasModel gas = reference_gas();
             const FlowInvariants inv = reference_invariants();
             const BoundaryState b = boundary_on_branch(gas, inv, 0.97, Branch::RadialSupersonic);
             const std::string dir = workdir();
             const std::string cfg = dir + "/setup_a.json";
             {
                 std::ofstream out(cfg);
                 out.precision(17);
                 out << "{\n  \"gamma\": 2.0,\n  \"problem\": \"III\",\n"
                     << "  \"annulus\": {\"r_inner\": 0.97, \"r_outer\": 1.2},\n"
                     << "  \"boundary\": {\"radius\": 0.97, \"rho\": " << b.rho
                     << ", \"u1\": " << b.u1 << ", \"u2\": " << b.u2 << ", \"A\": 1.0},\n"
                     << "  \"exit_pressure\": 1.1881874179525904,\n  \"samples\": 12,\n"
                     << "  \"output\": {\"format\": \"csv\", \"path\": \"" << dir
                     << "/prof.csv\"}\n}\n";
             }
             std::string first, second;
             ck.require(run_cli("classify --config " + cfg, &first) == 0, "classify exit code");
             ck.require(run_cli("classify --config " + cfg, &second) == 0, "classify exit code");
             ck.require(first == second && !first.empty(), "classify output not byte-identical");

             ck.require(run_cli("profile --config " + cfg + " --out " + dir + "/p1.csv", nullptr) ==
                            0,
                        "profile exit code");
             ck.require(run_cli("profile --config " + cfg + " --out " + dir + "/p2.csv", nullptr) ==
                            0,
                        "profile exit code");
             const std::string prof = slurp(dir + "/p1.csv");
             ck.require(!prof.empty() && prof == slurp(dir + "/p2.csv"),
                        "profile output not byte-identical");

             ck.require(run_cli("sweep --config " + cfg + " --points 10 --out " + dir + "/s1.csv",
                                nullptr) == 0,
                        "sweep exit code");
             ck.require(run_cli("sweep --config " + cfg + " --points 10 --out " + dir + "/s2.csv",
                                nullptr) == 0,
                        "sweep exit code");
             const std::string swp = slurp(dir + "/s1.csv");
             ck.require(!swp.empty() && swp == slurp(dir + "/s2.csv"),
                        "sweep output not byte-identical");

             // re-parse the profile and re-check the conserved quantities
             std::istringstream in(prof);
             std::string line;
             std::getline(in, line);
             ck.require(line == "r,rho,u1,u2,p,c2,m1sq,m2sq,msq,A,region",
                        "unexpected profile header: " + line);
             int rows = 0;
             double worst = 0.0;
             while (std::getline(in, line)) {
                 std::istringstream ls(line);
                 std::string cell;
                 std::vector<double> v;
                 while (std::getline(ls, cell, ',') && v.size() < 10)
                     v.push_back(std::strtod(cell.c_str(), nullptr));
                 if (v.size() < 10) continue;
                 ++rows;
                 const double r = v[0], rho = v[1], u1 = v[2], u2 = v[3], p = v[4], c2 = v[5],
                              a = v[9];
                 worst = std::max({worst, rel(r * rho * u1, 1.0), rel(r * u2, 1.0),
                                   rel(0.5 * (u1 * u1 + u2 * u2) + c2, 3.0),
                                   rel(p, a * rho * rho)});
             }
             ck.require(rows == 12, "profile row count " + std::to_string(rows));
             ck.require(worst <= 1e-10,
                        "worst conservation residual " + fmt(worst) + " exceeds 1e-10");
         }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Checker ck;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            ck.require(false, std::string("unexpected exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (c.cap_ms > 0.0 && ms > c.cap_ms) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "runtime %.1f ms exceeds the %.0f ms cap", ms, c.cap_ms);
            ck.failures.push_back(buf);
        }
        if (ck.failures.empty()) {
            std::printf("PASS criterion %d: %s (%.1f ms)\n", c.id, c.title, ms);
        } else {
            std::printf("FAIL criterion %d: %s (%.1f ms)\n", c.id, c.title, ms);
            for (const std::string& f : ck.failures) std::printf("       - %s\n", f.c_str());
            ++failed;
        }
    }
    if (failed) {
        std::printf("%d of %zu criteria failed\n", failed, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
