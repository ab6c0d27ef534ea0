// Bracketed root finding shared by the solvers. Bisection carries a hard
// iteration cap so every search has bounded runtime.
#pragma once

#include <cmath>
#include <string>

#include "annular/errors.hpp"

namespace annular::detail {

inline constexpr int max_root_iter = 200;

// Bisection on [lo, hi] given already-evaluated endpoint values with opposite
// signs. Stops once the bracket width drops below tol relative to the
// endpoint magnitudes.
template <class F>
double bisect(F&& f, double lo, double hi, double flo, double fhi, double tol, const char* who) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketFailure(std::string(who) + ": no sign change on bracket");
    for (int i = 0; i < max_root_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tol * (std::fabs(lo) + std::fabs(hi))) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Grows hi geometrically until f(hi) changes sign against flo.
template <class F>
double expand_upper(F&& f, double hi, double flo, double factor, const char* who) {
    for (int i = 0; i < max_root_iter; ++i) {
        const double fhi = f(hi);
        if (fhi == 0.0 || (fhi > 0.0) != (flo > 0.0)) return hi;
        hi *= factor;
    }
    throw BracketFailure(std::string(who) + ": could not bracket a sign change");
}

// A few Newton steps to sharpen a bisection result; any step leaving the
// bracket is discarded.
template <class F, class DF>
double polish_newton(F&& f, DF&& df, double x, double lo, double hi, int steps = 5) {
    for (int i = 0; i < steps; ++i) {
        const double d = df(x);
        if (d == 0.0 || !std::isfinite(d)) break;
        const double next = x - f(x) / d;
        if (!(next > lo) || !(next < hi)) break;
        x = next;
    }
    return x;
}

}  // namespace annular::detail
