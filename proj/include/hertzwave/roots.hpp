#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace hertzwave {

class RootError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RootOptions {
    double tol = 1e-12;
    int max_iter = 200;
};

// Safeguarded Newton on a sign-changing bracket. fdf(x) returns {f, f'}.
// Falls back to bisection whenever the Newton step leaves the bracket or
// fails to halve the previous step.
template <class FDF>
double newton_bisect(FDF&& fdf, double lo, double hi, RootOptions opt = {}) {
    auto [flo, dlo] = fdf(lo);
    auto [fhi, dhi] = fdf(hi);
    (void)dlo;
    (void)dhi;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw RootError("newton_bisect: no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    // orient so that f(xl) < 0
    double xl = lo, xh = hi;
    if (flo > 0.0) std::swap(xl, xh);

    double x = 0.5 * (lo + hi);
    double dx_old = std::fabs(hi - lo);
    double dx = dx_old;
    auto [f, df] = fdf(x);
    for (int it = 0; it < opt.max_iter; ++it) {
        bool bisect = !std::isfinite(df) || df == 0.0 ||
                      ((x - xh) * df - f) * ((x - xl) * df - f) > 0.0 ||
                      std::fabs(2.0 * f) > std::fabs(dx_old * df);
        if (bisect) {
            dx_old = dx;
            dx = 0.5 * (xh - xl);
            x = xl + dx;
        } else {
            dx_old = dx;
            dx = f / df;
            x -= dx;
        }
        if (std::fabs(dx) <= opt.tol) return x;
        std::tie(f, df) = fdf(x);
        if (f == 0.0) return x;
        if (f < 0.0)
            xl = x;
        else
            xh = x;
        if (std::fabs(xh - xl) <= opt.tol) return 0.5 * (xl + xh);
    }
    throw RootError("newton_bisect: no convergence in " + std::to_string(opt.max_iter) +
                    " iterations");
}

// Plain bisection for functions without a cheap derivative. Runs until the
// bracket stops shrinking in floating point or drops below tol.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 0.0, int max_iter = 400) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw RootError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    for (int it = 0; it < max_iter; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= std::fmin(lo, hi) || mid >= std::fmax(lo, hi)) return mid;
        if (std::fabs(hi - lo) <= tol) return mid;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hertzwave
