#pragma once

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace hertzwave {

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    double estimate() const { return estimate_; }
    double error() const { return error_; }

private:
    double estimate_;
    double error_;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

namespace detail {

// 15-point Kronrod abscissae on [-1, 1]; odd indices are the 7-point Gauss nodes.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * kWgk[7];
    double rg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        rk += kWgk[j] * fsum;
        if (j % 2 == 1) rg += kWg[j / 2] * fsum;
    }
    rk *= h;
    rg *= h;
    if (!std::isfinite(rk))
        throw QuadratureError("integrand not finite on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]",
                              rk, INFINITY);
    return {a, b, rk, std::fabs(rk - rg)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) quadrature: the segment with the
// largest error estimate is bisected until the summed estimate meets tolerance.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, QuadratureOptions opt = {}) {
    QuadratureResult out;
    if (a == b) return out;
    std::priority_queue<detail::Segment> heap;
    auto first = detail::gk15(f, a, b);
    heap.push(first);
    double total = first.value, err = first.error;
    int nseg = 1;
    out.evaluations = 15;
    while (true) {
        const double target = std::fmax(opt.abs_tol, opt.rel_tol * std::fabs(total));
        if (err <= target) break;
        if (nseg >= opt.max_intervals)
            throw QuadratureError("quadrature did not converge: estimate " + std::to_string(total) +
                                      ", error " + std::to_string(err),
                                  total, err);
        auto worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::fmin(worst.a, worst.b) && mid < std::fmax(worst.a, worst.b))) {
            // cannot split further; the remaining error is roundoff level
            if (worst.error <= 64.0 * 2.2e-16 * std::fabs(total) + opt.abs_tol) break;
            throw QuadratureError("quadrature segment underflow", total, err);
        }
        heap.pop();
        auto left = detail::gk15(f, worst.a, mid);
        auto right = detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++nseg;
        // refresh sums periodically to shed accumulated rounding in the running totals
        if (nseg % 64 == 0) {
            auto copy = heap;
            total = 0.0;
            err = 0.0;
            while (!copy.empty()) {
                total += copy.top().value;
                err += copy.top().error;
                copy.pop();
            }
        }
    }
    // final exact resummation
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    out.value = total;
    out.error = err;
    return out;
}

}  // namespace hertzwave
