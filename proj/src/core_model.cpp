#include "hertzwave/core_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hertzwave/roots.hpp"

namespace hertzwave {

namespace {

// (e^{nu} - 1 - n(e^u - 1)) / u^2 as a power series, valid for |n u| small.
double second_difference_series(double n, double u) {
    double term = 0.5;  // u^j/(j+2)! at j = 0
    double pn = n * n;
    double sum = 0.0;
    for (int j = 0; j < 40; ++j) {
        const double add = (pn - n) * term;
        sum += add;
        if (std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
        pn *= n;
        term *= u / (j + 3);
    }
    return sum;
}

double e1(double x) { return x == 0.0 ? 1.0 : std::expm1(x) / x; }

}  // namespace

void require_valid_k(double k) {
    if (!(k > 1.0) || !std::isfinite(k))
        throw std::domain_error("exponent k must be a finite real > 1, got " + std::to_string(k));
}

void PhysicalParams::validate() const {
    require_valid_k(k);
    if (!(R > 0.0) || !std::isfinite(R)) throw std::domain_error("radius R must be > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("speed scale c must be > 0");
    if (V_wave == 0.0 || !std::isfinite(V_wave))
        throw std::domain_error("wave speed must be finite and nonzero");
}

double s_n(double n, double a, double b) {
    if (!(n > 0.0)) throw std::domain_error("s_n: n must be > 0");
    if (a < 0.0 || b < 0.0) throw std::domain_error("s_n: arguments must be non-negative");
    const double hi = std::fmax(a, b), lo = std::fmin(a, b);
    if (hi == 0.0) {
        if (n <= 1.0) throw std::domain_error("s_n: undefined at a = b = 0 for n <= 1");
        return 0.0;
    }
    if (hi - lo < 1e-7 * hi) {
        const double m = 0.5 * (a + b);
        const double d = 0.5 * (hi - lo);
        return n * std::pow(m, n - 1.0) +
               n * (n - 1.0) * (n - 2.0) / 6.0 * std::pow(m, n - 3.0) * d * d;
    }
    if (lo == 0.0) return std::pow(hi, n - 1.0);
    if (hi <= 2.0 * lo) {
        const double u = std::log1p((hi - lo) / lo);
        return std::pow(lo, n - 1.0) * std::expm1(n * u) / std::expm1(u);
    }
    return (std::pow(hi, n) - std::pow(lo, n)) / (hi - lo);
}

double d2_power(double n, double a, double b) {
    if (a < 0.0 || !(b >= 0.0)) throw std::domain_error("d2_power: arguments must be non-negative");
    if (b == 0.0) {
        if (n <= 1.0) throw std::domain_error("d2_power: f'(0) undefined for n <= 1");
        return a == 0.0 ? (n == 2.0 ? 1.0 : (n > 2.0 ? 0.0 : INFINITY)) : std::pow(a, n - 2.0);
    }
    if (a == b) return 0.5 * n * (n - 1.0) * std::pow(b, n - 2.0);
    if (a > 2.0 * b || a < 0.5 * b) {
        const double d = a - b;
        return (std::pow(a, n) - std::pow(b, n) - n * std::pow(b, n - 1.0) * d) / (d * d);
    }
    const double u = std::log1p((a - b) / b);
    const double e = e1(u);
    double num;
    if (std::fabs(n * u) < 0.5)
        num = second_difference_series(n, u);
    else
        num = (std::expm1(n * u) - n * std::expm1(u)) / (u * u);
    return std::pow(b, n - 2.0) * num / (e * e);
}

double solitary_reduced(double k, double g0, double delta, bool triple) {
    const double n = k + 1.0;
    const double g = g0 + delta;
    const double beta = std::pow(g0, k - 1.0);
    if (g <= 0.0) return 1.0 - k * beta;  // E / g0^2
    const double u = std::log1p(delta / g0);
    if (std::fabs(u) > 1.0) {
        // well separated: no cancellation in the direct divided difference
        return 1.0 - (std::pow(g, n) - std::pow(g0, n) - n * std::pow(g0, k) * delta) /
                         (delta * delta);
    }
    const double e = e1(u);
    if (std::fabs(n * u) < 0.5) {
        const double c0 =
            triple ? 0.0 : -std::expm1(std::log(0.5 * k * (k + 1.0)) + (k - 1.0) * std::log(g0));
        double term = 0.5;
        double p2 = 4.0, pn = n * n;
        double sum = c0;
        for (int j = 1; j < 40; ++j) {
            p2 *= 2.0;
            pn *= n;
            term *= u / (j + 2);
            const double add = ((p2 - 2.0) - beta * (pn - n)) * term;
            sum += add;
            if (std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
        }
        return sum / (e * e);
    }
    const double em = std::expm1(u);
    return 1.0 - beta * (std::expm1(n * u) - n * em) / (em * em);
}

double g_star(double k) {
    require_valid_k(k);
    return std::pow(2.0 / (k * (k + 1.0)), 1.0 / (k - 1.0));
}

double C1_star(double k) { return -(2.0 * (k - 1.0) / k) * g_star(k); }

double sigma(double k) { return std::sqrt(0.5 * k * (k + 1.0)); }

double potential(const DimensionlessWave& w, double g) {
    if (g < 0.0) throw std::domain_error("potential: g must be >= 0");
    return std::pow(g, w.k + 1.0) - g * (g + w.C1);
}

PotentialDerivs potential_derivs(const DimensionlessWave& w, double g) {
    if (g < 0.0) throw std::domain_error("potential_derivs: g must be >= 0");
    const double gk1 = std::pow(g, w.k - 1.0);
    return {(w.k + 1.0) * gk1 * g - 2.0 * g - w.C1, w.k * (w.k + 1.0) * gk1 - 2.0};
}

double energy_gap(const DimensionlessWave& w, double g) {
    if (g < 0.0) throw std::domain_error("energy_gap: g must be >= 0");
    return w.E + g * (g + w.C1) - std::pow(g, w.k + 1.0);
}

double reduced_rhs(const DimensionlessWave& w, double g) {
    if (!(g > 0.0)) throw std::domain_error("reduced_rhs: g must be > 0");
    return std::pow(g, 1.0 - w.k) * energy_gap(w, g);
}

double reduced_rhs_derivative(const DimensionlessWave& w, double g) {
    if (!(g > 0.0)) throw std::domain_error("reduced_rhs_derivative: g must be > 0");
    const double gap = energy_gap(w, g);
    const double vp = potential_derivs(w, g).first;
    return std::pow(g, -w.k) * ((1.0 - w.k) * gap - g * vp);
}

CriticalData critical_data(double k, double C1) {
    require_valid_k(k);
    CriticalData out;
    out.g_star = g_star(k);
    out.C1_star = -(2.0 * (k - 1.0) / k) * out.g_star;
    const DimensionlessWave w{k, C1, 0.0};
    auto vp = [&](double g) {
        auto d = potential_derivs(w, g);
        return std::pair<double, double>{d.first, d.second};
    };
    const double tol_star = 1e-12 * (1.0 + std::fabs(out.C1_star));
    if (std::fabs(C1 - out.C1_star) <= tol_star) {
        out.critical_points.push_back({out.g_star, CriticalKind::inflection});
        return out;
    }
    if (C1 < out.C1_star) return out;

    auto upper_min = [&]() {
        double hi = std::fmax(2.0, 2.0 * out.g_star);
        while (vp(hi).first <= 0.0) hi *= 2.0;
        return newton_bisect(vp, out.g_star, hi);
    };
    if (C1 < 0.0) {
        const double gmax = newton_bisect(vp, 0.0, out.g_star);
        out.critical_points.push_back({gmax, CriticalKind::local_max});
    }
    out.critical_points.push_back({upper_min(), CriticalKind::local_min});
    return out;
}

Scaling scaling(const PhysicalParams& p) {
    p.validate();
    const double ratio = p.V_wave / p.c;
    return {std::pow(0.5 * ratio * ratio * p.k * (p.k + 1.0), 1.0 / (p.k - 1.0)),
            std::sqrt(p.k * (p.k + 1.0) / 6.0) * p.R};
}

double to_dimensionless(const PhysicalParams& p, double strain_amplitude) {
    if (strain_amplitude < 0.0) throw std::domain_error("strain amplitude must be >= 0");
    return strain_amplitude / scaling(p).lambda;
}

double xi_to_dimensionless(const PhysicalParams& p, double x_shift) {
    return x_shift / scaling(p).omega;
}

PhysicalPoint to_physical(const PhysicalParams& p, double g, double xi) {
    if (g < 0.0) throw std::domain_error("to_physical: g must be >= 0");
    const auto s = scaling(p);
    return {s.lambda * g, s.omega * xi};
}

}  // namespace hertzwave
