#pragma once

#include <cmath>

namespace hertzwave {

// Forward-mode dual number v + d*eps with eps^2 = 0.
struct Dual {
    double v = 0.0;
    double d = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double value) : v(value) {}
    constexpr Dual(double value, double deriv) : v(value), d(deriv) {}

    Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
    Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
    Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
    Dual& operator/=(const Dual& o) {
        d = (d * o.v - v * o.d) / (o.v * o.v);
        v /= o.v;
        return *this;
    }
};

inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }

// real exponent; d/dx x^p = p x^{p-1}
inline Dual pow(const Dual& x, double p) {
    if (p == 0.0) return {1.0, 0.0};
    const double xp1 = std::pow(x.v, p - 1.0);
    return {xp1 * x.v, p * xp1 * x.d};
}

inline Dual sqrt(const Dual& x) {
    const double s = std::sqrt(x.v);
    return {s, 0.5 * x.d / s};
}

// plain overloads so templated code resolves to real arithmetic for S = double
inline double pow(double x, double p) { return std::pow(x, p); }
inline double sqrt(double x) { return std::sqrt(x); }

inline double value(double x) { return x; }
inline double value(const Dual& x) { return x.v; }

}  // namespace hertzwave
