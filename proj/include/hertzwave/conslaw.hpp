#pragma once

#include <cstdint>
#include <stdexcept>

#include "hertzwave/core_model.hpp"
#include "hertzwave/dual.hpp"
#include "hertzwave/profiles.hpp"

namespace hertzwave {

// Jet coordinates of u(t, x). u_txxx never enters any total derivative of
// the four pairs, so it is not carried.
template <class S>
struct JetT {
    S u{}, u_t{}, u_x{}, u_xx{}, u_xxx{}, u_xxxx{}, u_tt{}, u_tx{}, u_txx{};
};

using JetPoint = JetT<double>;

struct ConsLawId {
    int index;  // 1..4
};

// Coefficients of u_tt = F: c^2 (u_x^{k-1} u_xx + a u_x^{k-3} u_xx^3
//   + b u_x^{k-2} u_xx u_xxx + g u_x^{k-1} u_xxxx).
struct PdeCoefficients {
    double alpha, beta, gamma;
};

PdeCoefficients pde_coefficients(double k, double R);

void require_valid_jet(const JetPoint& jet, double k);

namespace detail {

inline void check_id(ConsLawId id) {
    if (id.index < 1 || id.index > 4) throw std::invalid_argument("conservation law index must be 1..4");
}

// common flux bracket of the first two laws
template <class S>
S x1_bracket(const JetT<S>& j, double k, double R) {
    const double R2 = R * R;
    return R2 / 3.0 * pow(j.u_x, k - 1.0) * j.u_xxx +
           (k - 1.0) / 6.0 * R2 * pow(j.u_x, k - 2.0) * j.u_xx * j.u_xx + pow(j.u_x, k) / k;
}

}  // namespace detail

template <class S>
S eval_T(ConsLawId id, const JetT<S>& j, double k, double c, double R, const S& t) {
    detail::check_id(id);
    const double c2 = c * c, R2 = R * R;
    switch (id.index) {
        case 1: return j.u_t;
        case 2: return t * j.u_t - j.u;
        case 3: return -(j.u_t * j.u_x);
        default:
            return S(0.5) * j.u_t * j.u_t -
                   c2 * (R2 / 6.0 * pow(j.u_x, k - 1.0) * j.u_xx * j.u_xx -
                         pow(j.u_x, k + 1.0) / (k * (k + 1.0)));
    }
}

template <class S>
S eval_X(ConsLawId id, const JetT<S>& j, double k, double c, double R, const S& t) {
    detail::check_id(id);
    const double c2 = c * c, R2 = R * R;
    switch (id.index) {
        case 1: return -c2 * detail::x1_bracket(j, k, R);
        case 2: return -c2 * t * detail::x1_bracket(j, k, R);
        case 3:
            return S(0.5) * j.u_t * j.u_t +
                   c2 * (R2 / 3.0 * pow(j.u_x, k) * j.u_xxx +
                         (k - 2.0) / 6.0 * R2 * pow(j.u_x, k - 1.0) * j.u_xx * j.u_xx +
                         pow(j.u_x, k + 1.0) / (k + 1.0));
        default:
            return -c2 * (R2 / 3.0 * pow(j.u_x, k - 1.0) * (j.u_t * j.u_xxx - j.u_tx * j.u_xx) +
                          (k - 1.0) / 6.0 * R2 * pow(j.u_x, k - 2.0) * j.u_t * j.u_xx * j.u_xx +
                          pow(j.u_x, k) * j.u_t / k);
    }
}

template <class S>
S eval_Q(ConsLawId id, const JetT<S>& j, const S& t) {
    detail::check_id(id);
    switch (id.index) {
        case 1: return S(1.0);
        case 2: return t;
        case 3: return -j.u_x;
        default: return j.u_t;
    }
}

// Right side F of u_tt = F at the jet.
double pde_rhs(const JetPoint& jet, double k, double c, double R);

struct ResidualTerms {
    double DtT;
    double DxX;
    double rhs;       // (u_tt - F) Q
    double residual;  // DtT + DxX - rhs
    double scale;     // largest magnitude among the terms and u_tt Q, F Q
    double relative() const { return scale > 0.0 ? std::fabs(residual) / scale : std::fabs(residual); }
};

// Total derivatives by one forward-mode sweep each, seeded with the
// t- and x-prolongations of the jet.
ResidualTerms characteristic_terms(ConsLawId id, const JetPoint& jet, double k, double c, double R, double t);
double characteristic_residual(ConsLawId id, const JetPoint& jet, double k, double c, double R, double t);

// Directional derivative of T or X along (dir, dt) by dual evaluation.
double directional_T(ConsLawId id, const JetPoint& jet, const JetPoint& dir, double dt, double k,
                     double c, double R, double t);
double directional_X(ConsLawId id, const JetPoint& jet, const JetPoint& dir, double dt, double k,
                     double c, double R, double t);

struct RandomJet {
    JetPoint jet;
    double t;
};

// u_x log-uniform in [0.1, 3], other slots uniform in [-2, 2], t in [-5, 5].
RandomJet random_jet(std::uint64_t seed, std::uint64_t index);

struct JetSweepResult {
    int law;
    double k;
    int jets;
    double max_relative;
    double max_absolute;
};

JetSweepResult random_jet_sweep(ConsLawId id, double k, int n_jets, std::uint64_t seed = 20240517,
                                double c = 1.0, double R = 1.0);

// Deviation of the two first integrals of the travelling-wave ODE from
// (C1, E) along a profile, with g'' taken from G'(g)/2.
struct FirstIntegralDrift {
    double drift1;
    double drift2;
    int samples_checked;
};

FirstIntegralDrift first_integrals_along(const Profile& profile, const DimensionlessWave& w);
bool first_integrals_pass(const FirstIntegralDrift& d, double gate = 1e-7);

// Pointwise values of the two first integrals at (g, g', g'').
double first_integral_C1(double k, double g, double gp, double gpp);
double first_integral_C2(double k, double g, double gp, double gpp);

// Copy of the profile with sample i shifted in g by dg (detector checks).
Profile perturb_sample(const Profile& profile, std::size_t i, double dg);

}  // namespace hertzwave
