#include "hertzwave/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hertzwave/roots.hpp"

namespace hertzwave {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_implicit(Family f) {
    return f == Family::Solitary_k2 || f == Family::Solitary_k3 || f == Family::CuspedSolitary_k2 ||
           f == Family::CuspedSolitary_k3;
}

bool is_cusped_solitary(Family f) {
    return f == Family::CuspedSolitary_k2 || f == Family::CuspedSolitary_k3;
}

bool is_k2(Family f) {
    return f == Family::Solitary_k2 || f == Family::CuspedSolitary_k2 || f == Family::Periodic_k2_E0 ||
           f == Family::Nodal_k2;
}

double family_k(Family f, double k) {
    if (f == Family::Nodal_anyk_C10) return k;
    return is_k2(f) ? 2.0 : 3.0;
}

// Upper root of the solitary pair for the asymptote g0.
double solitary_g1(const ClosedFormSolution& s) {
    const double g0 = s.parameter;
    return s.k == 2.0 ? 1.0 - 2.0 * g0 : std::sqrt(1.0 - 2.0 * g0 * g0) - g0;
}

// P(g) of the implicit relations, given g and the accurately known g1 - g.
double P_of(const ClosedFormSolution& s, double g, double top) {
    const double g0 = s.parameter;
    const double g1 = solitary_g1(s);
    return s.k == 2.0 ? top * g : top * (g + g1 + 2.0 * g0);
}

// Implicit left side from the gap delta = |g - g0| and top = g1 - g.
double lhs_parts(const ClosedFormSolution& s, double delta, double top) {
    const double g0 = s.parameter;
    const double g = is_cusped_solitary(s.family) ? g0 - delta : g0 + delta;
    const double P = std::fmax(P_of(s, g, top), 0.0);
    const double P0 = P_of(s, g0, solitary_g1(s) - g0);
    const double sP = std::sqrt(P), sP0 = std::sqrt(P0);
    const double R = (sP + sP0) * (sP + sP0) + delta * delta;
    const double coef = g0 / sP0;
    switch (s.family) {
        case Family::Solitary_k2:
        case Family::Solitary_k3: {
            const double x = s.k == 2.0 ? g + g0 - 0.5 : g + g0;
            // P - P0 = (g - g0) dP
            const double dP = s.k == 2.0 ? top - g0 : -(g + 3.0 * g0);
            const double q = dP / (sP + sP0);
            const double atanh_Q = 0.5 * (std::log(R) - 2.0 * std::log(delta) - std::log1p(q * q));
            return std::atan2(sP, x) + coef * atanh_Q;
        }
        case Family::CuspedSolitary_k2:
            return -std::atan2(sP, 0.5 - (g + g0)) +
                   coef * (std::log(R) - std::log(delta) - std::log(1.0 - 2.0 * g0));
        case Family::CuspedSolitary_k3: {
            const double g1 = solitary_g1(s);
            const double Pz = g1 * (g1 + 2.0 * g0);
            const double sPz = std::sqrt(Pz);
            const double Rz = (sPz + sP0) * (sPz + sP0) + g0 * g0;
            const double num = g0 * sP - (g + g0) * sPz;
            const double den = g0 * (g + g0) + sP * sPz;
            return std::atan(num / den) + coef * std::log(g0 * R / (delta * Rz));
        }
        default: break;
    }
    throw std::invalid_argument("implicit relation requested for an explicit family");
}

// Gap scale of the tau chart: delta = scale exp(-tau^2).
double gap_scale(const ClosedFormSolution& s) {
    return is_cusped_solitary(s.family) ? s.parameter : solitary_g1(s) - s.parameter;
}

double lhs_tau(const ClosedFormSolution& s, double tau) {
    const double scale = gap_scale(s);
    const double t2 = tau * tau;
    const double delta = scale * std::exp(-t2);
    if (is_cusped_solitary(s.family)) {
        const double g = -s.parameter * std::expm1(-t2);
        return lhs_parts(s, delta, solitary_g1(s) - g);
    }
    return lhs_parts(s, delta, -scale * std::expm1(-t2));
}

double wrap(double xi, double L) { return xi - L * std::floor(0.5 + xi / L); }

void require_explicit(const ClosedFormSolution& s) {
    if (is_implicit(s.family))
        throw std::invalid_argument(std::string("family ") + to_string(s.family) +
                                    " is given implicitly");
}

void require_implicit(const ClosedFormSolution& s) {
    if (!is_implicit(s.family))
        throw std::invalid_argument(std::string("family ") + to_string(s.family) +
                                    " is given explicitly");
}

// cos(2 xi)-type amplitude of the k = 3 explicit families
double k3_amplitude(const ClosedFormSolution& s) {
    const double a = s.parameter;
    return 2.0 * a * a - 1.0;
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::Solitary_k2: return "Solitary_k2";
        case Family::Solitary_k3: return "Solitary_k3";
        case Family::CuspedSolitary_k2: return "CuspedSolitary_k2";
        case Family::CuspedSolitary_k3: return "CuspedSolitary_k3";
        case Family::Periodic_k2_E0: return "Periodic_k2_E0";
        case Family::Periodic_k3_C10: return "Periodic_k3_C10";
        case Family::CuspedPeriodic_k3_C10: return "CuspedPeriodic_k3_C10";
        case Family::Nodal_k2: return "Nodal_k2";
        case Family::Nodal_anyk_C10: return "Nodal_anyk_C10";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    for (Family f : kAllFamilies)
        if (s == to_string(f)) return f;
    throw std::invalid_argument("unknown closed-form family: " + s);
}

ClosedFormSolution make_closed_form(Family family, double parameter, double k) {
    ClosedFormSolution s{family, parameter, family_k(family, k),
                         is_implicit(family) ? Form::implicit_xi_of_g : Form::explicit_g_of_xi};
    const double p = parameter;
    auto bad = [&](const char* range) {
        throw std::domain_error(std::string(to_string(family)) + ": parameter " + std::to_string(p) +
                                " outside " + range);
    };
    if (!std::isfinite(p) && family != Family::Nodal_anyk_C10) bad("the real line");
    switch (family) {
        case Family::Solitary_k2:
        case Family::CuspedSolitary_k2:
            if (!(p > 0.0 && p < 1.0 / 3.0)) bad("(0, 1/3)");
            break;
        case Family::Solitary_k3:
        case Family::CuspedSolitary_k3:
            if (!(p > 0.0 && p < 1.0 / std::sqrt(6.0))) bad("(0, 1/sqrt(6))");
            break;
        case Family::Periodic_k2_E0:
            if (!(p > 0.5 && p < 1.0)) bad("(1/2, 1)");
            break;
        case Family::Periodic_k3_C10:
            if (!(p > 1.0 / std::sqrt(2.0) && p < 1.0)) bad("(1/sqrt(2), 1)");
            break;
        case Family::CuspedPeriodic_k3_C10:
            if (!(p > 1.0)) bad("(1, inf)");
            break;
        case Family::Nodal_k2:
            if (!(p >= 1.0)) bad("[1, inf)");
            break;
        case Family::Nodal_anyk_C10:
            require_valid_k(k);
            s.parameter = 1.0;
            break;
    }
    return s;
}

DimensionlessWave wave_of(const ClosedFormSolution& s) {
    const double p = s.parameter;
    switch (s.family) {
        case Family::Solitary_k2:
        case Family::CuspedSolitary_k2: return {2.0, 3.0 * p * p - 2.0 * p, p * p * (1.0 - 2.0 * p)};
        case Family::Solitary_k3:
        case Family::CuspedSolitary_k3:
            return {3.0, 4.0 * p * p * p - 2.0 * p, p * p * (1.0 - 3.0 * p * p)};
        case Family::Periodic_k2_E0: return {2.0, -(1.0 - p) * p, 0.0};
        case Family::Periodic_k3_C10: {
            const double g0sq = 1.0 - p * p;
            return {3.0, 0.0, -g0sq * p * p};
        }
        case Family::CuspedPeriodic_k3_C10: return {3.0, 0.0, p * p * p * p - p * p};
        case Family::Nodal_k2: return {2.0, p * p - p, 0.0};
        case Family::Nodal_anyk_C10: return {s.k, 0.0, 0.0};
    }
    throw std::logic_error("wave_of: unreachable");
}

WaveClass class_of(const ClosedFormSolution& s) {
    const double p = s.parameter;
    switch (s.family) {
        case Family::Solitary_k2:
        case Family::Solitary_k3: return solitary_from_asymptote(s.k, p).wave;
        case Family::CuspedSolitary_k2:
        case Family::CuspedSolitary_k3: return cusped_solitary_from_asymptote(s.k, p).wave;
        case Family::Periodic_k2_E0: return periodic_from_roots(2.0, 1.0 - p, p).wave;
        case Family::Periodic_k3_C10: return periodic_from_roots(3.0, std::sqrt(1.0 - p * p), p).wave;
        case Family::CuspedPeriodic_k3_C10:
            return cusped_periodic_admissible(3.0, p, wave_of(s).E).wave;
        case Family::Nodal_k2: return nodal_admissible(2.0, p).wave;
        case Family::Nodal_anyk_C10: return nodal_admissible(s.k, 1.0).wave;
    }
    throw std::logic_error("class_of: unreachable");
}

std::optional<double> wavelength(const ClosedFormSolution& s) {
    const double p = s.parameter;
    switch (s.family) {
        case Family::Periodic_k2_E0: return 2.0 * kPi;
        case Family::Periodic_k3_C10: return kPi;
        case Family::CuspedPeriodic_k3_C10:
            return 0.5 * kPi + std::atan(1.0 / (2.0 * p * std::sqrt(p * p - 1.0)));
        case Family::Nodal_k2: {
            const double b = std::sqrt(p * (p - 1.0));
            return kPi + 2.0 * std::atan(1.0 / (2.0 * b));
        }
        case Family::Nodal_anyk_C10: return 2.0 * kPi / (s.k - 1.0);
        default: return std::nullopt;
    }
}

double eval(const ClosedFormSolution& s, double xi) {
    require_explicit(s);
    const double x = wrap(xi, *wavelength(s));
    const double p = s.parameter;
    switch (s.family) {
        case Family::Periodic_k2_E0: return 0.5 * (1.0 + (2.0 * p - 1.0) * std::cos(x));
        case Family::Periodic_k3_C10:
        case Family::CuspedPeriodic_k3_C10:
            return std::sqrt(std::fmax(0.0, 0.5 * (1.0 + k3_amplitude(s) * std::cos(2.0 * x))));
        case Family::Nodal_k2: {
            const double b = std::sqrt(p * (p - 1.0));
            return 0.5 - 0.5 * std::cos(x) + b * std::sin(std::fabs(x));
        }
        case Family::Nodal_anyk_C10:
            return std::pow(std::sin(0.5 * (s.k - 1.0) * std::fabs(x)), 2.0 / (s.k - 1.0));
        default: break;
    }
    throw std::logic_error("eval: unreachable");
}

double eval_slope(const ClosedFormSolution& s, double xi) {
    require_explicit(s);
    const double x = wrap(xi, *wavelength(s));
    const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    const double p = s.parameter;
    switch (s.family) {
        case Family::Periodic_k2_E0: return -0.5 * (2.0 * p - 1.0) * std::sin(x);
        case Family::Periodic_k3_C10:
        case Family::CuspedPeriodic_k3_C10: {
            const double g = eval(s, xi);
            return -0.5 * k3_amplitude(s) * std::sin(2.0 * x) / g;
        }
        case Family::Nodal_k2: {
            const double b = std::sqrt(p * (p - 1.0));
            return 0.5 * std::sin(x) + sgn * b * std::cos(x);
        }
        case Family::Nodal_anyk_C10: {
            const double u = 0.5 * (s.k - 1.0) * std::fabs(x);
            return sgn * std::cos(u) * std::pow(std::sin(u), 2.0 / (s.k - 1.0) - 1.0);
        }
        default: break;
    }
    throw std::logic_error("eval_slope: unreachable");
}

double implicit_lhs_gap(const ClosedFormSolution& s, double gap) {
    require_implicit(s);
    const double scale = gap_scale(s);
    if (!(gap > 0.0) || gap > scale * (1.0 + 1e-15))
        throw std::domain_error("implicit relation: gap outside (0, " + std::to_string(scale) + "]");
    gap = std::fmin(gap, scale);
    const double g0 = s.parameter;
    const double g = is_cusped_solitary(s.family) ? g0 - gap : g0 + gap;
    return lhs_parts(s, gap, solitary_g1(s) - g);
}

double implicit_lhs(const ClosedFormSolution& s, double g) {
    require_implicit(s);
    return implicit_lhs_gap(s, std::fabs(g - s.parameter));
}

double implicit_residual(const ClosedFormSolution& s, double xi, double g) {
    return implicit_lhs(s, g) - std::fabs(xi);
}

double invert_implicit(const ClosedFormSolution& s, double xi) {
    require_implicit(s);
    const double target = std::fabs(xi);
    if (target == 0.0) return is_cusped_solitary(s.family) ? 0.0 : solitary_g1(s);
    auto f = [&](double tau) { return lhs_tau(s, tau) - target; };
    double hi = 1.0;
    while (f(hi) < 0.0) {
        hi *= 1.5;
        // exp(-tau^2) underflows past tau^2 ~ 700
        if (hi * hi > 700.0)
            throw RootError("invert_implicit: xi = " + std::to_string(xi) +
                            " lies beyond the representable tail");
    }
    const double tau = bisect(f, 0.0, hi);
    const double t2 = tau * tau;
    if (is_cusped_solitary(s.family)) return -s.parameter * std::expm1(-t2);
    return s.parameter + gap_scale(s) * std::exp(-t2);
}

double closed_value(const ClosedFormSolution& s, double xi) {
    return is_implicit(s.family) ? invert_implicit(s, xi) : eval(s, xi);
}

ConservedSet closed_conserved(const ClosedFormSolution& s, const PhysicalParams& p) {
    p.validate();
    if (std::fabs(p.k - s.k) > 1e-12 * s.k)
        throw std::invalid_argument("closed_conserved: exponent of the family and of the model differ");
    const double r = std::fabs(p.V_wave / p.c);
    const double nu = p.V_wave, R = p.R;
    const double x = s.parameter;
    const double rt2 = std::sqrt(2.0);
    const double r4 = r * r * r * r, r2 = r * r;

    ConservedSet out;
    out.prefactors = prefactors(p);
    if (auto L = wavelength(s)) out.physical_wavelength = std::sqrt(s.k * (s.k + 1.0) / 6.0) * R * *L;

    switch (s.family) {
        case Family::Solitary_k2:
        case Family::CuspedSolitary_k2: {
            const bool cusp = s.family == Family::CuspedSolitary_k2;
            const double as = std::asin((1.0 - 4.0 * x) / (1.0 - 2.0 * x));
            const double a = cusp ? 0.5 * kPi - as : 0.5 * kPi + as;
            const double sq = (cusp ? -1.0 : 1.0) * std::sqrt(x * (1.0 - 3.0 * x));
            out.momentum = 4.5 * r4 * nu * R * ((x * x - 2.0 * x + 0.75) * a + 1.5 * sq);
            out.energy = 2.25 * r4 * nu * nu * R *
                         ((1.0 - 2.0 * x) * (x * x - 1.5 * x + 1.25) * a +
                          2.0 * (x * x - 2.0 / 3.0 * x + 1.25) * sq);
            out.energy_momentum = 1.125 * r4 * nu * nu * R * (1.0 - 1.5 * x) *
                                  ((1.0 - 2.0 * x) * (1.0 - 2.0 * x) * a + 2.0 * (1.0 - 4.0 / 3.0 * x) * sq);
            out.regularized = true;
            out.orientation_negated = cusp;
            break;
        }
        case Family::Solitary_k3: {
            const double q = 1.0 - 2.0 * x * x;
            const double b = 0.5 * kPi - std::asin(2.0 * x / std::sqrt(q));
            const double t6 = std::sqrt(1.0 - 6.0 * x * x);
            out.momentum = 3.0 * rt2 * r2 * nu * R * q * b;
            out.energy = 2.25 * rt2 * r2 * nu * nu * R * q * ((1.0 + 2.0 / 3.0 * x * x) * b - 2.0 / 3.0 * x * t6);
            out.energy_momentum = 0.75 * rt2 * r2 * nu * nu * R * q * (b - 2.0 * x * t6);
            out.regularized = true;
            break;
        }
        case Family::CuspedSolitary_k3: {
            const double q = 1.0 - 2.0 * x * x;
            const double A1 = std::asin(2.0 * x / std::sqrt(q));
            const double A2 = std::asin(x / std::sqrt(q));
            const double t3 = std::sqrt(1.0 - 3.0 * x * x);
            const double t6 = std::sqrt(1.0 - 6.0 * x * x);
            out.momentum = 3.0 * rt2 * r2 * nu * R * (q * (A1 - A2) - x * t3);
            out.energy = 3.0 * rt2 * r2 * nu * nu * R *
                         ((x * x * x * x + x * x - 0.75) * (A2 - A1) -
                          x * (1.25 * (1.0 - 0.8 * x * x) * t3 - 0.5 * q * t6));
            out.energy_momentum = 0.75 * rt2 * r2 * nu * nu * R * q * (A1 - A2 + x * (2.0 * t6 - 3.0 * t3));
            out.regularized = true;
            out.orientation_negated = true;
            break;
        }
        case Family::Periodic_k2_E0:
            out.momentum = 4.5 * r4 * kPi * nu * R * (x * x - x + 0.75);
            out.energy = 4.5 * r4 * kPi * nu * nu * R * (x * x - x + 0.625);
            break;
        case Family::Periodic_k3_C10:
            out.momentum = 3.0 / rt2 * r2 * kPi * nu * R;
            out.energy = 9.0 * rt2 / 8.0 * r2 * kPi * nu * nu * R;
            break;
        case Family::CuspedPeriodic_k3_C10: {
            const double w = 0.5 * kPi + std::asin(1.0 / (2.0 * x * x - 1.0)) + 2.0 * std::sqrt(x * x * (x * x - 1.0));
            out.momentum = 3.0 / rt2 * r2 * nu * R * w;
            out.energy = 9.0 * rt2 / 8.0 * r2 * nu * nu * R * w;
            break;
        }
        case Family::Nodal_k2: {
            const double a = 0.5 * kPi + std::asin(1.0 / (2.0 * x - 1.0));
            const double sq = std::sqrt(x * (x - 1.0));
            out.momentum = 4.5 * r4 * nu * R * ((x * x - x + 0.75) * a + 1.5 * sq);
            out.energy = 4.5 * r4 * nu * nu * R * ((x * x - x + 0.625) * a + (x * x - x + 3.75) * sq / 3.0);
            break;
        }
        case Family::Nodal_anyk_C10: {
            const double k = s.k;
            const double base = std::sqrt(kPi / 3.0) * std::pow(r, 4.0 / (k - 1.0)) * R / (k - 1.0) *
                                std::pow(sigma(k), (k + 3.0) / (k - 1.0));
            out.momentum = base * nu *
                           std::exp(std::lgamma((k + 3.0) / (2.0 * (k - 1.0))) - std::lgamma((k + 1.0) / (k - 1.0)));
            out.energy = base * nu * nu *
                         std::exp(std::lgamma((3.0 * k + 1.0) / (2.0 * (k - 1.0))) - std::lgamma(2.0 * k / (k - 1.0)));
            break;
        }
    }
    return out;
}

}  // namespace hertzwave
