#include "hertzwave/conslaw.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hertzwave {

PdeCoefficients pde_coefficients(double k, double R) {
    const double R2 = R * R;
    return {(k - 1.0) * (k - 2.0) * R2 / 6.0, 2.0 * (k - 1.0) * R2 / 3.0, R2 / 3.0};
}

void require_valid_jet(const JetPoint& jet, double k) {
    require_valid_k(k);
    if (!(jet.u_x > 0.0)) throw std::domain_error("jet: u_x must be positive");
}

double pde_rhs(const JetPoint& j, double k, double c, double R) {
    const auto [a, b, g] = pde_coefficients(k, R);
    return c * c *
           (std::pow(j.u_x, k - 1.0) * j.u_xx + a * std::pow(j.u_x, k - 3.0) * j.u_xx * j.u_xx * j.u_xx +
            b * std::pow(j.u_x, k - 2.0) * j.u_xx * j.u_xxx + g * std::pow(j.u_x, k - 1.0) * j.u_xxxx);
}

namespace {

JetT<Dual> seeded(const JetPoint& j, const JetPoint& dir) {
    JetT<Dual> s;
    s.u = {j.u, dir.u};
    s.u_t = {j.u_t, dir.u_t};
    s.u_x = {j.u_x, dir.u_x};
    s.u_xx = {j.u_xx, dir.u_xx};
    s.u_xxx = {j.u_xxx, dir.u_xxx};
    s.u_xxxx = {j.u_xxxx, dir.u_xxxx};
    s.u_tt = {j.u_tt, dir.u_tt};
    s.u_tx = {j.u_tx, dir.u_tx};
    s.u_txx = {j.u_txx, dir.u_txx};
    return s;
}

// t-prolongation restricted to the slots T depends on
JetPoint dt_direction(const JetPoint& j) {
    JetPoint d;
    d.u = j.u_t;
    d.u_t = j.u_tt;
    d.u_x = j.u_tx;
    d.u_xx = j.u_txx;
    return d;
}

JetPoint dx_direction(const JetPoint& j) {
    JetPoint d;
    d.u = j.u_x;
    d.u_t = j.u_tx;
    d.u_x = j.u_xx;
    d.u_xx = j.u_xxx;
    d.u_xxx = j.u_xxxx;
    d.u_tx = j.u_txx;
    return d;
}

}  // namespace

double directional_T(ConsLawId id, const JetPoint& jet, const JetPoint& dir, double dt, double k,
                     double c, double R, double t) {
    return eval_T(id, seeded(jet, dir), k, c, R, Dual(t, dt)).d;
}

double directional_X(ConsLawId id, const JetPoint& jet, const JetPoint& dir, double dt, double k,
                     double c, double R, double t) {
    return eval_X(id, seeded(jet, dir), k, c, R, Dual(t, dt)).d;
}

ResidualTerms characteristic_terms(ConsLawId id, const JetPoint& jet, double k, double c, double R,
                                   double t) {
    require_valid_jet(jet, k);
    ResidualTerms r{};
    r.DtT = directional_T(id, jet, dt_direction(jet), 1.0, k, c, R, t);
    r.DxX = directional_X(id, jet, dx_direction(jet), 0.0, k, c, R, t);
    const double Q = eval_Q(id, jet, t);
    const double F = pde_rhs(jet, k, c, R);
    r.rhs = (jet.u_tt - F) * Q;
    r.residual = r.DtT + r.DxX - r.rhs;
    r.scale = std::max({std::fabs(r.DtT), std::fabs(r.DxX), std::fabs(r.rhs), std::fabs(jet.u_tt * Q),
                        std::fabs(F * Q)});
    return r;
}

double characteristic_residual(ConsLawId id, const JetPoint& jet, double k, double c, double R, double t) {
    return characteristic_terms(id, jet, k, c, R, t).residual;
}

RandomJet random_jet(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    std::uniform_real_distribution<double> slot(-2.0, 2.0);
    std::uniform_real_distribution<double> logux(std::log(0.1), std::log(3.0));
    std::uniform_real_distribution<double> time(-5.0, 5.0);
    RandomJet r{};
    r.jet.u = slot(rng);
    r.jet.u_t = slot(rng);
    r.jet.u_x = std::exp(logux(rng));
    r.jet.u_xx = slot(rng);
    r.jet.u_xxx = slot(rng);
    r.jet.u_xxxx = slot(rng);
    r.jet.u_tt = slot(rng);
    r.jet.u_tx = slot(rng);
    r.jet.u_txx = slot(rng);
    r.t = time(rng);
    return r;
}

JetSweepResult random_jet_sweep(ConsLawId id, double k, int n_jets, std::uint64_t seed, double c, double R) {
    JetSweepResult out{id.index, k, n_jets, 0.0, 0.0};
    for (int i = 0; i < n_jets; ++i) {
        const auto rj = random_jet(seed, static_cast<std::uint64_t>(i));
        const auto terms = characteristic_terms(id, rj.jet, k, c, R, rj.t);
        out.max_relative = std::max(out.max_relative, terms.relative());
        out.max_absolute = std::max(out.max_absolute, std::fabs(terms.residual));
    }
    return out;
}

double first_integral_C1(double k, double g, double gp, double gpp) {
    return -2.0 * g + (k + 1.0) * std::pow(g, k) + (k - 1.0) * std::pow(g, k - 2.0) * gp * gp +
           2.0 * std::pow(g, k - 1.0) * gpp;
}

double first_integral_C2(double k, double g, double gp, double gpp) {
    return g * g - k * std::pow(g, k + 1.0) - (k - 2.0) * std::pow(g, k - 1.0) * gp * gp -
           2.0 * std::pow(g, k) * gpp;
}

FirstIntegralDrift first_integrals_along(const Profile& profile, const DimensionlessWave& w) {
    FirstIntegralDrift d{0.0, 0.0, 0};
    const double k = w.k;
    for (const auto& s : profile.samples) {
        if (!(s.g > 0.0) || !std::isfinite(s.gprime)) continue;
        const double gpp = 0.5 * reduced_rhs_derivative(w, s.g);
        if (!std::isfinite(gpp)) continue;
        d.drift1 = std::max(d.drift1, std::fabs(first_integral_C1(k, s.g, s.gprime, gpp) - w.C1));
        d.drift2 = std::max(d.drift2, std::fabs(first_integral_C2(k, s.g, s.gprime, gpp) - w.E));
        ++d.samples_checked;
    }
    return d;
}

bool first_integrals_pass(const FirstIntegralDrift& d, double gate) {
    return d.samples_checked > 0 && d.drift1 < gate && d.drift2 < gate;
}

Profile perturb_sample(const Profile& profile, std::size_t i, double dg) {
    if (i >= profile.samples.size()) throw std::out_of_range("perturb_sample: index out of range");
    Profile out = profile;
    out.samples[i].g += dg;
    return out;
}

}  // namespace hertzwave
