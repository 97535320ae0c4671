#include "hertzwave/conserved.hpp"

#include <cmath>
#include <stdexcept>

#include "hertzwave/profiles.hpp"

namespace hertzwave {

namespace {

void check_same_k(const DimensionlessWave& w, const PhysicalParams& p) {
    p.validate();
    if (std::fabs(w.k - p.k) > 1e-12 * p.k)
        throw std::invalid_argument("conserved: exponent of the wave and of the physical model differ");
}

}  // namespace

PrefactorBreakdown prefactors(const PhysicalParams& p) {
    p.validate();
    PrefactorBreakdown b{};
    const double k = p.k;
    b.sigma = sigma(k);
    b.sigma_power = std::pow(b.sigma, (k + 3.0) / (k - 1.0));
    b.speed_ratio = std::fabs(p.V_wave / p.c);
    b.speed_ratio_power = std::pow(b.speed_ratio, 4.0 / (k - 1.0));
    b.V_wave = p.V_wave;
    b.R = p.R;
    const double common = b.sigma_power * b.speed_ratio_power * p.R;
    b.momentum_factor = common * p.V_wave / std::sqrt(3.0);
    b.energy_factor = common * p.V_wave * p.V_wave / (2.0 * std::sqrt(3.0));
    return b;
}

double solitary_sigma_cutoff(int m0) { return m0 == 3 ? 9.5 : 6.5; }

ConservedSet conserved_periodic(const DimensionlessWave& w, const WaveClass& wc,
                                const PhysicalParams& p, QuadratureOptions opt) {
    if (!is_periodic_kind(wc.kind))
        throw std::invalid_argument("conserved_periodic: wave is not periodic");
    check_same_k(w, p);
    WaveChart chart(w, wc);
    const double k = w.k;
    const auto mom = integrate(
        [&](double t) {
            const auto c = chart.at(t);
            return c.g * c.g * c.dxi_dt;
        },
        0.0, chart.t_end(), opt);
    const auto ene = integrate(
        [&](double t) {
            const auto c = chart.at(t);
            return (c.g * c.g * (1.0 + std::pow(c.g, k - 1.0)) - c.gap) * c.dxi_dt;
        },
        0.0, chart.t_end(), opt);
    const double half = integrate([&](double t) { return chart.at(t).dxi_dt; }, 0.0, chart.t_end(), opt)
                            .value;
    ConservedSet out;
    out.prefactors = prefactors(p);
    out.momentum = out.prefactors.momentum_factor * mom.value;
    out.energy = out.prefactors.energy_factor * ene.value;
    out.physical_wavelength = std::sqrt(k * (k + 1.0) / 6.0) * 2.0 * half * p.R;
    return out;
}

ConservedSet conserved_solitary(const DimensionlessWave& w, const WaveClass& wc,
                                const PhysicalParams& p, QuadratureOptions opt) {
    if (!is_solitary_kind(wc.kind))
        throw std::invalid_argument("conserved_solitary: wave is not solitary");
    check_same_k(w, p);
    WaveChart chart(w, wc);
    const double k = w.k;
    const double g0 = wc.g0;
    const double t_max = solitary_sigma_cutoff(wc.m0);

    // background-subtracted densities, written with the gap delta = g - g0 factored out
    auto mom = [&](double t) {
        const auto c = chart.at(t);
        return (c.g + g0) * c.offset * c.dxi_dt;
    };
    auto ene = [&](double t) {
        const auto c = chart.at(t);
        const double d = c.offset;
        return ((c.g + g0) * d + d * s_n(k + 1.0, c.g, g0) - c.gap) * c.dxi_dt;
    };
    auto emo = [&](double t) {
        const auto c = chart.at(t);
        return (c.g * c.g * c.offset * s_n(k - 1.0, c.g, g0) - c.gap) * c.dxi_dt;
    };
    const double Ip = integrate(mom, 0.0, t_max, opt).value;
    const double Ie = integrate(ene, 0.0, t_max, opt).value;
    const double Ih = integrate(emo, 0.0, t_max, opt).value;

    ConservedSet out;
    out.prefactors = prefactors(p);
    out.regularized = true;
    const double sign = wc.kind == WaveKind::CuspedSolitaryWave ? -1.0 : 1.0;
    out.orientation_negated = sign < 0.0;
    out.momentum = sign * out.prefactors.momentum_factor * Ip;
    out.energy = sign * out.prefactors.energy_factor * Ie;
    out.energy_momentum = sign * out.prefactors.energy_factor * Ih;
    return out;
}

ConservedSet conserved(const DimensionlessWave& w, const WaveClass& wc, const PhysicalParams& p,
                       QuadratureOptions opt) {
    if (is_solitary_kind(wc.kind)) return conserved_solitary(w, wc, p, opt);
    return conserved_periodic(w, wc, p, opt);
}

}  // namespace hertzwave
