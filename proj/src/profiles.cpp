#include "hertzwave/profiles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hertzwave/roots.hpp"

namespace hertzwave {

namespace {

constexpr double kPi = std::numbers::pi;

// -expm1(-x)/x, the limit 1 at x = 0
double one_minus_exp_ratio(double x) { return x == 0.0 ? 1.0 : -std::expm1(-x) / x; }

// Third divided difference of x^n over four clustered nodes, by expanding about
// their mean: the divided difference of y^p is the complete homogeneous
// polynomial h_{p-3} of the shifted nodes. Free of the cancellation the nested
// quotients suffer when the nodes are close.
double d3_power_clustered(double n, const double (&x)[4]) {
    const double m = 0.25 * (x[0] + x[1] + x[2] + x[3]);
    double y[4];
    for (int i = 0; i < 4; ++i) y[i] = x[i] - m;
    constexpr int J = 80;
    double h[J];
    h[0] = 1.0;
    for (int j = 1; j < J; ++j) h[j] = h[j - 1] * y[0];
    for (int r = 1; r < 4; ++r)
        for (int j = 1; j < J; ++j) h[j] += y[r] * h[j - 1];
    double coef = n * (n - 1.0) * (n - 2.0) / 6.0 * std::pow(m, n - 3.0);
    double sum = 0.0;
    for (int j = 0; j < J; ++j) {
        const double add = coef * h[j];
        sum += add;
        if (j > 2 && std::fabs(add) <= 1e-18 * std::fabs(sum)) break;
        coef *= (n - 3.0 - j) / (j + 4.0) / m;
    }
    return sum;
}

}  // namespace

WaveChart::WaveChart(const DimensionlessWave& w, const WaveClass& wc) : w_(w), wc_(wc) {
    require_valid_k(w.k);
    switch (wc.kind) {
        case WaveKind::PeriodicWave:
            kind_ = ChartKind::periodic;
            g0_ = wc.g0;
            g1_ = wc.g1.value();
            mid_ = 0.5 * (g0_ + g1_);
            rad_ = 0.5 * (g1_ - g0_);
            t_end_ = kPi;
            break;
        case WaveKind::CuspedPeriodicWave:
            kind_ = ChartKind::cusped_periodic;
            g0_ = wc.g0;
            t_end_ = 0.5 * kPi;
            break;
        case WaveKind::NodalPeriodicWave:
            kind_ = wc.critical_node ? ChartKind::nodal_critical : ChartKind::nodal;
            g1_ = wc.g1.value();
            t_end_ = 0.5 * kPi;
            break;
        case WaveKind::SolitaryWave:
            kind_ = ChartKind::solitary;
            g0_ = wc.g0;
            g1_ = wc.g1.value();
            scale_ = g1_ - g0_;
            t_end_ = INFINITY;
            break;
        case WaveKind::CuspedSolitaryWave:
            kind_ = ChartKind::cusped_solitary;
            g0_ = wc.g0;
            scale_ = g0_;
            triple_ = wc.m0 == 3;
            t_end_ = INFINITY;
            break;
        case WaveKind::NoWave:
            throw std::invalid_argument("WaveChart: no wave to parameterise (" + wc.reason + ")");
    }
}

double WaveChart::slope_sign() const {
    // peaks sit at xi = 0 except for node-centred waves
    return (kind_ == ChartKind::nodal || kind_ == ChartKind::nodal_critical ||
            kind_ == ChartKind::cusped_solitary)
               ? 1.0
               : -1.0;
}

ChartPoint WaveChart::at(double t) const {
    const double k = w_.k;
    const double hk = 0.5 * (k - 1.0);
    ChartPoint p{};
    switch (kind_) {
        case ChartKind::periodic: {
            const double c = std::cos(t), s = std::sin(t);
            p.g = mid_ + rad_ * c;
            p.offset = rad_ * (1.0 + c);
            const double n = k + 1.0;
            const double A = (s_n(n, p.g, g1_) - s_n(n, p.g, g0_)) / (g1_ - g0_) - 1.0;
            p.gap = rad_ * rad_ * s * s * A;
            p.G = std::pow(p.g, 1.0 - k) * p.gap;
            p.dxi_dt = std::pow(p.g, hk) / std::sqrt(A);
            break;
        }
        case ChartKind::cusped_periodic: {
            const double c = t >= 0.5 * kPi ? 0.0 : std::cos(t), s = std::sin(t);
            p.g = g0_ * c * c;
            p.offset = -g0_ * s * s;
            const double A = p.g * s_n(k, p.g, g0_) - p.g + w_.E / g0_;
            p.gap = g0_ * s * s * A;
            p.G = p.g > 0.0 ? std::pow(p.g, 1.0 - k) * p.gap : INFINITY;
            p.dxi_dt = 2.0 * std::sqrt(g0_) * c * std::pow(p.g, hk) / std::sqrt(A);
            break;
        }
        case ChartKind::nodal: {
            const double s = t >= 0.5 * kPi ? 1.0 : std::sin(t);
            const double c = t >= 0.5 * kPi ? 0.0 : std::cos(t);
            p.g = g1_ * s * s;
            p.offset = p.g;
            const double A = s_n(k, p.g, g1_) - 1.0;
            const double rest = g1_ * c * c * A;  // (g1 - g) A
            p.gap = p.g * rest;
            p.G = std::pow(p.g, 2.0 - k) * rest;
            p.dxi_dt = 2.0 * std::pow(p.g, hk) / std::sqrt(A);
            break;
        }
        case ChartKind::nodal_critical: {
            const double s = t >= 0.5 * kPi ? 1.0 : std::sin(t);
            const double c = t >= 0.5 * kPi ? 0.0 : std::cos(t);
            p.g = std::pow(s, 1.0 / hk);
            p.offset = p.g;
            p.gap = p.g * p.g * c * c;
            p.G = std::pow(p.g, 3.0 - k) * c * c;
            p.dxi_dt = 1.0 / hk;
            break;
        }
        case ChartKind::solitary: {
            const double t2 = t * t;
            const double delta = scale_ * std::exp(-t2);
            p.g = g0_ + delta;
            p.offset = delta;
            double A;
            if (delta > 0.5 * scale_) {
                const double n = k + 1.0;
                const double f3 = g1_ - g0_ < 0.2 * g0_
                                      ? d3_power_clustered(n, {g0_, g0_, p.g, g1_})
                                      : ((s_n(n, g1_, p.g) - s_n(n, p.g, g0_)) / (g1_ - g0_) -
                                         d2_power(n, p.g, g0_)) /
                                            (g1_ - g0_);
                const double om = one_minus_exp_ratio(t2);  // (g1 - g) / (scale t^2)
                A = scale_ * t2 * om * f3;
                p.dxi_dt = 2.0 * std::pow(p.g, hk) / std::sqrt(scale_ * om * f3);
            } else {
                A = solitary_reduced(k, g0_, delta, false);
                p.dxi_dt = 2.0 * t * std::pow(p.g, hk) / std::sqrt(A);
            }
            p.gap = delta * delta * A;
            p.G = std::pow(p.g, 1.0 - k) * p.gap;
            break;
        }
        case ChartKind::cusped_solitary: {
            const double t2 = t * t;
            const double delta = -g0_ * std::exp(-t2);
            p.g = -g0_ * std::expm1(-t2);
            p.offset = delta;
            double A;
            if (p.g < g0_ / std::numbers::e) {
                // g is accurate here while g0 + delta is not
                A = 1.0 - (std::pow(p.g, k + 1.0) - std::pow(g0_, k + 1.0) -
                           (k + 1.0) * std::pow(g0_, k) * delta) /
                              (delta * delta);
            } else {
                A = solitary_reduced(k, g0_, delta, triple_);
            }
            p.gap = delta * delta * A;
            p.G = p.g > 0.0 ? std::pow(p.g, 1.0 - k) * p.gap : INFINITY;
            p.dxi_dt = 2.0 * t * std::pow(p.g, hk) / std::sqrt(A);
            break;
        }
    }
    return p;
}

double WaveChart::t_for_gap(double rel_gap) const {
    if (!(rel_gap > 0.0 && rel_gap < 1.0)) throw std::domain_error("t_for_gap: need 0 < gap < 1");
    return std::sqrt(-std::log(rel_gap));
}

double WaveChart::xi_between(double t0, double t1, QuadratureOptions opt) const {
    return integrate([this](double t) { return at(t).dxi_dt; }, t0, t1, opt).value;
}

double WaveChart::t_for_xi(double xi, double rel_tol) const {
    if (xi < 0.0) throw std::domain_error("t_for_xi: xi must be >= 0");
    if (xi == 0.0) return 0.0;
    QuadratureOptions q;
    q.rel_tol = 1e-13;
    double hi = t_end_;
    if (std::isfinite(hi)) {
        if (xi >= xi_between(0.0, hi, q)) return hi;
    } else {
        hi = 1.0;
        while (xi_between(0.0, hi, q) < xi) {
            hi *= 1.5;
            if (hi > 40.0) throw RootError("t_for_xi: xi beyond representable tail");
        }
    }
    auto fdf = [&](double t) {
        return std::pair<double, double>{xi_between(0.0, t, q) - xi, at(t).dxi_dt};
    };
    RootOptions ro;
    ro.tol = rel_tol * std::fmax(1.0, hi);
    return newton_bisect(fdf, 0.0, hi, ro);
}

double half_period_integral(const DimensionlessWave& w, const WaveClass& wc, QuadratureOptions opt) {
    if (!is_periodic_kind(wc.kind))
        throw std::invalid_argument("half_period_integral: wave is not periodic");
    WaveChart chart(w, wc);
    return integrate([&](double t) { return chart.at(t).dxi_dt; }, 0.0, chart.t_end(), opt).value;
}

namespace {

struct Sampled {
    std::vector<ProfileSample> samples;
    std::vector<double> ts;
    double last_xi = 0.0;
};

Sampled sample_chart(const WaveChart& chart, const std::vector<double>& ts, double rel_tol) {
    Sampled out;
    QuadratureOptions q;
    q.rel_tol = rel_tol;
    q.abs_tol = 1e-16;
    double xi = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0) xi += chart.xi_between(ts[i - 1], ts[i], q);
        const auto p = chart.at(ts[i]);
        if (!std::isfinite(p.G)) continue;  // cusp: slope unbounded
        out.samples.push_back({xi, p.g, chart.slope_sign() * std::sqrt(std::fmax(p.G, 0.0))});
        out.ts.push_back(ts[i]);
    }
    out.last_xi = xi;
    return out;
}

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

Profile build_periodic_profile(const DimensionlessWave& w, const WaveClass& wc, int n_samples,
                               ProfileOptions opt) {
    if (!is_periodic_kind(wc.kind))
        throw std::invalid_argument("build_periodic_profile: wave is not periodic");
    if (n_samples < 16) throw std::invalid_argument("build_periodic_profile: need >= 16 samples");
    WaveChart chart(w, wc);
    std::vector<double> ts(n_samples);
    for (int i = 0; i < n_samples; ++i) ts[i] = chart.t_end() * i / (n_samples - 1);
    auto s = sample_chart(chart, ts, opt.segment_rel_tol);
    Profile p;
    p.wave = wc;
    p.params = w;
    p.samples = std::move(s.samples);
    p.wavelength = 2.0 * s.last_xi;
    return p;
}

Profile build_solitary_profile(const DimensionlessWave& w, const WaveClass& wc, double g_floor,
                               int n_samples, ProfileOptions opt) {
    if (!is_solitary_kind(wc.kind))
        throw std::invalid_argument("build_solitary_profile: wave is not solitary");
    if (n_samples < 16) throw std::invalid_argument("build_solitary_profile: need >= 16 samples");
    WaveChart chart(w, wc);
    const double t_max = chart.t_for_gap(g_floor);
    std::vector<double> ts(n_samples);
    for (int i = 0; i < n_samples; ++i) ts[i] = t_max * i / (n_samples - 1);
    auto s = sample_chart(chart, ts, opt.segment_rel_tol);

    Profile p;
    p.wave = wc;
    p.params = w;
    p.truncation_xi = s.last_xi;

    // fit over the last decade of the gap
    std::vector<double> xs, ys;
    const double scale = wc.kind == WaveKind::SolitaryWave ? wc.g1.value() - wc.g0 : wc.g0;
    for (std::size_t i = 0; i < s.ts.size(); ++i) {
        const double gap = std::exp(-s.ts[i] * s.ts[i]);
        if (gap > 10.0 * g_floor) continue;
        const double xi = s.samples[i].xi;
        ys.push_back(std::log(scale * gap));
        xs.push_back(wc.m0 == 3 ? std::log(xi) : xi);
    }
    if (xs.size() < 4) {
        xs.clear();
        ys.clear();
        const std::size_t m = s.ts.size();
        for (std::size_t i = m - std::min<std::size_t>(8, m); i < m; ++i) {
            ys.push_back(std::log(scale * std::exp(-s.ts[i] * s.ts[i])));
            xs.push_back(wc.m0 == 3 ? std::log(s.samples[i].xi) : s.samples[i].xi);
        }
    }
    const double slope = fit_slope(xs, ys);
    p.tail = TailRecord{wc.m0 == 3 ? TailKind::power : TailKind::exponential, -slope};
    p.samples = std::move(s.samples);
    return p;
}

Profile build_profile(const DimensionlessWave& w, const WaveClass& wc, ProfileOptions opt) {
    if (is_solitary_kind(wc.kind)) return build_solitary_profile(w, wc, opt.g_floor, opt.n_samples, opt);
    return build_periodic_profile(w, wc, opt.n_samples, opt);
}

std::vector<ProfileSample> reflect(const Profile& p) {
    std::vector<ProfileSample> out;
    out.reserve(2 * p.samples.size());
    for (auto it = p.samples.rbegin(); it != p.samples.rend(); ++it) {
        if (it->xi == 0.0) continue;
        out.push_back({-it->xi, it->g, -it->gprime});
    }
    out.insert(out.end(), p.samples.begin(), p.samples.end());
    return out;
}

double profile_value_at(const WaveChart& chart, double xi, std::optional<double> wavelength) {
    double x = std::fabs(xi);
    if (std::isfinite(chart.t_end())) {
        const double L = wavelength ? *wavelength
                                    : 2.0 * half_period_integral(chart.params(), chart.wave(),
                                                                 QuadratureOptions{1e-13, 0.0, 4000});
        x = std::fmod(x, L);
        if (x > 0.5 * L) x = L - x;
    }
    return chart.at(chart.t_for_xi(x)).g;
}

double solitary_tail_rate(double k, double g0) {
    return std::sqrt(std::pow(g0, 1.0 - k) * solitary_reduced(k, g0, 0.0, false));
}

}  // namespace hertzwave
