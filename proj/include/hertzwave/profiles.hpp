#pragma once

#include <optional>
#include <vector>

#include "hertzwave/classifier.hpp"
#include "hertzwave/core_model.hpp"
#include "hertzwave/quadrature.hpp"

namespace hertzwave {

struct ProfileSample {
    double xi;
    double g;
    double gprime;
};

enum class TailKind { exponential, power };

struct TailRecord {
    TailKind kind;
    double rate;  // exponential: g - g0 ~ e^{-rate xi}; power: ~ xi^{-rate}
};

struct Profile {
    WaveClass wave;
    DimensionlessWave params;
    std::vector<ProfileSample> samples;  // xi >= 0, strictly increasing
    std::optional<double> wavelength;
    std::optional<TailRecord> tail;
    std::optional<double> truncation_xi;
};

struct ProfileOptions {
    int n_samples = 256;
    double g_floor = 1e-8;
    double segment_rel_tol = 1e-12;
};

// Chart value at parameter t: the profile point and the Jacobian dxi/dt.
struct ChartPoint {
    double g;
    double offset;  // g - g0, accurate near the asymptote for solitary kinds
    double gap;     // E - V(g) in factored form
    double G;       // (g')^2, may be +inf at a cusp
    double dxi_dt;
};

enum class ChartKind { periodic, cusped_periodic, nodal, nodal_critical, solitary, cusped_solitary };

// Smooth parameterisation of half a wave. t = 0 is xi = 0 (peak, node or cusp
// node per class), xi increases with t. Endpoint root singularities are
// absorbed by trigonometric / Gaussian substitutions so dxi/dt is bounded.
class WaveChart {
public:
    WaveChart(const DimensionlessWave& w, const WaveClass& wc);

    ChartKind kind() const { return kind_; }
    const DimensionlessWave& params() const { return w_; }
    const WaveClass& wave() const { return wc_; }
    // +inf for solitary kinds
    double t_end() const { return t_end_; }
    // slope sign on xi > 0
    double slope_sign() const;
    ChartPoint at(double t) const;
    // solitary kinds: t at which |g - g0| = rel_gap * scale
    double t_for_gap(double rel_gap) const;
    // integral of dxi/dt over [t0, t1]
    double xi_between(double t0, double t1, QuadratureOptions opt) const;
    // invert xi(t) = xi; xi >= 0 and within the half period
    double t_for_xi(double xi, double rel_tol = 1e-13) const;

private:
    DimensionlessWave w_;
    WaveClass wc_;
    ChartKind kind_;
    double t_end_;
    double g0_ = 0.0, g1_ = 0.0, mid_ = 0.0, rad_ = 0.0, scale_ = 0.0;
    bool triple_ = false;
};

double half_period_integral(const DimensionlessWave& w, const WaveClass& wc,
                            QuadratureOptions opt = {});

Profile build_periodic_profile(const DimensionlessWave& w, const WaveClass& wc,
                               int n_samples = 256, ProfileOptions opt = {});
Profile build_solitary_profile(const DimensionlessWave& w, const WaveClass& wc,
                               double g_floor = 1e-8, int n_samples = 256, ProfileOptions opt = {});
Profile build_profile(const DimensionlessWave& w, const WaveClass& wc, ProfileOptions opt = {});

// Full symmetric wave from the stored half: xi -> -xi, g' -> -g'.
std::vector<ProfileSample> reflect(const Profile& p);

// g at arbitrary xi: periodic kinds wrap by the wavelength, all waves are even.
double profile_value_at(const WaveChart& chart, double xi, std::optional<double> wavelength = {});

// Expected exponential tail rate sqrt(G''(g0)/2) of an m0 = 2 solitary wave.
double solitary_tail_rate(double k, double g0);

}  // namespace hertzwave
