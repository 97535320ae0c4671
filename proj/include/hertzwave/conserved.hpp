#pragma once

#include <optional>

#include "hertzwave/classifier.hpp"
#include "hertzwave/core_model.hpp"
#include "hertzwave/quadrature.hpp"

namespace hertzwave {

// sigma^{(k+3)/(k-1)} |nu/c|^{4/(k-1)} and the assembled momentum/energy factors.
struct PrefactorBreakdown {
    double sigma;
    double sigma_power;       // sigma^{(k+3)/(k-1)}
    double speed_ratio;       // |nu/c|
    double speed_ratio_power; // |nu/c|^{4/(k-1)}
    double V_wave;
    double R;
    double momentum_factor;   // sigma_power speed_ratio_power nu R / sqrt(3)
    double energy_factor;     // sigma_power speed_ratio_power nu^2 R / (2 sqrt(3))
};

// Values are per unit linear mass density, integrated over the half domain
// between g_min and g_max exactly as the g-integrals are written.
struct ConservedSet {
    double momentum = 0.0;
    double energy = 0.0;
    std::optional<double> energy_momentum;  // solitary only
    bool regularized = false;               // solitary: background subtracted
    bool orientation_negated = false;       // cusped solitary: values are the negated integrals
    PrefactorBreakdown prefactors{};
    std::optional<double> physical_wavelength;
};

PrefactorBreakdown prefactors(const PhysicalParams& p);

ConservedSet conserved_periodic(const DimensionlessWave& w, const WaveClass& wc,
                                const PhysicalParams& p, QuadratureOptions opt = {1e-12, 0.0, 4000});
ConservedSet conserved_solitary(const DimensionlessWave& w, const WaveClass& wc,
                                const PhysicalParams& p, QuadratureOptions opt = {1e-12, 0.0, 4000});
ConservedSet conserved(const DimensionlessWave& w, const WaveClass& wc, const PhysicalParams& p,
                       QuadratureOptions opt = {1e-12, 0.0, 4000});

// Truncation of the Gaussian tail parameter for the regularised integrals.
double solitary_sigma_cutoff(int m0);

}  // namespace hertzwave
