#pragma once

#include <vector>

namespace hertzwave {

// Physical model: exponent k, bead radius R, speed scale c, wave speed nu.
struct PhysicalParams {
    double k = 1.5;
    double R = 1.0;
    double c = 1.0;
    double V_wave = 1.0;

    void validate() const;
};

// Reduced travelling-wave ODE (g')^2 = g^{1-k} (E - V(g)).
struct DimensionlessWave {
    double k = 2.0;
    double C1 = 0.0;
    double E = 0.0;
};

enum class CriticalKind { local_min, local_max, inflection };

struct CriticalPoint {
    double g;
    CriticalKind kind;
};

struct CriticalData {
    double g_star;
    double C1_star;
    std::vector<CriticalPoint> critical_points;
};

struct PotentialDerivs {
    double first;
    double second;
};

struct PhysicalPoint {
    double strain;
    double x_shift;
};

struct Scaling {
    double lambda;  // strain amplitude scale
    double omega;   // length scale
};

void require_valid_k(double k);

// (a^n - b^n)/(a - b) with the coincident limit n a^{n-1}.
double s_n(double n, double a, double b);

// Second divided difference f[b, b, a] of f(x) = x^n.
double d2_power(double n, double a, double b);

double g_star(double k);
double C1_star(double k);
double sigma(double k);

double potential(const DimensionlessWave& w, double g);
PotentialDerivs potential_derivs(const DimensionlessWave& w, double g);

// E - V(g) and G(g) = g^{1-k}(E - V(g)), evaluated directly.
double energy_gap(const DimensionlessWave& w, double g);
double reduced_rhs(const DimensionlessWave& w, double g);
// dG/dg; twice g''.
double reduced_rhs_derivative(const DimensionlessWave& w, double g);

CriticalData critical_data(double k, double C1);

Scaling scaling(const PhysicalParams& p);
double to_dimensionless(const PhysicalParams& p, double strain_amplitude);
double xi_to_dimensionless(const PhysicalParams& p, double x_shift);
PhysicalPoint to_physical(const PhysicalParams& p, double g, double xi);

// Solitary reduced function A = (E - V)/(g - g0)^2 for the double root g0,
// evaluated from the signed gap delta = g - g0 without cancellation.
// triple = true drops the constant term (g0 at the inflection point).
double solitary_reduced(double k, double g0, double delta, bool triple);

}  // namespace hertzwave
