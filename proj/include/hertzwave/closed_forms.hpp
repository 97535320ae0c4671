#pragma once

#include <optional>
#include <string>

#include "hertzwave/classifier.hpp"
#include "hertzwave/conserved.hpp"
#include "hertzwave/core_model.hpp"

namespace hertzwave {

enum class Family {
    Solitary_k2,
    Solitary_k3,
    CuspedSolitary_k2,
    CuspedSolitary_k3,
    Periodic_k2_E0,
    Periodic_k3_C10,
    CuspedPeriodic_k3_C10,
    Nodal_k2,
    Nodal_anyk_C10
};

enum class Form { explicit_g_of_xi, implicit_xi_of_g };

struct ClosedFormSolution {
    Family family;
    double parameter;  // g0 or g1 per family; unused for Nodal_anyk_C10
    double k;
    Form form;
};

const char* to_string(Family f);
Family family_from_string(const std::string& s);
inline constexpr Family kAllFamilies[] = {
    Family::Solitary_k2,    Family::Solitary_k3,     Family::CuspedSolitary_k2,
    Family::CuspedSolitary_k3, Family::Periodic_k2_E0, Family::Periodic_k3_C10,
    Family::CuspedPeriodic_k3_C10, Family::Nodal_k2, Family::Nodal_anyk_C10};

// Validates the family's admissible parameter range. k is only read for
// Nodal_anyk_C10.
ClosedFormSolution make_closed_form(Family family, double parameter, double k = 0.0);

// Model data the solution belongs to.
DimensionlessWave wave_of(const ClosedFormSolution& sol);
WaveClass class_of(const ClosedFormSolution& sol);
// Wavelength of the periodic families.
std::optional<double> wavelength(const ClosedFormSolution& sol);

// Explicit families.
double eval(const ClosedFormSolution& sol, double xi);
double eval_slope(const ClosedFormSolution& sol, double xi);

// Implicit families: left side of the printed relation as a function of g,
// and its residual against |xi| (xi >= 0 and xi < 0 select the two mirror
// branches). implicit_lhs_gap takes the gap |g - g0| directly.
double implicit_lhs(const ClosedFormSolution& sol, double g);
double implicit_lhs_gap(const ClosedFormSolution& sol, double gap);
double implicit_residual(const ClosedFormSolution& sol, double xi, double g);
double invert_implicit(const ClosedFormSolution& sol, double xi);

// Value at xi for either form.
double closed_value(const ClosedFormSolution& sol, double xi);

// Closed-form momentum/energy. Cusped solitary families hold the printed
// negated values with orientation_negated set.
ConservedSet closed_conserved(const ClosedFormSolution& sol, const PhysicalParams& p);

}  // namespace hertzwave
