#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hertzwave/core_model.hpp"

namespace hertzwave {

enum class WaveKind {
    SolitaryWave,
    CuspedSolitaryWave,
    PeriodicWave,
    CuspedPeriodicWave,
    NodalPeriodicWave,
    NoWave
};

enum class NodeBehaviour { none, cusp, corner, smooth_min };

enum class NoWaveReason {
    none,
    periodic_slope_inequality,     // g1(S_k(g1,g0) - 1) > g0(k g0^{k-1} - 1)
    periodic_peak_below_inflection,  // g1 > g*
    asymptote_not_below_inflection,  // 0 < g0 < g* (solitary)
    asymptote_above_inflection,      // 0 < g0 <= g* (cusped solitary)
    cusped_energy_nonpositive,       // E > 0
    cusped_branch_two_bound,         // E >= (1 - k g0*^{k-1}) g0*^2, g* < g0 < 1
    cusped_branch_three_bound,       // E >= (1 - k g0^{k-1}) g0^2, g0 <= g*
    nodal_peak_below_one,            // g1 >= 1
    equilibrium_only,                // E at the bottom of the well
    no_bounded_orbit                 // energy line bounds no well on g >= 0
};

struct WaveClass {
    WaveKind kind = WaveKind::NoWave;
    double g0 = 0.0;
    std::optional<double> g1;
    int m0 = 1;
    NodeBehaviour node_behaviour = NodeBehaviour::none;
    bool critical_node = false;  // nodal with C1 = 0
    bool boundary = false;       // equality case of an admissibility inequality
    bool snapped = false;        // a near-degenerate root was snapped
    NoWaveReason reason_code = NoWaveReason::none;
    std::string reason;

    bool exists() const { return kind != WaveKind::NoWave; }
};

struct LevelRoot {
    double g;
    int multiplicity;
    bool snapped;
};

struct LevelClassification {
    WaveClass primary;
    std::vector<WaveClass> alternatives;  // coexisting waves at the same (C1, E)
    std::vector<LevelRoot> roots;
    bool zero_root = false;  // E = 0, so g = 0 solves V(g) = E
};

struct RootsResult {
    WaveClass wave;
    double C1;
    double E;
};

struct AsymptoteResult {
    WaveClass wave;
    double C1;
    double E;
    std::optional<double> g1;
};

struct CuspedResult {
    WaveClass wave;
    double C1;
    std::optional<double> g0_aux;
};

struct NodalResult {
    WaveClass wave;
    double C1;
};

const char* to_string(WaveKind kind);
const char* to_string(NodeBehaviour nb);
const char* to_string(NoWaveReason r);
WaveKind wave_kind_from_string(const std::string& s);

bool is_periodic_kind(WaveKind kind);
bool is_solitary_kind(WaveKind kind);

NodeBehaviour node_behaviour_for(double k, bool critical);

// Roots of V(g) = E on g > 0, ascending, with multiplicities.
std::vector<LevelRoot> level_roots(double k, double C1, double E);

LevelClassification classify_all(double k, double C1, double E);
WaveClass classify_levels(double k, double C1, double E);

RootsResult periodic_from_roots(double k, double g0, double g1);
AsymptoteResult solitary_from_asymptote(double k, double g0);
AsymptoteResult cusped_solitary_from_asymptote(double k, double g0);
CuspedResult cusped_periodic_admissible(double k, double g0, double E);
NodalResult nodal_admissible(double k, double g1);

// Minimiser g0* of the cusped reduced function for g* < g0 < 1.
double cusped_auxiliary_minimum(double k, double g0);

// Solitary peak: root of the reduced function above the double root g0.
double solitary_peak(double k, double g0);

}  // namespace hertzwave
