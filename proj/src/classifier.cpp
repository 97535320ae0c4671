#include "hertzwave/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hertzwave/roots.hpp"

namespace hertzwave {

namespace {

constexpr double kLevelTol = 1e-12;   // |E - V(g_c)| snap, relative to 1 + |E|
constexpr double kZeroTol = 1e-14;    // |E| below this counts as E = 0
constexpr double kStarTol = 1e-12;    // C1 vs C1*, g0 vs g*
constexpr double kBoundTol = 1e-12;   // equality in admissibility bounds

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

WaveClass no_wave(NoWaveReason code, std::string text) {
    WaveClass wc;
    wc.kind = WaveKind::NoWave;
    wc.reason_code = code;
    wc.reason = std::move(text);
    return wc;
}

bool near_zero_energy(double E, double C1) { return std::fabs(E) <= kZeroTol * (1.0 + std::fabs(C1)); }

double upper_bracket(const DimensionlessWave& w, double start) {
    double hi = std::fmax(start, std::fmax(2.0, 2.0 * std::pow(1.0 + std::fabs(w.C1) + std::fabs(w.E),
                                                                1.0 / (w.k - 1.0))));
    while (potential(w, hi) - w.E <= 0.0) hi *= 2.0;
    return hi;
}

}  // namespace

const char* to_string(WaveKind kind) {
    switch (kind) {
        case WaveKind::SolitaryWave: return "SolitaryWave";
        case WaveKind::CuspedSolitaryWave: return "CuspedSolitaryWave";
        case WaveKind::PeriodicWave: return "PeriodicWave";
        case WaveKind::CuspedPeriodicWave: return "CuspedPeriodicWave";
        case WaveKind::NodalPeriodicWave: return "NodalPeriodicWave";
        case WaveKind::NoWave: return "NoWave";
    }
    return "NoWave";
}

const char* to_string(NodeBehaviour nb) {
    switch (nb) {
        case NodeBehaviour::none: return "none";
        case NodeBehaviour::cusp: return "cusp";
        case NodeBehaviour::corner: return "corner";
        case NodeBehaviour::smooth_min: return "smooth_min";
    }
    return "none";
}

const char* to_string(NoWaveReason r) {
    switch (r) {
        case NoWaveReason::none: return "none";
        case NoWaveReason::periodic_slope_inequality: return "periodic_slope_inequality";
        case NoWaveReason::periodic_peak_below_inflection: return "periodic_peak_below_inflection";
        case NoWaveReason::asymptote_not_below_inflection: return "asymptote_not_below_inflection";
        case NoWaveReason::asymptote_above_inflection: return "asymptote_above_inflection";
        case NoWaveReason::cusped_energy_nonpositive: return "cusped_energy_nonpositive";
        case NoWaveReason::cusped_branch_two_bound: return "cusped_branch_two_bound";
        case NoWaveReason::cusped_branch_three_bound: return "cusped_branch_three_bound";
        case NoWaveReason::nodal_peak_below_one: return "nodal_peak_below_one";
        case NoWaveReason::equilibrium_only: return "equilibrium_only";
        case NoWaveReason::no_bounded_orbit: return "no_bounded_orbit";
    }
    return "none";
}

WaveKind wave_kind_from_string(const std::string& s) {
    for (auto k : {WaveKind::SolitaryWave, WaveKind::CuspedSolitaryWave, WaveKind::PeriodicWave,
                   WaveKind::CuspedPeriodicWave, WaveKind::NodalPeriodicWave, WaveKind::NoWave})
        if (s == to_string(k)) return k;
    throw std::invalid_argument("unknown wave kind: " + s);
}

bool is_periodic_kind(WaveKind kind) {
    return kind == WaveKind::PeriodicWave || kind == WaveKind::CuspedPeriodicWave ||
           kind == WaveKind::NodalPeriodicWave;
}

bool is_solitary_kind(WaveKind kind) {
    return kind == WaveKind::SolitaryWave || kind == WaveKind::CuspedSolitaryWave;
}

NodeBehaviour node_behaviour_for(double k, bool critical) {
    // |g'(0)|^2 ~ C1 g^{2-k} (C1 > 0) or g^{3-k} (C1 = 0)
    const double split = critical ? 3.0 : 2.0;
    if (std::fabs(k - split) <= 1e-12) return NodeBehaviour::corner;
    return k < split ? NodeBehaviour::smooth_min : NodeBehaviour::cusp;
}

std::vector<LevelRoot> level_roots(double k, double C1, double E) {
    require_valid_k(k);
    const DimensionlessWave w{k, C1, E};
    const auto cd = critical_data(k, C1);
    auto f = [&](double g) { return potential(w, g) - E; };
    auto fdf = [&](double g) {
        return std::pair<double, double>{potential(w, g) - E, potential_derivs(w, g).first};
    };
    const double tol_level = kLevelTol * (1.0 + std::fabs(E));
    const bool zero = near_zero_energy(E, C1);

    std::vector<LevelRoot> roots;
    std::vector<double> nodes{0.0};
    std::vector<bool> node_is_root{zero};
    for (const auto& cp : cd.critical_points) {
        nodes.push_back(cp.g);
        const double fc = f(cp.g);
        const bool hit = std::fabs(fc) <= tol_level;
        node_is_root.push_back(hit);
        if (hit) roots.push_back({cp.g, cp.kind == CriticalKind::inflection ? 3 : 2, fc != 0.0});
    }
    nodes.push_back(upper_bracket(w, 2.0 * nodes.back()));
    node_is_root.push_back(false);

    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double lo = nodes[i], hi = nodes[i + 1];
        const double flo = node_is_root[i] ? 0.0 : f(lo);
        const double fhi = node_is_root[i + 1] ? 0.0 : f(hi);
        if (flo == 0.0 || fhi == 0.0 || (flo > 0.0) == (fhi > 0.0)) continue;
        const double r = newton_bisect(fdf, lo, hi);
        const auto d = potential_derivs(w, r);
        if (std::fabs(d.first) < 1e-8 * (1.0 + std::fabs(d.second))) {
            const int mult = std::fabs(d.second) < 1e-8 ? 3 : 2;
            roots.push_back({r, mult, true});
        } else {
            roots.push_back({r, 1, false});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const LevelRoot& a, const LevelRoot& b) { return a.g < b.g; });
    return roots;
}

LevelClassification classify_all(double k, double C1, double E) {
    require_valid_k(k);
    LevelClassification out;
    const bool zero = near_zero_energy(E, C1);
    const double Ez = zero ? 0.0 : E;
    const DimensionlessWave w{k, C1, Ez};
    out.roots = level_roots(k, C1, Ez);
    out.zero_root = zero;
    const bool snapped_any =
        std::any_of(out.roots.begin(), out.roots.end(), [](const LevelRoot& r) { return r.snapped; }) ||
        (zero && E != 0.0);

    // g = 0 enters as a left boundary: a root when E = 0, an open end when E > 0.
    struct Point {
        double g;
        int mult;  // 0 marks the g = 0 boundary
    };
    std::vector<Point> pts;
    if (zero || Ez > 0.0) pts.push_back({0.0, 0});
    for (const auto& r : out.roots) pts.push_back({r.g, r.multiplicity});

    std::vector<WaveClass> periodic_like, nodal, cusped;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const auto a = pts[i], b = pts[i + 1];
        const double mid = 0.5 * (a.g + b.g);
        if (!(energy_gap(w, mid) > 0.0)) continue;
        WaveClass wc;
        wc.snapped = snapped_any;
        if (a.mult == 0) {
            if (zero) {
                const bool critical = std::fabs(C1) <= kStarTol;
                wc.kind = WaveKind::NodalPeriodicWave;
                wc.g0 = 0.0;
                wc.g1 = (critical && std::fabs(b.g - 1.0) < 1e-9) ? 1.0 : b.g;
                wc.critical_node = critical;
                wc.m0 = critical ? 2 : 1;
                wc.node_behaviour = node_behaviour_for(k, critical);
                nodal.push_back(wc);
            } else if (b.mult == 1) {
                wc.kind = WaveKind::CuspedPeriodicWave;
                wc.g0 = b.g;
                wc.g1 = b.g;
                wc.m0 = 1;
                cusped.push_back(wc);
            } else {
                wc.kind = WaveKind::CuspedSolitaryWave;
                wc.g0 = b.g;
                wc.m0 = b.mult;
                cusped.push_back(wc);
            }
        } else if (a.mult == 1 && b.mult == 1) {
            wc.kind = WaveKind::PeriodicWave;
            wc.g0 = a.g;
            wc.g1 = b.g;
            wc.m0 = 1;
            periodic_like.push_back(wc);
        } else if (a.mult >= 2 && b.mult == 1) {
            wc.kind = WaveKind::SolitaryWave;
            wc.g0 = a.g;
            wc.g1 = b.g;
            wc.m0 = 2;
            periodic_like.push_back(wc);
        }
    }

    std::vector<WaveClass> all;
    for (auto* v : {&periodic_like, &nodal, &cusped}) all.insert(all.end(), v->begin(), v->end());
    if (all.empty()) {
        const auto cd = critical_data(k, C1);
        bool at_min = false;
        for (const auto& cp : cd.critical_points)
            if (cp.kind == CriticalKind::local_min &&
                std::fabs(potential(w, cp.g) - Ez) <= kLevelTol * (1.0 + std::fabs(Ez)))
                at_min = true;
        if (at_min)
            out.primary = no_wave(NoWaveReason::equilibrium_only,
                                  "energy level sits at the potential minimum: constant solution only");
        else
            out.primary = no_wave(NoWaveReason::no_bounded_orbit,
                                  "energy line E = " + fmt(E) +
                                      " bounds no region with E > V(g) between admissible roots");
        return out;
    }
    out.primary = all.front();
    out.alternatives.assign(all.begin() + 1, all.end());
    return out;
}

WaveClass classify_levels(double k, double C1, double E) { return classify_all(k, C1, E).primary; }

RootsResult periodic_from_roots(double k, double g0, double g1) {
    require_valid_k(k);
    if (!(g0 > 0.0 && g0 < g1) || !std::isfinite(g1))
        throw std::domain_error("periodic_from_roots: requires 0 < g0 < g1");
    RootsResult out;
    out.C1 = s_n(k + 1.0, g1, g0) - (g1 + g0);
    out.E = g0 * g1 * (1.0 - s_n(k, g1, g0));
    const double gs = g_star(k);
    const double lhs = g1 * (s_n(k, g1, g0) - 1.0);
    const double rhs = g0 * (k * std::pow(g0, k - 1.0) - 1.0);
    if (!(g1 > gs)) {
        out.wave = no_wave(NoWaveReason::periodic_peak_below_inflection,
                           "g1 = " + fmt(g1) + " must exceed g* = " + fmt(gs));
    } else if (!(lhs > rhs)) {
        out.wave = no_wave(NoWaveReason::periodic_slope_inequality,
                           "g1(S_k(g1,g0) - 1) = " + fmt(lhs) + " must exceed g0(k g0^(k-1) - 1) = " +
                               fmt(rhs));
    } else {
        out.wave.kind = WaveKind::PeriodicWave;
        out.wave.g0 = g0;
        out.wave.g1 = g1;
        out.wave.m0 = 1;
    }
    return out;
}

double solitary_peak(double k, double g0) {
    auto A = [&](double delta) { return solitary_reduced(k, g0, delta, false); };
    double hi = 1.0;
    while (A(hi) >= 0.0) hi *= 2.0;
    return g0 + bisect(A, 0.0, hi);
}

AsymptoteResult solitary_from_asymptote(double k, double g0) {
    require_valid_k(k);
    if (!(g0 > 0.0) || !std::isfinite(g0))
        throw std::domain_error("solitary_from_asymptote: requires g0 > 0");
    AsymptoteResult out;
    out.C1 = (k + 1.0) * std::pow(g0, k) - 2.0 * g0;
    out.E = g0 * g0 * (1.0 - k * std::pow(g0, k - 1.0));
    const double gs = g_star(k);
    if (!(g0 < gs) || std::fabs(g0 - gs) <= kStarTol * gs) {
        out.wave = no_wave(NoWaveReason::asymptote_not_below_inflection,
                           "solitary asymptote g0 = " + fmt(g0) + " must satisfy g0 < g* = " + fmt(gs));
        return out;
    }
    out.g1 = solitary_peak(k, g0);
    out.wave.kind = WaveKind::SolitaryWave;
    out.wave.g0 = g0;
    out.wave.g1 = out.g1;
    out.wave.m0 = 2;
    return out;
}

AsymptoteResult cusped_solitary_from_asymptote(double k, double g0) {
    require_valid_k(k);
    if (!(g0 > 0.0) || !std::isfinite(g0))
        throw std::domain_error("cusped_solitary_from_asymptote: requires g0 > 0");
    const double gs = g_star(k);
    const bool triple = std::fabs(g0 - gs) <= kStarTol * gs;
    if (triple) g0 = gs;
    AsymptoteResult out;
    out.C1 = triple ? C1_star(k) : (k + 1.0) * std::pow(g0, k) - 2.0 * g0;
    out.E = g0 * g0 * (1.0 - k * std::pow(g0, k - 1.0));
    if (g0 > gs && !triple) {
        out.wave = no_wave(NoWaveReason::asymptote_above_inflection,
                           "cusped solitary asymptote g0 = " + fmt(g0) + " must satisfy g0 <= g* = " +
                               fmt(gs));
        return out;
    }
    out.wave.kind = WaveKind::CuspedSolitaryWave;
    out.wave.g0 = g0;
    out.wave.m0 = triple ? 3 : 2;
    return out;
}

double cusped_auxiliary_minimum(double k, double g0) {
    // A'(g) = d/dg S_{k+1}(g, g0) - 1, negative at 0 and non-negative at g*
    auto dA = [&](double g) { return d2_power(k + 1.0, g0, g) - 1.0; };
    return bisect(dA, 0.0, g_star(k));
}

CuspedResult cusped_periodic_admissible(double k, double g0, double E) {
    require_valid_k(k);
    if (!(g0 > 0.0) || !std::isfinite(g0) || !std::isfinite(E))
        throw std::domain_error("cusped_periodic_admissible: requires g0 > 0 and finite E");
    CuspedResult out;
    out.C1 = std::pow(g0, k) - g0 - E / g0;
    auto accept = [&](bool boundary) {
        out.wave.kind = WaveKind::CuspedPeriodicWave;
        out.wave.g0 = g0;
        out.wave.g1 = g0;
        out.wave.m0 = 1;
        out.wave.boundary = boundary;
        if (boundary)
            out.wave.reason = "energy at the admissibility bound: limiting case of a solitary family";
    };
    if (!(E > 0.0)) {
        out.wave = no_wave(NoWaveReason::cusped_energy_nonpositive,
                           "cusped periodic waves need E > 0, got E = " + fmt(E));
        return out;
    }
    const double gs = g_star(k);
    if (g0 >= 1.0) {
        accept(false);
        return out;
    }
    double bound;
    NoWaveReason code;
    const char* label;
    if (g0 > gs) {
        const double gaux = cusped_auxiliary_minimum(k, g0);
        out.g0_aux = gaux;
        bound = gaux * gaux * (1.0 - k * std::pow(gaux, k - 1.0));
        code = NoWaveReason::cusped_branch_two_bound;
        label = "g* < g0 < 1 requires E >= (1 - k g0*^(k-1)) g0*^2 = ";
    } else {
        bound = g0 * g0 * (1.0 - k * std::pow(g0, k - 1.0));
        code = NoWaveReason::cusped_branch_three_bound;
        label = "0 < g0 <= g* requires E >= (1 - k g0^(k-1)) g0^2 = ";
    }
    const double slack = kBoundTol * std::fabs(bound);
    if (E < bound - slack) {
        out.wave = no_wave(code, std::string(label) + fmt(bound) + ", got E = " + fmt(E));
        return out;
    }
    accept(E <= bound + slack);
    return out;
}

NodalResult nodal_admissible(double k, double g1) {
    require_valid_k(k);
    if (!(g1 > 0.0) || !std::isfinite(g1)) throw std::domain_error("nodal_admissible: requires g1 > 0");
    NodalResult out;
    const bool critical = std::fabs(g1 - 1.0) <= kStarTol;
    if (critical) g1 = 1.0;
    out.C1 = critical ? 0.0 : std::pow(g1, k) - g1;
    if (g1 < 1.0) {
        out.wave = no_wave(NoWaveReason::nodal_peak_below_one,
                           "nodal waves need g1 >= 1, got g1 = " + fmt(g1));
        return out;
    }
    out.wave.kind = WaveKind::NodalPeriodicWave;
    out.wave.g0 = 0.0;
    out.wave.g1 = g1;
    out.wave.critical_node = critical;
    out.wave.m0 = critical ? 2 : 1;
    out.wave.node_behaviour = node_behaviour_for(k, critical);
    return out;
}

}  // namespace hertzwave
