// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hertzwave/classifier.hpp"
#include "hertzwave/closed_forms.hpp"
#include "hertzwave/conserved.hpp"
#include "hertzwave/conslaw.hpp"
#include "hertzwave/profiles.hpp"

using namespace hertzwave;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Worst {
    double value = 0.0;
    std::string where;
    void take(double v, const std::string& w) {
        if (!(v <= value)) {  // NaN always wins
            value = v;
            where = w;
        }
    }
};

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3g", x);
    return b;
}

std::string label(const ClosedFormSolution& s) {
    return std::string(to_string(s.family)) + "(" + fmt(s.family == Family::Nodal_anyk_C10 ? s.k : s.parameter) + ")";
}

std::vector<ClosedFormSolution> family_sweep(Family f) {
    std::vector<double> v;
    switch (f) {
        case Family::Solitary_k2:
        case Family::CuspedSolitary_k2: v = {0.03, 0.1, 0.17, 0.24, 0.31}; break;
        case Family::Solitary_k3:
        case Family::CuspedSolitary_k3: v = {0.05, 0.12, 0.2, 0.28, 0.38}; break;
        case Family::Periodic_k2_E0: v = {0.55, 0.65, 0.75, 0.85, 0.95}; break;
        case Family::Periodic_k3_C10: v = {0.72, 0.78, 0.85, 0.9, 0.97}; break;
        case Family::CuspedPeriodic_k3_C10: v = {1.05, 1.3, 1.6, 2.2, 3.0}; break;
        case Family::Nodal_k2: v = {1.0, 1.2, 1.5, 2.0, 3.0}; break;
        case Family::Nodal_anyk_C10: v = {1.5, 2.0, 2.5, 3.0, 5.0}; break;
    }
    std::vector<ClosedFormSolution> out;
    for (double x : v)
        out.push_back(f == Family::Nodal_anyk_C10 ? make_closed_form(f, 1.0, x) : make_closed_form(f, x));
    return out;
}

bool is_cusped_solitary(Family f) { return f == Family::CuspedSolitary_k2 || f == Family::CuspedSolitary_k3; }

// 1. closed forms solve the reduced ODE
Outcome closed_form_satisfaction() {
    const auto t0 = std::chrono::steady_clock::now();
    Worst expl, impl;
    int min_points = 1 << 30;
    std::mt19937_64 rng(1);
    for (Family f : kAllFamilies) {
        for (const auto& s : family_sweep(f)) {
            const auto w = wave_of(s);
            const auto wc = class_of(s);
            int n = 0;
            if (s.form == Form::explicit_g_of_xi) {
                const double L = *wavelength(s);
                std::uniform_real_distribution<double> u(-2 * L, 2 * L);
                while (n < 200) {
                    const double xi = u(rng);
                    const double g = eval(s, xi);
                    if (g < 1e-6) continue;
                    const double gp = eval_slope(s, xi);
                    const double G = reduced_rhs(w, g);
                    expl.take(std::fabs(gp * gp - G) / std::max(1.0, G), label(s));
                    ++n;
                }
            } else {
                // d xi / d g of the relation against 1 / sqrt(G), Richardson-extrapolated differences
                const double lo = is_cusped_solitary(f) ? 0.0 : wc.g0;
                const double hi = is_cusped_solitary(f) ? wc.g0 : *wc.g1;
                std::uniform_real_distribution<double> u(0.02, 0.98);
                auto F = [&](double g) { return implicit_lhs(s, g); };
                for (; n < 200; ++n) {
                    const double g = lo + (hi - lo) * u(rng);
                    const double h = 1e-3 * std::min(g - lo, hi - g);
                    const double d = (-F(g + 2 * h) + 8 * F(g + h) - 8 * F(g - h) + F(g - 2 * h)) / (12 * h);
                    impl.take(std::fabs(std::fabs(d) * std::sqrt(reduced_rhs(w, g)) - 1.0), label(s));
                }
            }
            min_points = std::min(min_points, n);
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    o.pass = expl.value < 1e-10 && impl.value < 1e-8 && min_points >= 200 && secs < 5.0;
    o.detail = "explicit max " + fmt(expl.value) + " at " + expl.where + ", implicit max " + fmt(impl.value) +
               " at " + impl.where + ", " + std::to_string(min_points) + " points per member, " + fmt(secs) + " s";
    return o;
}

// 2. wavelengths by quadrature
Outcome wavelength_reproduction() {
    Worst worst;
    auto check = [&](const DimensionlessWave& w, const WaveClass& wc, double L, const std::string& what) {
        const double q = 2.0 * half_period_integral(w, wc);
        worst.take(std::fabs(q - L) / L, what);
    };
    for (double g1 : {0.55, 0.8, 0.95}) {
        auto r = periodic_from_roots(2.0, 1.0 - g1, g1);
        check({2.0, r.C1, r.E}, r.wave, 2 * pi, "k=2 E=0 g1=" + fmt(g1));
    }
    for (double g1 : {0.72, 0.9, 0.99}) {
        auto r = periodic_from_roots(3.0, std::sqrt(1.0 - g1 * g1), g1);
        check({3.0, r.C1, r.E}, r.wave, pi, "k=3 C1=0 g1=" + fmt(g1));
    }
    for (double k : {1.5, 2.0, 3.0, 5.0}) {
        auto n = nodal_admissible(k, 1.0);
        check({k, n.C1, 0.0}, n.wave, 2 * pi / (k - 1), "nodal k=" + fmt(k));
    }
    for (double g1 : {1.2, 2.0}) {
        auto n = nodal_admissible(2.0, g1);
        check({2.0, n.C1, 0.0}, n.wave, pi + 2 * std::atan(1 / (2 * std::sqrt(g1 * (g1 - 1)))), "nodal k=2 g1=" + fmt(g1));
    }
    for (double g0 : {1.05, 1.2, 2.0}) {
        const double E = g0 * g0 * (1 - g0 * g0) * -1.0;  // V(g0) at C1 = 0
        auto c = cusped_periodic_admissible(3.0, g0, E);
        check({3.0, c.C1, E}, c.wave, 0.5 * pi + std::atan(1 / (2 * g0 * std::sqrt(g0 * g0 - 1))),
              "cusped k=3 g0=" + fmt(g0));
    }
    return {worst.value < 1e-9, "max relative " + fmt(worst.value) + " at " + worst.where};
}

std::vector<ClosedFormSolution> profile_cases() {
    std::vector<ClosedFormSolution> v{make_closed_form(Family::Solitary_k2, 0.1),
                                      make_closed_form(Family::Solitary_k3, 0.2),
                                      make_closed_form(Family::CuspedSolitary_k2, 0.1),
                                      make_closed_form(Family::CuspedSolitary_k3, 0.2),
                                      make_closed_form(Family::Periodic_k2_E0, 0.8),
                                      make_closed_form(Family::Periodic_k3_C10, 0.9),
                                      make_closed_form(Family::CuspedPeriodic_k3_C10, 1.5),
                                      make_closed_form(Family::Nodal_k2, 1.5)};
    for (double k : {1.5, 2.0, 3.0, 5.0}) v.push_back(make_closed_form(Family::Nodal_anyk_C10, 1.0, k));
    return v;
}

// 3. quadrature profiles against the closed forms
Outcome profile_equivalence() {
    Worst worst;
    std::size_t samples = 0;
    for (const auto& s : profile_cases()) {
        const auto prof = build_profile(wave_of(s), class_of(s), {});
        for (const auto& p : prof.samples) {
            worst.take(std::fabs(p.g - closed_value(s, p.xi)), label(s) + " xi=" + fmt(p.xi));
            ++samples;
        }
    }
    return {worst.value < 1e-7, "max abs " + fmt(worst.value) + " at " + worst.where + " over " +
                                    std::to_string(samples) + " samples"};
}

// 4. conserved quantities against the closed forms
Outcome conserved_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    Worst worst;
    int members = 0;
    for (Family f : kAllFamilies) {
        for (const auto& s : family_sweep(f)) {
            PhysicalParams p{s.k, 0.7, 0.9, 1.3};
            const auto num = conserved(wave_of(s), class_of(s), p);
            const auto cl = closed_conserved(s, p);
            auto rel = [](double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); };
            worst.take(rel(num.momentum, cl.momentum), label(s) + " momentum");
            worst.take(rel(num.energy, cl.energy), label(s) + " energy");
            if (cl.energy_momentum) {
                if (!num.energy_momentum) worst.take(INFINITY, label(s) + " energy-momentum missing");
                else worst.take(rel(*num.energy_momentum, *cl.energy_momentum), label(s) + " energy-momentum");
            }
            ++members;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst.value < 1e-8 && secs < 30.0, "max relative " + fmt(worst.value) + " at " + worst.where + ", " +
                                                   std::to_string(members) + " members, " + fmt(secs) + " s"};
}

// 5. conservation-law identities on random jets
Outcome conslaw_identity() {
    double worst = 0.0;
    std::string where;
    for (double k : {1.5, 2.0, 2.5, 3.0, 4.0})
        for (int law = 1; law <= 4; ++law) {
            const auto r = random_jet_sweep({law}, k, 1000);
            if (!(r.max_relative <= worst)) {
                worst = r.max_relative;
                where = "law " + std::to_string(law) + " k=" + fmt(k);
            }
        }
    return {worst < 1e-12, "max relative residual " + fmt(worst) + " at " + where + ", 20000 jets"};
}

// 6. first-integral drift on emitted profiles, and the detector on corrupted ones
Outcome first_integral_drift() {
    struct Case {
        DimensionlessWave w;
        WaveClass wc;
        std::string name;
    };
    std::vector<Case> cases;
    for (const auto& s : profile_cases()) cases.push_back({wave_of(s), class_of(s), label(s)});
    for (auto [k, g0, g1] : {std::tuple{1.5, 0.5, 1.2}, {2.5, 0.25, 1.1}, {4.0, 0.4, 0.6}}) {
        auto r = periodic_from_roots(k, g0, g1);
        cases.push_back({{k, r.C1, r.E}, r.wave, "periodic k=" + fmt(k)});
    }
    for (double k : {1.5, 2.5, 4.0}) {
        auto s = solitary_from_asymptote(k, 0.5 * g_star(k));
        cases.push_back({{k, s.C1, s.E}, s.wave, "solitary k=" + fmt(k)});
        auto c = cusped_solitary_from_asymptote(k, 0.5 * g_star(k));
        cases.push_back({{k, c.C1, c.E}, c.wave, "cusped solitary k=" + fmt(k)});
        auto n = nodal_admissible(k, 1.4);
        cases.push_back({{k, n.C1, 0.0}, n.wave, "nodal k=" + fmt(k)});
    }
    double worst = 0.0;
    std::string where;
    int caught = 0;
    for (const auto& c : cases) {
        const auto prof = build_profile(c.w, c.wc, {});
        const auto d = first_integrals_along(prof, c.w);
        const double m = std::max(d.drift1, d.drift2);
        if (!(m <= worst) || d.samples_checked == 0) {
            worst = d.samples_checked == 0 ? INFINITY : m;
            where = c.name;
        }
        const auto bad = first_integrals_along(perturb_sample(prof, prof.samples.size() / 2, 1e-3), c.w);
        if (!first_integrals_pass(bad)) ++caught;
    }
    const int n = int(cases.size());
    return {worst < 1e-7 && caught == n, "max drift " + fmt(worst) + " at " + where + ", " +
                                              std::to_string(caught) + "/" + std::to_string(n) +
                                              " corrupted profiles rejected"};
}

// 7. classification table
Outcome classification_table() {
    int rows = 0, bad = 0;
    std::string first_bad;
    auto expect = [&](bool ok, const std::string& what) {
        ++rows;
        if (!ok) {
            ++bad;
            if (first_bad.empty()) first_bad = what;
        }
    };
    auto has_alt = [](const LevelClassification& lc, WaveKind kind) {
        return std::any_of(lc.alternatives.begin(), lc.alternatives.end(),
                           [&](const WaveClass& w) { return w.kind == kind; });
    };
    for (double k : {1.5, 2.0, 2.5, 3.0, 4.0}) {
        // energy line through a local maximum of V below the inflection point:
        // a solitary wave above it and a cusped solitary wave below it
        for (double frac : {0.2, 0.6, 0.9}) {
            const double g0 = frac * g_star(k);
            const double C1 = (k + 1) * std::pow(g0, k) - 2 * g0;
            const double E = g0 * g0 * (1 - k * std::pow(g0, k - 1));
            const auto lc = classify_all(k, C1, E);
            expect(lc.primary.kind == WaveKind::SolitaryWave && lc.primary.m0 == 2 &&
                       std::fabs(lc.primary.g0 - g0) < 1e-9,
                   "solitary k=" + fmt(k));
            expect(has_alt(lc, WaveKind::CuspedSolitaryWave), "cusped solitary k=" + fmt(k));
        }
        // two simple positive roots bounding a well
        {
            const double g0 = 0.5 * g_star(k), g1 = 1.2 * g_star(k);
            auto V0 = [&](double g, double C1) { return std::pow(g, k + 1) - g * g - C1 * g; };
            const double C1 = (std::pow(g1, k + 1) - std::pow(g0, k + 1) - (g1 * g1 - g0 * g0)) / (g1 - g0);
            const auto wc = classify_levels(k, C1, V0(g0, C1));
            expect(wc.kind == WaveKind::PeriodicWave && wc.node_behaviour == NodeBehaviour::none,
                   "periodic k=" + fmt(k));
        }
        // positive energy: a single positive root, the orbit reaches g = 0 with a cusp
        for (double C1 : {0.0, 0.1, -0.1}) {
            const auto wc = classify_levels(k, C1, 0.05);
            expect(wc.kind == WaveKind::CuspedPeriodicWave, "cusped periodic k=" + fmt(k) + " C1=" + fmt(C1));
        }
    }
    // E = 0, C1 > 0: node is non-critical
    struct Nodal {
        double k;
        NodeBehaviour nb;
    };
    for (auto [k, nb] : {Nodal{1.5, NodeBehaviour::smooth_min}, Nodal{1.9, NodeBehaviour::smooth_min},
                         Nodal{2.0, NodeBehaviour::corner}, Nodal{2.1, NodeBehaviour::cusp},
                         Nodal{3.0, NodeBehaviour::cusp}, Nodal{4.0, NodeBehaviour::cusp}}) {
        const auto wc = classify_levels(k, 0.3, 0.0);
        expect(wc.kind == WaveKind::NodalPeriodicWave && wc.node_behaviour == nb && !wc.critical_node &&
                   *wc.g1 > 1.0,
               "nodal C1>0 k=" + fmt(k));
    }
    // E = 0, C1 = 0: node is critical, peak at g = 1
    for (auto [k, nb] : {Nodal{1.5, NodeBehaviour::smooth_min}, Nodal{2.0, NodeBehaviour::smooth_min},
                         Nodal{2.9, NodeBehaviour::smooth_min}, Nodal{3.0, NodeBehaviour::corner},
                         Nodal{3.1, NodeBehaviour::cusp}, Nodal{5.0, NodeBehaviour::cusp}}) {
        const auto wc = classify_levels(k, 0.0, 0.0);
        expect(wc.kind == WaveKind::NodalPeriodicWave && wc.node_behaviour == nb && wc.critical_node &&
                   std::fabs(*wc.g1 - 1.0) < 1e-12,
               "nodal C1=0 k=" + fmt(k));
    }

    // slope at the node from (g')^2 = G(g) as g -> 0
    int slopes = 0;
    for (auto [k, C1] : {std::pair{1.5, 0.3}, {2.0, 0.3}, {2.5, 0.3}, {4.0, 0.3}, {1.5, 0.0}, {2.5, 0.0},
                         {3.0, 0.0}, {4.0, 0.0}}) {
        const DimensionlessWave w{k, C1, 0.0};
        const auto wc = classify_levels(k, C1, 0.0);
        const double a = std::sqrt(reduced_rhs(w, 1e-6)), b = std::sqrt(reduced_rhs(w, 1e-10)),
                     c = std::sqrt(reduced_rhs(w, 1e-14));
        const std::string tag = "slope k=" + fmt(k) + " C1=" + fmt(C1);
        switch (wc.node_behaviour) {
            case NodeBehaviour::smooth_min: expect(a > b && b > c && c < 0.05 * a, tag); break;
            case NodeBehaviour::cusp: expect(a < b && b < c && c > 20 * a && c > 1e3, tag); break;
            case NodeBehaviour::corner: {
                const double limit = C1 > 0 ? std::sqrt(C1) : 1.0;
                expect(std::fabs(c - limit) < 1e-6 && std::fabs(a - limit) < 1e-5, tag);
                break;
            }
            default: expect(false, tag + " not nodal");
        }
        ++slopes;
    }
    return {bad == 0, std::to_string(rows - bad) + "/" + std::to_string(rows) + " rows match (" +
                          std::to_string(slopes) + " node slope checks)" +
                          (first_bad.empty() ? std::string() : ", first mismatch " + first_bad)};
}

// 8. momentum prefactor scaling
Outcome scaling_exponent() {
    double worst = 0.0;
    for (double k : {1.5, 2.0, 3.0}) {
        auto r = solitary_from_asymptote(k, 0.4 * g_star(k));
        const DimensionlessWave w{k, r.C1, r.E};
        const double P0 = conserved(w, r.wave, {k, 1.0, 1.0, 0.7}).momentum;
        const double Pv = conserved(w, r.wave, {k, 1.0, 1.0, 1.4}).momentum;
        const double Pc = conserved(w, r.wave, {k, 1.0, 0.5, 0.7}).momentum;
        worst = std::max(worst, std::fabs(std::log2(Pv / P0) - (4 / (k - 1) + 1)));
        worst = std::max(worst, std::fabs(std::log2(Pc / P0) - 4 / (k - 1)));
    }
    return {worst < 1e-10, "max exponent error " + fmt(worst) + " over k = 1.5, 2, 3"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"closed-form satisfaction", closed_form_satisfaction},
        {"wavelength reproduction", wavelength_reproduction},
        {"profile oracle equivalence", profile_equivalence},
        {"conserved-quantity oracle equivalence", conserved_equivalence},
        {"conservation-law identity", conslaw_identity},
        {"first-integral drift", first_integral_drift},
        {"classification table", classification_table},
        {"scaling exponent", scaling_exponent},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
