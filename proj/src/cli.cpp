#include "hertzwave/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hertzwave/classifier.hpp"
#include "hertzwave/closed_forms.hpp"
#include "hertzwave/conserved.hpp"
#include "hertzwave/conslaw.hpp"
#include "hertzwave/profiles.hpp"
#include "hertzwave/roots.hpp"

namespace hertzwave::cli {

using nlohmann::json;

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s) {
    double x = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: " + std::string(s));
    return x;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kDriftGate = 1e-7;
constexpr double kJetGate = 1e-12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Inadmissible : std::runtime_error {
    json report;
    Inadmissible(const std::string& what, json r) : std::runtime_error(what), report(std::move(r)) {}
};

struct ModelArgs {
    double k = kNaN;
    double R = 1.0, c = 1.0, V = 1.0;
    std::optional<double> C1, E, g0, g1;
    bool cusped = false;
    int samples = 256;
    double g_floor = 1e-8;
    double rel_tol = 1e-12;
    std::string out;
    std::string format;
};

void add_model_options(CLI::App* app, ModelArgs& m, bool physical) {
    app->add_option("--k", m.k, "nonlinearity exponent k > 1")->required();
    app->add_option("--C1", m.C1, "flux constant C1");
    app->add_option("--E", m.E, "energy level E");
    app->add_option("--g0", m.g0, "lower root, asymptote, or cusped peak");
    app->add_option("--g1", m.g1, "upper root / peak");
    app->add_flag("--cusped", m.cusped, "with --g0 alone: cusped solitary wave");
    if (physical) {
        app->add_option("--R", m.R, "particle radius");
        app->add_option("--c", m.c, "wave-speed scale");
        app->add_option("--V", m.V, "travelling-wave speed");
    }
}

void add_numeric_options(CLI::App* app, ModelArgs& m) {
    app->add_option("--samples", m.samples, "profile samples")->check(CLI::Range(16, 10000000));
    app->add_option("--g-floor", m.g_floor, "solitary tail cutoff, relative gap")->check(CLI::PositiveNumber);
    app->add_option("--rel-tol", m.rel_tol, "quadrature relative tolerance")->check(CLI::PositiveNumber);
}

json wave_json(const WaveClass& wc) {
    json j;
    j["kind"] = to_string(wc.kind);
    j["g0"] = wc.g0;
    j["g1"] = wc.g1 ? json(*wc.g1) : json(nullptr);
    j["m0"] = wc.m0;
    j["node_behaviour"] = to_string(wc.node_behaviour);
    j["critical_node"] = wc.critical_node;
    j["boundary"] = wc.boundary;
    j["snapped"] = wc.snapped;
    j["reason_code"] = to_string(wc.reason_code);
    j["reason"] = wc.reason;
    return j;
}

struct Resolved {
    std::string parameterization;
    DimensionlessWave w;
    WaveClass wc;
    std::vector<WaveClass> alternatives;
    std::optional<double> g0_aux;
};

bool close_to(double a, double b) { return std::fabs(a - b) <= 1e-9 * (1.0 + std::fabs(b)); }

Resolved resolve(const ModelArgs& m) {
    require_valid_k(m.k);
    const bool c1 = m.C1.has_value(), e = m.E.has_value(), a = m.g0.has_value(), b = m.g1.has_value();
    Resolved r;
    r.w.k = m.k;
    if (m.cusped && !(a && !b && !c1 && !e))
        throw UsageError("--cusped applies to the asymptote parameterization (--g0 only)");
    if (c1 && e && !a && !b) {
        r.parameterization = "levels";
        r.w.C1 = *m.C1;
        r.w.E = *m.E;
        auto lc = classify_all(m.k, *m.C1, *m.E);
        r.wc = lc.primary;
        r.alternatives = lc.alternatives;
    } else if (c1 && b && !a && !e) {
        r.parameterization = "peak";
        r.w.C1 = *m.C1;
        r.w.E = potential({m.k, *m.C1, 0.0}, *m.g1);
        auto lc = classify_all(m.k, r.w.C1, r.w.E);
        std::vector<WaveClass> all{lc.primary};
        all.insert(all.end(), lc.alternatives.begin(), lc.alternatives.end());
        auto it = std::find_if(all.begin(), all.end(), [&](const WaveClass& wc) {
            return wc.exists() && wc.g1 && close_to(*wc.g1, *m.g1);
        });
        if (it != all.end()) {
            r.wc = *it;
            all.erase(it);
            std::erase_if(all, [](const WaveClass& wc) { return !wc.exists(); });
            r.alternatives = all;
        } else {
            r.wc.kind = WaveKind::NoWave;
            r.wc.reason_code = NoWaveReason::no_bounded_orbit;
            r.wc.reason = "no wave of this level has its peak at g1";
        }
    } else if (a && b && !c1 && !e) {
        r.parameterization = "roots";
        auto res = periodic_from_roots(m.k, *m.g0, *m.g1);
        r.w.C1 = res.C1;
        r.w.E = res.E;
        r.wc = res.wave;
    } else if (a && !b && !c1 && !e) {
        r.parameterization = m.cusped ? "cusped_asymptote" : "asymptote";
        auto res = m.cusped ? cusped_solitary_from_asymptote(m.k, *m.g0) : solitary_from_asymptote(m.k, *m.g0);
        r.w.C1 = res.C1;
        r.w.E = res.E;
        r.wc = res.wave;
    } else if (a && e && !b && !c1) {
        r.parameterization = "cusped_peak";
        auto res = cusped_periodic_admissible(m.k, *m.g0, *m.E);
        r.w.C1 = res.C1;
        r.w.E = *m.E;
        r.wc = res.wave;
        r.g0_aux = res.g0_aux;
    } else if (b && !a && !c1 && !e) {
        r.parameterization = "nodal";
        auto res = nodal_admissible(m.k, *m.g1);
        r.w.C1 = res.C1;
        r.w.E = 0.0;
        r.wc = res.wave;
    } else {
        throw UsageError(
            "give exactly one parameterization: --C1 --E | --C1 --g1 | --g0 --g1 | --g0 [--cusped] | "
            "--g0 --E | --g1");
    }
    return r;
}

json header(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

json resolved_json(const Resolved& r) {
    json j;
    j["parameterization"] = r.parameterization;
    j["k"] = r.w.k;
    j["C1"] = r.w.C1;
    j["E"] = r.w.E;
    j["wave"] = wave_json(r.wc);
    json alts = json::array();
    for (const auto& a : r.alternatives) alts.push_back(wave_json(a));
    j["alternatives"] = alts;
    if (r.g0_aux) j["g0_aux"] = *r.g0_aux;
    return j;
}

void require_wave(const std::string& command, const Resolved& r) {
    if (r.wc.exists()) return;
    json j = header(command);
    j.update(resolved_json(r));
    throw Inadmissible(r.wc.reason, j);
}

PhysicalParams physical(const ModelArgs& m) {
    PhysicalParams p{m.k, m.R, m.c, m.V};
    p.validate();
    return p;
}

std::ostream* open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") return &fallback;
    file.open(path);
    if (!file) throw UsageError("cannot open output file " + path);
    return &file;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header_cols,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header_cols.size(); ++i) os << (i ? "," : "") << header_cols[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

std::string opt_num(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

json conserved_json(const ConservedSet& cs) {
    json j;
    j["momentum"] = cs.momentum;
    j["energy"] = cs.energy;
    j["energy_momentum"] = cs.energy_momentum ? json(*cs.energy_momentum) : json(nullptr);
    j["regularized"] = cs.regularized;
    j["orientation_negated"] = cs.orientation_negated;
    j["physical_wavelength"] = cs.physical_wavelength ? json(*cs.physical_wavelength) : json(nullptr);
    j["units"] = "per unit linear mass density";
    const auto& p = cs.prefactors;
    j["prefactors"] = {{"sigma", p.sigma},
                       {"sigma_power", p.sigma_power},
                       {"speed_ratio", p.speed_ratio},
                       {"speed_ratio_power", p.speed_ratio_power},
                       {"V_wave", p.V_wave},
                       {"R", p.R},
                       {"momentum_factor", p.momentum_factor},
                       {"energy_factor", p.energy_factor}};
    return j;
}

json tail_json(const Profile& p) {
    if (!p.tail) return nullptr;
    return {{"kind", p.tail->kind == TailKind::exponential ? "exponential" : "power"}, {"rate", p.tail->rate}};
}

// ---- commands ----

int cmd_classify(const ModelArgs& m, std::ostream& out) {
    auto r = resolve(m);
    json j = header("classify");
    j.update(resolved_json(r));
    if (r.wc.exists() && r.wc.kind == WaveKind::NodalPeriodicWave)
        j["nodal_slope_limit"] = to_string(r.wc.node_behaviour);
    out << j.dump(2) << '\n';
    return r.wc.exists() ? ok : inadmissible;
}

int cmd_profile(const ModelArgs& m, std::ostream& out) {
    auto r = resolve(m);
    require_wave("profile", r);
    ProfileOptions opt;
    opt.n_samples = m.samples;
    opt.g_floor = m.g_floor;
    opt.segment_rel_tol = m.rel_tol;
    const Profile prof = build_profile(r.w, r.wc, opt);
    const auto drift = first_integrals_along(prof, r.w);
    const bool pass = first_integrals_pass(drift, kDriftGate);

    json side = header("profile");
    side.update(resolved_json(r));
    side["samples"] = prof.samples.size();
    side["wavelength"] = prof.wavelength ? json(*prof.wavelength) : json(nullptr);
    side["tail"] = tail_json(prof);
    side["truncation_xi"] = prof.truncation_xi ? json(*prof.truncation_xi) : json(nullptr);
    side["first_integral_drift"] = {{"C1", drift.drift1}, {"E", drift.drift2}, {"gate", kDriftGate}, {"pass", pass}};
    side["layout"] = "xi >= 0 half; the full wave is even in xi";

    std::vector<std::vector<std::string>> rows;
    rows.reserve(prof.samples.size());
    for (const auto& s : prof.samples) rows.push_back({format_double(s.xi), format_double(s.g), format_double(s.gprime)});

    if (m.format == "json") {
        json js = json::array();
        for (const auto& s : prof.samples) js.push_back({s.xi, s.g, s.gprime});
        side["columns"] = {"xi", "g", "gprime"};
        side["data"] = js;
        std::ofstream f;
        *open_out(m.out, f, out) << side.dump(2) << '\n';
    } else {
        std::ofstream f;
        write_csv(*open_out(m.out, f, out), {"xi", "g", "gprime"}, rows);
        if (!m.out.empty() && m.out != "-") {
            std::ofstream sf(m.out + ".json");
            if (!sf) throw UsageError("cannot open sidecar " + m.out + ".json");
            side["csv"] = m.out;
            sf << side.dump(2) << '\n';
        }
    }
    return pass ? ok : numerical;
}

int cmd_conserved(const ModelArgs& m, std::ostream& out) {
    auto r = resolve(m);
    require_wave("conserved", r);
    const auto p = physical(m);
    QuadratureOptions q{m.rel_tol, 0.0, 4000};
    const auto cs = conserved(r.w, r.wc, p, q);
    json j = header("conserved");
    j.update(resolved_json(r));
    j["physical"] = {{"k", p.k}, {"R", p.R}, {"c", p.c}, {"V_wave", p.V_wave}};
    j["conserved"] = conserved_json(cs);
    std::ofstream f;
    *open_out(m.out, f, out) << j.dump(2) << '\n';
    return ok;
}

int cmd_verify(const ModelArgs& m, int jets, std::uint64_t seed, std::ostream& out) {
    require_valid_k(m.k);
    const auto p = physical(m);
    json j = header("verify");
    j["k"] = m.k;
    j["jets"] = jets;
    j["seed"] = seed;
    bool pass = true;
    json laws = json::array();
    double worst = 0.0;
    for (int id = 1; id <= 4; ++id) {
        const auto res = random_jet_sweep({id}, m.k, jets, seed, p.c, p.R);
        const bool ok_law = res.max_relative < kJetGate;
        pass = pass && ok_law;
        worst = std::max(worst, res.max_relative);
        laws.push_back({{"law", id},
                        {"max_relative_residual", res.max_relative},
                        {"max_absolute_residual", res.max_absolute},
                        {"pass", ok_law}});
    }
    j["conservation_laws"] = laws;
    j["max_relative_residual"] = worst;
    j["residual_gate"] = kJetGate;

    // first integrals on the requested wave, or on the critical nodal wave
    // (C1 = E = 0, peak 1) which exists for every k
    ModelArgs pm = m;
    if (!m.C1 && !m.E && !m.g0 && !m.g1) pm.g1 = 1.0;
    auto r = resolve(pm);
    require_wave("verify", r);
    ProfileOptions opt;
    opt.n_samples = m.samples;
    opt.g_floor = m.g_floor;
    const auto prof = build_profile(r.w, r.wc, opt);
    const auto drift = first_integrals_along(prof, r.w);
    const bool ok_drift = first_integrals_pass(drift, kDriftGate);
    pass = pass && ok_drift;
    json pj = resolved_json(r);
    pj["first_integral_drift"] = {{"C1", drift.drift1}, {"E", drift.drift2}, {"gate", kDriftGate}, {"pass", ok_drift}};
    j["profile"] = pj;
    j["pass"] = pass;
    out << j.dump(2) << '\n';
    return pass ? ok : numerical;
}

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

GridAxis parse_axis(const std::string& text) {
    // name=from:to:count
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("grid axis must read name=from:to:count, got " + text);
    GridAxis ax{text.substr(0, eq), {}};
    static const std::vector<std::string> names{"k", "C1", "E", "g0", "g1", "V", "R", "c"};
    if (std::find(names.begin(), names.end(), ax.name) == names.end())
        throw UsageError("unknown grid axis " + ax.name);
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(eq + 1));
    for (std::string s; std::getline(ss, s, ':');) parts.push_back(s);
    if (parts.size() != 3) throw UsageError("grid axis must read name=from:to:count, got " + text);
    double a, b;
    long n;
    try {
        a = parse_double(parts[0]);
        b = parse_double(parts[1]);
        n = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("bad numbers in grid axis " + text);
    }
    if (n < 1) throw UsageError("grid axis count must be >= 1");
    for (long i = 0; i < n; ++i) ax.values.push_back(n == 1 ? a : a + (b - a) * double(i) / double(n - 1));
    return ax;
}

void set_axis(ModelArgs& m, const std::string& name, double v) {
    if (name == "k") m.k = v;
    else if (name == "C1") m.C1 = v;
    else if (name == "E") m.E = v;
    else if (name == "g0") m.g0 = v;
    else if (name == "g1") m.g1 = v;
    else if (name == "V") m.V = v;
    else if (name == "R") m.R = v;
    else if (name == "c") m.c = v;
}

std::vector<std::string> sweep_point(const ModelArgs& m, bool with_conserved) {
    std::vector<std::string> row{format_double(m.k), opt_num(m.C1), opt_num(m.E), opt_num(m.g0), opt_num(m.g1)};
    try {
        auto r = resolve(m);
        row.insert(row.end(), {r.parameterization, to_string(r.wc.kind), format_double(r.w.C1),
                               format_double(r.w.E), r.wc.exists() ? format_double(r.wc.g0) : "",
                               opt_num(r.wc.g1), std::to_string(r.wc.m0), to_string(r.wc.node_behaviour)});
        std::string L, P, En, H, status = r.wc.exists() ? "ok" : "inadmissible";
        if (r.wc.exists()) {
            try {
                if (is_periodic_kind(r.wc.kind)) L = format_double(2.0 * half_period_integral(r.w, r.wc));
                if (with_conserved) {
                    const auto cs = conserved(r.w, r.wc, physical(m));
                    P = format_double(cs.momentum);
                    En = format_double(cs.energy);
                    H = opt_num(cs.energy_momentum);
                }
            } catch (const std::exception&) {
                status = "numerical_failure";
            }
        }
        row.insert(row.end(), {L, P, En, H, status, r.wc.exists() ? "" : to_string(r.wc.reason_code)});
    } catch (const std::exception&) {
        row.resize(5);
        row.insert(row.end(), {"", "", "", "", "", "", "", "", "", "", "", "", "invalid", ""});
    }
    return row;
}

int cmd_sweep(const ModelArgs& base, const std::vector<std::string>& axes_spec, bool with_conserved,
              int threads, std::ostream& out) {
    if (axes_spec.empty()) throw UsageError("sweep needs at least one --grid name=from:to:count");
    std::vector<GridAxis> axes;
    for (const auto& s : axes_spec) axes.push_back(parse_axis(s));
    std::vector<ModelArgs> points{base};
    for (const auto& ax : axes) {
        std::vector<ModelArgs> next;
        for (const auto& p : points)
            for (double v : ax.values) {
                ModelArgs q = p;
                set_axis(q, ax.name, v);
                next.push_back(q);
            }
        points = std::move(next);
    }
    if (std::isnan(points.front().k)) throw UsageError("sweep needs --k or a k grid axis");

    const unsigned hw = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<std::string>> rows(points.size());
    for (std::size_t start = 0; start < points.size(); start += hw) {
        std::vector<std::future<std::vector<std::string>>> batch;
        const std::size_t end = std::min(points.size(), start + hw);
        for (std::size_t i = start; i < end; ++i)
            batch.push_back(std::async(std::launch::async, sweep_point, points[i], with_conserved));
        for (std::size_t i = start; i < end; ++i) rows[i] = batch[i - start].get();
    }
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].insert(rows[i].begin(), std::to_string(i));
    std::ofstream f;
    write_csv(*open_out(base.out, f, out),
              {"index", "k", "C1_in", "E_in", "g0_in", "g1_in", "parameterization", "kind", "C1", "E", "g0",
               "g1", "m0", "node_behaviour", "wavelength", "momentum", "energy", "energy_momentum", "status",
               "reason_code"},
              rows);
    return ok;
}

struct FigureSet {
    std::string file;
    std::vector<std::pair<Family, std::vector<double>>> members;  // family, parameters (k for nodal any-k)
};

int cmd_figures(const std::string& dir, int samples, std::ostream& out) {
    namespace fs = std::filesystem;
    if (dir.empty()) throw UsageError("figures needs --dir");
    fs::create_directories(dir);
    const std::vector<FigureSet> sets{
        {"solitary.csv",
         {{Family::Solitary_k2, {0.05, 0.1, 0.2, 0.3}}, {Family::Solitary_k3, {0.1, 0.2, 0.3, 0.4}}}},
        {"cusped_solitary.csv",
         {{Family::CuspedSolitary_k2, {0.05, 0.1, 0.2, 0.3}}, {Family::CuspedSolitary_k3, {0.1, 0.2, 0.3, 0.4}}}},
        {"periodic.csv",
         {{Family::Periodic_k2_E0, {0.6, 0.7, 0.8, 0.9}}, {Family::Periodic_k3_C10, {0.75, 0.8, 0.9, 0.95}}}},
        {"cusped_periodic.csv", {{Family::CuspedPeriodic_k3_C10, {1.05, 1.2, 1.5, 2.0}}}},
        {"nodal.csv", {{Family::Nodal_k2, {1.0, 1.2, 1.5, 2.0}}, {Family::Nodal_anyk_C10, {1.5, 2.0, 3.0, 5.0}}}},
    };
    json manifest = header("figures");
    json files = json::array();
    bool pass = true;
    ProfileOptions opt;
    opt.n_samples = samples;
    for (const auto& set : sets) {
        std::vector<std::vector<std::string>> rows;
        double worst = 0.0;
        for (const auto& [fam, params] : set.members) {
            for (double prm : params) {
                const auto sol = fam == Family::Nodal_anyk_C10 ? make_closed_form(fam, 1.0, prm)
                                                               : make_closed_form(fam, prm);
                const auto w = wave_of(sol);
                const auto wc = class_of(sol);
                const auto prof = build_profile(w, wc, opt);
                for (const auto& s : prof.samples) {
                    const double gc = closed_value(sol, s.xi);
                    worst = std::max(worst, std::fabs(gc - s.g));
                    rows.push_back({to_string(fam), format_double(sol.k), format_double(sol.parameter),
                                    format_double(s.xi), format_double(s.g), format_double(s.gprime),
                                    format_double(gc)});
                }
            }
        }
        std::ofstream f(fs::path(dir) / set.file);
        if (!f) throw UsageError("cannot write into " + dir);
        write_csv(f, {"family", "k", "parameter", "xi", "g", "gprime", "g_closed"}, rows);
        pass = pass && worst < 1e-10;
        files.push_back({{"file", set.file}, {"rows", rows.size()}, {"max_abs_closed_form_difference", worst}});
    }

    // energy and momentum curves against the family parameter, nu = c = R = 1
    {
        std::vector<std::vector<std::string>> rows;
        double worst = 0.0;
        auto curve = [&](Family fam, double lo, double hi, int n) {
            for (int i = 0; i < n; ++i) {
                const double prm = lo + (hi - lo) * (i + 0.5) / n;
                const auto sol = make_closed_form(fam, prm);
                PhysicalParams p{sol.k, 1.0, 1.0, 1.0};
                const auto num = conserved(wave_of(sol), class_of(sol), p);
                const auto cl = closed_conserved(sol, p);
                worst = std::max({worst, std::fabs(num.momentum - cl.momentum) / std::fabs(cl.momentum),
                                  std::fabs(num.energy - cl.energy) / std::fabs(cl.energy)});
                rows.push_back({to_string(fam), format_double(sol.k), format_double(prm), format_double(num.momentum),
                                format_double(num.energy), opt_num(num.energy_momentum),
                                format_double(cl.momentum), format_double(cl.energy), opt_num(cl.energy_momentum)});
            }
        };
        curve(Family::Solitary_k2, 0.0, 1.0 / 3.0, 24);
        curve(Family::Solitary_k3, 0.0, 1.0 / std::sqrt(6.0), 24);
        curve(Family::CuspedSolitary_k2, 0.0, 1.0 / 3.0, 24);
        curve(Family::CuspedSolitary_k3, 0.0, 1.0 / std::sqrt(6.0), 24);
        curve(Family::Periodic_k2_E0, 0.5, 1.0, 24);
        curve(Family::Periodic_k3_C10, 1.0 / std::sqrt(2.0), 1.0, 24);
        curve(Family::CuspedPeriodic_k3_C10, 1.0, 2.0, 24);
        curve(Family::Nodal_k2, 1.0, 2.0, 24);
        std::ofstream f(fs::path(dir) / "energy_momentum.csv");
        if (!f) throw UsageError("cannot write into " + dir);
        write_csv(f,
                  {"family", "k", "parameter", "momentum", "energy", "energy_momentum", "momentum_closed",
                   "energy_closed", "energy_momentum_closed"},
                  rows);
        pass = pass && worst < 1e-8;
        files.push_back({{"file", "energy_momentum.csv"}, {"rows", rows.size()}, {"max_rel_closed_form_difference", worst}});
    }
    manifest["directory"] = dir;
    manifest["files"] = files;
    manifest["pass"] = pass;
    out << manifest.dump(2) << '\n';
    return pass ? ok : numerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Travelling waves of the fourth-order Hertz-chain equation"};
    app.require_subcommand(1);
    ModelArgs m;
    int jets = 1000;
    std::uint64_t seed = 20240517;
    std::vector<std::string> grid;
    bool no_conserved = false;
    int threads = 0;
    std::string dir;

    auto* classify = app.add_subcommand("classify", "classify a wave and print its root data as JSON");
    add_model_options(classify, m, false);

    auto* profile = app.add_subcommand("profile", "sample g(xi) over half a period or half-line");
    add_model_options(profile, m, false);
    add_numeric_options(profile, m);
    profile->add_option("--out", m.out, "CSV path; a JSON sidecar is written next to it");
    profile->add_option("--format", m.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* cons = app.add_subcommand("conserved", "momentum and energy of a wave");
    add_model_options(cons, m, true);
    add_numeric_options(cons, m);
    cons->add_option("--out", m.out, "JSON path");

    auto* verify = app.add_subcommand("verify", "conservation-law identities and first-integral drift");
    add_model_options(verify, m, true);
    add_numeric_options(verify, m);
    verify->add_option("--jets", jets, "random jets per law")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");

    auto* sweep = app.add_subcommand("sweep", "classify and integrate over a parameter grid");
    add_model_options(sweep, m, true);
    sweep->get_option("--k")->required(false);
    sweep->add_option("--grid", grid, "axis name=from:to:count, repeatable")->required();
    sweep->add_flag("--no-conserved", no_conserved, "skip momentum/energy");
    sweep->add_option("--threads", threads, "worker count (default: hardware)");
    sweep->add_option("--out", m.out, "CSV path");

    auto* figures = app.add_subcommand("figures", "write the CSV data behind the solution and energy plots");
    figures->add_option("--dir", dir, "output directory")->required();
    figures->add_option("--samples", m.samples, "samples per profile")->check(CLI::Range(16, 100000));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*classify) return cmd_classify(m, out);
        if (*profile) return cmd_profile(m, out);
        if (*cons) return cmd_conserved(m, out);
        if (*verify) return cmd_verify(m, jets, seed, out);
        if (*sweep) return cmd_sweep(m, grid, !no_conserved, threads, out);
        if (*figures) return cmd_figures(dir, m.samples, out);
    } catch (const Inadmissible& e) {
        out << e.report.dump(2) << '\n';
        err << "inadmissible: " << e.what() << '\n';
        return inadmissible;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "usage: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return numerical;
    }
    return usage;
}

}  // namespace hertzwave::cli
