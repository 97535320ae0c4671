#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hertzwave/classifier.hpp"
#include "hertzwave/closed_forms.hpp"
#include "hertzwave/conserved.hpp"
#include "hertzwave/conslaw.hpp"
#include "hertzwave/core_model.hpp"
#include "hertzwave/profiles.hpp"

namespace py = pybind11;
using namespace hertzwave;

namespace {

py::dict wave_dict(const WaveClass& wc) {
    py::dict d;
    d["kind"] = to_string(wc.kind);
    d["g0"] = wc.g0;
    d["g1"] = wc.g1 ? py::object(py::float_(*wc.g1)) : py::object(py::none());
    d["m0"] = wc.m0;
    d["node_behaviour"] = to_string(wc.node_behaviour);
    d["critical_node"] = wc.critical_node;
    d["boundary"] = wc.boundary;
    d["reason_code"] = to_string(wc.reason_code);
    d["reason"] = wc.reason;
    return d;
}

WaveClass wave_from(double k, double C1, double E) {
    const auto wc = classify_levels(k, C1, E);
    if (!wc.exists()) throw py::value_error("no travelling wave at these levels: " + wc.reason);
    return wc;
}

}  // namespace

PYBIND11_MODULE(_hertzwave, m) {
    m.doc() = "Travelling waves of the fourth-order Hertz-chain equation";
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

    m.def("s_n", &s_n, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("g_star", &g_star, py::arg("k"));
    m.def("C1_star", &C1_star, py::arg("k"));
    m.def(
        "potential", [](double k, double C1, double g) { return potential({k, C1, 0.0}, g); }, py::arg("k"),
        py::arg("C1"), py::arg("g"));

    m.def(
        "classify", [](double k, double C1, double E) { return wave_dict(classify_levels(k, C1, E)); },
        py::arg("k"), py::arg("C1"), py::arg("E"));
    m.def(
        "solitary_from_asymptote",
        [](double k, double g0, bool cusped) {
            const auto r = cusped ? cusped_solitary_from_asymptote(k, g0) : solitary_from_asymptote(k, g0);
            return py::make_tuple(r.C1, r.E, wave_dict(r.wave));
        },
        py::arg("k"), py::arg("g0"), py::arg("cusped") = false);
    m.def(
        "periodic_from_roots",
        [](double k, double g0, double g1) {
            const auto r = periodic_from_roots(k, g0, g1);
            return py::make_tuple(r.C1, r.E, wave_dict(r.wave));
        },
        py::arg("k"), py::arg("g0"), py::arg("g1"));

    m.def(
        "profile",
        [](double k, double C1, double E, int samples) {
            ProfileOptions opt;
            opt.n_samples = samples;
            const auto p = build_profile({k, C1, E}, wave_from(k, C1, E), opt);
            std::vector<double> xi, g, gp;
            for (const auto& s : p.samples) {
                xi.push_back(s.xi);
                g.push_back(s.g);
                gp.push_back(s.gprime);
            }
            py::dict d;
            d["xi"] = xi;
            d["g"] = g;
            d["gprime"] = gp;
            d["wavelength"] = p.wavelength ? py::object(py::float_(*p.wavelength)) : py::object(py::none());
            return d;
        },
        py::arg("k"), py::arg("C1"), py::arg("E"), py::arg("samples") = 256);

    m.def(
        "conserved",
        [](double k, double C1, double E, double R, double c, double V) {
            const auto cs = conserved({k, C1, E}, wave_from(k, C1, E), {k, R, c, V});
            py::dict d;
            d["momentum"] = cs.momentum;
            d["energy"] = cs.energy;
            d["energy_momentum"] =
                cs.energy_momentum ? py::object(py::float_(*cs.energy_momentum)) : py::object(py::none());
            d["orientation_negated"] = cs.orientation_negated;
            return d;
        },
        py::arg("k"), py::arg("C1"), py::arg("E"), py::arg("R") = 1.0, py::arg("c") = 1.0, py::arg("V") = 1.0);

    m.def(
        "closed_form_value",
        [](const std::string& family, double parameter, double xi, double k) {
            return closed_value(make_closed_form(family_from_string(family), parameter, k), xi);
        },
        py::arg("family"), py::arg("parameter"), py::arg("xi"), py::arg("k") = 0.0);

    m.def(
        "jet_sweep",
        [](int law, double k, int jets, std::uint64_t seed) {
            return random_jet_sweep({law}, k, jets, seed).max_relative;
        },
        py::arg("law"), py::arg("k"), py::arg("jets") = 1000, py::arg("seed") = 20240517);

}
