// Python bindings for the main operations: root-system data, tau in all
// flavors, theorem checks, and Ohtsuki series.  Exact values cross the
// boundary as coefficient strings; floats are display-only.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtau/lattice.hpp"
#include "qtau/manifold.hpp"
#include "qtau/perturbative.hpp"
#include "qtau/spec_json.hpp"
#include "qtau/weyl_sums.hpp"

namespace py = pybind11;
using namespace qtau;

namespace {

py::dict cyc_to_dict(const CycNum& v, long a) {
    py::dict d;
    d["m"] = v.field()->m();
    d["zeta_exponent"] = a;
    py::list coeffs;
    for (const auto& c : v.coeffs()) coeffs.append(rat_to_string(c));
    d["coeffs"] = coeffs;
    auto [re, im] = v.approx();
    d["approx"] = py::make_tuple(re, im);
    d["integral"] = v.integer_coeffs();
    return d;
}

Flavor parse_flavor(const std::string& s) {
    if (s == "full") return Flavor::Full;
    if (s == "projective") return Flavor::Projective;
    if (s == "center") return Flavor::Center;
    throw invalid_input_error("unknown flavor: " + s);
}

py::dict tau_py(const std::string& algebra, long r, const std::string& flavor,
                const std::string& spec_json, long zeta_exponent) {
    auto rs = RootSystem::build(algebra);
    ManifoldSpec spec = parse_manifold_spec(spec_json);
    Flavor fl = parse_flavor(flavor);
    long a = fl == Flavor::Projective ? mod_nonneg(zeta_exponent, r) : zeta_exponent;
    InvariantResult res = tau(spec, *rs, r, a, fl);
    py::dict d = cyc_to_dict(res.value, a);
    d["defined"] = res.defined;
    d["flavor"] = flavor;
    d["r"] = r;
    py::dict sig;
    sig["positive"] = res.sig.positive;
    sig["negative"] = res.sig.negative;
    sig["zero"] = res.sig.zero;
    d["signature"] = sig;
    return d;
}

py::dict lens_closed_form_py(const std::string& algebra, long r, long b, long a) {
    auto rs = RootSystem::build(algebra);
    return cyc_to_dict(tau_lens_closed_form(*rs, r, b, a), a);
}

py::dict root_system_py(const std::string& algebra) {
    auto rs = RootSystem::build(algebra);
    py::dict d;
    d["name"] = rs->name();
    d["rank"] = rs->rank();
    d["d"] = rs->d();
    d["D"] = rs->D();
    d["det_cartan"] = rs->det_cartan();
    d["h"] = rs->h();
    d["h_dual"] = rs->h_dual();
    d["positive_roots"] = rs->s();
    d["dim"] = rs->dim_g();
    d["weyl_order"] = rs->weyl_order();
    py::list factors;
    for (long f : rs->center().factors) factors.append(f);
    d["center_factors"] = factors;
    return d;
}

py::dict ohtsuki_py(const std::string& algebra, const std::string& spec_json, int order,
                    const std::vector<long>& primes) {
    auto rs = RootSystem::build(algebra);
    ManifoldSpec spec = parse_manifold_spec(spec_json);
    if (spec.components.size() != 1 || !spec.connected_sum.empty() ||
        !spec.components[0].is_special())
        throw invalid_input_error("ohtsuki: pass a single special-link presentation");
    const SpecialLink& sp = spec.components[0].special();
    OhtsukiSeries series = [&] {
        if (sp.kind == SpecialLink::Kind::Unknot) return ohtsuki_lens(*rs, sp.framings[0], order);
        if (sp.kind == SpecialLink::Kind::Trefoil)
            return ohtsuki_knot_sl2(sp.chirality == Chirality::Left ? KnotKind::TrefoilLeft
                                                                    : KnotKind::TrefoilRight,
                                    (int)sp.framings[0], order);
        if (sp.kind == SpecialLink::Kind::FigureEight)
            return ohtsuki_knot_sl2(KnotKind::FigureEight, (int)sp.framings[0], order);
        throw invalid_input_error("ohtsuki: unsupported presentation");
    }();
    py::dict d;
    py::list coeffs;
    for (const auto& c : series.t.c) coeffs.append(rat_to_string(c));
    d["coefficients"] = coeffs;
    py::list table;
    for (long r : primes) {
        py::dict row;
        row["r"] = r;
        row["congruence_pass"] = congruence_check(series, spec, *rs, r, order);
        table.append(row);
    }
    d["primes"] = table;
    return d;
}

} // namespace

PYBIND11_MODULE(_qtau, m) {
    m.doc() = "exact quantum 3-manifold invariants";

    py::register_exception<invalid_input_error>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<check_error>(m, "CheckError", PyExc_AssertionError);

    m.def("root_system", &root_system_py, py::arg("algebra"),
          "Lie data: d, D, h, h_dual, |W|, center structure");
    m.def("tau", &tau_py, py::arg("algebra"), py::arg("r"), py::arg("flavor"),
          py::arg("spec_json"), py::arg("zeta_exponent") = 1,
          "tau^g / tau^{Pg} / tau^G of a surgery presentation");
    m.def("tau_lens_closed_form", &lens_closed_form_py, py::arg("algebra"), py::arg("r"),
          py::arg("b"), py::arg("zeta_exponent") = 1);
    m.def("ohtsuki_series", &ohtsuki_py, py::arg("algebra"), py::arg("spec_json"),
          py::arg("order"), py::arg("primes") = std::vector<long>{},
          "Ohtsuki series coefficients with congruence checks");
    m.def(
        "splitting_check",
        [](const std::string& algebra, long r, const std::string& spec_json, long a) {
            auto rs = RootSystem::build(algebra);
            return splitting_check(parse_manifold_spec(spec_json), *rs, r, a);
        },
        py::arg("algebra"), py::arg("r"), py::arg("spec_json"), py::arg("zeta_exponent") = 1);
    m.def(
        "s_matrix_check",
        [](const std::string& algebra, long r, long a) {
            return s_matrix_check(*RootSystem::build(algebra), r, a);
        },
        py::arg("algebra"), py::arg("r"), py::arg("zeta_exponent") = 1);
    m.def(
        "kirby_equivalence_check",
        [](const std::string& algebra, long r, const std::string& spec_a,
           const std::string& spec_b, const std::string& flavor, long a) {
            auto rs = RootSystem::build(algebra);
            Flavor fl = parse_flavor(flavor);
            long aa = fl == Flavor::Projective ? mod_nonneg(a, r) : a;
            return kirby_equivalence_check(parse_manifold_spec(spec_a),
                                           parse_manifold_spec(spec_b), *rs, r, aa, fl);
        },
        py::arg("algebra"), py::arg("r"), py::arg("spec_a"), py::arg("spec_b"),
        py::arg("flavor") = "projective", py::arg("zeta_exponent") = 1);
    m.def(
        "gauss_sum_vanishes",
        [](const std::string& algebra, long r) {
            auto rs = RootSystem::build(algebra);
            auto f = CycField::make(2 * rs->D() * r);
            return gauss_full(*rs, r, f, 1).value.is_zero();
        },
        py::arg("algebra"), py::arg("r"));
    m.def(
        "legendre", [](long a, long r) { return legendre(Int(a), r); }, py::arg("a"),
        py::arg("r"));
    m.def(
        "braid_jones",
        [](int strands, const std::vector<int>& word, const std::vector<int>& component_map,
           const std::vector<long>& colors) {
            BraidLink b{strands, word, std::vector<long>(colors.size(), 0), component_map};
            return braid_jones_sl2(b, colors).to_string();
        },
        py::arg("strands"), py::arg("word"), py::arg("component_map"), py::arg("colors"),
        "0-framed colored Jones polynomial of a braid closure (sl2)");
}
