#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galcoh/cli.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/etalealg.hpp"
#include "galcoh/factor.hpp"
#include "galcoh/groupcoh.hpp"
#include "galcoh/kummerh1.hpp"
#include "galcoh/localsym.hpp"
#include "galcoh/rational.hpp"

namespace py = pybind11;
using namespace galcoh;

namespace {

std::vector<std::string> factor_strings(const EtaleAlgebra& l) {
    std::vector<std::string> out;
    for (const auto& f : l.factors()) out.push_back(f.to_string());
    return out;
}

Place place_of(long p) { return p == 0 ? Place::real() : Place::prime(p); }

}  // namespace

PYBIND11_MODULE(_galcoh, m) {
    m.doc() = "Exact Galois cohomology of etale algebras";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            auto r = cli::run(args);
            return py::make_tuple(r.exit_code, cli::render(r));
        },
        py::arg("args"), "Run a CLI command; returns (exit_code, json_text).");

    m.def(
        "factor",
        [](const std::string& f) {
            std::vector<std::pair<std::string, int>> out;
            for (const auto& [g, e] : factor_rationals(RationalPoly::parse(f))) out.emplace_back(g.to_string(), e);
            return out;
        },
        py::arg("f"));
    m.def(
        "discriminant", [](const std::string& f) { return to_string(discriminant(RationalPoly::parse(f))); },
        py::arg("f"));
    m.def(
        "galois_group", [](const std::string& l) { return galois_group(EtaleAlgebra::parse(l)); }, py::arg("algebra"));
    m.def(
        "mirror", [](const std::string& l) { return factor_strings(mirror_quartic(EtaleAlgebra::parse(l))); },
        py::arg("algebra"));
    m.def(
        "is_isomorphic",
        [](const std::string& a, const std::string& b) {
            return is_isomorphic(EtaleAlgebra::parse(a), EtaleAlgebra::parse(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "c3_encode",
        [](long d, const std::string& delta) {
            const BigInt D(d);
            return factor_strings(c3_encode(CoclassC3{D, QuadElem::parse(tate_dual_twist(D), delta)}));
        },
        py::arg("D"), py::arg("delta"));
    m.def(
        "c4_encode",
        [](long d, const std::string& a, const std::string& b, const std::string& c) {
            return factor_strings(
                c4_encode(CoclassC4::make(BigInt(d), parse_rational(a), parse_rational(b), parse_rational(c))));
        },
        py::arg("D"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "c4_decode",
        [](const std::string& l) {
            auto d = c4_decode(EtaleAlgebra::parse(l)).datum;
            return py::dict(py::arg("D") = to_string(d.D), py::arg("a") = to_string(d.alpha.x),
                            py::arg("b") = to_string(d.alpha.y), py::arg("c") = to_string(d.c));
        },
        py::arg("algebra"));

    m.def(
        "hilbert2",
        [](const std::string& a, const std::string& b, long p) {
            return hilbert2(parse_rational(a), parse_rational(b), place_of(p)).is_one() ? 1 : -1;
        },
        py::arg("a"), py::arg("b"), py::arg("p"), "Quadratic Hilbert symbol; p = 0 for the real place.");

    m.def(
        "h1_size", [](const std::string& name) { return cohomology(named_module(name), 1).size(); },
        py::arg("module"));
}
