#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "so3/errors.hpp"
#include "so3/habiro.hpp"
#include "so3/manifold.hpp"
#include "so3/numtheory.hpp"
#include "so3/unified.hpp"
#include "so3/verify.hpp"
#include "so3/wrt.hpp"

namespace py = pybind11;
using namespace so3;

namespace {

// values cross the boundary as JSON text; the Python side decodes them
std::string tau_json(const std::string& manifold, long r, bool alt) {
    CycElem t = tau(parse_manifold(manifold), r, alt);
    nlohmann::json j = t.to_json();
    j["integral"] = t.is_integral();
    return j.dump();
}

std::string unified_json(const std::string& manifold, long K) {
    return unified_invariant(parse_manifold(manifold), K).to_json().dump();
}

std::string eval_json(const std::string& element, long r, bool normalized) {
    HabiroElement I = HabiroElement::from_json(nlohmann::json::parse(element));
    return (normalized ? eval_normalized(I, r) : eval_habiro(I, r)).to_json().dump();
}

std::string verify_json(const std::string& suite, long r, long d) {
    CheckReport rep;
    if (suite == "lemma33") rep = verify_lemma33(r, d);
    else if (suite == "reciprocity") rep = verify_reciprocity(50);
    else if (suite == "gauss") rep = verify_gauss(r);
    else throw ValidationError("unknown suite '" + suite + "'");
    return rep.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    // translators registered later are tried first, so the base class goes first
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("tau_json", &tau_json, py::arg("manifold"), py::arg("r"), py::arg("alt_chains") = false);
    m.def("unified_json", &unified_json, py::arg("manifold"), py::arg("K"));
    m.def("eval_json", &eval_json, py::arg("element"), py::arg("r"), py::arg("normalized") = true);
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("r") = 9, py::arg("d") = 3);
    m.def("h1_order", [](const std::string& s) { return h1_order(parse_manifold(s)); });
    m.def("describe", [](const std::string& s) { return describe(parse_manifold(s)); });
    m.def("dedekind_sum", [](long b, long a) { return q_to_string(dedekind_sum(b, a)); });
    m.def("jacobi", &jacobi);
}
