#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilreg/element.hpp"
#include "nilreg/matrix_rep.hpp"
#include "nilreg/verify.hpp"

namespace py = pybind11;
using namespace nilreg;

namespace {

RunConfig make_config(std::uint32_t n, const std::string& field, const std::string& presentation) {
    RunConfig cfg;
    cfg.n = n;
    cfg.field = Field::parse(field);
    if (presentation == "S")
        cfg.presentation = PresentationKind::S;
    else if (presentation == "R")
        cfg.presentation = PresentationKind::R;
    else
        throw std::invalid_argument("presentation must be 'S' or 'R'");
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Normal forms in S = F[x]/(x^n)<q | xqx = x, qxq = q> and bounded checks";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "reduce",
        [](const std::vector<std::string>& factors, std::uint32_t n, const std::string& field,
           const std::string& presentation) {
            const RunConfig cfg = make_config(n, field, presentation);
            const RewriteSystem sys = cfg.system();
            AlgebraElement out = AlgebraElement::one(sys, cfg.field);
            for (const auto& f : factors) out = out * parse_element(f, sys, cfg.field);
            return out.to_string();
        },
        py::arg("factors"), py::arg("n") = 3, py::arg("field") = "gf2", py::arg("presentation") = "S",
        "Normal form of the product of the given element literals.");

    m.def(
        "basis",
        [](std::size_t max_len, std::uint32_t n, const std::string& presentation) {
            const RunConfig cfg = make_config(n, "gf2", presentation);
            std::vector<std::string> out;
            for (const Word& w : enumerate_basis(max_len, cfg.system())) out.push_back(w.to_string());
            return out;
        },
        py::arg("max_len"), py::arg("n") = 3, py::arg("presentation") = "S");

    m.def(
        "phi",
        [](const std::string& expr, std::uint32_t n, const std::string& field) {
            const Field f = Field::parse(field);
            const PhiMap map(n, f);
            return map(parse_element(expr, map.source(), f)).to_string();
        },
        py::arg("expr"), py::arg("n") = 3, py::arg("field") = "gf2",
        "Image of an element of S in M2(R), as \"[[e11, e12], [e21, e22]]\".");

    m.def(
        "membership_T",
        [](const std::string& matrix, std::uint32_t n, const std::string& field, std::size_t max_degree) {
            const Field f = Field::parse(field);
            return membership_T(parse_matrix(matrix, entry_ring(n), f), max_degree).to_json().dump();
        },
        py::arg("matrix"), py::arg("n") = 3, py::arg("field") = "gf2", py::arg("max_degree") = 12);

    m.def("check_names", &check_names);

    m.def(
        "verify",
        [](const std::string& check, std::uint32_t n, const std::string& field,
           const std::string& presentation, std::size_t max_len, std::size_t max_word_len,
           std::uint64_t seed, unsigned workers, std::optional<std::size_t> trials) {
            RunConfig cfg = make_config(n, field, presentation);
            cfg.max_len = max_len;
            cfg.max_word_len = max_word_len;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.trials = trials;
            VerificationReport rep;
            {
                py::gil_scoped_release release;
                rep = run_check(check, cfg);
            }
            return rep.to_json().dump();
        },
        py::arg("check"), py::arg("n") = 3, py::arg("field") = "gf2", py::arg("presentation") = "S",
        py::arg("max_len") = 6, py::arg("max_word_len") = 3, py::arg("seed") = 1, py::arg("workers") = 1,
        py::arg("trials") = py::none());
}
