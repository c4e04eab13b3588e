#include "gradedlie/error.hpp"
#include "gradedlie/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace gradedlie;

namespace {

AlgebraSpec make_spec(const std::string& family, const std::vector<int>& params,
                      const std::optional<std::string>& partition) {
    AlgebraSpec spec{parse_family(family), params, std::nullopt};
    if (partition)
        spec.partition = DegreePartition::parse(*partition);
    spec.validate();
    return spec;
}

GeneratorFamily make_generators(const std::string& kind, int first, int second) {
    if (kind == "parafermion")
        return build_parafermions(first, second);
    if (kind == "paraboson")
        return build_parabosons(first, second);
    throw Error(ErrorKind::InvalidParameter, "unknown generator family '" + kind + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Z2xZ2-graded Lie (super)algebras; every function returns a JSON string.";

    static py::exception<Error> error_type(m, "GradedLieError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
            PyErr_SetString(error_type.ptr(), msg.c_str());
        }
    });

    m.def(
        "build",
        [](const std::string& family, const std::vector<int>& params,
           const std::optional<std::string>& partition) {
            return dump(build_document(build(make_spec(family, params, partition))));
        },
        py::arg("family"), py::arg("params"), py::arg("partition") = std::nullopt);

    m.def(
        "verify",
        [](const std::string& family, const std::vector<int>& params,
           const std::optional<std::string>& partition) {
            const auto spec = make_spec(family, params, partition);
            VerificationReport rep;
            {
                py::gil_scoped_release release;
                rep = verify_algebra(spec);
            }
            return dump(to_json(spec, rep));
        },
        py::arg("family"), py::arg("params"), py::arg("partition") = std::nullopt);

    m.def(
        "roots",
        [](const std::string& family, const std::vector<int>& params) {
            const auto a = build(make_spec(family, params, std::nullopt));
            const auto dec = root_decomposition(a);
            return dump(roots_document(a, dec, positive_and_simple_roots(dec)));
        },
        py::arg("family"), py::arg("params"));

    m.def(
        "structure_constants",
        [](const std::string& family, const std::vector<int>& params,
           const std::optional<std::string>& partition) {
            return dump(to_json(structure_constants(build(make_spec(family, params, partition)))));
        },
        py::arg("family"), py::arg("params"), py::arg("partition") = std::nullopt);

    m.def(
        "relations",
        [](const std::string& kind, int first, int second, const std::string& set) {
            const auto fam = make_generators(kind, first, second);
            return dump(to_json(fam, verify_relations(fam, parse_relation_set(set))));
        },
        py::arg("kind"), py::arg("first"), py::arg("second"), py::arg("set"));

    m.def(
        "generate",
        [](const std::string& kind, int first, int second) {
            const auto fam = make_generators(kind, first, second);
            Json header = Json::object();
            header["family"] = kind;
            header["params"] = Json::array({first, second});
            header["generators"] = fam.all().size();
            return dump(algebra_document(generate_closure(fam.all(), fam.convention()),
                                         "generated_from", header));
        },
        py::arg("kind"), py::arg("first"), py::arg("second"));
}
