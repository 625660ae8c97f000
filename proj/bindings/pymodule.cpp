#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symdet/json_io.hpp"

namespace py = pybind11;
using namespace symdet;

namespace {

Assignment assignment_from_dict(const FieldDescriptor& desc, const py::dict& point) {
    Assignment out;
    for (const auto& item : point) {
        const auto name = item.first.cast<std::string>();
        if (py::isinstance<py::int_>(item.second)) {
            out.emplace(name, FieldElement::of_string(desc, py::str(item.second).cast<std::string>()));
        } else {
            out.emplace(name, FieldElement::of_string(desc, item.second.cast<std::string>()));
        }
    }
    return out;
}

py::dict report_summary(const VerifyReport& r) {
    py::dict d;
    d["mode"] = verify_mode_name(r.mode);
    d["pass"] = r.passed;
    d["samples"] = r.samples;
    if (r.witness) {
        py::dict w;
        for (const auto& [name, value] : *r.witness) w[py::str(name)] = value.str();
        d["witness"] = w;
    }
    if (!r.note.empty()) d["note"] = r.note;
    if (!r.error_bound.empty()) d["error_bound"] = r.error_bound;
    return d;
}

std::vector<std::vector<std::string>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j).str());
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_symdet, m) {
    m.doc() = "symmetric determinantal representations of multivariate polynomials";

    py::register_exception<Error>(m, "SymdetError");

    py::class_<FieldDescriptor>(m, "Field")
        .def_static("rationals", &FieldDescriptor::rationals)
        .def_static("prime_field", &FieldDescriptor::prime_field, py::arg("p"))
        .def_static("from_spec", &FieldDescriptor::from_spec, py::arg("spec"))
        .def_property_readonly("spec", &FieldDescriptor::spec)
        .def("__eq__", [](const FieldDescriptor& a, const FieldDescriptor& b) { return a == b; })
        .def("__repr__", [](const FieldDescriptor& d) { return "Field('" + d.spec() + "')"; });

    py::class_<Polynomial>(m, "Polynomial")
        .def_property_readonly("field", &Polynomial::descriptor)
        .def_property_readonly("variables",
                               [](const Polynomial& p) { return p.registry().names(); })
        .def_property_readonly("total_degree", &Polynomial::total_degree)
        .def("is_affine_linear", &Polynomial::is_affine_linear)
        .def("evaluate",
             [](const Polynomial& p, const py::dict& point) {
                 return p.evaluate(assignment_from_dict(p.descriptor(), point)).str();
             })
        .def("substitute_product", &Polynomial::substitute_product, py::arg("w"), py::arg("u"),
             py::arg("v"))
        .def("to_json", [](const Polynomial& p) { return polynomial_to_json(p).dump(); })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", &Polynomial::render)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.render() + "')"; });

    py::class_<SymmetricPencil>(m, "Pencil")
        .def_property_readonly("field", [](const SymmetricPencil& p) { return p.desc; })
        .def_property_readonly("size", [](const SymmetricPencil& p) { return p.size; })
        .def_property_readonly("variables",
                               [](const SymmetricPencil& p) { return p.registry.names(); })
        .def_property_readonly("a0", [](const SymmetricPencil& p) { return matrix_rows(p.a0); })
        .def("coefficient",
             [](const SymmetricPencil& p, const std::string& name) {
                 return matrix_rows(p.coefficient(name));
             })
        .def("evaluate",
             [](const SymmetricPencil& p, const py::dict& point) {
                 return matrix_rows(eval_pencil(p, assignment_from_dict(p.desc, point)));
             })
        .def("determinant_polynomial",
             [](const SymmetricPencil& p, std::size_t limit) {
                 return pencil_determinant(p, limit);
             },
             py::arg("limit") = 10)
        .def("to_json", [](const SymmetricPencil& p) { return pencil_to_json(p).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return pencil_from_json(json::parse(text)); })
        .def("__repr__", [](const SymmetricPencil& p) {
            return "Pencil(size=" + std::to_string(p.size) + ", field='" + p.desc.spec() + "')";
        });

    py::class_<SubstitutionScript>(m, "Script")
        .def_property_readonly("seed", [](const SubstitutionScript& s) { return s.seed; })
        .def_property_readonly("steps",
                               [](const SubstitutionScript& s) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& st : s.steps) out.emplace_back(st.w, st.u, st.v);
                                   return out;
                               })
        .def("replay", [](const SubstitutionScript& s) { return replay(s); })
        .def("to_json", [](const SubstitutionScript& s) { return script_to_json(s).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return script_from_json(json::parse(text)); });

    py::class_<BuildReport>(m, "BuildReport")
        .def_property_readonly("pencil", [](const BuildReport& r) { return r.pencil; })
        .def_property_readonly("script", [](const BuildReport& r) { return r.script; })
        .def_property_readonly("size_trace", [](const BuildReport& r) { return r.size_trace; })
        .def_property_readonly("strategy_trace",
                               [](const BuildReport& r) {
                                   std::vector<std::string> out;
                                   for (auto p : r.strategy_trace) out.push_back(realize_path_name(p));
                                   return out;
                               })
        .def("to_json", [](const BuildReport& r) { return build_report_to_json(r).dump(); });

    m.def(
        "parse",
        [](const std::string& text, const std::string& field) {
            return parse_polynomial(text, FieldDescriptor::from_spec(field));
        },
        py::arg("text"), py::arg("field") = "q");

    m.def(
        "decompose", [](const Polynomial& p) { return decompose(p); }, py::arg("polynomial"));

    m.def(
        "build",
        [](const Polynomial& p, const std::string& strategy) {
            return build(p, strategy_from_name(strategy));
        },
        py::arg("polynomial"), py::arg("strategy") = "auto");

    m.def(
        "verify_symbolic",
        [](const SymmetricPencil& pencil, const Polynomial& p, std::size_t limit) {
            return report_summary(verify_symbolic(pencil, p, limit));
        },
        py::arg("pencil"), py::arg("polynomial"), py::arg("limit") = 10);

    m.def(
        "verify_sampled",
        [](const SymmetricPencil& pencil, const Polynomial& p, std::uint64_t count,
           std::uint64_t seed) { return report_summary(verify_sampled(pencil, p, count, seed)); },
        py::arg("pencil"), py::arg("polynomial"), py::arg("count") = 50, py::arg("seed") = 12345);

    m.def(
        "verify_exhaustive",
        [](const SymmetricPencil& pencil, const Polynomial& p, std::uint64_t budget) {
            return report_summary(verify_exhaustive(pencil, p, budget));
        },
        py::arg("pencil"), py::arg("polynomial"), py::arg("budget") = 1000000);
}
