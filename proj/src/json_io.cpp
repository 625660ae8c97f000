#include "symdet/json_io.hpp"

namespace symdet {

json field_to_json(const FieldDescriptor& desc) {
    if (desc.is_rationals()) return json{{"kind", "Q"}};
    return json{{"kind", "Fp"}, {"p", desc.modulus()}};
}

FieldDescriptor field_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldDescriptor::rationals();
    if (kind == "Fp") return FieldDescriptor::prime_field(j.at("p").get<std::uint64_t>());
    throw Error(ErrorCode::InvalidArgument, "unknown field kind '" + kind + "'");
}

json scalar_to_json(const FieldElement& e) {
    if (e.descriptor().is_rationals()) return e.str();
    return e.residue();
}

FieldElement scalar_from_json(const json& j, const FieldDescriptor& desc) {
    if (j.is_string()) return FieldElement::of_string(desc, j.get<std::string>());
    if (j.is_number_integer()) {
        return FieldElement::of_mpz(desc, mpz_class(j.dump()));
    }
    throw Error(ErrorCode::InvalidArgument, "scalar must be a string or integer");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, const FieldDescriptor& desc) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw Error(ErrorCode::InvalidArgument, "bad matrix row count");
    Matrix m(desc, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) {
            throw Error(ErrorCode::InvalidArgument, "bad matrix column count");
        }
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(entries[i][c], desc);
    }
    return m;
}

json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.factors()) exps[p.registry().name(v)] = e;
        terms.push_back(json{{"coeff", scalar_to_json(c)}, {"monomial", std::move(exps)}});
    }
    return json{{"field", field_to_json(p.descriptor())},
                {"vars", p.registry().names()},
                {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    const FieldDescriptor desc = field_from_json(j.at("field"));
    VariableRegistry registry(j.at("vars").get<std::vector<std::string>>());
    Polynomial p(desc, registry);
    for (const auto& term : j.at("terms")) {
        Monomial m;
        for (const auto& [name, exp] : term.at("monomial").items()) {
            m = m.times(Monomial::variable(static_cast<std::uint32_t>(registry.index_of(name)),
                                           exp.get<std::uint32_t>()));
        }
        p.add_term(m, scalar_from_json(term.at("coeff"), desc));
    }
    return p;
}

json pencil_to_json(const SymmetricPencil& p) {
    json coeff = json::object();
    for (std::size_t i = 0; i < p.registry.size(); ++i) {
        coeff[p.registry.name(i)] = matrix_to_json(p.coeff[i]);
    }
    return json{{"field", field_to_json(p.desc)},
                {"vars", p.registry.names()},
                {"size", p.size},
                {"A0", matrix_to_json(p.a0)},
                {"coeff", std::move(coeff)}};
}

SymmetricPencil pencil_from_json(const json& j) {
    const FieldDescriptor desc = field_from_json(j.at("field"));
    SymmetricPencil p(desc, j.at("size").get<std::size_t>());
    p.registry = VariableRegistry(j.at("vars").get<std::vector<std::string>>());
    p.a0 = matrix_from_json(j.at("A0"), desc);
    p.coeff.assign(p.registry.size(), Matrix(desc, p.size, p.size));
    for (const auto& [name, m] : j.at("coeff").items()) {
        p.coeff[p.registry.index_of(name)] = matrix_from_json(m, desc);
    }
    return p;
}

json realization_to_json(const RealizationBlock& r) {
    json j = pencil_to_json(r.pencil);
    j["split"] = r.split;
    return j;
}

RealizationBlock realization_from_json(const json& j) {
    return RealizationBlock{pencil_from_json(j), j.at("split").get<std::size_t>()};
}

json script_to_json(const SubstitutionScript& s) {
    json steps = json::array();
    for (const auto& step : s.steps) {
        steps.push_back(json{{"w", step.w}, {"u", step.u}, {"v", step.v}});
    }
    return json{{"seed", polynomial_to_json(s.seed)}, {"steps", std::move(steps)}};
}

SubstitutionScript script_from_json(const json& j) {
    SubstitutionScript s{polynomial_from_json(j.at("seed")), {}};
    for (const auto& step : j.at("steps")) {
        s.steps.push_back({step.at("w").get<std::string>(), step.at("u").get<std::string>(),
                           step.at("v").get<std::string>()});
    }
    return s;
}

json build_report_to_json(const BuildReport& r) {
    json strategies = json::array();
    for (const auto& p : r.strategy_trace) strategies.push_back(realize_path_name(p));
    return json{{"pencil", pencil_to_json(r.pencil)},
                {"script", script_to_json(r.script)},
                {"size_trace", r.size_trace},
                {"strategy_trace", std::move(strategies)}};
}

json verify_report_to_json(const VerifyReport& r) {
    json j{{"mode", verify_mode_name(r.mode)}, {"pass", r.passed}, {"samples", r.samples}};
    if (r.mode == VerifyMode::Sampled) j["seed"] = r.seed;
    if (r.witness) {
        json w = json::object();
        for (const auto& [name, value] : *r.witness) w[name] = scalar_to_json(value);
        j["witness"] = std::move(w);
    }
    if (!r.error_bound.empty()) j["error_bound"] = r.error_bound;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace symdet
