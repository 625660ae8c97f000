#include "symdet/builder.hpp"

namespace symdet {

SymmetricPencil scalar_extend(const SymmetricPencil& p, const FieldElement& c) {
    Matrix cell(p.desc, 1, 1);
    cell(0, 0) = c;
    return direct_sum(p, constant_pencil(cell));
}

SymmetricPencil substitute_step(const SymmetricPencil& p, const std::string& w,
                                const std::string& u, const std::string& v, Strategy strategy,
                                RealizePath* used) {
    const std::size_t wi = p.registry.index_of(w);
    const Matrix a_w = p.coeff[wi];

    SymmetricPencil rest(p.desc, p.size);
    rest.registry = p.registry.without(w);
    rest.a0 = p.a0;
    rest.coeff.reserve(rest.registry.size());
    for (std::size_t i = 0; i < p.registry.size(); ++i) {
        if (i != wi) rest.coeff.push_back(p.coeff[i]);
    }

    RealizationBlock product = [&] {
        try {
            return realize_product(a_w, u, v, strategy, used);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ShiftExhausted) throw;
            // Small prime fields can run out of shift candidates; the rank
            // factorization route always exists there.
            return realize_product(a_w, u, v, Strategy::RankFactor, used);
        }
    }();
    RealizationBlock combined = sum_with_matrix(product, rest);
    const FieldElement d = determinant(combined.trailing_block());
    return scalar_extend(combined.pencil, d.inverse());
}

BuildReport build(const Polynomial& p, Strategy strategy) {
    SubstitutionScript script = decompose(p);

    SymmetricPencil pencil = affine_pencil(script.seed);
    std::vector<std::size_t> sizes{pencil.size};
    std::vector<RealizePath> paths;

    for (const auto& step : script.steps) {
        RealizePath used = RealizePath::Invertible;
        pencil = substitute_step(pencil, step.w, step.u, step.v, strategy, &used);
        sizes.push_back(pencil.size);
        paths.push_back(used);
    }
    return BuildReport{std::move(pencil), std::move(script), std::move(sizes), std::move(paths)};
}

} // namespace symdet
