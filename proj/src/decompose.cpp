#include "symdet/decompose.hpp"

#include <algorithm>

namespace symdet {

SubstitutionScript decompose(const Polynomial& p) {
    Polynomial current = p;
    std::vector<SubstitutionStep> created; // in creation order
    std::size_t fresh = current.registry().next_fresh_index();

    while (!current.is_affine_linear()) {
        // Leading monomial of degree >= 2 (terms iterate grlex-descending).
        const auto it = std::find_if(current.terms().begin(), current.terms().end(),
                                     [](const auto& t) { return t.first.total_degree() >= 2; });
        const Monomial target = it->first;

        // Two lowest-indexed factors of the monomial, counted with multiplicity.
        const auto& first = target.factors().front();
        std::uint32_t ui = first.first;
        std::uint32_t vi = first.second >= 2 ? first.first : target.factors()[1].first;

        const std::string u = current.registry().name(ui);
        const std::string v = current.registry().name(vi);
        const std::string w = std::string(VariableRegistry::kFreshPrefix) + std::to_string(fresh++);

        VariableRegistry extended = current.registry();
        const auto wi = static_cast<std::uint32_t>(extended.add(w));
        Polynomial next(current.descriptor(), extended);

        Monomial replaced = target.with_exponent(ui, target.exponent_of(ui) - 1);
        replaced = replaced.with_exponent(vi, replaced.exponent_of(vi) - 1);
        replaced = replaced.times(Monomial::variable(wi));

        for (const auto& [m, c] : current.terms()) {
            next.add_term(m == target ? replaced : m, c);
        }
        created.push_back({w, u, v});
        current = std::move(next);
    }

    // Replay must consume the last-created variable first.
    std::reverse(created.begin(), created.end());
    return SubstitutionScript{std::move(current), std::move(created)};
}

Polynomial replay(const SubstitutionScript& script) {
    Polynomial p = script.seed;
    for (const auto& step : script.steps) {
        p = p.substitute_product(step.w, step.u, step.v);
    }
    return p;
}

} // namespace symdet
