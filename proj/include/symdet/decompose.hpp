#pragma once

#include <string>
#include <vector>

#include "symdet/poly.hpp"

namespace symdet {

struct SubstitutionStep {
    std::string w; // variable being replaced
    std::string u;
    std::string v;

    bool operator==(const SubstitutionStep&) const = default;
};

/// Affine seed plus product substitutions, stored in application order: replay
/// applies steps.front() to the seed first. (In composition notation the first
/// stored step is the innermost substitution.)
struct SubstitutionScript {
    Polynomial seed;
    std::vector<SubstitutionStep> steps;
};

/// Greedy pair extraction: repeatedly rewrites the leading (graded-lex largest)
/// monomial of degree >= 2, replacing its two lowest-indexed variable factors by
/// one fresh "__w<k>" variable, until the polynomial is affine linear. Each step
/// touches exactly one monomial and fresh variables are never reused.
SubstitutionScript decompose(const Polynomial& p);

/// Applies the steps in storage order via substitute_product.
Polynomial replay(const SubstitutionScript& script);

} // namespace symdet
