#pragma once

#include <vector>

#include "symdet/decompose.hpp"
#include "symdet/schur.hpp"

namespace symdet {

struct BuildReport {
    SymmetricPencil pencil;
    SubstitutionScript script;
    std::vector<std::size_t> size_trace;       // pencil size after each stage, starting at the seed
    std::vector<RealizePath> strategy_trace;   // construction used per substitution step
};

/// P + [c]: appends the scalar as a trailing 1x1 diagonal block, scaling the
/// determinant by c at every point.
SymmetricPencil scalar_extend(const SymmetricPencil& p, const FieldElement& c);

/// Replaces the pencil variable w by the product u*v: realizes u*v*A_w, folds the
/// rest of the pencil onto the (1,1) block, and appends [d^{-1}] with d the
/// determinant of the trailing block, so that det is preserved under w := u*v.
SymmetricPencil substitute_step(const SymmetricPencil& p, const std::string& w,
                                const std::string& u, const std::string& v, Strategy strategy,
                                RealizePath* used = nullptr);

/// Full pipeline: decompose p into an affine seed plus product substitutions,
/// start from the 1x1 seed pencil, and apply one substitute_step per script step.
/// The result satisfies det(pencil(z)) = p(z) identically.
BuildReport build(const Polynomial& p, Strategy strategy = Strategy::Auto);

} // namespace symdet
