#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symdet/linalg.hpp"
#include "symdet/poly.hpp"

namespace symdet {

/// Affine linear matrix pencil A0 + sum_v x_v * coeff[v] with every matrix
/// symmetric of the same size. Variables with all-zero coefficient matrices are
/// legal pencil variables.
struct SymmetricPencil {
    FieldDescriptor desc;
    VariableRegistry registry;
    std::size_t size = 0;
    Matrix a0;
    std::vector<Matrix> coeff; // aligned with registry

    SymmetricPencil(const FieldDescriptor& d, std::size_t m)
        : desc(d), size(m), a0(d, m, m) {}

    const Matrix& coefficient(const std::string& name) const {
        return coeff.at(registry.index_of(name));
    }
    /// Registers the variable if needed and returns its coefficient matrix.
    Matrix& coefficient_mut(const std::string& name);
};

/// 1x1 pencil [p] for an affine linear polynomial p; the registry is p's.
SymmetricPencil affine_pencil(const Polynomial& p);

/// Variable-free pencil with A0 = m.
SymmetricPencil constant_pencil(const Matrix& m);

Matrix eval_pencil(const SymmetricPencil& p, const Assignment& point);

SymmetricPencil direct_sum(const SymmetricPencil& p, const SymmetricPencil& q);

/// A pencil with a designated constant invertible trailing block: the Schur
/// complement with respect to that block realizes an affine-in-the-pencil-
/// variables matrix polynomial of size `split`.
struct RealizationBlock {
    SymmetricPencil pencil;
    std::size_t split = 0;

    std::size_t trailing_size() const { return pencil.size - split; }
    Matrix trailing_block() const {
        return pencil.a0.block(split, split, trailing_size(), trailing_size());
    }
};

enum class Strategy { Shift, RankFactor, Auto };
enum class RealizePath { Invertible, Shift, RankFactor };

const char* strategy_name(Strategy s);
const char* realize_path_name(RealizePath p);
Strategy strategy_from_name(const std::string& name);

/// Builds a realization whose Schur complement is u*v*B (u = v allowed):
///  - invertible B: the 3m x 3m block matrix with (1,2)-blocks (u+v)/2 I and
///    (u-v)/2 I over the constant diag(-B^{-1}, B^{-1});
///  - singular B, Shift: u*v*(B - l0*I) + u*v*(l0*I) through sum_two, trying
///    l0 = 1, 2, ... for at most min(2m+1, |F|-1) candidates (ShiftExhausted
///    when none makes B - l0*I invertible);
///  - singular B, RankFactor (Auto default): factor B = Y^T diag(B1, 0) Y,
///    realize u*v*B1, pad with shorted_embed, pull back with congruence_mult;
///  - B = 0: the trivial block [0_m] + [1] with u, v as zero-coefficient
///    variables.
/// `used` (optional) reports which construction ran.
RealizationBlock realize_product(const Matrix& b, const std::string& u, const std::string& v,
                                 Strategy strategy, RealizePath* used = nullptr);

/// Adds an affine pencil B (size = split) onto the (1,1) block: the Schur
/// complement becomes (old complement) + B.
RealizationBlock sum_with_matrix(const RealizationBlock& r, const SymmetricPencil& b);

/// Glues two realizations of equal split into one whose Schur complement is the
/// sum; trailing blocks stack block-diagonally.
RealizationBlock sum_two(const RealizationBlock& r1, const RealizationBlock& r2);

/// Pads the realized matrix with a zero direct summand of size l (split grows by l).
RealizationBlock shorted_embed(const RealizationBlock& r, std::size_t l);

/// Congruence X * (complement) * X^T with X square of size split.
RealizationBlock congruence_mult(const RealizationBlock& r, const Matrix& x);

/// Throws unless all pencil matrices are symmetric, the trailing block is
/// variable-free, and the trailing block is invertible.
void check_realization(const RealizationBlock& r);

} // namespace symdet
