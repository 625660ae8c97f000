#include "symdet/schur.hpp"

#include <algorithm>

namespace symdet {

const char* strategy_name(Strategy s) {
    switch (s) {
    case Strategy::Shift: return "shift";
    case Strategy::RankFactor: return "rankfactor";
    case Strategy::Auto: return "auto";
    }
    return "auto";
}

const char* realize_path_name(RealizePath p) {
    switch (p) {
    case RealizePath::Invertible: return "Invertible";
    case RealizePath::Shift: return "Shift";
    case RealizePath::RankFactor: return "RankFactor";
    }
    return "Invertible";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "shift") return Strategy::Shift;
    if (name == "rankfactor") return Strategy::RankFactor;
    if (name == "auto") return Strategy::Auto;
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
}

Matrix& SymmetricPencil::coefficient_mut(const std::string& name) {
    const std::size_t idx = registry.add(name);
    while (coeff.size() < registry.size()) coeff.emplace_back(desc, size, size);
    return coeff[idx];
}

SymmetricPencil affine_pencil(const Polynomial& p) {
    if (!p.is_affine_linear()) {
        throw Error(ErrorCode::InvalidArgument, "affine_pencil needs an affine linear polynomial");
    }
    SymmetricPencil out(p.descriptor(), 1);
    out.registry = p.registry();
    out.coeff.assign(out.registry.size(), Matrix(p.descriptor(), 1, 1));
    out.a0(0, 0) = p.constant_term();
    for (const auto& [m, c] : p.terms()) {
        if (m.is_constant()) continue;
        out.coeff[m.factors().front().first](0, 0) = c;
    }
    return out;
}

SymmetricPencil constant_pencil(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "constant pencil must be square");
    SymmetricPencil out(m.descriptor(), m.rows());
    out.a0 = m;
    return out;
}

Matrix eval_pencil(const SymmetricPencil& p, const Assignment& point) {
    Matrix acc = p.a0;
    for (std::size_t i = 0; i < p.registry.size(); ++i) {
        auto it = point.find(p.registry.name(i));
        if (it == point.end()) {
            throw Error(ErrorCode::MissingAssignment,
                        "no value for pencil variable '" + p.registry.name(i) + "'");
        }
        if (!it->second.is_zero()) acc = acc + p.coeff[i].scaled(it->second);
    }
    return acc;
}

namespace {

// Rebuilds a pencil over the union registry, leaving matrix contents untouched.
SymmetricPencil with_union_registry(const SymmetricPencil& p, const VariableRegistry& target) {
    SymmetricPencil out(p.desc, p.size);
    out.registry = target;
    out.a0 = p.a0;
    out.coeff.assign(target.size(), Matrix(p.desc, p.size, p.size));
    for (std::size_t i = 0; i < p.registry.size(); ++i) {
        out.coeff[target.index_of(p.registry.name(i))] = p.coeff[i];
    }
    return out;
}

VariableRegistry union_registry(const VariableRegistry& a, const VariableRegistry& b) {
    VariableRegistry merged = a;
    for (const auto& n : b.names()) merged.add(n);
    return merged;
}

} // namespace

SymmetricPencil direct_sum(const SymmetricPencil& p, const SymmetricPencil& q) {
    if (p.desc != q.desc) throw Error(ErrorCode::FieldMismatch, "direct sum across fields");
    const VariableRegistry merged = union_registry(p.registry, q.registry);
    const SymmetricPencil pa = with_union_registry(p, merged);
    const SymmetricPencil qa = with_union_registry(q, merged);
    SymmetricPencil out(p.desc, p.size + q.size);
    out.registry = merged;
    out.a0 = Matrix::direct_sum(pa.a0, qa.a0);
    out.coeff.reserve(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        out.coeff.push_back(Matrix::direct_sum(pa.coeff[i], qa.coeff[i]));
    }
    return out;
}

namespace {

// The invertible-B core: Schur complement of
//   [ 0            (u+v)/2 I   (u-v)/2 I ]
//   [ (u+v)/2 I    -B^{-1}     0         ]
//   [ (u-v)/2 I    0           B^{-1}    ]
// with respect to the constant trailing 2m x 2m block equals u*v*B.
RealizationBlock realize_invertible(const Matrix& b, const std::string& u, const std::string& v) {
    const FieldDescriptor desc = b.descriptor();
    const std::size_t m = b.rows();
    const Matrix b_inv = inverse(b);
    const FieldElement half = FieldElement::half(desc);

    SymmetricPencil pencil(desc, 3 * m);
    pencil.a0.set_block(m, m, -b_inv);
    pencil.a0.set_block(2 * m, 2 * m, b_inv);

    pencil.coefficient_mut(u);
    pencil.coefficient_mut(v);

    const Matrix half_id = Matrix::identity(desc, m).scaled(half);
    auto add_border = [&](Matrix& target, std::size_t col, const Matrix& value) {
        target.set_block(0, col, target.block(0, col, m, m) + value);
        target.set_block(col, 0, target.block(col, 0, m, m) + value);
    };
    // (u+v)/2 carrier in the (1,2) border, (u-v)/2 carrier in the (1,3) border.
    // When u == v both updates land on the same matrix and the (1,3) border
    // cancels to the zero polynomial, which stays as a retained column.
    add_border(pencil.coefficient_mut(u), m, half_id);
    add_border(pencil.coefficient_mut(u), 2 * m, half_id);
    add_border(pencil.coefficient_mut(v), m, half_id);
    add_border(pencil.coefficient_mut(v), 2 * m, -half_id);

    return RealizationBlock{std::move(pencil), m};
}

RealizationBlock realize_zero(const Matrix& b, const std::string& u, const std::string& v) {
    const FieldDescriptor desc = b.descriptor();
    SymmetricPencil pencil(desc, b.rows() + 1);
    pencil.a0(b.rows(), b.rows()) = FieldElement::one(desc);
    pencil.coefficient_mut(u);
    pencil.coefficient_mut(v);
    return RealizationBlock{std::move(pencil), b.rows()};
}

RealizationBlock realize_shift(const Matrix& b, const std::string& u, const std::string& v) {
    const FieldDescriptor desc = b.descriptor();
    const std::size_t m = b.rows();
    std::uint64_t trials = 2 * m + 1;
    if (desc.is_prime_field()) trials = std::min<std::uint64_t>(trials, desc.modulus() - 1);
    for (std::uint64_t k = 1; k <= trials; ++k) {
        const FieldElement lambda = FieldElement::of_integer(desc, static_cast<long long>(k));
        if (lambda.is_zero()) continue;
        const Matrix shifted = b - Matrix::identity(desc, m).scaled(lambda);
        if (!is_invertible(shifted)) continue;
        const RealizationBlock r1 = realize_invertible(shifted, u, v);
        const RealizationBlock r2 = realize_invertible(Matrix::identity(desc, m).scaled(lambda), u, v);
        return sum_two(r1, r2);
    }
    throw Error(ErrorCode::ShiftExhausted,
                "no nonzero shift in " + std::to_string(trials) +
                    " trials makes B - l0*I invertible; use the rankfactor strategy");
}

RealizationBlock realize_rankfactor(const Matrix& b, const std::string& u, const std::string& v) {
    const RankFactorization rf = rank_factorize(b);
    RealizationBlock r = realize_invertible(rf.b, u, v);
    r = shorted_embed(r, b.rows() - rf.rank);
    return congruence_mult(r, rf.y.transpose());
}

} // namespace

RealizationBlock realize_product(const Matrix& b, const std::string& u, const std::string& v,
                                 Strategy strategy, RealizePath* used) {
    if (!b.is_symmetric()) {
        throw Error(ErrorCode::NotSymmetric, "realize_product requires a symmetric matrix");
    }
    if (b.is_zero()) {
        if (used) *used = RealizePath::RankFactor;
        return realize_zero(b, u, v);
    }
    if (is_invertible(b)) {
        if (used) *used = RealizePath::Invertible;
        return realize_invertible(b, u, v);
    }
    if (strategy == Strategy::Shift) {
        if (used) *used = RealizePath::Shift;
        return realize_shift(b, u, v);
    }
    if (used) *used = RealizePath::RankFactor;
    return realize_rankfactor(b, u, v);
}

RealizationBlock sum_with_matrix(const RealizationBlock& r, const SymmetricPencil& b) {
    if (b.size != r.split) {
        throw Error(ErrorCode::SizeMismatch, "added pencil size must equal the (1,1) block size");
    }
    if (b.desc != r.pencil.desc) throw Error(ErrorCode::FieldMismatch, "sum across fields");

    // b's variables lead so that a build keeps the input polynomial's order.
    const VariableRegistry merged = union_registry(b.registry, r.pencil.registry);
    SymmetricPencil out = with_union_registry(r.pencil, merged);
    for (std::size_t i = 0; i < r.split; ++i) {
        for (std::size_t j = 0; j < r.split; ++j) {
            out.a0(i, j) += b.a0(i, j);
        }
    }
    for (std::size_t k = 0; k < b.registry.size(); ++k) {
        Matrix& target = out.coeff[merged.index_of(b.registry.name(k))];
        for (std::size_t i = 0; i < r.split; ++i) {
            for (std::size_t j = 0; j < r.split; ++j) {
                target(i, j) += b.coeff[k](i, j);
            }
        }
    }
    return RealizationBlock{std::move(out), r.split};
}

RealizationBlock sum_two(const RealizationBlock& r1, const RealizationBlock& r2) {
    if (r1.split != r2.split) throw Error(ErrorCode::SizeMismatch, "sum_two needs equal splits");
    if (r1.pencil.desc != r2.pencil.desc) {
        throw Error(ErrorCode::FieldMismatch, "sum_two across fields");
    }
    const std::size_t k = r1.split;
    const std::size_t t1 = r1.trailing_size();
    const std::size_t t2 = r2.trailing_size();
    const VariableRegistry merged = union_registry(r1.pencil.registry, r2.pencil.registry);
    const SymmetricPencil p1 = with_union_registry(r1.pencil, merged);
    const SymmetricPencil p2 = with_union_registry(r2.pencil, merged);

    auto assemble = [&](const Matrix& m1, const Matrix& m2) {
        Matrix c(m1.descriptor(), k + t1 + t2, k + t1 + t2);
        c.set_block(0, 0, m1.block(0, 0, k, k) + m2.block(0, 0, k, k));
        c.set_block(0, k, m1.block(0, k, k, t1));
        c.set_block(k, 0, m1.block(k, 0, t1, k));
        c.set_block(0, k + t1, m2.block(0, k, k, t2));
        c.set_block(k + t1, 0, m2.block(k, 0, t2, k));
        c.set_block(k, k, m1.block(k, k, t1, t1));
        c.set_block(k + t1, k + t1, m2.block(k, k, t2, t2));
        return c;
    };

    SymmetricPencil out(p1.desc, k + t1 + t2);
    out.registry = merged;
    out.a0 = assemble(p1.a0, p2.a0);
    out.coeff.reserve(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        out.coeff.push_back(assemble(p1.coeff[i], p2.coeff[i]));
    }
    return RealizationBlock{std::move(out), k};
}

RealizationBlock shorted_embed(const RealizationBlock& r, std::size_t l) {
    if (l == 0) return r;
    const std::size_t split = r.split;
    const std::size_t trailing = r.trailing_size();
    const std::size_t n = r.pencil.size + l;

    auto embed = [&](const Matrix& m) {
        Matrix c(m.descriptor(), n, n);
        c.set_block(0, 0, m.block(0, 0, split, split));
        c.set_block(0, split + l, m.block(0, split, split, trailing));
        c.set_block(split + l, 0, m.block(split, 0, trailing, split));
        c.set_block(split + l, split + l, m.block(split, split, trailing, trailing));
        return c;
    };

    SymmetricPencil out(r.pencil.desc, n);
    out.registry = r.pencil.registry;
    out.a0 = embed(r.pencil.a0);
    out.coeff.reserve(out.registry.size());
    for (const auto& m : r.pencil.coeff) out.coeff.push_back(embed(m));
    return RealizationBlock{std::move(out), split + l};
}

RealizationBlock congruence_mult(const RealizationBlock& r, const Matrix& x) {
    if (x.rows() != r.split || x.cols() != r.split) {
        throw Error(ErrorCode::SizeMismatch, "congruence matrix must be square of the split size");
    }
    const std::size_t split = r.split;
    const std::size_t trailing = r.trailing_size();
    const Matrix xt = x.transpose();

    auto apply = [&](const Matrix& m) {
        Matrix c(m.descriptor(), m.rows(), m.cols());
        c.set_block(0, 0, x * m.block(0, 0, split, split) * xt);
        c.set_block(0, split, x * m.block(0, split, split, trailing));
        c.set_block(split, 0, m.block(split, 0, trailing, split) * xt);
        c.set_block(split, split, m.block(split, split, trailing, trailing));
        return c;
    };

    SymmetricPencil out(r.pencil.desc, r.pencil.size);
    out.registry = r.pencil.registry;
    out.a0 = apply(r.pencil.a0);
    out.coeff.reserve(out.registry.size());
    for (const auto& m : r.pencil.coeff) out.coeff.push_back(apply(m));
    return RealizationBlock{std::move(out), split};
}

void check_realization(const RealizationBlock& r) {
    if (r.split > r.pencil.size) throw Error(ErrorCode::SizeMismatch, "split exceeds pencil size");
    if (!r.pencil.a0.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "A0 is not symmetric");
    for (std::size_t i = 0; i < r.pencil.coeff.size(); ++i) {
        const Matrix& m = r.pencil.coeff[i];
        if (!m.is_symmetric()) {
            throw Error(ErrorCode::NotSymmetric,
                        "coefficient of '" + r.pencil.registry.name(i) + "' is not symmetric");
        }
        if (!m.block(r.split, r.split, r.trailing_size(), r.trailing_size()).is_zero()) {
            throw Error(ErrorCode::InvalidArgument,
                        "trailing block depends on '" + r.pencil.registry.name(i) + "'");
        }
    }
    if (!is_invertible(r.trailing_block())) {
        throw Error(ErrorCode::SingularTrailingBlock, "trailing block is singular");
    }
}

} // namespace symdet
