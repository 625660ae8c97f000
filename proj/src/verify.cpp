#include "symdet/verify.hpp"

#include <algorithm>

#include "symdet/rng.hpp"

namespace symdet {

const char* verify_mode_name(VerifyMode m) {
    switch (m) {
    case VerifyMode::Symbolic: return "symbolic";
    case VerifyMode::Sampled: return "sampled";
    case VerifyMode::Exhaustive: return "exhaustive";
    }
    return "symbolic";
}

Polynomial pencil_determinant(const SymmetricPencil& p, std::size_t limit) {
    const std::size_t m = p.size;
    if (m > limit || m > 24) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "pencil size " + std::to_string(m) + " exceeds the symbolic limit " +
                        std::to_string(std::min<std::size_t>(limit, 24)));
    }
    if (m == 0) return Polynomial::constant(FieldElement::one(p.desc), p.registry);

    // Entry (i, j) as an affine polynomial over the pencil registry.
    std::vector<Polynomial> entries;
    entries.reserve(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Polynomial e(p.desc, p.registry);
            e.add_term(Monomial(), p.a0(i, j));
            for (std::size_t k = 0; k < p.registry.size(); ++k) {
                e.add_term(Monomial::variable(static_cast<std::uint32_t>(k)), p.coeff[k](i, j));
            }
            entries.push_back(std::move(e));
        }
    }

    // dets[mask] = det of the submatrix on rows [m - popcount(mask), m) and the
    // column set `mask`, filled in ascending popcount order.
    std::vector<Polynomial> dets(std::size_t(1) << m, Polynomial(p.desc, p.registry));
    dets[0] = Polynomial::constant(FieldElement::one(p.desc), p.registry);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const int k = __builtin_popcount(mask);
        const std::size_t row = m - static_cast<std::size_t>(k);
        Polynomial acc(p.desc, p.registry);
        int position = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& entry = entries[row * m + j];
            if (!entry.is_zero()) {
                Polynomial contribution = entry * dets[mask & ~(1u << j)];
                acc = (position % 2 == 0) ? acc + contribution : acc - contribution;
            }
            ++position;
        }
        dets[mask] = std::move(acc);
    }
    return dets[(std::size_t(1) << m) - 1];
}

namespace {

std::vector<std::string> union_variables(const SymmetricPencil& pencil, const Polynomial& p) {
    VariableRegistry merged = pencil.registry;
    for (const auto& n : p.registry().names()) merged.add(n);
    return merged.names();
}

bool agree_at(const SymmetricPencil& pencil, const Polynomial& p, const Assignment& point) {
    return determinant(eval_pencil(pencil, point)) == p.evaluate(point);
}

// Witness search for a formal mismatch: deterministic sampling, then exhaustion
// over small prime fields. Over Q the difference is a nonzero polynomial, so a
// witness turns up quickly; over a tiny field none may exist.
std::optional<Assignment> find_witness(const SymmetricPencil& pencil, const Polynomial& p) {
    const auto vars = union_variables(pencil, p);
    const FieldDescriptor desc = pencil.desc;
    SplitMix64 rng(0x5EEDu);
    if (desc.is_rationals()) {
        for (int attempt = 0; attempt < 512; ++attempt) {
            const std::int64_t span = 16 + 4 * attempt;
            Assignment point;
            for (const auto& v : vars) {
                point.emplace(v, FieldElement::of_integer(desc, rng.range(-span, span)));
            }
            if (!agree_at(pencil, p, point)) return point;
        }
        return std::nullopt;
    }
    const std::uint64_t q = desc.modulus();
    long double space = 1.0L;
    for (std::size_t i = 0; i < vars.size(); ++i) space *= static_cast<long double>(q);
    if (vars.empty() || space <= 10000.0L) {
        const std::uint64_t total = static_cast<std::uint64_t>(space);
        std::vector<std::uint64_t> odometer(vars.size(), 0);
        for (std::uint64_t n = 0; n < total; ++n) {
            Assignment point;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                point.emplace(vars[i], FieldElement::of_integer(desc, static_cast<long long>(odometer[i])));
            }
            if (!agree_at(pencil, p, point)) return point;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (++odometer[i] < q) break;
                odometer[i] = 0;
            }
        }
        return std::nullopt;
    }
    for (int attempt = 0; attempt < 512; ++attempt) {
        Assignment point;
        for (const auto& v : vars) {
            point.emplace(v, FieldElement::of_integer(desc, static_cast<long long>(rng.below(q))));
        }
        if (!agree_at(pencil, p, point)) return point;
    }
    return std::nullopt;
}

} // namespace

VerifyReport verify_symbolic(const SymmetricPencil& pencil, const Polynomial& p,
                             std::size_t limit) {
    if (pencil.desc != p.descriptor()) {
        throw Error(ErrorCode::FieldMismatch, "pencil and polynomial over different fields");
    }
    VerifyReport report;
    report.mode = VerifyMode::Symbolic;
    const Polynomial det = pencil_determinant(pencil, limit);
    report.passed = det == p;
    if (!report.passed) {
        report.witness = find_witness(pencil, p);
        report.note = report.witness
                          ? "formal mismatch; witness point evaluates differently"
                          : "formal mismatch, but no counterexample point exists in this field "
                            "(the two sides agree as functions)";
    }
    return report;
}

VerifyReport verify_sampled(const SymmetricPencil& pencil, const Polynomial& p,
                            std::uint64_t count, std::uint64_t seed) {
    if (pencil.desc != p.descriptor()) {
        throw Error(ErrorCode::FieldMismatch, "pencil and polynomial over different fields");
    }
    VerifyReport report;
    report.mode = VerifyMode::Sampled;
    report.seed = seed;

    const auto vars = union_variables(pencil, p);
    const FieldDescriptor desc = pencil.desc;
    const std::uint64_t degree_bound = std::max<std::uint64_t>(pencil.size, p.total_degree());

    SplitMix64 rng(seed);
    std::uint64_t sample_space;
    std::int64_t span = 0;
    if (desc.is_rationals()) {
        span = static_cast<std::int64_t>(std::max<std::uint64_t>(100, 2 * pencil.size * count));
        sample_space = static_cast<std::uint64_t>(2 * span + 1);
    } else {
        sample_space = desc.modulus();
    }

    report.error_bound = "per-run failure probability <= (" + std::to_string(degree_bound) + "/" +
                         std::to_string(sample_space) + ")^" + std::to_string(count);
    if (sample_space <= degree_bound) {
        report.note = "Schwartz-Zippel bound is vacuous (degree bound " +
                      std::to_string(degree_bound) + " >= field size " +
                      std::to_string(sample_space) + "); prefer exhaustive verification";
    }

    report.passed = true;
    for (std::uint64_t t = 0; t < count; ++t) {
        Assignment point;
        for (const auto& v : vars) {
            if (desc.is_rationals()) {
                point.emplace(v, FieldElement::of_integer(desc, rng.range(-span, span)));
            } else {
                point.emplace(v, FieldElement::of_integer(
                                     desc, static_cast<long long>(rng.below(sample_space))));
            }
        }
        ++report.samples;
        if (!agree_at(pencil, p, point)) {
            report.passed = false;
            report.witness = point;
            break;
        }
    }
    return report;
}

VerifyReport verify_exhaustive(const SymmetricPencil& pencil, const Polynomial& p,
                               std::uint64_t budget) {
    if (pencil.desc != p.descriptor()) {
        throw Error(ErrorCode::FieldMismatch, "pencil and polynomial over different fields");
    }
    if (pencil.desc.is_rationals()) {
        throw Error(ErrorCode::BudgetExceeded,
                    "exhaustive verification needs a finite field; Q has infinitely many points");
    }
    const auto vars = union_variables(pencil, p);
    const std::uint64_t q = pencil.desc.modulus();

    long double space = 1.0L;
    for (std::size_t i = 0; i < vars.size(); ++i) space *= static_cast<long double>(q);
    if (space > static_cast<long double>(budget)) {
        throw Error(ErrorCode::BudgetExceeded, "p^n exceeds the exhaustive budget of " +
                                                   std::to_string(budget) + " points");
    }
    const std::uint64_t total = vars.empty() ? 1 : static_cast<std::uint64_t>(space);

    VerifyReport report;
    report.mode = VerifyMode::Exhaustive;
    report.passed = true;

    const std::uint64_t degree_bound = std::max<std::uint64_t>(pencil.size, p.total_degree());
    report.note = degree_bound < q
                      ? "all points checked: certifies equality as functions on F_p^n, and "
                        "formal polynomial equality follows (degree bound " +
                            std::to_string(degree_bound) + " < p)"
                      : "all points checked: certifies equality as functions on F_p^n only; "
                        "formal polynomial equality is not certified (degree bound " +
                            std::to_string(degree_bound) + " >= p)";

    std::vector<std::uint64_t> odometer(vars.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        Assignment point;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            point.emplace(vars[i],
                          FieldElement::of_integer(pencil.desc, static_cast<long long>(odometer[i])));
        }
        ++report.samples;
        if (!agree_at(pencil, p, point)) {
            report.passed = false;
            report.witness = point;
            report.note = "mismatch found during exhaustive enumeration";
            break;
        }
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (++odometer[i] < q) break;
            odometer[i] = 0;
        }
    }
    return report;
}

} // namespace symdet
