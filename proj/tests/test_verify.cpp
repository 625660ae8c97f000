#include <doctest.h>

#include "symdet/builder.hpp"
#include "symdet/json_io.hpp"
#include "symdet/verify.hpp"
#include "test_util.hpp"

using namespace symdet;
using namespace symdet::testutil;

TEST_CASE("symbolic verification of the worked example") {
    const auto p = parse_polynomial("z1 + z2*z3", q());
    const auto report = build(p);
    const auto verdict = verify_symbolic(report.pencil, p);
    CHECK(verdict.passed);
    CHECK(verdict.mode == VerifyMode::Symbolic);

    // the identity pencil of any size has determinant 1
    const auto one = verify_symbolic(constant_pencil(Matrix::identity(q(), 3)),
                                     parse_polynomial("1", q()));
    CHECK(one.passed);
}

TEST_CASE("a flipped sign is caught symbolically with a witness") {
    const auto p = parse_polynomial("z1 + z2*z3", q());
    auto report = build(p);
    auto& a2 = report.pencil.coefficient_mut("z2");
    a2(0, 1) = -a2(0, 1);
    a2(1, 0) = -a2(1, 0);
    const auto verdict = verify_symbolic(report.pencil, p);
    CHECK_FALSE(verdict.passed);
    REQUIRE(verdict.witness.has_value());
    const auto& w = *verdict.witness;
    CHECK(determinant(eval_pencil(report.pencil, w)) != p.evaluate(w));
}

TEST_CASE("symbolic size limit") {
    SymmetricPencil big(q(), 11);
    big.a0 = Matrix::identity(q(), 11);
    try {
        verify_symbolic(big, parse_polynomial("1", q()));
        FAIL("expected SizeLimitExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeLimitExceeded);
    }
    CHECK(verify_symbolic(big, parse_polynomial("1", q()), 12).passed);
}

TEST_CASE("sampled verification is deterministic for a fixed seed") {
    const auto p = parse_polynomial("z1 + z2*z3", q());
    const auto report = build(p);
    const auto v1 = verify_sampled(report.pencil, p, 50, 987);
    const auto v2 = verify_sampled(report.pencil, p, 50, 987);
    CHECK(v1.passed);
    CHECK(v1.samples == 50);
    CHECK(verify_report_to_json(v1).dump() == verify_report_to_json(v2).dump());
    CHECK_FALSE(v1.error_bound.empty());

    // zero against zero passes trivially
    const auto zero = build(parse_polynomial("0", q()));
    CHECK(verify_sampled(zero.pencil, parse_polynomial("0", q()), 10, 1).passed);

    // a polynomial of different degree fails within a few samples
    const auto wrong = verify_sampled(report.pencil, parse_polynomial("z1", q()), 50, 987);
    CHECK_FALSE(wrong.passed);
    CHECK(wrong.samples < 5);
    REQUIRE(wrong.witness.has_value());
}

TEST_CASE("sampled verification flags vacuous bounds over tiny fields") {
    const auto p = parse_polynomial("x*y + 1", fp(3));
    const auto report = build(p);
    const auto verdict = verify_sampled(report.pencil, p, 20, 5);
    CHECK(verdict.passed);
    CHECK(verdict.note.find("vacuous") != std::string::npos);
    CHECK(verdict.note.find("exhaustive") != std::string::npos);
}

TEST_CASE("exhaustive verification counts points and certifies scope") {
    const auto p = parse_polynomial("x*y", fp(3));
    const auto report = build(p);
    const auto verdict = verify_exhaustive(report.pencil, p);
    CHECK(verdict.passed);
    CHECK(verdict.samples == 9);

    // x^p and x agree as functions but not as formal polynomials
    const auto x5 = parse_polynomial("x^5", fp(5));
    const auto x = parse_polynomial("x", fp(5));
    const auto fn = verify_exhaustive(affine_pencil(x), x5);
    CHECK(fn.passed);
    CHECK(fn.samples == 5);
    CHECK(fn.note.find("functions") != std::string::npos);
    CHECK(fn.note.find("not certified") != std::string::npos);

    const auto formal = verify_symbolic(affine_pencil(x), x5);
    CHECK_FALSE(formal.passed);
    CHECK_FALSE(formal.witness.has_value()); // no counterexample exists in F_5
    CHECK(formal.note.find("functions") != std::string::npos);
}

TEST_CASE("exhaustive verification respects its budget and field preconditions") {
    SymmetricPencil pencil(fp(101), 1);
    pencil.a0 = Matrix::identity(fp(101), 1);
    for (const char* v : {"a", "b", "c"}) pencil.coefficient_mut(v);
    try {
        verify_exhaustive(pencil, parse_polynomial("a*b*c + 1", fp(101)));
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK_THROWS_AS(verify_exhaustive(affine_pencil(parse_polynomial("x", q())),
                                      parse_polynomial("x", q())),
                    Error);
}

TEST_CASE("formal degree certificate appears when the field is large enough") {
    const auto p = parse_polynomial("x*y + 2", fp(101));
    const auto report = build(p);
    const auto verdict = verify_exhaustive(report.pencil, p, 1000000);
    CHECK(verdict.passed);
    CHECK(verdict.note.find("formal polynomial equality follows") != std::string::npos);
}

TEST_CASE("symbolic verification passes for a random corpus of small builds") {
    SplitMix64 rng(501);
    int verified = 0;
    while (verified < 25) {
        const auto p = random_polynomial(q(), rng, 3, 3, 3);
        const auto report = build(p);
        if (report.pencil.size > 10) continue;
        CHECK(verify_symbolic(report.pencil, p).passed);
        ++verified;
    }
}

TEST_CASE("single-entry mutations are caught") {
    SplitMix64 rng(503);
    const auto p = parse_polynomial("x*y + 3*x - 1", q());
    const auto base = build(p);
    for (int trial = 0; trial < 10; ++trial) {
        auto mutated = base.pencil;
        const std::size_t i = rng.below(mutated.size);
        const std::size_t j = rng.below(mutated.size);
        auto& target = mutated.coefficient_mut("x");
        target(i, j) += FieldElement::one(q());
        target(j, i) = target(i, j); // keep the pencil symmetric

        const auto symbolic = verify_symbolic(mutated, p);
        CHECK_FALSE(symbolic.passed);
        const auto sampled = verify_sampled(mutated, p, 50, 1000 + trial);
        CHECK_FALSE(sampled.passed);
    }
}
