// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line per criterion. Exit code is the number of failed criteria.
// Usage: symdet_acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symdet/builder.hpp"
#include "symdet/json_io.hpp"
#include "symdet/verify.hpp"
#include "test_util.hpp"

using namespace symdet;
using namespace symdet::testutil;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Matrix from_ints(const FieldDescriptor& desc, std::vector<std::vector<long long>> rows) {
    Matrix m(desc, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = FieldElement::of_integer(desc, rows[i][j]);
    return m;
}

bool expect(bool condition, const std::string& detail) {
    if (!condition) std::cout << "    detail: " << detail << "\n";
    return condition;
}

// --- criterion 1: bit-exact reproduction of the worked 4x4 example via the CLI

bool criterion1() {
    const auto started = Clock::now();
    const CliResult res = run_cli("build 'z1 + z2*z3' --field q --strategy auto");
    const double seconds = std::chrono::duration<double>(Clock::now() - started).count();

    bool ok = expect(res.exit_code == 0, "CLI exit code " + std::to_string(res.exit_code));
    if (!ok) return false;

    json out;
    try {
        out = json::parse(res.output);
    } catch (...) {
        return expect(false, "CLI output is not JSON");
    }
    const SymmetricPencil pencil = pencil_from_json(out.at("build").at("pencil"));

    const auto h = FieldElement::half(q());
    Matrix a2(q(), 4, 4), a3(q(), 4, 4);
    a2(0, 1) = h; a2(1, 0) = h; a2(0, 2) = h; a2(2, 0) = h;
    a3(0, 1) = h; a3(1, 0) = h; a3(0, 2) = -h; a3(2, 0) = -h;

    ok = expect(pencil.size == 4, "pencil size != 4");
    ok = expect(pencil.a0 == from_ints(q(), {{0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}}),
                "A0 mismatch") && ok;
    ok = expect(pencil.coefficient("z1") ==
                    from_ints(q(), {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                "A1 mismatch") && ok;
    ok = expect(pencil.coefficient("z2") == a2, "A2 mismatch") && ok;
    ok = expect(pencil.coefficient("z3") == a3, "A3 mismatch") && ok;
    ok = expect(out.at("build").at("size_trace") == json::array({1, 4}), "size trace mismatch") && ok;
    ok = expect(seconds < 1.0, "runtime " + std::to_string(seconds) + "s >= 1s") && ok;
    return ok;
}

// --- criterion 2: 200 random polynomials over Q round-trip within 60 s

bool criterion2() {
    const auto started = Clock::now();
    SplitMix64 rng(20240001);
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
        const auto p = random_polynomial(q(), rng, 3, 3, 5, 9);
        const auto report = build(p);
        if (report.pencil.size <= 10) {
            ok = expect(verify_symbolic(report.pencil, p).passed,
                        "symbolic mismatch for " + p.render());
        } else {
            ok = expect(verify_sampled(report.pencil, p, 50, 7000 + i).passed,
                        "sampled mismatch for " + p.render());
        }
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
    std::cout << "    (200 rational builds verified in " << seconds << "s)\n";
    return expect(seconds < 60.0, "runtime exceeded 60s") && ok;
}

// --- criterion 3: random round-trips over F_3, F_5, F_7, F_101

bool criterion3() {
    bool ok = true;
    for (std::uint64_t prime : {3ull, 5ull, 7ull, 101ull}) {
        const auto desc = fp(prime);
        SplitMix64 rng(30000 + prime);
        for (int i = 0; i < 100 && ok; ++i) {
            const auto p = random_polynomial(desc, rng, 2, 3, 5);
            const auto report = build(p);

            VariableRegistry merged = report.pencil.registry;
            for (const auto& n : p.registry().names()) merged.add(n);
            long double space = 1.0L;
            for (std::size_t k = 0; k < merged.size(); ++k) space *= prime;

            if (space <= 10000.0L) {
                const auto verdict = verify_exhaustive(report.pencil, p);
                ok = expect(verdict.passed, "exhaustive mismatch over F_" + std::to_string(prime) +
                                                " for " + p.render());
                const std::uint64_t bound = std::max<std::uint64_t>(report.pencil.size,
                                                                    p.total_degree());
                if (bound >= prime) {
                    ok = expect(verdict.note.find("functions") != std::string::npos,
                                "missing function-vs-formal caveat") && ok;
                }
            } else {
                ok = expect(verify_sampled(report.pencil, p, 50, 9000 + i).passed,
                            "sampled mismatch over F_" + std::to_string(prime));
            }
        }
    }
    return ok;
}

// --- criterion 4: the characteristic-2 gate, library and CLI

bool criterion4() {
    bool ok = false;
    try {
        FieldDescriptor::prime_field(2);
    } catch (const Error& e) {
        const std::string msg = e.what();
        ok = expect(e.code() == ErrorCode::CharacteristicTwo, "wrong error code") &&
             expect(msg.find("x*y + z") != std::string::npos, "message lacks the counterexample");
    }
    const CliResult res = run_cli("build 'x*y + z' --field fp:2");
    ok = expect(res.exit_code == 1, "CLI exit code " + std::to_string(res.exit_code)) && ok;
    ok = expect(res.output.find("characteristic 2") != std::string::npos,
                "CLI error lacks the characteristic-2 message") && ok;
    ok = expect(res.output.find("x*y + z") != std::string::npos,
                "CLI error lacks the counterexample") && ok;
    return ok;
}

// --- criterion 5: rank factorization suite

bool criterion5() {
    bool ok = true;
    for (const auto& desc : {q(), fp(3), fp(5), fp(101)}) {
        SplitMix64 rng(desc.is_rationals() ? 50000 : 50000 + desc.modulus());
        for (int i = 0; i < 125 && ok; ++i) {
            const std::size_t n = 1 + rng.below(6);
            const Matrix a = (i % 2 == 0)
                                 ? random_symmetric(desc, n, rng)
                                 : random_symmetric_with_rank(desc, n, rng.below(n + 1), rng);
            const RankFactorization rf = rank_factorize(a);
            Matrix padded(desc, n, n);
            for (std::size_t d = 0; d < rf.rank; ++d) {
                ok = expect(!rf.b(d, d).is_zero(), "zero diagonal in B") && ok;
                padded(d, d) = rf.b(d, d);
            }
            for (std::size_t r = 0; r < rf.rank && ok; ++r)
                for (std::size_t c = 0; c < rf.rank; ++c)
                    if (r != c) ok = expect(rf.b(r, c).is_zero(), "B not diagonal");
            ok = expect(!determinant(rf.y).is_zero(), "Y not invertible") && ok;
            ok = expect(rf.y.transpose() * padded * rf.y == a, "reconstruction failed") && ok;
        }
    }
    // the all-zero-diagonal case that needs characteristic != 2
    const auto off = from_ints(fp(3), {{0, 1}, {1, 0}});
    const RankFactorization rf = rank_factorize(off);
    ok = expect(rf.rank == 2, "off-diagonal case rank") && ok;
    ok = expect(rf.b(0, 0) == FieldElement::of_integer(fp(3), 2), "pivot 2*a_jk expected") && ok;
    ok = expect(rf.y.transpose() * Matrix::direct_sum(rf.b, Matrix(fp(3), 0, 0)) * rf.y == off,
                "off-diagonal reconstruction") && ok;
    return ok;
}

// --- criterion 6: construction oracles against schur_complement

bool criterion6() {
    SplitMix64 rng(60001);
    bool ok = true;

    auto oracle_points = [&](const RealizationBlock& r, const std::function<Matrix(const Assignment&)>& claimed,
                             const std::vector<std::string>& vars) {
        for (int t = 0; t < 20 && ok; ++t) {
            auto pt = random_point(q(), vars, rng, 8);
            for (const auto& name : r.pencil.registry.names()) {
                pt.emplace(name, random_element(q(), rng, 8));
            }
            ok = expect(realized_value(r, pt) == claimed(pt), "oracle mismatch");
        }
    };

    for (int i = 0; i < 100 && ok; ++i) {
        const std::size_t m = 1 + rng.below(2);

        // realize_product: invertible path
        Matrix inv = random_symmetric(q(), m, rng, 4);
        while (determinant(inv).is_zero()) inv = random_symmetric(q(), m, rng, 4);
        const auto r_inv = realize_product(inv, "u", "v", Strategy::Auto);
        oracle_points(r_inv, [&](const Assignment& pt) { return inv.scaled(pt.at("u") * pt.at("v")); },
                      {"u", "v"});

        // realize_product: rank-factor path on a singular matrix
        const Matrix sing = random_symmetric_with_rank(q(), m + 1, rng.below(m + 1), rng);
        const auto r_rank = realize_product(sing, "u", "v", Strategy::RankFactor);
        oracle_points(r_rank, [&](const Assignment& pt) { return sing.scaled(pt.at("u") * pt.at("v")); },
                      {"u", "v"});

        // realize_product: shift path (Q has unlimited shift candidates)
        const auto r_shift = realize_product(sing, "u", "v", Strategy::Shift);
        oracle_points(r_shift, [&](const Assignment& pt) { return sing.scaled(pt.at("u") * pt.at("v")); },
                      {"u", "v"});

        // sum_with_matrix
        SymmetricPencil affine(q(), r_inv.split);
        affine.a0 = random_symmetric(q(), r_inv.split, rng, 4);
        affine.coefficient_mut("x") = random_symmetric(q(), r_inv.split, rng, 4);
        const auto summed = sum_with_matrix(r_inv, affine);
        oracle_points(summed,
                      [&](const Assignment& pt) {
                          return inv.scaled(pt.at("u") * pt.at("v")) + eval_pencil(affine, pt);
                      },
                      {"u", "v", "x"});

        // sum_two
        Matrix second = random_symmetric(q(), m, rng, 4);
        while (determinant(second).is_zero()) second = random_symmetric(q(), m, rng, 4);
        const auto r_second = realize_product(second, "x", "y", Strategy::Auto);
        const auto both = sum_two(r_inv, r_second);
        oracle_points(both,
                      [&](const Assignment& pt) {
                          return inv.scaled(pt.at("u") * pt.at("v")) +
                                 second.scaled(pt.at("x") * pt.at("y"));
                      },
                      {"u", "v", "x", "y"});

        // shorted_embed
        const std::size_t pad = 1 + rng.below(2);
        const auto padded = shorted_embed(r_inv, pad);
        oracle_points(padded,
                      [&](const Assignment& pt) {
                          return Matrix::direct_sum(inv.scaled(pt.at("u") * pt.at("v")),
                                                    Matrix(q(), pad, pad));
                      },
                      {"u", "v"});

        // congruence_mult
        const Matrix x = random_matrix(q(), m, m, rng, 3);
        const auto conj = congruence_mult(r_inv, x);
        oracle_points(conj,
                      [&](const Assignment& pt) {
                          return x * inv.scaled(pt.at("u") * pt.at("v")) * x.transpose();
                      },
                      {"u", "v"});
    }
    return ok;
}

// --- criterion 7: size laws

bool criterion7() {
    SplitMix64 rng(70001);
    bool ok = true;
    for (std::size_t m = 1; m <= 4 && ok; ++m) {
        SymmetricPencil p(q(), m);
        p.a0 = random_symmetric(q(), m, rng);
        p.coefficient_mut("w") = Matrix::identity(q(), m);
        RealizePath used;
        const auto stepped = substitute_step(p, "w", "u", "v", Strategy::Auto, &used);
        ok = expect(used == RealizePath::Invertible, "expected the invertible path");
        ok = expect(stepped.size == 3 * m + 1, "invertible step size != 3m+1") && ok;
    }

    const auto report = build(parse_polynomial("z1 + z2*z3", q()));
    ok = expect(report.size_trace == std::vector<std::size_t>{1, 4}, "worked-example trace") && ok;

    for (std::size_t m = 2; m <= 4 && ok; ++m) {
        for (std::size_t r = 1; r < m; ++r) {
            SymmetricPencil p(q(), m);
            p.a0 = random_symmetric(q(), m, rng);
            Matrix coeff(q(), m, m);
            for (std::size_t d = 0; d < r; ++d) coeff(d, d) = FieldElement::one(q());
            p.coefficient_mut("w") = coeff;
            RealizePath used;
            const auto stepped = substitute_step(p, "w", "u", "v", Strategy::RankFactor, &used);
            ok = expect(used == RealizePath::RankFactor, "expected the rank-factor path");
            ok = expect(stepped.size == m + 2 * r + 1, "rank-factor step size != m+2r+1") && ok;
        }
    }
    return ok;
}

// --- criterion 8: Bareiss determinant vs the cofactor oracle

bool criterion8() {
    bool ok = true;
    for (const auto& desc : {q(), fp(7), fp(101)}) {
        SplitMix64 rng(desc.is_rationals() ? 80001 : 80000 + desc.modulus());
        const int rounds = desc.is_rationals() ? 100 : 50;
        for (int i = 0; i < rounds && ok; ++i) {
            const std::size_t n = 1 + rng.below(6);
            const Matrix a = random_matrix(desc, n, n, rng);
            ok = expect(determinant(a) == cofactor_determinant(a), "determinant mismatch");
        }
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: symdet_acceptance <path-to-symdet-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"worked-example golden reproduction via CLI (exact, < 1s)", criterion1},
        {"200 random rational polynomials round-trip (< 60s)", criterion2},
        {"random round-trips over F_3, F_5, F_7, F_101", criterion3},
        {"characteristic-2 rejection with the x*y + z counterexample", criterion4},
        {"rank factorization suite (500 matrices, 4 fields)", criterion5},
        {"construction oracles against schur_complement (100 x 20 each)", criterion6},
        {"size laws: 3m+1 invertible, m+2r+1 rank-factor, [1,4] trace", criterion7},
        {"Bareiss determinant vs cofactor oracle (200 matrices)", criterion8},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto started = Clock::now();
        bool passed = false;
        try {
            passed = criteria[i].second();
        } catch (const std::exception& e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - started).count();
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].first << " [" << seconds << "s]\n";
        if (!passed) ++failures;
    }
    return failures;
}
