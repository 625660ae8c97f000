#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "symdet/schur.hpp"

namespace symdet {

enum class VerifyMode { Symbolic, Sampled, Exhaustive };

const char* verify_mode_name(VerifyMode m);

struct VerifyReport {
    VerifyMode mode = VerifyMode::Symbolic;
    bool passed = false;
    std::uint64_t samples = 0;                 // points checked (0 for symbolic pass)
    std::uint64_t seed = 0;                    // sampled mode only
    std::optional<Assignment> witness;         // a point where det(pencil) != p
    std::string error_bound;                   // sampled mode: Schwartz-Zippel statement
    std::string note;                          // caveats (certificate scope, vacuous bounds)
};

/// Expands det(A0 + sum z_i A_i) as an exact polynomial by cofactor expansion
/// memoized on column subsets. Sizes above `limit` are refused.
Polynomial pencil_determinant(const SymmetricPencil& p, std::size_t limit = 10);

/// Formal comparison det(pencil) == p. On failure a witness point is searched for
/// (guaranteed to exist over Q; over a small prime field a formal mismatch can be
/// functionally invisible, in which case the note says so and no witness is set).
VerifyReport verify_symbolic(const SymmetricPencil& pencil, const Polynomial& p,
                             std::size_t limit = 10);

/// Randomized identity test at `count` points from the documented SplitMix64
/// stream. Over Q, coordinates are integers in [-N, N] with N = max(100,
/// 2 * pencil.size * count); over F_p, uniform residues. The report carries the
/// per-run Schwartz-Zippel failure bound and flags it as vacuous when the field
/// is too small for the degree.
VerifyReport verify_sampled(const SymmetricPencil& pencil, const Polynomial& p,
                            std::uint64_t count, std::uint64_t seed);

/// Checks every point of F_p^n (n = union of pencil and polynomial variables).
/// Certifies equality of functions; the note states whether formal equality
/// follows (degree bound < p) or not.
VerifyReport verify_exhaustive(const SymmetricPencil& pencil, const Polynomial& p,
                               std::uint64_t budget = 1000000);

} // namespace symdet
