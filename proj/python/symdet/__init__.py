"""Symmetric determinantal representations of multivariate polynomials.

Compiles polynomials over Q or F_p (p an odd prime) into symmetric affine
linear matrix pencils whose determinant equals the input, and verifies the
identity symbolically, by sampling, or exhaustively.
"""

from ._symdet import (
    BuildReport,
    Field,
    Pencil,
    Polynomial,
    Script,
    SymdetError,
    build,
    decompose,
    parse,
    verify_exhaustive,
    verify_sampled,
    verify_symbolic,
)

__all__ = [
    "BuildReport",
    "Field",
    "Pencil",
    "Polynomial",
    "Script",
    "SymdetError",
    "build",
    "decompose",
    "parse",
    "verify_exhaustive",
    "verify_sampled",
    "verify_symbolic",
]
