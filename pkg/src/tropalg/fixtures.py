"""Small named matrices with known values, used by tests, the suite and the CLI."""
from __future__ import annotations

from .matrix import Matrix
from .semiring import SemiringKind

RMAX = SemiringKind.RMAX
SMAX = SemiringKind.SMAX
SUPER = SemiringKind.SUPERTROPICAL


def fix_a(kind: SemiringKind = SMAX) -> Matrix:
    """[[3, 2°], [1, 1]]; over rmax the balanced entry degrades to 2."""
    circ = {RMAX: "2", SMAX: "2o", SUPER: "2v"}[kind]
    return Matrix.from_tokens(kind, [["3", circ], ["1", "1"]])


def fix_b() -> Matrix:
    return Matrix.from_tokens(SMAX, [["0", "~0", "-inf"], ["0", "0", "~0"], ["0", "0", "0"]])


def fix_c() -> Matrix:
    return Matrix.from_tokens(SMAX, [["0", "0", "-inf"], ["-inf", "0", "0"], ["0", "-inf", "0"]])


def fix_e() -> tuple[Matrix, Matrix]:
    """(E, A) with E upper unitriangular and A the identity, over supertropical."""
    E = Matrix.from_tokens(SUPER, [["0", "0"], ["-inf", "0"]])
    A = Matrix.identity(SUPER, 2)
    return E, A


def all_fixtures() -> dict[str, Matrix]:
    E, A = fix_e()
    return {
        "FIX-A/rmax": fix_a(RMAX),
        "FIX-A/smax": fix_a(SMAX),
        "FIX-A/supertropical": fix_a(SUPER),
        "FIX-B": fix_b(),
        "FIX-C": fix_c(),
        "FIX-E/E": E,
        "FIX-E/A": A,
    }
