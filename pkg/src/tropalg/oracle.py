"""Brute-force reference implementations for cross-checking.

Deliberately naive and independent of :mod:`tropalg.matrix` and
:mod:`tropalg.charpoly`: they only read entries as scalars and use the
scalar operations of :mod:`tropalg.semiring`. Signs come from the cycle
decomposition (transposition parity), not from inversion counts.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .errors import TooLarge
from .semiring import (
    NEG_INF,
    Element,
    Relation,
    SemiringKind,
    add,
    all_tags,
    mul,
    negate,
    one,
    zero,
)

Grid = list[list[Element]]


def _parity(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    swaps = 0
    for s in range(len(perm)):
        j = s
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length:
            swaps += length - 1
    return swaps & 1


def _det_grid(a: Grid, kind: SemiringKind) -> Element:
    n = len(a)
    total = zero(kind)
    for perm in permutations(range(n)):
        term = one(kind)
        for i, j in enumerate(perm):
            term = mul(term, a[i][j])
            if term.is_zero:
                break
        if _parity(perm):
            term = negate(term)
        total = add(total, term)
    return total


def _grid(A) -> tuple[Grid, SemiringKind]:
    return A.entries, A.kind


def oracle_det(A) -> Element:
    a, kind = _grid(A)
    if len(a) > 7:
        raise TooLarge("oracle determinant is limited to n <= 7")
    return _det_grid(a, kind)


def oracle_permanent(A) -> Element:
    a, kind = _grid(A)
    if len(a) > 7:
        raise TooLarge("oracle permanent is limited to n <= 7")
    total = zero(kind)
    for perm in permutations(range(len(a))):
        term = one(kind)
        for i, j in enumerate(perm):
            term = mul(term, a[i][j])
        total = add(total, term)
    return total


def oracle_compound(A, k: int) -> Grid:
    """Entry (I, J) is the determinant of the submatrix on rows I, columns J."""
    a, kind = _grid(A)
    n = len(a)
    if n > 6:
        raise TooLarge("oracle compound is limited to n <= 6")
    subs = list(combinations(range(n), k))
    return [[_det_grid([[a[i][j] for j in J] for i in I], kind) for J in subs] for I in subs]


# polynomial semiring ---------------------------------------------------------------

Poly = list[Element]


def _padd(p: Poly, q: Poly, kind: SemiringKind) -> Poly:
    m = max(len(p), len(q))
    z = zero(kind)
    return [add(p[i] if i < len(p) else z, q[i] if i < len(q) else z) for i in range(m)]


def _pmul(p: Poly, q: Poly, kind: SemiringKind) -> Poly:
    out = [zero(kind)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] = add(out[i + j], mul(x, y))
    return out


def oracle_char_poly(A) -> list[Element]:
    """Coefficients of det(X𝓘 ⊖ A) expanded over the polynomial semiring."""
    a, kind = _grid(A)
    n = len(a)
    if n > 5:
        raise TooLarge("oracle characteristic polynomial is limited to n <= 5")
    m = [[[negate(a[i][j])] + ([one(kind)] if i == j else []) for j in range(n)] for i in range(n)]
    total: Poly = [zero(kind)]
    for perm in permutations(range(n)):
        term: Poly = [one(kind)]
        for i, j in enumerate(perm):
            term = _pmul(term, m[i][j], kind)
        if _parity(perm):
            term = [negate(c) for c in term]
        total = _padd(total, term, kind)
    total = total + [zero(kind)] * (n + 1 - len(total))
    return total[: n + 1]


# relations by witness search ---------------------------------------------------------


def _witnesses(kind: SemiringKind, a: Element, b: Element) -> list[Element]:
    mags = {a.mag, b.mag}
    for m in (a.mag, b.mag):
        if m != NEG_INF:
            mags.update({m - 1, m + 1})
    out = [zero(kind)]
    for m in mags:
        if m == NEG_INF:
            continue
        for t in all_tags(kind):
            out.append(Element(kind, Fraction(m), t))
    return out


def oracle_relation(rel: Relation, a: Element, b: Element) -> bool:
    """Decide a relation from its definition by searching a finite witness set."""
    kind = a.kind
    if rel is Relation.CURLY:
        return add(a, b) == b
    if rel is Relation.BALANCE:
        d = add(a, negate(b))
        return kind is SemiringKind.RMAX or d.is_zero or any(
            d == add(c, negate(c)) for c in _witnesses(kind, d, d)
        )
    if rel is Relation.PRECEQ:
        return any(add(a, c) == b for c in _witnesses(kind, a, b))
    if rel is Relation.GEQ_CIRC:
        return any(add(b, c) == a for c in _witnesses(kind, a, b) if c.is_circ)
    if rel is Relation.GEQ_CIRC_MOD:
        return a.mag == b.mag and oracle_relation(Relation.GEQ_CIRC, a, b)
    raise ValueError(rel)
