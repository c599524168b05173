"""Characteristic polynomials, evaluation, corner roots and spectral maps."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import KindMismatch, LengthMismatch, NotInvertible, NotThin
from .matrix import Matrix, principal_traces
from .report import CheckReport, IdentityId, Status
from .semiring import (
    NEG_INF,
    Element,
    SemiringKind,
    Tag,
    add,
    format_element,
    inverse,
    minus_one_power,
    mul,
    one,
    power,
    thin_tags,
    zero,
)


@dataclass(frozen=True)
class Polynomial:
    kind: SemiringKind
    coeffs: tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        for c in self.coeffs:
            if c.kind is not self.kind:
                raise KindMismatch("coefficient kind differs from polynomial kind")

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[k].is_zero:
                return k
        return -1

    def __call__(self, x: Element) -> Element:
        return eval_poly(self, x)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            terms.append(format_element(c) + ("" if k == 0 else "X" if k == 1 else f"X^{k}"))
        return " + ".join(reversed(terms)) or "-inf"


@dataclass(frozen=True)
class CornerRoot:
    value: Element
    multiplicity: int = 0

    def __str__(self) -> str:
        if self.multiplicity:
            return f"{format_element(self.value)} (x{self.multiplicity})"
        return format_element(self.value)


def char_poly(A: Matrix) -> Polynomial:
    """Coefficient k is (⊖𝟙)^(n-k) ⊙ tr(A^{∧(n-k)})."""
    n = A.n
    tr = principal_traces(A)
    coeffs = [mul(minus_one_power(A.kind, n - k), tr[n - k]) for k in range(n + 1)]
    return Polynomial(A.kind, coeffs)


def _terms(f: Polynomial, x: Element) -> tuple[int, list[tuple[int, int, int]]]:
    """(den, [(k, numerator, tag)]) for the nonzero monomials c_k x^k, x invertible or ghost.

    Works on integer numerators over a shared denominator; Fraction arithmetic
    per term is the bottleneck of root probing otherwise.
    """
    den = x.mag.denominator
    for c in f.coeffs:
        if not c.is_zero:
            den = den * c.mag.denominator // gcd(den, c.mag.denominator)
    xm = x.mag.numerator * (den // x.mag.denominator)
    xt = int(x.tag)
    out = []
    for k, c in enumerate(f.coeffs):
        if c.is_zero:
            continue
        m = c.mag.numerator * (den // c.mag.denominator) + k * xm
        ct = int(c.tag)
        if k == 0:
            t = ct
        elif ct == 2 or xt == 2:
            t = 2
        else:
            t = ct ^ (xt & k & 1)
        out.append((k, m, t))
    return den, out


def _tie(kind: SemiringKind, t1: int, t2: int) -> int:
    if kind is SemiringKind.SUPERTROPICAL or t1 != t2:
        return 2
    return t1


def _sum_terms(kind: SemiringKind, den: int, terms) -> Element:
    best = None
    tag = 0
    for _, m, t in terms:
        if best is None or m > best:
            best, tag = m, t
        elif m == best:
            tag = _tie(kind, tag, t)
    if best is None:
        return zero(kind)
    return Element(kind, Fraction(best, den), Tag(tag))


def eval_poly(f: Polynomial, x: Element) -> Element:
    if x.kind is not f.kind:
        raise KindMismatch(f"{x.kind.value} point for a {f.kind.value} polynomial")
    if x.is_zero:
        return f.coeffs[0]
    den, terms = _terms(f, x)
    return _sum_terms(f.kind, den, terms)


def is_root(f: Polynomial, r: Element) -> bool:
    if not r.is_thin:
        raise NotThin(f"{format_element(r)} is neither invertible nor zero")
    return eval_poly(f, r).is_circ


def _is_corner(f: Polynomial, r: Element) -> bool:
    """Corner test for an invertible r: f(r) is balanced/ghost and equals the
    sum of the maximal monomials with invertible coefficients (at least two)."""
    den, terms = _terms(f, r)
    val = _sum_terms(f.kind, den, terms)
    if not val.is_circ:
        return False
    top = max(m for _, m, _ in terms)
    inv = [(k, m, t) for k, m, t in terms if m == top and f.coeffs[k].is_invertible]
    return len(inv) >= 2 and _sum_terms(f.kind, den, inv) == val


def _upper_hull(points: list[tuple[int, Fraction]]) -> list[tuple[int, Fraction]]:
    hull: list[tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly above the chord
            if (y2 - y1) * (p[0] - x1) <= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _rmax_roots(f: Polynomial) -> list[CornerRoot]:
    pts = [(k, c.mag) for k, c in enumerate(f.coeffs) if not c.is_zero]
    if not pts:
        return []
    out = []
    hull = _upper_hull(pts)
    for (k1, v1), (k2, v2) in zip(hull, hull[1:]):
        out.append(CornerRoot(Element(f.kind, (v1 - v2) / (k2 - k1), Tag.POS), k2 - k1))
    if pts[0][0] > 0:
        out.append(CornerRoot(zero(f.kind), pts[0][0]))
    return out


def corner_roots(f: Polynomial) -> list[CornerRoot]:
    """All corner roots, sorted by decreasing magnitude (then tag)."""
    if f.kind is SemiringKind.RMAX:
        roots = _rmax_roots(f)
    else:
        inv = [(k, c.mag) for k, c in enumerate(f.coeffs) if c.is_invertible]
        cands: set[Fraction] = set()
        for a in range(len(inv)):
            for b in range(a + 1, len(inv)):
                (i, vi), (j, vj) = inv[a], inv[b]
                cands.add((vi - vj) / (j - i))
        roots = []
        for m in cands:
            for t in thin_tags(f.kind):
                r = Element(f.kind, m, t)
                if _is_corner(f, r):
                    roots.append(CornerRoot(r, 0))
        if f.coeffs and f.coeffs[0].is_zero:
            roots.append(CornerRoot(zero(f.kind), 0))
    return sorted(roots, key=lambda c: (-c.value.mag, int(c.value.tag)))


def expand_multiplicities(roots: Sequence[CornerRoot]) -> list[Element]:
    out = []
    for r in roots:
        out.extend([r.value] * max(r.multiplicity, 1))
    return out


# spectral maps --------------------------------------------------------------------


class SpectralMap(enum.Enum):
    IDENTITY = "identity"
    INVERSE = "inverse"
    POWER = "power"


def apply_map(g: SpectralMap, x: Element, m: int = 1) -> Element:
    if g is SpectralMap.IDENTITY:
        return x
    if g is SpectralMap.INVERSE:
        return inverse(x)
    return power(x, m)


def invert_map(g: SpectralMap, y: Element, m: int = 1) -> Optional[Element]:
    """g^{-1}(y), or None when y is not in the image of g."""
    if g is SpectralMap.IDENTITY:
        return y
    if g is SpectralMap.INVERSE:
        return inverse(y) if y.is_invertible else None
    if y.is_zero:
        return y
    if y.tag is Tag.NEG and m % 2 == 0:
        return None
    return Element(y.kind, y.mag / m, y.tag)


def spectral_transform(g: SpectralMap, roots: Sequence[CornerRoot], m: int = 1) -> list[CornerRoot]:
    out = []
    for r in roots:
        if g is SpectralMap.INVERSE and not r.value.is_invertible:
            raise NotInvertible(f"cannot invert root {format_element(r.value)}")
        out.append(CornerRoot(apply_map(g, r.value, m), r.multiplicity))
    return out


def reversed_poly(f: Polynomial, scale: Element) -> Polynomial:
    """scale ⊙ X^n f(X^{-1}): coefficient k is scale ⊙ f_(n-k)."""
    n = len(f.coeffs) - 1
    return Polynomial(f.kind, [mul(scale, f.coeffs[n - k]) for k in range(n + 1)])


def power_coeffs(f: Polynomial, m: int) -> Polynomial:
    """⊕ f_k^m X^k."""
    return Polynomial(f.kind, [power(c, m) for c in f.coeffs])


# majorization ----------------------------------------------------------------------


def _prefix_products(xs: Sequence[Element]) -> list:
    acc = Fraction(0)
    out = []
    for x in xs:
        acc = NEG_INF if (acc == NEG_INF or x.mag == NEG_INF) else acc + x.mag
        out.append(acc)
    return out


def majorization_check(
    lam: Sequence[CornerRoot],
    gamma_transformed: Sequence[CornerRoot],
    equality_at_n: bool = False,
) -> CheckReport:
    """λ_1⋯λ_k ⪰ g(γ_1)⋯g(γ_k) for every k, over rmax, with multiplicities."""
    for r in list(lam) + list(gamma_transformed):
        if r.value.kind is not SemiringKind.RMAX:
            raise KindMismatch("majorization is stated over rmax")
    a = sorted(expand_multiplicities(lam), key=lambda e: e.mag, reverse=True)
    b = sorted(expand_multiplicities(gamma_transformed), key=lambda e: e.mag, reverse=True)
    if len(a) != len(b):
        raise LengthMismatch(f"{len(a)} eigenvalues vs {len(b)} transformed eigenvalues")
    pa, pb = _prefix_products(a), _prefix_products(b)
    rel = "λ1..λk ⪰ g(γ1)..g(γk)" + (", = at k=n" if equality_at_n else "")
    inputs = {"lambda": [str(x) for x in a], "g_gamma": [str(x) for x in b]}
    for k, (x, y) in enumerate(zip(pa, pb), start=1):
        if x < y:
            return CheckReport(IdentityId.MAJORIZATION, Status.FAIL, rel, inputs, {"k": k, "lhs": x, "rhs": y})
    if equality_at_n and pa and pa[-1] != pb[-1]:
        return CheckReport(
            IdentityId.MAJORIZATION, Status.FAIL, rel, inputs, {"k": len(pa), "lhs": pa[-1], "rhs": pb[-1]}
        )
    return CheckReport(IdentityId.MAJORIZATION, Status.PASS, rel, inputs)


__all__ = [
    "Polynomial",
    "CornerRoot",
    "SpectralMap",
    "char_poly",
    "eval_poly",
    "is_root",
    "corner_roots",
    "expand_multiplicities",
    "spectral_transform",
    "apply_map",
    "invert_map",
    "reversed_poly",
    "power_coeffs",
    "majorization_check",
]
