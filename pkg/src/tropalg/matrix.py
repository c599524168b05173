"""Dense square matrices over the three semirings and their constructions.

A :class:`Matrix` stores magnitudes as an int64 array of numerators over one
shared positive denominator ``den`` (``NEG`` encodes the zero element) plus
an int64 tag array. Every operation here is homogeneous in the magnitudes,
so working on the scaled integers is exact.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels as K
from .combinatorics import SubsetIndex, subsets, zero_based_combos
from .errors import (
    BadArity,
    Divergent,
    InternalInvariantViolation,
    KindMismatch,
    NotInvertible,
    Singular,
    SizeMismatch,
    TooLarge,
)
from .semiring import (
    NEG_INF,
    Element,
    Relation,
    SemiringKind,
    Tag,
    format_element,
    minus_one_power,
    one,
    parse_element,
)

NEG = K.NEG
# leaves headroom for sums of many magnitudes inside int64
MAG_LIMIT = 1 << 48


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Matrix:
    __slots__ = ("kind", "mag", "tag", "den", "_hash")

    def __init__(self, kind: SemiringKind, mag: np.ndarray, tag: np.ndarray, den: int = 1):
        mag = np.ascontiguousarray(mag, dtype=np.int64)
        tag = np.ascontiguousarray(tag, dtype=np.int64)
        if mag.ndim != 2 or mag.shape[0] != mag.shape[1] or mag.shape[0] < 1:
            raise SizeMismatch(f"expected a non-empty square matrix, got shape {mag.shape}")
        zero = mag == NEG
        if zero.any():
            tag = np.where(zero, 0, tag)
        finite = mag[~zero]
        if finite.size and int(np.abs(finite).max()) >= MAG_LIMIT:
            raise TooLarge("matrix magnitudes exceed the exact int64 range")
        if den != 1 and finite.size:
            g = gcd(int(np.gcd.reduce(finite)), den)
            if g > 1:
                mag = np.where(zero, NEG, mag // g)
                den //= g
        elif den != 1:
            den = 1
        self.kind = kind
        self.mag = mag
        self.tag = tag
        self.den = int(den)
        self._hash = None

    # construction -----------------------------------------------------------
    @classmethod
    def from_elements(cls, rows: Sequence[Sequence[Element]], kind: Optional[SemiringKind] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SizeMismatch("rows must form a non-empty square")
        if kind is None:
            kind = rows[0][0].kind
        den = 1
        for r in rows:
            for e in r:
                if e.kind is not kind:
                    raise KindMismatch(f"entry of kind {e.kind.value} in a {kind.value} matrix")
                if not e.is_zero:
                    den = _lcm(den, e.mag.denominator)
        mag = np.empty((n, n), np.int64)
        tag = np.empty((n, n), np.int64)
        for i, r in enumerate(rows):
            for j, e in enumerate(r):
                if e.is_zero:
                    mag[i, j] = NEG
                    tag[i, j] = 0
                else:
                    v = e.mag * den
                    if abs(v) >= MAG_LIMIT:
                        raise TooLarge("magnitude out of range")
                    mag[i, j] = int(v)
                    tag[i, j] = int(e.tag)
        return cls(kind, mag, tag, den)

    @classmethod
    def from_tokens(cls, kind: SemiringKind, rows: Sequence[Sequence[str]]) -> "Matrix":
        return cls.from_elements([[parse_element(tok, kind) for tok in r] for r in rows], kind)

    @classmethod
    def zeros(cls, kind: SemiringKind, n: int) -> "Matrix":
        return cls(kind, np.full((n, n), NEG, np.int64), np.zeros((n, n), np.int64))

    @classmethod
    def identity(cls, kind: SemiringKind, n: int) -> "Matrix":
        mag = np.full((n, n), NEG, np.int64)
        np.fill_diagonal(mag, 0)
        return cls(kind, mag, np.zeros((n, n), np.int64))

    # element access -----------------------------------------------------------
    @property
    def n(self) -> int:
        return self.mag.shape[0]

    def _element(self, m: int, t: int) -> Element:
        if m == NEG:
            return Element(self.kind, NEG_INF, Tag.POS)
        return Element(self.kind, Fraction(int(m), self.den), Tag(int(t)))

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self._element(self.mag[i, j], self.tag[i, j])

    @property
    def entries(self) -> list[list[Element]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def tokens(self) -> list[list[str]]:
        return [[format_element(e) for e in row] for row in self.entries]

    def magnitudes(self) -> list[list]:
        return [[e.mag for e in row] for row in self.entries]

    # comparison ---------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.kind is other.kind
            and self.den == other.den
            and self.mag.shape == other.mag.shape
            and np.array_equal(self.mag, other.mag)
            and np.array_equal(self.tag, other.tag)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.kind, self.den, self.mag.tobytes(), self.tag.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({self.kind.value}, {self.tokens()})"

    def __str__(self) -> str:
        toks = self.tokens()
        w = max(len(t) for r in toks for t in r)
        return "\n".join(" ".join(t.rjust(w) for t in r) for r in toks)

    # operator sugar -----------------------------------------------------------
    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __neg__(self) -> "Matrix":
        return negate(self)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.kind, self.mag.T, self.tag.T, self.den)

    def with_den(self, den: int) -> tuple[np.ndarray, np.ndarray]:
        """Magnitudes rescaled to denominator ``den`` (a multiple of ``self.den``)."""
        if den == self.den:
            return self.mag, self.tag
        f = den // self.den
        return np.where(self.mag == NEG, NEG, self.mag * f), self.tag

    def to_kind(self, kind: SemiringKind) -> "Matrix":
        """Lift an rmax matrix into another semiring (real/positive entries)."""
        if kind is self.kind:
            return self
        if self.kind is not SemiringKind.RMAX:
            raise KindMismatch(f"cannot coerce {self.kind.value} to {kind.value}")
        return Matrix(kind, self.mag, self.tag, self.den)

    def modulus(self) -> "Matrix":
        """|A| as an rmax matrix."""
        return Matrix(SemiringKind.RMAX, self.mag, np.zeros_like(self.tag), self.den)


def _align(A: Matrix, B: Matrix):
    if A.kind is not B.kind:
        raise KindMismatch(f"{A.kind.value} vs {B.kind.value}")
    if A.n != B.n:
        raise SizeMismatch(f"{A.n} vs {B.n}")
    den = _lcm(A.den, B.den)
    am, at = A.with_den(den)
    bm, bt = B.with_den(den)
    return den, am, at, bm, bt


def _scalar_parts(e: Element, den: int) -> tuple[int, int, int]:
    """(numerator, tag, common denominator) for combining a scalar with a matrix."""
    if e.is_zero:
        return NEG, 0, den
    d = _lcm(den, e.mag.denominator)
    return int(e.mag * d), int(e.tag), d


# basic algebra -------------------------------------------------------------------


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    den, am, at, bm, bt = _align(A, B)
    # ⊙ adds magnitudes, so numerators over a shared den just add
    om, ot = K.matmul(am, at, bm, bt, A.kind.code)
    return Matrix(A.kind, om, ot, den)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    den, am, at, bm, bt = _align(A, B)
    om, ot = K.ew_add(am, at, bm, bt, A.kind.code)
    return Matrix(A.kind, om, ot, den)


def scale(e: Element, A: Matrix) -> Matrix:
    if e.kind is not A.kind:
        raise KindMismatch(f"{e.kind.value} scalar with {A.kind.value} matrix")
    m, t, den = _scalar_parts(e, A.den)
    am, at = A.with_den(den)
    sm = np.full_like(am, m)
    st = np.full_like(at, t)
    om, ot = K.ew_mul(sm, st, am, at, A.kind.code)
    return Matrix(A.kind, om, ot, den)


def negate(A: Matrix) -> Matrix:
    if A.kind is not SemiringKind.SMAX:
        return A
    tag = np.where(A.tag == 2, 2, np.where(A.mag == NEG, 0, 1 - A.tag))
    return Matrix(A.kind, A.mag, tag, A.den)


def transpose(A: Matrix) -> Matrix:
    return A.T


def mat_power(A: Matrix, m: int) -> Matrix:
    if m < 0:
        raise BadArity("negative matrix power")
    out = Matrix.identity(A.kind, A.n)
    for _ in range(m):
        out = mat_mul(out, A)
    return out


def trace(A: Matrix) -> Element:
    d = np.diagonal(A.mag)[None, :]
    t = np.diagonal(A.tag)[None, :]
    om, ot = K._np.reduce_add(d, t, A.kind.code)
    return A._element(om[0], ot[0])


def _det_parts(A: Matrix, signed: bool) -> Element:
    m, t = K.det(A.mag, A.tag, A.kind.code, signed)
    return _elem_over(A.kind, m, t, A.den)


def _elem_over(kind: SemiringKind, m: int, t: int, den: int) -> Element:
    if m == NEG:
        return Element(kind, NEG_INF, Tag.POS)
    return Element(kind, Fraction(int(m), den), Tag(int(t)))


def det(A: Matrix) -> Element:
    return _det_parts(A, True)


def permanent(A: Matrix) -> Element:
    return _det_parts(A, False)


def is_nonsingular(A: Matrix) -> bool:
    d = det(A)
    if A.kind is SemiringKind.RMAX:
        return not d.is_zero
    return d.is_invertible


# compound matrices -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _combo_array(n: int, k: int) -> np.ndarray:
    c = zero_based_combos(n, k)
    if k == 0:
        return np.zeros((1, 0), np.int64)
    return np.array(c, np.int64)


@dataclass(frozen=True, eq=True)
class CompoundMatrix:
    base_n: int
    k: int
    inner: Matrix

    @property
    def index(self) -> list[SubsetIndex]:
        return subsets(self.base_n, self.k)

    def entry(self, I: SubsetIndex, J: SubsetIndex) -> Element:
        return self.inner[I.index, J.index]


def compound_matrix(A: Matrix, k: int) -> Matrix:
    """A^{∧k} as a plain matrix indexed by lexicographic k-subsets."""
    n = A.n
    if k < 0 or k > n:
        raise BadArity(f"k={k} outside [0, {n}]")
    if k == 0:
        return Matrix.identity(A.kind, 1)
    if k == 1:
        return A
    om, ot = K.compound(A.mag, A.tag, _combo_array(n, k), A.kind.code)
    return Matrix(A.kind, om, ot, A.den)


def compound(A: Matrix, k: int) -> CompoundMatrix:
    return CompoundMatrix(A.n, k, compound_matrix(A, k))


def principal_traces(A: Matrix) -> list[Element]:
    """tr(A^{∧k}) for k = 0..n."""
    om, ot = K.principal_traces(A.mag, A.tag, A.kind.code)
    return [_elem_over(A.kind, m, t, A.den) for m, t in zip(om, ot)]


def adjoint(A: Matrix) -> Matrix:
    om, ot = K.adjoint(A.mag, A.tag, A.kind.code)
    return Matrix(A.kind, om, ot, A.den)


def quasi_inverse(A: Matrix) -> Matrix:
    d = det(A)
    if not d.is_invertible:
        raise Singular(f"det = {format_element(d)} is not invertible")
    inv = Element(d.kind, -d.mag, d.tag)
    return scale(inv, adjoint(A))


# special matrices ------------------------------------------------------------------


class Special(enum.Enum):
    IDENTITY = "identity"
    SIGN_DIAG_D = "sign_diag_d"
    Q_MATRIX = "q_matrix"
    PERMUTATION = "permutation"
    DIAGONAL = "diagonal"


def special_matrix(
    which: Special,
    n: int,
    kind: SemiringKind,
    perm: Optional[Sequence[int]] = None,
    diag: Optional[Sequence[Element]] = None,
) -> Matrix:
    """Named matrices. ``perm`` is a 1-based word with ``P[i, perm[i]] = 𝟙``."""
    if n < 1:
        raise BadArity("n must be positive")
    z = Element(kind, NEG_INF, Tag.POS)
    rows = [[z] * n for _ in range(n)]
    if which is Special.IDENTITY:
        return Matrix.identity(kind, n)
    if which is Special.SIGN_DIAG_D:
        for i in range(n):
            rows[i][i] = minus_one_power(kind, i + 1)
    elif which is Special.Q_MATRIX:
        for i in range(n):
            rows[i][n - 1 - i] = minus_one_power(kind, i + 1)
    elif which is Special.PERMUTATION:
        if perm is None or sorted(perm) != list(range(1, n + 1)):
            raise BadArity("PERMUTATION needs a permutation of 1..n")
        for i, p in enumerate(perm):
            rows[i][p - 1] = one(kind)
    elif which is Special.DIAGONAL:
        if diag is None or len(diag) != n:
            raise BadArity("DIAGONAL needs n entries")
        for i, e in enumerate(diag):
            rows[i][i] = e
    else:
        raise BadArity(f"unknown special matrix {which}")
    return Matrix.from_elements(rows, kind)


def support_permutation(A: Matrix) -> Optional[list[int]]:
    """The 1-based permutation word of a monomial matrix, or None."""
    nz = A.mag != NEG
    if not (nz.sum(axis=1) == 1).all() or not (nz.sum(axis=0) == 1).all():
        return None
    return [int(np.flatnonzero(nz[i])[0]) + 1 for i in range(A.n)]


def is_monomial(A: Matrix) -> bool:
    """Invertible matrices: one invertible entry per row and column."""
    p = support_permutation(A)
    if p is None:
        return False
    return all(A.tag[i, p[i] - 1] != 2 for i in range(A.n))


def monomial_inverse(A: Matrix) -> Matrix:
    p = support_permutation(A)
    if p is None or not is_monomial(A):
        raise NotInvertible("matrix is not monomial")
    mag = np.full_like(A.mag, NEG)
    tag = np.zeros_like(A.tag)
    for i, c in enumerate(p):
        mag[c - 1, i] = -A.mag[i, c - 1]
        tag[c - 1, i] = A.tag[i, c - 1]
    return Matrix(A.kind, mag, tag, A.den)


def is_definite(A: Matrix) -> bool:
    if not (np.diagonal(A.mag) == 0).all() or not (np.diagonal(A.tag) == 0).all():
        return False
    d = det(A)
    return d.mag == 0 and d.tag is Tag.POS


# definite forms --------------------------------------------------------------------


@dataclass(frozen=True)
class DefiniteForm:
    side: str
    normalizer: Matrix
    definite_part: Matrix
    permutation: tuple[int, ...]


def dominant_permutation(A: Matrix) -> Optional[list[int]]:
    """Lexicographically smallest permutation maximizing the weight of |A|.

    Returns a 1-based word, or None when every permutation has weight 𝟘.
    """
    w = A.mag
    best, ok = K.assignment_value(w)
    if not ok:
        return None
    n = A.n
    rows_left = list(range(n))
    cols_left = list(range(n))
    word = []
    acc = 0
    for r in range(n):
        rest_rows = rows_left[1:]
        for c in cols_left:
            if w[r, c] == NEG:
                continue
            rest_cols = [x for x in cols_left if x != c]
            sub = w[np.ix_(rest_rows, rest_cols)] if rest_rows else np.zeros((0, 0), np.int64)
            val, feas = K.assignment_value(np.ascontiguousarray(sub))
            if feas and acc + int(w[r, c]) + val == best:
                word.append(c + 1)
                acc += int(w[r, c])
                cols_left = rest_cols
                break
        else:  # pragma: no cover - optimum always extends
            raise InternalInvariantViolation("dominant permutation search lost the optimum")
        rows_left = rest_rows
    return word


def definite_form(A: Matrix, side: str = "left") -> DefiniteForm:
    if side not in ("left", "right"):
        raise BadArity(f"side must be 'left' or 'right', got {side!r}")
    if not is_nonsingular(A):
        raise Singular("definite forms need a nonsingular matrix")
    word = dominant_permutation(A)
    if word is None:  # pragma: no cover - excluded by nonsingularity
        raise Singular("no feasible assignment")
    n = A.n
    pm = np.full_like(A.mag, NEG)
    pt = np.zeros_like(A.tag)
    for i, c in enumerate(word):
        if A.tag[i, c - 1] == 2 or A.mag[i, c - 1] == NEG:
            raise InternalInvariantViolation("dominant permutation uses a non-invertible entry")
        pm[i, c - 1] = A.mag[i, c - 1]
        pt[i, c - 1] = A.tag[i, c - 1]
    P = Matrix(A.kind, pm, pt, A.den)
    if det(P) != det(A):
        raise InternalInvariantViolation("normalizer determinant differs from det(A)")
    Pinv = monomial_inverse(P)
    bar = mat_mul(Pinv, A) if side == "left" else mat_mul(A, Pinv)
    if not is_definite(bar):
        raise InternalInvariantViolation("normalized matrix is not definite")
    return DefiniteForm(side, P, bar, tuple(word))


# Kleene star -----------------------------------------------------------------------


def kleene_star(A: Matrix) -> Matrix:
    """⊕_k A^k via S_{m+1} = 𝓘 ⊕ A S_m, stopping at a fixpoint by m = n + 1."""
    I = Matrix.identity(A.kind, A.n)
    S = I
    for _ in range(A.n + 1):
        nxt = mat_add(I, mat_mul(A, S))
        if nxt == S:
            return S
        S = nxt
    raise Divergent("partial sums of the Kleene star did not stabilize")


# entrywise relations ----------------------------------------------------------------


def relation_mask(rel: Relation, kind: SemiringKind, m1, t1, m2, t2) -> np.ndarray:
    """Vectorized ``a REL b`` on aligned (magnitude, tag) arrays."""
    code = kind.code
    if rel is Relation.CURLY:
        sm, st = K._np.ew_add(m1, t1, m2, t2, code)
        return (sm == m2) & (st == t2)
    if rel is Relation.BALANCE:
        nt = t2
        if kind is SemiringKind.SMAX:
            nt = np.where(t2 == 2, 2, np.where(m2 == NEG, 0, 1 - t2))
        sm, st = K._np.ew_add(m1, t1, m2, nt, code)
        if kind is SemiringKind.RMAX:
            return np.ones(np.shape(m1), bool)
        return (st == 2) | (sm == NEG)
    eq = (m1 == m2) & (t1 == t2)
    if rel is Relation.PRECEQ:
        if kind is SemiringKind.RMAX:
            return m1 <= m2
        return (m1 < m2) | eq | ((m1 == m2) & (t2 == 2))
    if rel in (Relation.GEQ_CIRC, Relation.GEQ_CIRC_MOD):
        if kind is SemiringKind.RMAX:
            ge = m1 >= m2
        else:
            ge = eq | (((t1 == 2) | (m1 == NEG)) & (m1 >= m2))
        if rel is Relation.GEQ_CIRC_MOD:
            return ge & (m1 == m2)
        return ge
    raise ValueError(rel)


def relation_entrywise(rel: Relation, A: Matrix, B: Matrix) -> tuple[bool, Optional[tuple[int, int]]]:
    """Test ``A REL B`` entrywise; return the first failing (i, j) in row-major order."""
    _, am, at, bm, bt = _align(A, B)
    mask = relation_mask(rel, A.kind, am, at, bm, bt)
    if mask.all():
        return True, None
    i, j = np.argwhere(~mask)[0]
    return False, (int(i), int(j))


def elements_relation(rel: Relation, xs: Iterable[Element], ys: Iterable[Element]) -> tuple[bool, Optional[int]]:
    from .semiring import relation

    for idx, (a, b) in enumerate(zip(xs, ys)):
        if not relation(rel, a, b):
            return False, idx
    return True, None
