"""One checker per identity/inequality, plus instance samplers.

Every checker validates its hypotheses first and returns a skipped report
when they fail. Both sides are evaluated exactly; matrices are compared
entrywise and polynomials coefficientwise. The first failing clause is
recorded as the witness, with (k, I, J) scanned in lexicographic order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Any, Callable, Mapping, Optional, Sequence

import numpy as np

from .charpoly import (
    SpectralMap,
    apply_map,
    char_poly,
    corner_roots,
    eval_poly,
    invert_map,
    is_root,
    majorization_check,
    power_coeffs,
    reversed_poly,
    spectral_transform,
)
from .combinatorics import (
    Bijection,
    SubsetIndex,
    bijection_sign,
    binomial,
    elementary_cycles,
    elementary_paths,
    inversion_count,
    jacobi_index_map,
    restriction_sign_product,
    subsets,
    transposition_parity,
)
from .errors import BadArity, Divergent, KindMismatch, SizeMismatch
from .matrix import (
    NEG,
    Matrix,
    Special,
    _align,
    adjoint,
    compound_matrix,
    definite_form,
    det,
    is_definite,
    is_monomial,
    is_nonsingular,
    kleene_star,
    mat_add,
    mat_mul,
    mat_power,
    monomial_inverse,
    negate,
    permanent,
    principal_traces,
    quasi_inverse,
    relation_entrywise,
    scale,
    special_matrix,
)
from .report import CheckReport, IdentityId, Status
from .semiring import (
    NEG_INF,
    Element,
    Relation,
    SemiringKind,
    Tag,
    add,
    inverse,
    minus_one_power,
    mul,
    one,
    power,
    relation,
    thin_tags,
    zero,
)

RMAX = SemiringKind.RMAX
SMAX = SemiringKind.SMAX
SUPER = SemiringKind.SUPERTROPICAL
ALL_KINDS = frozenset(SemiringKind)
GEQ = Relation.GEQ_CIRC
GEQ_MOD = Relation.GEQ_CIRC_MOD
CURLY = Relation.CURLY
EQ = None  # exact equality in the comparison helpers

DEFAULT_POWERS = (1, 2, 3)


class _Skip(Exception):
    pass


# comparison context -----------------------------------------------------------------


def _equal_entrywise(A: Matrix, B: Matrix) -> tuple[bool, Optional[tuple[int, int]]]:
    _, am, at, bm, bt = _align(A, B)
    mask = (am == bm) & (at == bt)
    if mask.all():
        return True, None
    i, j = np.argwhere(~mask)[0]
    return False, (int(i), int(j))


class _Ctx:
    """Collects the first failure and free-form notes while a checker runs."""

    def __init__(self, kind: SemiringKind):
        self.kind = kind
        self.witness: Optional[dict[str, Any]] = None
        self.notes: dict[str, Any] = {}

    def fail(self, clause: str, /, **detail) -> bool:
        if self.witness is None:
            self.witness = {"clause": clause, **detail}
        return False

    def mats(self, rel: Optional[Relation], L: Matrix, R: Matrix, clause: str,
             k: Optional[int] = None, n: Optional[int] = None) -> bool:
        ok, at = _equal_entrywise(L, R) if rel is None else relation_entrywise(rel, L, R)
        if ok:
            return True
        i, j = at
        where: dict[str, Any]
        if k is None:
            where = {"i": i + 1, "j": j + 1}
        else:
            subs = subsets(n, k)
            where = {"k": k, "I": subs[i], "J": subs[j]}
        return self.fail(clause, **where, lhs=L[i, j], rhs=R[i, j])

    def elems(self, rel: Optional[Relation], lhs: Element, rhs: Element, clause: str, /, **where) -> bool:
        ok = lhs == rhs if rel is None else relation(rel, lhs, rhs)
        return True if ok else self.fail(clause, **where, lhs=lhs, rhs=rhs)

    def polys(self, rel: Optional[Relation], f, g, clause: str) -> bool:
        for k, (a, b) in enumerate(zip(f.coeffs, g.coeffs)):
            if not self.elems(rel, a, b, clause, coeff=k):
                return False
        return True


# small helpers ------------------------------------------------------------------------


def _reindex(M: Matrix, rows, cols) -> Matrix:
    ix = np.ix_(np.asarray(rows, np.int64), np.asarray(cols, np.int64))
    return Matrix(M.kind, M.mag[ix], M.tag[ix], M.den)


def _complement_index(n: int, k: int) -> list[int]:
    """Position of I^c among the (n-k)-subsets, for each k-subset I."""
    return [s.complement().index for s in subsets(n, k)]


def _jacobi_index(n: int, k: int) -> list[int]:
    """Position of π(I) among the (n-k)-subsets, for each k-subset I."""
    return [jacobi_index_map(s).index for s in subsets(n, k)]


def _inv(e: Element) -> Element:
    return inverse(e)


def _diag_is_one(M: Matrix) -> bool:
    return bool((np.diagonal(M.mag) == 0).all() and (np.diagonal(M.tag) == 0).all())


def _first_bad_diag(M: Matrix) -> int:
    for i in range(M.n):
        if M.mag[i, i] != 0 or M.tag[i, i] != 0:
            return i
    return -1


def _off_diagonal(A: Matrix) -> Matrix:
    mag = A.mag.copy()
    np.fill_diagonal(mag, NEG)
    return Matrix(A.kind, mag, A.tag.copy(), A.den)


def _star(A: Matrix) -> Optional[Matrix]:
    try:
        return kleene_star(A)
    except Divergent:
        return None


def _cycle_weight(A: Matrix, cyc: Sequence[int]) -> Element:
    w = one(A.kind)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        w = mul(w, A[a - 1, b - 1])
    return w


def _all_cycles_below(B: Matrix, bound: Element) -> bool:
    return all(relation(CURLY, _cycle_weight(B, c), bound) for c in elementary_cycles(B.n) if len(c) > 1)


def _powers(inputs: Mapping[str, Any]) -> tuple[int, ...]:
    m = inputs.get("m")
    if m is None:
        return DEFAULT_POWERS
    if isinstance(m, int):
        return (m,)
    return tuple(m)


def _definite_candidates(A: Matrix) -> list[tuple[str, Matrix]]:
    if is_definite(A):
        return [("given", A)]
    if is_nonsingular(A):
        return [(side, definite_form(A, side).definite_part) for side in ("left", "right")]
    raise _Skip("matrix is neither definite nor nonsingular")


def _need_nonsingular(A: Matrix, name: str = "A") -> None:
    if not is_nonsingular(A):
        raise _Skip(f"{name} is singular")


def _sample_points(kind: SemiringKind) -> list[Element]:
    pts = [zero(kind)]
    for k in range(-12, 13):
        for t in thin_tags(kind):
            pts.append(Element(kind, Fraction(k, 2), t))
    return pts


# checkers: products, compounds, adjoints --------------------------------------------------


def _det_ab(ctx: _Ctx, A: Matrix, B: Matrix, **_) -> None:
    L, R = det(mat_mul(A, B)), mul(det(A), det(B))
    ctx.elems(GEQ, L, R, "det(AB) ⪰° det(A)det(B)")
    equality = is_monomial(A) or is_monomial(B) or (ctx.kind is not RMAX and L.is_thin)
    ctx.notes["equality_clause"] = equality
    if equality:
        ctx.elems(EQ, L, R, "det(AB) = det(A)det(B)")


def _cauchy_binet(ctx: _Ctx, A: Matrix, B: Matrix, **_) -> None:
    n = A.n
    AB = mat_mul(A, B)
    for k in range(n + 1):
        L = compound_matrix(AB, k)
        R = mat_mul(compound_matrix(A, k), compound_matrix(B, k))
        if not ctx.mats(GEQ, L, R, "(AB)^∧k ⪰° A^∧k B^∧k", k, n):
            return


def _adj_mul(ctx: _Ctx, A: Matrix, B: Matrix, **_) -> None:
    L = adjoint(mat_mul(A, B))
    R = mat_mul(adjoint(B), adjoint(A))
    ctx.mats(GEQ, L, R, "adj(AB) ⪰° adj(B)adj(A)")
    equality = is_monomial(A) or is_monomial(B)
    ctx.notes["equality_clause"] = equality
    if equality:
        ctx.mats(EQ, L, R, "adj(AB) = adj(B)adj(A)")


def _eqadj(ctx: _Ctx, A: Matrix, B: Matrix, **_) -> None:
    inv = [name for name, X in (("A", A), ("B", B)) if is_monomial(X)]
    if not inv:
        raise _Skip("neither A nor B is invertible")
    n = A.n
    AB = mat_mul(A, B)
    ctx.mats(EQ, adjoint(AB), mat_mul(adjoint(B), adjoint(A)), "adj(AB) = adj(B)adj(A)")
    for k in range(n + 1):
        R = mat_mul(compound_matrix(A, k), compound_matrix(B, k))
        ctx.mats(EQ, compound_matrix(AB, k), R, "(AB)^∧k = A^∧k B^∧k", k, n)
    for name in inv:
        X = A if name == "A" else B
        Xi = monomial_inverse(X)
        ctx.mats(EQ, quasi_inverse(X), Xi, f"{name}^∇ = {name}^-1")
        for k in range(n + 1):
            L = compound_matrix(Xi, k)
            R = monomial_inverse(compound_matrix(X, k))
            ctx.mats(EQ, L, R, f"({name}^-1)^∧k = ({name}^∧k)^-1", k, n)
    ctx.notes["invertible"] = inv


# checkers: Jacobi family ------------------------------------------------------------------


def _dual_side(M: Matrix, n: int, k: int) -> Matrix:
    """Entry (I, J) is M[J^c, I^c] where M is indexed by (n-k)-subsets."""
    c = _complement_index(n, k)
    return _reindex(M, c, c).T


def _jacobi_invertible(ctx: _Ctx, A: Matrix, **_) -> None:
    if not is_monomial(A):
        raise _Skip("A is not invertible")
    n, d = A.n, det(A)
    D = special_matrix(Special.SIGN_DIAG_D, n, A.kind)
    DAD = mat_mul(mat_mul(D, monomial_inverse(A)), D)
    for k in range(n + 1):
        L = scale(d, _dual_side(compound_matrix(DAD, n - k), n, k))
        if not ctx.mats(EQ, L, compound_matrix(A, k), "det(A)(DA^-1D)^∧(n-k)[J^c,I^c] = A^∧k[I,J]", k, n):
            return


def _jacobi_sides(A: Matrix, k: int, Q: Matrix, d: Element, D: Matrix, C: Matrix):
    n = A.n
    L1 = scale(d, _dual_side(compound_matrix(mat_mul(mat_mul(D, Q), D), n - k), n, k))
    p = _jacobi_index(n, k)
    L2 = scale(d, _reindex(compound_matrix(C, n - k), p, p))
    return L1, L2


def _jacobi(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    n, d = A.n, det(A)
    Q = quasi_inverse(A)
    D = special_matrix(Special.SIGN_DIAG_D, n, A.kind)
    C = scale(_inv(d), compound_matrix(A, n - 1))
    for k in range(n + 1):
        L1, L2 = _jacobi_sides(A, k, Q, d, D, C)
        ctx.mats(EQ, L1, L2, "det(A)(DA^∇D)^∧(n-k)[J^c,I^c] = det(A)(det(A)^-1 A^∧(n-1))^∧(n-k)[π(I),π(J)]", k, n)
        ctx.mats(GEQ, L1, compound_matrix(A, k), "det(A)(DA^∇D)^∧(n-k)[J^c,I^c] ⪰° A^∧k[I,J]", k, n)
        if ctx.witness:
            return


def _jacobi_trace(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    n, d = A.n, det(A)
    Q = quasi_inverse(A)
    trA, trQ = principal_traces(A), principal_traces(Q)
    for k in range(n + 1):
        ctx.elems(GEQ, mul(d, trQ[n - k]), trA[k], "det(A)tr((A^∇)^∧(n-k)) ⪰° tr(A^∧k)", k=k)
        if A.kind.minus_one_is_one:
            L = scale(d, _dual_side(compound_matrix(Q, n - k), n, k))
            ctx.mats(GEQ, L, compound_matrix(A, k), "det(A)(A^∇)^∧(n-k)[J^c,I^c] ⪰° A^∧k[I,J]", k, n)
        if ctx.witness:
            return


def _jacobi_thin_eq(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    n, d = A.n, det(A)
    Q = quasi_inverse(A)
    D = special_matrix(Special.SIGN_DIAG_D, n, A.kind)
    Cn1 = compound_matrix(A, n - 1)
    C = scale(_inv(d), Cn1)
    trA, trQ = principal_traces(A), principal_traces(Q)
    fired = []
    for k in range(n + 1):
        H = compound_matrix(Cn1, n - k)
        if (H.tag == 2).any():
            continue
        fired.append(k)
        L1, _ = _jacobi_sides(A, k, Q, d, D, C)
        ctx.mats(EQ, L1, compound_matrix(A, k), "det(A)(DA^∇D)^∧(n-k)[J^c,I^c] = A^∧k[I,J]", k, n)
        ctx.elems(EQ, mul(d, trQ[n - k]), trA[k], "det(A)tr((A^∇)^∧(n-k)) = tr(A^∧k)", k=k)
        if A.kind.minus_one_is_one:
            L = scale(d, _dual_side(compound_matrix(Q, n - k), n, k))
            ctx.mats(EQ, L, compound_matrix(A, k), "det(A)(A^∇)^∧(n-k)[J^c,I^c] = A^∧k[I,J]", k, n)
    nontrivial = [k for k in fired if k < n]
    ctx.notes["fired_k"] = fired
    ctx.notes["fired"] = int(bool(nontrivial))
    if not nontrivial and ctx.witness is None:
        raise _Skip("thin-entry hypothesis only held for the trivial k = n")


def _star_self_dual(ctx: _Ctx, A: Matrix, **_) -> None:
    if A.kind is SUPER:
        raise _Skip("no nonsingular supertropical matrix equals its own star (diagonal becomes ghost)")
    _need_nonsingular(A)
    S = _star(A)
    if S is None or S != A:
        raise _Skip("A is not equal to its Kleene star")
    n = A.n
    M = A.modulus()
    for k in range(n + 1):
        L = _dual_side(compound_matrix(M, n - k), n, k)
        if not ctx.mats(EQ, L, compound_matrix(M, k), "|A^∧(n-k)[J^c,I^c]| = |A^∧k[I,J]|", k, n):
            return


# checkers: quasi-inverse and compounds ----------------------------------------------------------


def _defbar(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    n, d = A.n, det(A)
    exact = A.kind is not SMAX
    rel = EQ if exact else GEQ_MOD
    sym = "=" if exact else "⪰°|"
    adj = adjoint(A)
    Q = quasi_inverse(A)
    ctx.elems(rel, det(adj), power(d, n - 1), f"det(adj A) {sym} det(A)^(n-1)")
    ctx.elems(rel, det(mat_mul(A, adj)), power(d, n), f"det(A adj A) {sym} det(A)^n")
    ctx.elems(rel, det(Q), _inv(d), f"det(A^∇) {sym} det(A)^-1")
    if not is_definite(A):
        ctx.notes["definite"] = False
        return
    ctx.notes["definite"] = True
    IA = mat_mul(A, Q)
    for name, M in (("A^∇", Q), ("I_A", IA)):
        i = _first_bad_diag(M)
        if i >= 0:
            ctx.fail(f"{name} has unit diagonal", i=i + 1, j=i + 1, lhs=M[i, i], rhs=one(A.kind))
    dQ = det(Q)
    ctx.elems(rel, det(IA), dQ, f"det(I_A) {sym} det(A^∇)")
    ctx.elems(EQ, dQ, det(compound_matrix(A, n - 1)), "det(A^∇) = det(A^∧(n-1))")
    ctx.elems(rel, dQ, one(A.kind), f"det(A^∇) {sym} 𝟙")
    if A.kind is SUPER:
        for name, M in (("A^∇", Q), ("I_A", IA)):
            if not is_definite(M):
                ctx.fail(f"{name} is definite", detail=str(M))


def _nabcom(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    n = A.n
    Q = quasi_inverse(A)
    for k in range(n + 1):
        L = mat_mul(compound_matrix(A, k), compound_matrix(Q, k))
        if not ctx.mats(GEQ, L, Matrix.identity(A.kind, L.n), "A^∧k (A^∇)^∧k ⪰° I", k, n):
            return


def _power_compound(ctx: _Ctx, A: Matrix, **inputs) -> None:
    n = A.n
    for m in _powers(inputs):
        Am = mat_power(A, m)
        for k in range(n + 1):
            L = compound_matrix(Am, k)
            R = mat_power(compound_matrix(A, k), m)
            if not ctx.mats(GEQ, L, R, f"(A^{m})^∧k ⪰° (A^∧k)^{m}", k, n):
                ctx.witness["m"] = m
                return


def _trace_power(ctx: _Ctx, A: Matrix, **inputs) -> None:
    n = A.n
    trA = principal_traces(A)
    for m in _powers(inputs):
        trAm = principal_traces(mat_power(A, m))
        for k in range(1, n + 1):
            rhs = power(trA[k], m)
            ctx.elems(GEQ, trAm[k], rhs, "tr((A^m)^∧k) ⪰° (tr A^∧k)^m", k=k, m=m)
            trCk = principal_traces(mat_power(compound_matrix(A, k), m))[1]
            ctx.elems(GEQ, trCk, rhs, "tr((A^∧k)^m) ⪰° (tr A^∧k)^m", k=k, m=m)
            if ctx.witness:
                return


def _conj_trace(ctx: _Ctx, A: Matrix, E: Matrix, **_) -> None:
    _need_nonsingular(E, "E")
    n = A.n
    M = mat_mul(mat_mul(quasi_inverse(E), A), E)
    Ebar = definite_form(E, "right").definite_part
    Mbar = mat_mul(mat_mul(quasi_inverse(Ebar), A), Ebar)
    trM, trA, trMbar = principal_traces(M), principal_traces(A), principal_traces(Mbar)
    for k in range(1, n + 1):
        ctx.elems(GEQ, trM[k], trA[k], "tr((E^∇AE)^∧k) ⪰° tr(A^∧k)", k=k)
        ctx.elems(EQ, trM[k], trMbar[k], "tr((E^∇AE)^∧k) = tr((Ē^∇AĒ)^∧k)", k=k)


# checkers: Sylvester-Franke ----------------------------------------------------------------


def _sf_sides(A: Matrix, k: int) -> tuple[Element, Element]:
    n = A.n
    return det(compound_matrix(A, k)), power(det(A), binomial(n - 1, k - 1))


def _sf_conditions(A: Matrix) -> list[str]:
    conds = []
    if A.kind is RMAX:
        conds.append("rmax")
    if is_monomial(A):
        conds.append("invertible")
    if is_definite(A):
        B = negate(_off_diagonal(A))
        if _all_cycles_below(B, one(A.kind)):
            conds.append("definite, B-cycles ⋞ 𝟙")
    return conds


def _sylvester_franke(ctx: _Ctx, A: Matrix, **_) -> None:
    conds = _sf_conditions(A)
    ctx.notes["conditions"] = conds
    held = []
    for k in range(A.n + 1):
        L, R = _sf_sides(A, k)
        if L.mag != R.mag:
            ctx.fail("|det(A^∧k)| = |det(A)|^C(n-1,k-1)", k=k, lhs=L, rhs=R)
        if conds:
            ctx.elems(EQ, L, R, "det(A^∧k) = det(A)^C(n-1,k-1)", k=k)
        held.append(L == R)
    ctx.notes["equality_held"] = all(held)


def _sf_modulus(ctx: _Ctx, A: Matrix, **_) -> None:
    exact = A.kind is SUPER or (A.kind.minus_one_is_one and is_nonsingular(A))
    ctx.notes["equality_clause"] = exact
    for k in range(A.n + 1):
        L, R = _sf_sides(A, k)
        if L.mag != R.mag:
            ctx.fail("|det(A^∧k)| = |det(A)|^C(n-1,k-1)", k=k, lhs=L, rhs=R)
        if exact:
            ctx.elems(EQ, L, R, "det(A^∧k) = det(A)^C(n-1,k-1)", k=k)


# checkers: Kleene star and definite matrices -----------------------------------------------------


def _kleene_definite(ctx: _Ctx, A: Matrix, **_) -> None:
    for label, Abar in _definite_candidates(A):
        _kleene_one(ctx, Abar)
        if ctx.witness:
            ctx.witness["form"] = label
            ctx.witness["definite"] = Abar
            return


def _kleene_one(ctx: _Ctx, A: Matrix) -> None:
    kind, n = A.kind, A.n
    B = negate(_off_diagonal(A))
    m1 = minus_one_power(kind, 1)
    for c in elementary_cycles(n):
        if len(c) > 1 and not relation(CURLY, _cycle_weight(B, c), m1):
            ctx.fail("every cycle of B ⋞ ⊖𝟙", cycle=list(c), lhs=_cycle_weight(B, c), rhs=m1)
            return
    Astar = _star(A.modulus())
    Bstar = _star(B.modulus())
    if Astar is None or Bstar is None:
        ctx.fail("|A|* and |B|* exist", detail="partial sums did not stabilize")
        return
    if not is_definite(Astar):
        ctx.fail("|A|* is definite", detail=str(Astar))
    Q = quasi_inverse(A)
    QQ = quasi_inverse(Q) if is_nonsingular(Q) else quasi_inverse(Q.modulus())
    targets = [("|B|*", Bstar)]
    for k in sorted({max(n - 1, 0), n, n + 1}):
        targets.append((f"|A^{k}|", mat_power(A, k).modulus()))
    targets += [("|adj A|", adjoint(A).modulus()), ("|A^∇|", Q.modulus()), ("|A^∇∇|", QQ.modulus())]
    for name, M in targets:
        if not ctx.mats(EQ, M, Astar, f"{name} = |A|*"):
            return
    S = _star(A)
    ctx.notes["star_exists"] = S is not None
    if S is not None:
        ctx.mats(EQ, S.modulus(), Astar, "|A*| = |A|*")
        if kind.idempotent:
            SS, NB = _star(S), _star(negate(B))
            if SS is None or NB is None:
                ctx.fail("A** and (⊖B)* exist", detail="partial sums did not stabilize")
            else:
                ctx.mats(EQ, SS, S, "A** = A*")
                ctx.mats(EQ, NB, S, "(⊖B)* = A*")
    if _all_cycles_below(B, one(kind)):
        Bs = _star(B)
        if Bs is None:
            ctx.fail("B* exists when every cycle of B ⋞ 𝟙", detail="partial sums did not stabilize")
        else:
            ctx.mats(EQ, Q, Bs, "A^∇ = B*")


def _quasi_identity(ctx: _Ctx, A: Matrix, **_) -> None:
    _need_nonsingular(A)
    Q = quasi_inverse(A)
    I = Matrix.identity(A.kind, A.n)
    for name, M in (("I_A", mat_mul(A, Q)), ("I'_A", mat_mul(Q, A))):
        ctx.mats(GEQ, M, I, f"{name} ⪰° I")
        i = _first_bad_diag(M)
        if i >= 0:
            ctx.fail(f"{name} has unit diagonal", i=i + 1, j=i + 1, lhs=M[i, i], rhs=one(A.kind))
        dm = det(M)
        if dm.mag != 0:
            ctx.fail(f"|det {name}| = 𝟙", lhs=dm, rhs=one(A.kind))
        if A.kind is SUPER:
            if not is_nonsingular(M):
                ctx.fail(f"{name} is nonsingular", lhs=dm)
            ctx.mats(EQ, mat_mul(M, M), M, f"{name} is idempotent")
            off = _off_diagonal(M)
            bad = np.argwhere((off.mag != NEG) & (off.tag != 2))
            if bad.size:
                i, j = (int(x) for x in bad[0])
                ctx.fail(f"{name} off-diagonal entries are ghost", i=i + 1, j=j + 1, lhs=M[i, j])


def _frobenius(ctx: _Ctx, A: Matrix, **inputs) -> None:
    if "a" in inputs and "b" in inputs:
        vals = [inputs["a"], inputs["b"]]
    else:
        vals = sorted(set(x for row in A.entries for x in row), key=lambda e: (e.mag, int(e.tag)))
    ms = (1, 2, 3, 4) if inputs.get("m") is None else _powers(inputs)
    for a in vals:
        for b in vals:
            for m in ms:
                if not ctx.elems(EQ, power(add(a, b), m), add(power(a, m), power(b, m)),
                                 "(a⊕b)^m = a^m ⊕ b^m", a=a, b=b, m=m):
                    return


# checkers: characteristic polynomials and spectra -----------------------------------------------


def _cp_cases(A: Matrix, E: Optional[Matrix], ms: Sequence[int]):
    """(label, M, Q, map, m) for every applicable case of the polynomial relations."""
    f = char_poly(A)
    out = []
    if E is not None and is_nonsingular(E):
        M = mat_mul(mat_mul(quasi_inverse(E), A), E)
        out.append(("E^∇AE", M, f, SpectralMap.IDENTITY, 1))
    if is_nonsingular(A):
        # the (⊖𝟙)^n factor is invisible for even n and when ⊖𝟙 = 𝟙
        scale_ = mul(minus_one_power(A.kind, A.n), _inv(det(A)))
        out.append(("A^∇", quasi_inverse(A), reversed_poly(f, scale_), SpectralMap.INVERSE, 1))
    if A.kind is not SMAX:
        for m in ms:
            out.append((f"A^{m}", mat_power(A, m), power_coeffs(f, m), SpectralMap.POWER, m))
    return f, out


def _charpoly_rel(ctx: _Ctx, A: Matrix, **inputs) -> None:
    f, cases = _cp_cases(A, inputs.get("E"), _powers(inputs))
    if not cases:
        raise _Skip("no case applies: E absent or singular, A singular, and kind is smax")
    for label, M, Q, g, m in cases:
        fM = char_poly(M)
        if not ctx.polys(GEQ, fM, Q, f"f_{{{label}}} ⪰° transformed f_A"):
            ctx.witness["case"] = label
            return
        if g is SpectralMap.POWER:
            for x in _root_probe(f, ()):
                if not ctx.elems(GEQ, eval_poly(fM, power(x, m)), power(eval_poly(f, x), m),
                                 f"f_{{A^{m}}}(x^{m}) ⪰° f_A(x)^{m}", x=x):
                    return
    ctx.notes["cases"] = [c[0] for c in cases]


def _charpoly_thin_eq(ctx: _Ctx, A: Matrix, **inputs) -> None:
    f, cases = _cp_cases(A, inputs.get("E"), _powers(inputs))
    if A.kind is SMAX:
        cases = [c for c in cases if c[3] is not SpectralMap.POWER]
    fired = 0
    for label, M, Q, _, _ in cases:
        fM = char_poly(M)
        for k, (a, b) in enumerate(zip(fM.coeffs, Q.coeffs)):
            if a.is_thin:
                fired += k < A.n
                ctx.elems(EQ, a, b, f"thin coefficient of f_{{{label}}} equals transformed f_A", case=label, coeff=k)
    if is_nonsingular(A):
        Q = quasi_inverse(A)
        if is_nonsingular(Q):
            fQQ = char_poly(quasi_inverse(Q))
            if all(c.is_thin for c in fQQ.coeffs):
                fired += 1
                ctx.polys(EQ, fQQ, f, "f_{A^∇∇} = f_A")
    ctx.notes["fired"] = int(fired > 0)
    if not fired and ctx.witness is None:
        raise _Skip("no thin left-hand coefficient below the leading one")


def _root_probe(f, extra: Sequence[Fraction]) -> list[Element]:
    """Thin points around every crossing of two monomials of f, plus extras."""
    kind = f.kind
    nz = [(k, c.mag) for k, c in enumerate(f.coeffs) if not c.is_zero]
    mags: set[Fraction] = set(extra)
    for a in range(len(nz)):
        for b in range(a + 1, len(nz)):
            (i, vi), (j, vj) = nz[a], nz[b]
            mags.add((vi - vj) / (j - i))
    base = sorted(mags)
    grid = set(base)
    for x, y in zip(base, base[1:]):
        grid.add((x + y) / 2)
    if base:
        grid.update({base[0] - 1, base[-1] + 1})
    pts = [zero(kind)]
    for mg in sorted(grid):
        pts.extend(Element(kind, mg, t) for t in thin_tags(kind))
    return pts


def _eigen_map(ctx: _Ctx, A: Matrix, **inputs) -> None:
    f, cases = _cp_cases(A, inputs.get("E"), _powers(inputs))
    if A.kind is SMAX:
        cases = [c for c in cases if c[3] is not SpectralMap.POWER]
    if not cases:
        raise _Skip("no case applies: E absent or singular and A singular")
    eig_A = {r.value for r in corner_roots(f)}
    for label, M, _, g, m in cases:
        fM = char_poly(M)
        for lam in corner_roots(fM):
            pre = invert_map(g, lam.value, m)
            if pre is None or pre not in eig_A:
                ctx.fail("g^-1(λ) is an eigenvalue of A", case=label, lam=lam.value, preimage=pre,
                         eigenvalues_A=sorted(str(x) for x in eig_A))
                return
        back = [r.value.mag for r in corner_roots(fM) if not r.value.is_zero]
        extra = [invert_map(g, Element(A.kind, x, Tag.POS), m).mag for x in back]
        for gamma in _root_probe(f, extra):
            if g is SpectralMap.INVERSE and gamma.is_zero:
                continue
            if is_root(f, gamma) and not is_root(fM, apply_map(g, gamma, m)):
                ctx.fail("g(γ) is a root of f_M", case=label, gamma=gamma, g_gamma=apply_map(g, gamma, m))
                return
    ctx.notes["cases"] = [c[0] for c in cases]


def _majorization(ctx: _Ctx, A: Matrix, **inputs) -> None:
    E = inputs.get("E")
    f = char_poly(A)
    gam = corner_roots(f)
    cases = []
    if E is not None and not permanent(E).is_zero:
        cases.append(("E^∇AE", mat_mul(mat_mul(quasi_inverse(E), A), E), SpectralMap.IDENTITY, 1, False))
    if not permanent(A).is_zero:
        cases.append(("A^∇", quasi_inverse(A), SpectralMap.INVERSE, 1, True))
    for m in _powers(inputs):
        cases.append((f"A^{m}", mat_power(A, m), SpectralMap.POWER, m, False))
    for label, M, g, m, eq_n in cases:
        rep = majorization_check(corner_roots(char_poly(M)), spectral_transform(g, gam, m), eq_n)
        if rep.status is Status.FAIL:
            ctx.fail("λ1..λk ⪰ g(γ1)..g(γk)", case=label, **rep.witness)
            return
    ctx.notes["cases"] = [c[0] for c in cases]


# checkers: signs and definite-matrix lemmas ------------------------------------------------------


def sign_lemmas(ctx: _Ctx, n: int) -> None:
    """Sign bookkeeping for restrictions and compositions of bijections, exhaustive on [n]."""
    kind = ctx.kind
    sgn = lambda parity: minus_one_power(kind, parity)  # noqa: E731
    ground = list(range(1, n + 1))
    perms = list(permutations(ground))
    for k in range(n + 1):
        for I in subsets(n, k):
            Im = I.members
            for J in subsets(n, k):
                for sig in permutations(J.members):
                    s_sigma = bijection_sign(Bijection(Im, J.members, sig), kind)
                    to_sigma = dict(zip(Im, sig))
                    for pi_word in perms:
                        pi_I = [pi_word[i - 1] for i in Im]
                        # ρ ∘ π = σ on I, read in the increasing order of π[I]
                        rho = [to_sigma[i] for _, i in sorted(zip(pi_I, Im))]
                        rhs = sgn(inversion_count(pi_I) + inversion_count(rho))
                        if s_sigma != rhs:
                            ctx.fail("sign(σ) = sign(π|I) sign(ρ)", I=I, J=J, sigma=list(sig),
                                     pi=list(pi_word), lhs=s_sigma, rhs=rhs)
                            return
    for pi_word in perms:
        pi = Bijection.permutation(pi_word)
        s_pi = sgn(transposition_parity(pi_word))
        for k in range(n + 1):
            for I in subsets(n, k):
                e = sum(i + pi(i) for i in I.members)
                tau_I = Bijection(tuple(ground), tuple(ground), I.members + I.complement().members)
                img = tuple(sorted(pi(i) for i in I.members))
                img_c = tuple(x for x in ground if x not in img)
                tau_pI = Bijection(tuple(ground), tuple(ground), img + img_c)
                lhs = mul(bijection_sign(tau_I, kind), bijection_sign(tau_pI, kind))
                if lhs != sgn(e):
                    ctx.fail("sign(τ_I) sign(τ_π[I]) = (⊖𝟙)^Σ(i+π(i))", I=I, pi=list(pi_word), lhs=lhs, rhs=sgn(e))
                    return
                a, b, c = restriction_sign_product(pi_word, I, kind)
                prod = mul(mul(a, b), c)
                if prod != s_pi:
                    ctx.fail("sign(π) = sign(π|I) sign(π|I^c) (⊖𝟙)^Σ(i+π(i))", I=I, pi=list(pi_word),
                             lhs=s_pi, rhs=prod)
                    return
    for path in elementary_paths(n):
        i, j = path[0], path[-1]
        ell = len(path) - 1
        want = mul(sgn(ell), sgn(i + j))
        s = _path_cycle_restricted_sign(path, n, kind)
        if s != want:
            ctx.fail("sign(σ|{j}^c) = (⊖𝟙)^ℓ (⊖𝟙)^(i+j)", path=list(path), lhs=s, rhs=want)
            return
        for cut in range(1, ell):
            p1, p2 = path[: cut + 1], path[cut:]
            prod = mul(_path_cycle_restricted_sign(p1, n, kind), _path_cycle_restricted_sign(p2, n, kind))
            if prod != want:
                ctx.fail("split path signs multiply", path=list(path), cut=path[cut], lhs=prod, rhs=want)
                return


def _path_cycle_restricted_sign(path: Sequence[int], n: int, kind: SemiringKind) -> Element:
    """Sign of σ|{j}^c where σ closes the path i → … → j into a cycle."""
    mapping = {x: x for x in range(1, n + 1)}
    for a, b in zip(path, path[1:]):
        mapping[a] = b
    j = path[-1]
    mapping[j] = path[0]
    restricted = {a: b for a, b in mapping.items() if a != j}
    return bijection_sign(Bijection.from_mapping(restricted), kind)


def _dfs_lemma(ctx: _Ctx, A: Matrix, **_) -> None:
    for label, Abar in _definite_candidates(A):
        _dfs_one(ctx, Abar)
        if ctx.witness:
            ctx.witness["form"] = label
            ctx.witness["definite"] = Abar
            return


def _dfs_one(ctx: _Ctx, A: Matrix) -> None:
    kind, n = A.kind, A.n
    u = one(kind)
    ident = tuple(range(1, n + 1))
    for word in permutations(ident):
        if word == ident:
            continue
        w = minus_one_power(kind, transposition_parity(word))
        for i, c in enumerate(word):
            w = mul(w, A[i, c - 1])
        if not relation(CURLY, w, u):
            ctx.fail("sign(σ) ∏ a_iσ(i) ⋞ 𝟙", sigma=list(word), lhs=w, rhs=u)
            return
    for c in elementary_cycles(n):
        if len(c) < 2:
            continue
        w = mul(minus_one_power(kind, len(c) - 1), _cycle_weight(A, c))
        if not relation(CURLY, w, u):
            ctx.fail("(⊖𝟙)^(|c|-1) w(c) ⋞ 𝟙", cycle=list(c), lhs=w, rhs=u)
            return
    if n > 5:
        return
    for s in range(1, n + 1):
        for t in range(1, n + 1):
            if s == t:
                continue
            dom = tuple(x for x in ident if x != t)
            cod = tuple(x for x in ident if x != s)
            for img in permutations(cod):
                sigma = Bijection(dom, cod, img)
                chain = []
                x = s
                while x != t:
                    chain.append(x)
                    x = sigma(x)
                tau = Bijection.from_mapping({x: (sigma(x) if x in chain else x) for x in dom})
                lhs = bijection_sign(sigma, kind)
                for x in dom:
                    lhs = mul(lhs, A[x - 1, sigma(x) - 1])
                rhs = bijection_sign(tau, kind)
                for x in chain:
                    rhs = mul(rhs, A[x - 1, sigma(x) - 1])
                # τ = σ when σ has no closed cycle; ⋞ is only reflexive on idempotent kinds
                if lhs != rhs and not relation(CURLY, lhs, rhs):
                    ctx.fail("open-path term ⋞ its path part", s=s, t=t, sigma=list(img), lhs=lhs, rhs=rhs)
                    return


def _compound_diag(ctx: _Ctx, A: Matrix, **_) -> None:
    for label, Abar in _definite_candidates(A):
        for k in range(1, Abar.n + 1):
            C = compound_matrix(Abar, k)
            i = _first_bad_diag(C)
            if i >= 0:
                I = subsets(Abar.n, k)[i]
                ctx.fail("A^∧k[I,I] = 𝟙", form=label, definite=Abar, k=k, I=I, J=I, lhs=C[i, i], rhs=one(A.kind))
                return


# registry ---------------------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentitySpec:
    id: IdentityId
    relation: str
    fn: Callable
    matrices: tuple[str, ...] = ("A",)
    optional: tuple[str, ...] = ()
    kinds: frozenset = ALL_KINDS
    sampler: str = "general"


_NOT_RMAX = frozenset({SMAX, SUPER})
_IDEM_OR_SUPER = frozenset({RMAX, SUPER})

REGISTRY: dict[IdentityId, IdentitySpec] = {
    s.id: s
    for s in [
        IdentitySpec(IdentityId.DET_AB, "det(AB) ⪰° det(A)det(B); = when A or B invertible or det(AB) thin",
                     _det_ab, ("A", "B")),
        IdentitySpec(IdentityId.CAUCHY_BINET, "(AB)^∧k ⪰° A^∧k B^∧k entrywise", _cauchy_binet, ("A", "B")),
        IdentitySpec(IdentityId.ADJ_MUL, "adj(AB) ⪰° adj(B)adj(A); = when A or B invertible", _adj_mul, ("A", "B")),
        IdentitySpec(IdentityId.EQADJ_INVERTIBLE, "equalities for invertible factors", _eqadj, ("A", "B"),
                     sampler="one_monomial"),
        IdentitySpec(IdentityId.JACOBI_INVERTIBLE, "det(A)(DA^-1D)^∧(n-k)[J^c,I^c] = A^∧k[I,J]",
                     _jacobi_invertible, sampler="monomial"),
        IdentitySpec(IdentityId.JACOBI, "det(A)(DA^∇D)^∧(n-k)[J^c,I^c] ⪰° A^∧k[I,J] entrywise", _jacobi,
                     sampler="nonsingular"),
        IdentitySpec(IdentityId.JACOBI_TRACE, "det(A)tr((A^∇)^∧(n-k)) ⪰° tr(A^∧k)", _jacobi_trace,
                     sampler="nonsingular"),
        IdentitySpec(IdentityId.JACOBI_THIN_EQ, "= where (A^∧(n-1))^∧(n-k) is thin", _jacobi_thin_eq,
                     kinds=_NOT_RMAX, sampler="nonsingular"),
        IdentitySpec(IdentityId.STAR_SELF_DUAL, "|A^∧(n-k)[J^c,I^c]| = |A^∧k[I,J]| when A = A*",
                     _star_self_dual, kinds=frozenset({RMAX, SMAX}), sampler="star_fixed"),
        IdentitySpec(IdentityId.DEFBAR, "determinants of adj A, A adj A, A^∇, I_A", _defbar, sampler="defbar"),
        IdentitySpec(IdentityId.NABCOM, "A^∧k (A^∇)^∧k ⪰° I", _nabcom, sampler="nonsingular"),
        IdentitySpec(IdentityId.POWER_COMPOUND, "(A^m)^∧k ⪰° (A^∧k)^m entrywise", _power_compound),
        IdentitySpec(IdentityId.TRACE_POWER, "tr((A^m)^∧k), tr((A^∧k)^m) ⪰° (tr A^∧k)^m", _trace_power,
                     kinds=_IDEM_OR_SUPER),
        IdentitySpec(IdentityId.CONJ_TRACE, "tr((E^∇AE)^∧k) ⪰° tr(A^∧k)", _conj_trace, ("A", "E"),
                     sampler="conj"),
        IdentitySpec(IdentityId.SYLVESTER_FRANKE, "det(A^∧k) = det(A)^C(n-1,k-1) under its conditions",
                     _sylvester_franke, sampler="sf"),
        IdentitySpec(IdentityId.SF_MODULUS, "|det(A^∧k)| = |det(A)|^C(n-1,k-1)", _sf_modulus),
        IdentitySpec(IdentityId.KLEENE_DEFINITE, "|B|* = |A|* = |A^k| = |adj A| = |A^∇| = |A^∇∇|",
                     _kleene_definite, sampler="definite"),
        IdentitySpec(IdentityId.QUASI_IDENTITY, "A A^∇ ⪰° I, A^∇ A ⪰° I", _quasi_identity, sampler="nonsingular"),
        IdentitySpec(IdentityId.FROBENIUS, "(a⊕b)^m = a^m ⊕ b^m", _frobenius, kinds=_IDEM_OR_SUPER),
        IdentitySpec(IdentityId.CHARPOLY_REL, "f_M ⪰° transformed f_A coefficientwise", _charpoly_rel,
                     optional=("E",), sampler="spectral"),
        IdentitySpec(IdentityId.CHARPOLY_THIN_EQ, "= on thin left-hand coefficients", _charpoly_thin_eq,
                     optional=("E",), kinds=_NOT_RMAX, sampler="spectral"),
        IdentitySpec(IdentityId.EIGEN_MAP, "g^-1(eig M) ⊆ eig A; g(roots f_A) ⊆ roots f_M", _eigen_map,
                     optional=("E",), kinds=_NOT_RMAX, sampler="spectral"),
        IdentitySpec(IdentityId.MAJORIZATION, "λ1..λk ⪰ g(γ1)..g(γk)", _majorization, optional=("E",),
                     kinds=frozenset({RMAX}), sampler="spectral"),
        IdentitySpec(IdentityId.SIGN_LEMMAS, "sign identities for restricted bijections", None, (),
                     sampler="none"),
        IdentitySpec(IdentityId.DFS_LEMMA, "weights of definite matrices ⋞ 𝟙", _dfs_lemma, sampler="definite"),
        IdentitySpec(IdentityId.COMPOUND_DIAG, "A^∧k[I,I] = 𝟙 for definite A", _compound_diag,
                     sampler="definite"),
    ]
}


def _report(spec: IdentitySpec, status: Status, inputs: dict, ctx: Optional[_Ctx], reason: str, t0: float):
    return CheckReport(
        spec.id,
        status,
        spec.relation,
        inputs,
        ctx.witness if ctx else None,
        reason,
        dict(ctx.notes) if ctx else {},
        time.perf_counter() - t0,
    )


def check(id: IdentityId, inputs: Optional[Mapping[str, Any]] = None, **kw) -> CheckReport:
    """Run one checker. Matrix inputs are named A, B, E; ``m`` is a power or a list of powers.

    SIGN_LEMMAS takes ``n`` and ``kind`` instead of matrices.
    """
    t0 = time.perf_counter()
    spec = REGISTRY[IdentityId(id)]
    args = dict(inputs or {})
    args.update(kw)
    if spec.id is IdentityId.SIGN_LEMMAS:
        n, kind = int(args["n"]), SemiringKind(args["kind"])
        if n < 1:
            raise BadArity("n must be positive")
        ctx = _Ctx(kind)
        sign_lemmas(ctx, n)
        status = Status.FAIL if ctx.witness else Status.PASS
        return _report(spec, status, {"n": n, "semiring": kind}, ctx, "", t0)
    missing = [name for name in spec.matrices if args.get(name) is None]
    if missing:
        raise BadArity(f"{spec.id.value} needs matrices {', '.join(spec.matrices)}; missing {', '.join(missing)}")
    mats = {name: args[name] for name in spec.matrices + spec.optional if args.get(name) is not None}
    kinds = {M.kind for M in mats.values()}
    if len(kinds) != 1:
        raise KindMismatch("all matrix inputs must share one semiring")
    sizes = {M.n for M in mats.values()}
    if len(sizes) != 1:
        raise SizeMismatch("all matrix inputs must have the same size")
    kind = kinds.pop()
    keep = set(spec.matrices + spec.optional) | {"m", "a", "b"}
    shown = {k: v for k, v in args.items() if v is not None and k in keep}
    if kind not in spec.kinds:
        return _report(spec, Status.SKIP, shown, None, f"not stated over {kind.value}", t0)
    ctx = _Ctx(kind)
    try:
        spec.fn(ctx, **args)
    except _Skip as s:
        return _report(spec, Status.SKIP, shown, ctx, str(s), t0)
    status = Status.FAIL if ctx.witness else Status.PASS
    return _report(spec, status, shown, ctx, "", t0)


# samplers ----------------------------------------------------------------------------------------

DEFAULT_TAG_WEIGHTS = {
    RMAX: {Tag.POS: 1.0},
    SMAX: {Tag.POS: 0.45, Tag.NEG: 0.45, Tag.CIRC: 0.10},
    SUPER: {Tag.POS: 0.85, Tag.CIRC: 0.15},
}


def random_matrix(
    kind: SemiringKind,
    n: int,
    rng: np.random.Generator,
    magnitude_range: tuple[int, int] = (-5, 5),
    tag_weights: Optional[Mapping[Tag, float]] = None,
    zero_prob: float = 0.15,
) -> Matrix:
    """Integer magnitudes uniform in the closed range, 𝟘 with ``zero_prob``, tags by weight."""
    if n < 1:
        raise BadArity("n must be positive")
    lo, hi = magnitude_range
    weights = dict(tag_weights or DEFAULT_TAG_WEIGHTS[kind])
    tags = [t for t in weights if weights[t] > 0]
    for t in tags:
        if kind is RMAX and t is not Tag.POS or kind is SUPER and t is Tag.NEG:
            raise KindMismatch(f"tag {t.name} does not exist in {kind.value}")
    p = np.array([weights[t] for t in tags], float)
    mag = rng.integers(lo, hi + 1, size=(n, n)).astype(np.int64)
    tag = rng.choice(np.array([int(t) for t in tags], np.int64), size=(n, n), p=p / p.sum())
    if zero_prob > 0:
        mag = np.where(rng.random((n, n)) < zero_prob, NEG, mag)
    return Matrix(kind, mag, tag)


def random_nonsingular(kind: SemiringKind, n: int, rng: np.random.Generator, tries: int = 500) -> Matrix:
    w = {RMAX: {Tag.POS: 1.0}, SMAX: {Tag.POS: 0.47, Tag.NEG: 0.47, Tag.CIRC: 0.06},
         SUPER: {Tag.POS: 0.94, Tag.CIRC: 0.06}}[kind]
    for _ in range(tries):
        A = random_matrix(kind, n, rng, tag_weights=w, zero_prob=0.1)
        if is_nonsingular(A):
            return A
    return random_monomial(kind, n, rng)


def random_monomial(kind: SemiringKind, n: int, rng: np.random.Generator) -> Matrix:
    perm = rng.permutation(n)
    mag = np.full((n, n), NEG, np.int64)
    tag = np.zeros((n, n), np.int64)
    thin = [int(t) for t in thin_tags(kind)]
    for i, j in enumerate(perm):
        mag[i, j] = int(rng.integers(-5, 6))
        tag[i, j] = int(rng.choice(thin))
    return Matrix(kind, mag, tag)


def random_definite(kind: SemiringKind, n: int, rng: np.random.Generator) -> Matrix:
    A = random_nonsingular(kind, n, rng)
    side = "left" if rng.random() < 0.5 else "right"
    return definite_form(A, side).definite_part


def random_star_fixed(kind: SemiringKind, n: int, rng: np.random.Generator) -> Matrix:
    """A = B* over rmax for B with cycles below 𝟙, lifted with positive tags."""
    mag = rng.integers(-5, 0, size=(n, n)).astype(np.int64)
    mag = np.where(rng.random((n, n)) < 0.2, NEG, mag)
    np.fill_diagonal(mag, NEG)
    S = kleene_star(Matrix(RMAX, mag, np.zeros((n, n), np.int64)))
    return Matrix(kind, S.mag, np.zeros_like(S.tag), S.den)


def sample_inputs(id: IdentityId, kind: SemiringKind, n: int, rng: np.random.Generator) -> dict[str, Any]:
    """Hypothesis-targeted random inputs for one identity."""
    spec = REGISTRY[id]
    s = spec.sampler
    gen = lambda: random_matrix(kind, n, rng)  # noqa: E731
    ns = lambda: random_nonsingular(kind, n, rng)  # noqa: E731
    if s == "general":
        out = {name: gen() for name in spec.matrices}
    elif s == "nonsingular":
        out = {"A": ns()}
    elif s == "monomial":
        out = {"A": random_monomial(kind, n, rng)}
    elif s == "one_monomial":
        if rng.random() < 0.5:
            out = {"A": random_monomial(kind, n, rng), "B": gen()}
        else:
            out = {"A": gen(), "B": random_monomial(kind, n, rng)}
    elif s == "definite":
        out = {"A": random_definite(kind, n, rng)}
    elif s == "defbar":
        out = {"A": random_definite(kind, n, rng) if rng.random() < 0.5 else ns()}
    elif s == "star_fixed":
        out = {"A": random_star_fixed(kind, n, rng)}
    elif s == "conj":
        out = {"A": gen(), "E": ns()}
    elif s == "sf":
        r = rng.random()
        if kind is SMAX and r < 0.25:
            out = {"A": random_monomial(kind, n, rng)}
        elif kind is SMAX and r < 0.5:
            out = {"A": random_definite(kind, n, rng)}
        else:
            out = {"A": gen()}
    elif s == "spectral":
        out = {"A": ns(), "E": ns()}
    else:
        raise BadArity(f"{id.value} has no random sampler")
    if id in (IdentityId.POWER_COMPOUND, IdentityId.TRACE_POWER, IdentityId.CHARPOLY_REL,
              IdentityId.CHARPOLY_THIN_EQ, IdentityId.EIGEN_MAP, IdentityId.MAJORIZATION):
        out["m"] = list(DEFAULT_POWERS)
    return out


__all__ = [
    "IdentitySpec",
    "REGISTRY",
    "check",
    "random_matrix",
    "random_nonsingular",
    "random_monomial",
    "random_definite",
    "random_star_fixed",
    "sample_inputs",
    "DEFAULT_TAG_WEIGHTS",
]
