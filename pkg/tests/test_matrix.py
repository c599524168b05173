import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import KINDS, RMAX, SMAX, SUPER, matrices
from tropalg import kernels as K
from tropalg.combinatorics import zero_based_combos
from tropalg.errors import BadArity, Divergent, KindMismatch, NotInvertible, Singular, SizeMismatch, TooLarge
from tropalg.fixtures import fix_a, fix_b, fix_c
from tropalg.matrix import (
    MAG_LIMIT,
    Matrix,
    Special,
    adjoint,
    compound,
    compound_matrix,
    definite_form,
    det,
    dominant_permutation,
    is_definite,
    is_monomial,
    is_nonsingular,
    kleene_star,
    mat_add,
    mat_mul,
    mat_power,
    monomial_inverse,
    permanent,
    principal_traces,
    quasi_inverse,
    special_matrix,
    trace,
    transpose,
)
from tropalg.oracle import oracle_compound, oracle_det, oracle_permanent
from tropalg.semiring import Element, Tag, one, parse_element, zero

any_matrix = st.sampled_from(KINDS).flatmap(lambda k: matrices(k, 1, 4, dens=(1, 2, 3)))


def M(kind, rows):
    return Matrix.from_tokens(kind, rows)


def e(tok, kind):
    return parse_element(tok, kind)


class TestFixtureValues:
    def test_fix_a(self, backend):
        A = fix_a(SMAX)
        assert det(A) == e("4", SMAX)
        assert adjoint(A) == M(SMAX, [["1", "2o"], ["~1", "3"]])
        assert quasi_inverse(A) == M(SMAX, [["-3", "-2o"], ["~-3", "-1"]])
        assert mat_power(fix_a(SUPER), 2) == M(SUPER, [["6", "5v"], ["4", "3v"]])
        assert det(fix_a(RMAX)) == e("4", RMAX)
        assert permanent(A.modulus()).mag == det(A).mag

    def test_fix_b(self, backend):
        A = fix_b()
        assert det(A) == one(SMAX)
        C = compound_matrix(A, 2)
        assert C == M(SMAX, [["0", "~0", "0"], ["0", "0", "~0"], ["0o", "0", "0"]])
        assert det(C) == e("0o", SMAX)

    def test_fix_c(self, backend):
        C = compound_matrix(fix_c(), 2)
        assert C == M(SMAX, [["0", "0", "0"], ["~0", "0", "0"], ["~0", "~0", "0"]])
        assert not is_nonsingular(C)

    def test_square_template(self):
        # [[a,b],[c,d]]^2 = [[a²⊕bc, b(a⊕d)], [c(a⊕d), d²⊕bc]]
        A = M(SMAX, [["0", "1"], ["1", "0"]])
        assert mat_power(A, 2) == M(SMAX, [["2", "1"], ["1", "2"]])
        B = M(SMAX, [["0", "1"], ["~1", "0"]])
        assert mat_power(B, 2) == M(SMAX, [["~2", "1"], ["~1", "~2"]])

    @given(st.sampled_from(KINDS).flatmap(lambda k: matrices(k, 2, 2)))
    def test_square_template_property(self, A):
        a, b, c, d = A[0, 0], A[0, 1], A[1, 0], A[1, 1]
        want = Matrix.from_elements([[a * a + b * c, b * (a + d)], [c * (a + d), d * d + b * c]], A.kind)
        assert mat_power(A, 2) == want

    def test_special_matrices(self):
        assert special_matrix(Special.Q_MATRIX, 2, SMAX) == M(SMAX, [["-inf", "~0"], ["0", "-inf"]])
        assert special_matrix(Special.SIGN_DIAG_D, 2, SMAX) == M(SMAX, [["~0", "-inf"], ["-inf", "0"]])
        P = special_matrix(Special.PERMUTATION, 3, SMAX, perm=[2, 3, 1])
        assert is_monomial(P) and det(P) == one(SMAX)
        with pytest.raises(BadArity):
            special_matrix(Special.PERMUTATION, 3, SMAX, perm=[1, 1, 2])

    def test_definite_form_example(self):
        d = definite_form(fix_a(RMAX), "left")
        assert d.normalizer == M(RMAX, [["3", "-inf"], ["-inf", "1"]])
        assert d.definite_part == M(RMAX, [["0", "-1"], ["0", "0"]])
        assert d.permutation == (1, 2)

    def test_kleene_example(self):
        B = M(RMAX, [["-inf", "-1"], ["-1", "-inf"]])
        assert kleene_star(B) == M(RMAX, [["0", "-1"], ["-1", "0"]])

    def test_kleene_divergent(self):
        with pytest.raises(Divergent):
            kleene_star(M(RMAX, [["1"]]))
        with pytest.raises(Divergent):
            kleene_star(M(SUPER, [["-inf", "1"], ["0", "-inf"]]))


class TestOracleEquivalence:
    @given(any_matrix)
    def test_det(self, A):
        for be in ("numba", "numpy"):
            with K.use_backend(be):
                assert det(A) == oracle_det(A)
                assert permanent(A) == oracle_permanent(A)

    @given(any_matrix)
    def test_compound(self, A):
        for k in range(1, A.n + 1):
            want = oracle_compound(A, k)
            for be in ("numba", "numpy"):
                with K.use_backend(be):
                    C = compound(A, k)
                    assert C.inner.entries == want
                    for I in C.index:
                        for J in C.index:
                            assert C.entry(I, J) == want[I.index][J.index]

    @given(any_matrix)
    def test_det_of_transpose(self, A):
        assert det(transpose(A)) == det(A)

    @given(any_matrix)
    def test_traces_and_adjoint(self, A):
        tr = principal_traces(A)
        assert tr[0] == one(A.kind)
        assert tr[1] == trace(A)
        assert tr[A.n] == det(A)
        adj = adjoint(A)
        for i in range(A.n):
            for j in range(A.n):
                rows = [r for r in range(A.n) if r != j]
                cols = [c for c in range(A.n) if c != i]
                if A.n == 1:
                    want = one(A.kind)
                else:
                    sub = Matrix.from_elements([[A[r, c] for c in cols] for r in rows], A.kind)
                    want = oracle_det(sub)
                    if (i + j) % 2:
                        want = -want
                assert adj[i, j] == want


class TestAlgebra:
    @given(st.sampled_from(KINDS).flatmap(lambda k: st.integers(1, 3).flatmap(
        lambda n: st.tuples(*[matrices(k, n, n)] * 3))))
    def test_semiring_laws(self, abc):
        A, B, C = abc
        assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))
        assert mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C))
        assert mat_add(A, B) == mat_add(B, A)
        I = Matrix.identity(A.kind, A.n)
        assert mat_mul(I, A) == A == mat_mul(A, I)
        assert mat_power(A, 3) == mat_mul(A, mat_mul(A, A))
        assert mat_power(A, 0) == I

    @given(st.sampled_from(KINDS).flatmap(lambda k: st.integers(1, 4).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda p: (k, p)))),
        st.data())
    def test_monomial_inverse(self, kp, data):
        kind, p = kp
        n = len(p)
        from conftest import elements
        diag = [data.draw(elements(kind, thin=True, zero_weight=0)) for _ in range(n)]
        D = special_matrix(Special.DIAGONAL, n, kind, diag=diag)
        P = mat_mul(D, special_matrix(Special.PERMUTATION, n, kind, perm=p))
        assert is_monomial(P)
        inv = monomial_inverse(P)
        I = Matrix.identity(kind, n)
        assert mat_mul(P, inv) == I == mat_mul(inv, P)
        assert quasi_inverse(P) == inv

    def test_monomial_inverse_rejects(self):
        with pytest.raises(NotInvertible):
            monomial_inverse(M(SMAX, [["0o", "-inf"], ["-inf", "0"]]))

    def test_quasi_inverse_singular(self):
        with pytest.raises(Singular):
            quasi_inverse(M(SMAX, [["0", "0"], ["0", "0"]]))

    @given(st.sampled_from(KINDS).flatmap(lambda k: matrices(k, 1, 4)), st.sampled_from(["left", "right"]))
    def test_definite_form_reconstructs(self, A, side):
        if not is_nonsingular(A):
            with pytest.raises(Singular):
                definite_form(A, side)
            return
        d = definite_form(A, side)
        assert is_definite(d.definite_part)
        assert det(d.normalizer) == det(A)
        rebuilt = mat_mul(d.normalizer, d.definite_part) if side == "left" else mat_mul(d.definite_part, d.normalizer)
        assert rebuilt == A
        assert list(d.permutation) == dominant_permutation(A)

    @given(matrices(RMAX, 1, 4, lo=-6, hi=0))
    def test_kleene_star_fixpoint(self, A):
        # entries <= 0 means every cycle weighs <= 0, so the star exists
        S = kleene_star(A)
        I = Matrix.identity(A.kind, A.n)
        assert S == mat_add(I, mat_mul(A, S))
        assert mat_mul(S, S) == S

    def test_kind_and_size_errors(self):
        with pytest.raises(KindMismatch):
            mat_mul(fix_a(SMAX), fix_a(RMAX))
        with pytest.raises(SizeMismatch):
            mat_add(fix_a(SMAX), fix_b())
        with pytest.raises(SizeMismatch):
            M(SMAX, [["0", "1"], ["1"]])
        with pytest.raises(BadArity):
            compound_matrix(fix_a(SMAX), 3)
        with pytest.raises(KindMismatch):
            fix_a(SMAX).to_kind(SUPER)

    def test_magnitude_guard(self):
        with pytest.raises(TooLarge):
            Matrix.from_elements([[Element(RMAX, MAG_LIMIT)]])

    def test_rational_magnitudes_share_a_denominator(self):
        A = M(RMAX, [["1/2", "1/3"], ["-inf", "2"]])
        assert A.den == 6
        assert det(A) == e("5/2", RMAX)
        assert A.tokens() == [["1/2", "1/3"], ["-inf", "2"]]

    def test_lift_to_supertropical(self):
        A = fix_a(RMAX).to_kind(SUPER)
        assert A.kind is SUPER and A[0, 1] == e("2", SUPER)

    def test_equality_and_hash(self):
        assert fix_a(SMAX) == fix_a(SMAX)
        assert hash(fix_a(SMAX)) == hash(fix_a(SMAX))
        assert fix_a(SMAX) != fix_a(SUPER)


def _arrays(kind, n, rng, batch=None):
    shape = (n, n) if batch is None else (batch, n, n)
    m = rng.integers(-9, 10, size=shape).astype(np.int64)
    m[rng.random(shape) < 0.2] = K.NEG
    tags = {0: [0], 1: [0, 1, 2], 2: [0, 2]}[kind]
    t = rng.choice(tags, size=shape).astype(np.int64)
    t[m == K.NEG] = 0
    return m, t


@pytest.mark.parametrize("kind", [0, 1, 2])
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_backends_agree(kind, n):
    rng = np.random.default_rng([kind, n])
    for _ in range(10):
        m, t = _arrays(kind, n, rng)
        m2, t2 = _arrays(kind, n, rng)
        bm, bt = _arrays(kind, n, rng, batch=4)
        outs = {}
        for be in ("numba", "numpy"):
            with K.use_backend(be):
                outs[be] = [
                    K.ew_add(m, t, m2, t2, kind),
                    K.ew_mul(m, t, m2, t2, kind),
                    K.matmul(m, t, m2, t2, kind),
                    K.det(m, t, kind),
                    K.det(m, t, kind, False),
                    K.det_batch(bm, bt, kind),
                    K.principal_traces(m, t, kind),
                    K.adjoint(m, t, kind),
                    K.assignment_value(m),
                ] + [K.compound(m, t, np.array(zero_based_combos(n, k), np.int64).reshape(-1, k), kind)
                     for k in range(1, n + 1)]
        for a, b in zip(outs["numba"], outs["numpy"]):
            for x, y in zip(a, b):
                assert np.array_equal(np.asarray(x), np.asarray(y))


def test_backend_switch():
    before = K.backend()
    with K.use_backend("numpy"):
        assert K.backend() == "numpy"
    assert K.backend() == before
    with pytest.raises(ValueError):
        K.set_backend("cuda")
