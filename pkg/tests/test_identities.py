import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import tropalg.identities as ids
from conftest import RMAX, SMAX, SUPER
from tropalg.errors import BadArity, KindMismatch, SizeMismatch
from tropalg.fixtures import fix_a, fix_b, fix_e
from tropalg.identities import REGISTRY, check, random_definite, random_matrix, random_nonsingular, sample_inputs
from tropalg.matrix import NEG, Matrix, is_definite, is_nonsingular
from tropalg.report import IdentityId, Status
from tropalg.semiring import one
from tropalg.suite import fixture_cases


def test_registry_covers_every_id():
    assert set(REGISTRY) == set(IdentityId)
    for id, spec in REGISTRY.items():
        assert spec.id is id
        assert spec.kinds


@pytest.mark.parametrize("case", fixture_cases(), ids=lambda c: c[0])
def test_fixtures_never_fail(case):
    label, kind, inputs = case
    for id in IdentityId:
        if id is IdentityId.SIGN_LEMMAS:
            continue
        r = check(id, inputs)
        assert r.status is not Status.FAIL, r.to_json()


class TestPublishedExamples:
    def test_sylvester_franke_on_fix_b(self):
        r = check(IdentityId.SYLVESTER_FRANKE, {"A": fix_b()})
        assert r.passed and r.notes["equality_held"] is False
        assert check(IdentityId.SF_MODULUS, {"A": fix_b()}).passed

    def test_conj_trace_on_fix_e(self):
        E, A = fix_e()
        assert check(IdentityId.CONJ_TRACE, {"A": A, "E": E}).passed

    def test_jacobi_on_fix_a(self):
        assert check(IdentityId.JACOBI, {"A": fix_a(SMAX)}).passed

    def test_majorization_on_fix_a(self):
        assert check(IdentityId.MAJORIZATION, {"A": fix_a(RMAX)}).passed

    @pytest.mark.parametrize("kind", [RMAX, SMAX, SUPER])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_sign_lemmas(self, kind, n):
        assert check(IdentityId.SIGN_LEMMAS, {"n": n, "kind": kind}).passed


class TestInterface:
    def test_missing_matrix(self):
        with pytest.raises(BadArity):
            check(IdentityId.DET_AB, {"A": fix_a()})

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch):
            check(IdentityId.DET_AB, {"A": fix_a(SMAX), "B": fix_a(RMAX)})

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            check(IdentityId.DET_AB, {"A": fix_a(SMAX), "B": fix_b()})

    def test_unsupported_kind_is_a_skip(self):
        r = check(IdentityId.MAJORIZATION, {"A": fix_a(SMAX)})
        assert r.status is Status.SKIP and r.passed is None and r.reason

    def test_unmet_hypothesis_is_a_skip(self):
        r = check(IdentityId.QUASI_IDENTITY, {"A": Matrix.zeros(SMAX, 2)})
        assert r.status is Status.SKIP

    def test_report_json_is_stable(self):
        a = check(IdentityId.JACOBI, {"A": fix_a(SMAX)}).to_json()
        b = check(IdentityId.JACOBI, {"A": fix_a(SMAX)}).to_json()
        assert a == b
        d = json.loads(a)
        assert d["passed"] is True and "elapsed" not in d


def _bump(M):
    """Raise the (0, 0) entry of a matrix by one unit."""
    mag = M.mag.copy()
    mag[0, 0] = 0 if mag[0, 0] == NEG else mag[0, 0] + M.den
    return Matrix(M.kind, mag, M.tag, M.den)


_diag = Matrix.from_tokens(SMAX, [["1", "-inf"], ["-inf", "~2"]])


def _mutations():
    from tropalg.semiring import Element as El

    def bump_elem(e):
        return El(e.kind, 0 if e.is_zero else e.mag + 1, e.tag)

    return [
        ("quasi_inverse", lambda f: (lambda A: _bump(f(A))), IdentityId.QUASI_IDENTITY, {"A": fix_a(SMAX)}),
        ("det", lambda f: (lambda A: bump_elem(f(A))), IdentityId.DET_AB, {"A": _diag, "B": fix_a(SMAX)}),
        ("bijection_sign", lambda f: (lambda s, k: one(k)), IdentityId.SIGN_LEMMAS, {"n": 3, "kind": SMAX}),
        ("compound_matrix", lambda f: (lambda A, k: _bump(f(A, k)) if k == 2 else f(A, k)),
         IdentityId.SF_MODULUS, {"A": fix_b()}),
        ("adjoint", lambda f: (lambda A: _bump(f(A))), IdentityId.ADJ_MUL, {"A": _diag, "B": fix_a(SMAX)}),
        ("kleene_star", lambda f: (lambda A: _bump(f(A))), IdentityId.KLEENE_DEFINITE, {"A": fix_a(RMAX)}),
        ("char_poly", lambda f: (lambda A: type(f(A))(A.kind, [bump_elem(f(A).coeffs[0]), *f(A).coeffs[1:]])),
         IdentityId.CHARPOLY_REL, {"A": fix_a(SUPER), "m": 2}),
    ]


@pytest.mark.parametrize("name,mutate,id,inputs", _mutations(), ids=lambda x: x if isinstance(x, str) else "")
def test_corrupted_checker_reports_a_witness(monkeypatch, name, mutate, id, inputs):
    assert check(id, inputs).passed, "the unmutated check must pass"
    monkeypatch.setattr(ids, name, mutate(getattr(ids, name)))
    r = check(id, inputs)
    assert r.status is Status.FAIL
    assert r.passed is False
    assert r.witness
    json.loads(r.to_json())


class TestSamplers:
    def test_random_matrix_is_seeded(self):
        a = random_matrix(SMAX, 4, np.random.default_rng(3))
        b = random_matrix(SMAX, 4, np.random.default_rng(3))
        assert a == b

    @pytest.mark.parametrize("kind", [RMAX, SMAX, SUPER])
    def test_structured_samplers(self, kind):
        rng = np.random.default_rng(0)
        for _ in range(20):
            assert is_nonsingular(random_nonsingular(kind, 3, rng))
            assert is_definite(random_definite(kind, 3, rng))

    def test_sample_inputs_names(self):
        rng = np.random.default_rng(0)
        for id, spec in REGISTRY.items():
            if id is IdentityId.SIGN_LEMMAS:
                continue
            for kind in spec.kinds:
                inp = sample_inputs(id, kind, 3, rng)
                assert all(name in inp for name in spec.matrices)


_checkable = [(id, kind) for id, spec in REGISTRY.items() if id is not IdentityId.SIGN_LEMMAS for kind in spec.kinds]


@settings(max_examples=len(_checkable) * 4)
@given(st.sampled_from(_checkable), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_no_identity_fails_on_random_instances(idk, n, seed):
    id, kind = idk
    r = check(id, sample_inputs(id, kind, n, np.random.default_rng(seed)))
    assert r.status is not Status.FAIL, r.to_json()
