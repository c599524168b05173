"""Suite driver: fixtures, exhaustive small grids and seeded random instances."""
from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator, Optional, Sequence

import numpy as np

from .fixtures import fix_a, fix_b, fix_c, fix_e
from .kernels import _np as _NPK
from .identities import REGISTRY, check, random_matrix, sample_inputs
from .matrix import NEG, Matrix, adjoint, mat_mul, quasi_inverse
from .report import CheckReport, IdentityId, Status
from .semiring import Element, SemiringKind, Tag, add, all_tags, mul, zero

ZERO_MARK = None  # stands for 𝟘 in a value grid


@dataclass
class SuiteConfig:
    semirings: tuple[SemiringKind, ...] = tuple(SemiringKind)
    sizes: tuple[int, ...] = (3, 4)
    exhaustive_value_grid: tuple[Optional[int], ...] = (-1, 0, 1, ZERO_MARK)
    trials: int = 200
    seed: int = 1
    grid_max_n: int = 2
    sign_max_n: int = 5
    partners: int = 3
    ids: Optional[tuple[IdentityId, ...]] = None
    fixtures: bool = True
    grid: bool = True
    keep_all: bool = False

    def selected(self) -> list[IdentityId]:
        return list(self.ids) if self.ids else list(IdentityId)


# instance sources ------------------------------------------------------------------------------


def grid_values(kind: SemiringKind, grid: Sequence[Optional[int]]) -> list[tuple[int, int]]:
    """(magnitude, tag) pairs: every grid magnitude with every tag, plus 𝟘."""
    out = []
    for g in grid:
        if g is ZERO_MARK:
            out.append((NEG, 0))
        else:
            out.extend((int(g), int(t)) for t in all_tags(kind))
    return out


def grid_matrices(kind: SemiringKind, n: int, grid: Sequence[Optional[int]]) -> Iterator[Matrix]:
    vals = grid_values(kind, grid)
    for combo in itertools.product(vals, repeat=n * n):
        mag = np.array([v[0] for v in combo], np.int64).reshape(n, n)
        tag = np.array([v[1] for v in combo], np.int64).reshape(n, n)
        yield Matrix(kind, mag, tag)


def fixture_cases() -> list[tuple[str, SemiringKind, dict[str, Any]]]:
    cases = []
    for kind in SemiringKind:
        A = fix_a(kind)
        cases.append(("FIX-A", kind, {"A": A, "B": A, "E": A}))
    B, C = fix_b(), fix_c()
    cases.append(("FIX-B", SemiringKind.SMAX, {"A": B, "B": C, "E": C}))
    cases.append(("FIX-C", SemiringKind.SMAX, {"A": C, "B": B, "E": C}))
    E, A = fix_e()
    cases.append(("FIX-E", SemiringKind.SUPERTROPICAL, {"A": A, "B": E, "E": E}))
    return cases


def _inputs_for(id: IdentityId, given: dict[str, Any]) -> dict[str, Any]:
    spec = REGISTRY[id]
    out = {k: given[k] for k in spec.matrices + spec.optional if k in given}
    return out


def _seed_for(seed: int, *parts: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed & (2**64 - 1), *parts]))


# FIX-E: no nonsingular F conjugates E^∇AE back to A ----------------------------------------------


def fix_e_search(lo: int = -3, hi: int = 3, cross_check: bool = True) -> CheckReport:
    """Exhaustive search for a nonsingular F with F^∇ A' F = 𝓘 over supertropical.

    Every F with entries in {𝟘} ∪ {m, m^ν : lo ≤ m ≤ hi} is tested at once on the
    closed form of adj(F) A' F for A' = [[𝟙, 𝟙^ν], [𝟘, 𝟙]]. F^∇ A' F = 𝓘 exactly when
    the off-diagonal entries are 𝟘 and both diagonal entries equal det(F). With
    ``cross_check`` the closed form is also compared with the matrix routines on
    every nonsingular F (slow: one 2x2 product chain per F).
    """
    kind = SemiringKind.SUPERTROPICAL
    E, I = fix_e()
    Ap = mat_mul(mat_mul(quasi_inverse(E), I), E)
    expected = Matrix.from_tokens(kind, [["0", "0v"], ["-inf", "0"]])
    vals = np.array(grid_values(kind, [ZERO_MARK, *range(lo, hi + 1)]), np.int64)
    combos = np.array(list(itertools.product(range(len(vals)), repeat=4)), np.int64)
    a, b, c, d = ((vals[combos[:, i], 0], vals[combos[:, i], 1]) for i in range(4))
    sup = kind.code

    def add_(x, y):
        return _NPK.ew_add(x[0], x[1], y[0], y[1], sup)

    def mul_(x, y):
        return _NPK.ew_mul(x[0], x[1], y[0], y[1], sup)

    def ghost(x):
        return x[0], np.where(x[0] == NEG, 0, 2)

    det_f = add_(mul_(a, d), mul_(b, c))
    nonsingular = (det_f[0] != NEG) & (det_f[1] != 2)
    closed = [
        [add_(det_f, mul_(ghost(c), d)), ghost(add_(mul_(b, d), mul_(d, d)))],
        [ghost(add_(mul_(c, a), mul_(c, c))), add_(det_f, mul_(ghost(d), c))],
    ]
    back = (
        nonsingular
        & (closed[0][1][0] == NEG)
        & (closed[1][0][0] == NEG)
        & (closed[0][0][0] == det_f[0]) & (closed[0][0][1] == 0)
        & (closed[1][1][0] == det_f[0]) & (closed[1][1][1] == 0)
    )

    def matrix_at(i: int) -> Matrix:
        mag = np.array([[a[0][i], b[0][i]], [c[0][i], d[0][i]]], np.int64)
        tag = np.array([[a[1][i], b[1][i]], [c[1][i], d[1][i]]], np.int64)
        return Matrix(kind, mag, tag)

    rel = "E^∇AE = [[𝟙,𝟙^ν],[𝟘,𝟙]] and F^∇A'F ≠ 𝓘 for every nonsingular F"
    if back.any():
        F = matrix_at(int(np.flatnonzero(back)[0]))
        return CheckReport(IdentityId.CONJ_TRACE, Status.FAIL, rel, {"F": F}, {"conjugates_back": True})
    if cross_check:
        for i in np.flatnonzero(nonsingular):
            F = matrix_at(int(i))
            cm = np.array([[closed[r][s][0][i] for s in range(2)] for r in range(2)], np.int64)
            ct = np.array([[closed[r][s][1][i] for s in range(2)] for r in range(2)], np.int64)
            want = Matrix(kind, cm, ct)
            got = mat_mul(mat_mul(adjoint(F), Ap), F)
            if got != want:
                return CheckReport(IdentityId.CONJ_TRACE, Status.FAIL, "adj(F)A'F closed form", {"F": F},
                                   {"lhs": got, "rhs": want})
            if mat_mul(mat_mul(quasi_inverse(F), Ap), F) == I:  # pragma: no cover - excluded above
                return CheckReport(IdentityId.CONJ_TRACE, Status.FAIL, rel, {"F": F}, {"conjugates_back": True})
    status = Status.PASS if Ap == expected else Status.FAIL
    witness = None if status is Status.PASS else {"lhs": Ap, "rhs": expected}
    return CheckReport(
        IdentityId.CONJ_TRACE,
        status,
        rel,
        {"fixture": "FIX-E", "E": E, "A": I, "range": [lo, hi]},
        witness,
        notes={"nonsingular_F_searched": int(nonsingular.sum()), "cross_checked": cross_check},
    )


# running -----------------------------------------------------------------------------------------


class _Bucket:
    """Aggregate for one (id, source, semiring, n)."""

    def __init__(self, id: IdentityId, source: str, kind: SemiringKind, n: int):
        self.key = (id, source, kind, n)
        self.counts = {"pass": 0, "fail": 0, "skip": 0}
        self.fired = 0
        self.skip_reasons: dict[str, int] = {}
        self.elapsed = 0.0

    def add(self, r: CheckReport) -> None:
        self.counts[r.status.value] += 1
        self.fired += int(r.notes.get("fired", 0))
        self.elapsed += r.elapsed
        if r.status is Status.SKIP:
            self.skip_reasons[r.reason] = self.skip_reasons.get(r.reason, 0) + 1

    def report(self) -> CheckReport:
        id, source, kind, n = self.key
        c = self.counts
        if c["fail"]:
            status = Status.FAIL
        elif c["pass"]:
            status = Status.PASS
        else:
            status = Status.SKIP
        notes: dict[str, Any] = {"evaluated": c["pass"] + c["fail"], **c}
        if id in (IdentityId.JACOBI_THIN_EQ, IdentityId.CHARPOLY_THIN_EQ):
            notes["hypothesis_fired"] = self.fired
        if self.skip_reasons:
            notes["skip_reasons"] = dict(sorted(self.skip_reasons.items()))
        reason = "" if status is not Status.SKIP else "no instance satisfied the hypotheses"
        witness = {"failed_instances": c["fail"]} if c["fail"] else None
        return CheckReport(id, status, REGISTRY[id].relation,
                           {"source": source, "semiring": kind, "n": n}, witness, reason, notes, self.elapsed)


def _input_hash(r: CheckReport) -> str:
    blob = json.dumps(r.to_dict()["inputs"], sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(blob.encode()).hexdigest()


def sort_reports(reports: Iterable[CheckReport]) -> list[CheckReport]:
    order = {id: i for i, id in enumerate(IdentityId)}
    return sorted(reports, key=lambda r: (order[r.id], _input_hash(r)))


def iter_instances(config: SuiteConfig) -> Iterator[tuple[str, SemiringKind, int, IdentityId, dict[str, Any]]]:
    """(source, kind, n, id, inputs) for every check the suite will run."""
    ids = config.selected()
    kinds = [SemiringKind(k) for k in config.semirings]
    if config.fixtures:
        for label, kind, given in fixture_cases():
            if kind not in kinds:
                continue
            for id in ids:
                if id is not IdentityId.SIGN_LEMMAS:
                    yield f"fixture:{label}", kind, given["A"].n, id, _inputs_for(id, given)
    if IdentityId.SIGN_LEMMAS in ids:
        for kind in kinds:
            top = config.sign_max_n if kind is SemiringKind.SMAX else min(config.sign_max_n, 4)
            for n in range(1, top + 1):
                yield "exhaustive", kind, n, IdentityId.SIGN_LEMMAS, {"n": n, "kind": kind}
    if config.grid:
        for kind in kinds:
            for n in range(1, config.grid_max_n + 1):
                mats = list(grid_matrices(kind, n, config.exhaustive_value_grid))
                rng = _seed_for(config.seed, 0, kind.code, n)
                pool = [mats[int(i)] for i in rng.integers(0, len(mats), size=max(config.partners, 1))]
                for id in ids:
                    if id is IdentityId.SIGN_LEMMAS:
                        continue
                    spec = REGISTRY[id]
                    others = [x for x in spec.matrices + spec.optional if x != "A"]
                    for idx, X in enumerate(mats):
                        if not others:
                            yield "grid", kind, n, id, {"A": X}
                            continue
                        p, q = pool[idx % len(pool)], pool[(idx + 1) % len(pool)]
                        yield "grid", kind, n, id, {"A": X, **{o: p for o in others}}
                        yield "grid", kind, n, id, {"A": q, **{o: X for o in others}}
    for kind in kinds:
        for n in config.sizes:
            for id in ids:
                if id is IdentityId.SIGN_LEMMAS or kind not in REGISTRY[id].kinds:
                    continue
                rng = _seed_for(config.seed, 1 + list(IdentityId).index(id), kind.code, n)
                for _ in range(config.trials):
                    yield "random", kind, n, id, sample_inputs(id, kind, n, rng)


def run_suite(config: Optional[SuiteConfig] = None) -> list[CheckReport]:
    """Run every selected identity. Failures are always kept individually; passes
    and skips are folded into one aggregate report per (id, source, semiring, n)
    unless ``keep_all`` is set."""
    config = config or SuiteConfig()
    buckets: dict[tuple, _Bucket] = {}
    kept: list[CheckReport] = []
    for source, kind, n, id, inputs in iter_instances(config):
        r = check(id, inputs)
        src = "fixture" if source.startswith("fixture") else source
        b = buckets.get((id, src, kind, n))
        if b is None:
            b = buckets[(id, src, kind, n)] = _Bucket(id, src, kind, n)
        b.add(r)
        if config.keep_all or r.status is Status.FAIL or source.startswith("fixture"):
            if source.startswith("fixture"):
                r.inputs = {"fixture": source.split(":", 1)[1], **r.inputs}
            kept.append(r)
    if config.fixtures and IdentityId.CONJ_TRACE in config.selected() and SemiringKind.SUPERTROPICAL in config.semirings:
        kept.append(fix_e_search())
    if not config.keep_all:
        kept.extend(b.report() for b in buckets.values() if b.key[1] != "fixture")
    return sort_reports(kept)


def summarize(reports: Sequence[CheckReport]) -> dict[str, Any]:
    """Counts of reports by status, plus instance totals read from aggregates."""
    out: dict[str, Any] = {"reports": len(reports), "pass": 0, "fail": 0, "skip": 0}
    inst = {"pass": 0, "fail": 0, "skip": 0}
    aggregated = any("evaluated" in r.notes for r in reports)
    for r in reports:
        out[r.status.value] += 1
        if "evaluated" in r.notes:
            for k in inst:
                inst[k] += r.notes[k]
        elif not aggregated or "fixture" in r.inputs:
            # individual grid/random failures are already inside their aggregate
            inst[r.status.value] += 1
    out["instances"] = inst
    out["ok"] = out["fail"] == 0
    return out


__all__ = ["SuiteConfig", "run_suite", "summarize", "sort_reports", "fix_e_search", "grid_matrices",
           "grid_values", "fixture_cases", "iter_instances"]
