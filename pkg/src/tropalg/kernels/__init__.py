"""Dispatch between the numba and numpy kernel implementations.

The active backend starts from ``TROPALG_BACKEND`` and can be switched at
runtime with :func:`use_backend` (used by the tests to compare both).
"""
from contextlib import contextmanager

from .._backend import HAVE_NUMBA, _initial_backend
from . import _np
from ._np import NEG

if HAVE_NUMBA:
    from . import _jit
else:  # pragma: no cover
    _jit = _np

_NAMES = ("ew_add", "ew_mul", "matmul", "det", "det_batch", "compound", "principal_traces", "adjoint", "assignment_value")

_active = _initial_backend()


def backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _active = name


@contextmanager
def use_backend(name: str):
    prev = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def _impl():
    return _jit if _active == "numba" else _np


def ew_add(m1, t1, m2, t2, kind):
    return _impl().ew_add(m1, t1, m2, t2, kind)


def ew_mul(m1, t1, m2, t2, kind):
    return _impl().ew_mul(m1, t1, m2, t2, kind)


def matmul(ma, ta, mb, tb, kind):
    return _impl().matmul(ma, ta, mb, tb, kind)


def det(m, t, kind, signed=True):
    dm, dt = _impl().det(m, t, kind, signed)
    return int(dm), int(dt)


def det_batch(m, t, kind, signed=True):
    return _impl().det_batch(m, t, kind, signed)


def compound(m, t, combos, kind):
    return _impl().compound(m, t, combos, kind)


def principal_traces(m, t, kind):
    return _impl().principal_traces(m, t, kind)


def adjoint(m, t, kind):
    return _impl().adjoint(m, t, kind)


def assignment_value(w):
    v, ok = _impl().assignment_value(w)
    return int(v), bool(ok)


__all__ = ["NEG", "backend", "set_backend", "use_backend", *_NAMES]
