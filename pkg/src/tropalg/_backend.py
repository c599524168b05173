"""Backend selection for the array kernels.

``TROPALG_BACKEND=numba`` (default when numba imports) compiles the kernels
with ``numba.njit``; ``TROPALG_BACKEND=numpy`` uses the vectorized numpy
implementations. Both produce identical results.
"""
import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None


def _initial_backend() -> str:
    name = os.environ.get("TROPALG_BACKEND", "").strip().lower()
    if name in ("numpy", "python", "off", "0"):
        return "numpy"
    if name in ("", "numba", "jit", "1"):
        return "numba" if HAVE_NUMBA else "numpy"
    raise ValueError(f"TROPALG_BACKEND must be 'numba' or 'numpy', got {name!r}")


def njit(f=None, **options):
    """``numba.njit`` with caching; identity decorator without numba."""
    options.setdefault("cache", True)
    if f is None:
        return lambda g: njit(g, **options)
    if not HAVE_NUMBA:
        return f
    return numba.njit(**options)(f)
