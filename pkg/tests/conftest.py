import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tropalg import Matrix, SemiringKind, Tag, zero
from tropalg.kernels import use_backend
from tropalg.semiring import Element, all_tags, thin_tags

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

KINDS = list(SemiringKind)
RMAX, SMAX, SUPER = SemiringKind.RMAX, SemiringKind.SMAX, SemiringKind.SUPERTROPICAL


@st.composite
def elements(draw, kind, lo=-6, hi=6, dens=(1,), thin=False, zero_weight=1):
    """Elements with magnitudes num/den; 𝟘 about once in (zero_weight + 4) draws."""
    if draw(st.integers(0, 4 + zero_weight)) < zero_weight:
        return zero(kind)
    num = draw(st.integers(lo, hi))
    den = draw(st.sampled_from(dens))
    tags = thin_tags(kind) if thin else all_tags(kind)
    return Element(kind, Fraction(num, den), draw(st.sampled_from(tags)))


@st.composite
def matrices(draw, kind, n_min=1, n_max=4, **kw):
    n = draw(st.integers(n_min, n_max))
    rows = [[draw(elements(kind, **kw)) for _ in range(n)] for _ in range(n)]
    return Matrix.from_elements(rows, kind)


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    with use_backend(request.param):
        yield request.param
