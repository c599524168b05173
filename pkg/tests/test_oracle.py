import pytest

from conftest import RMAX, SMAX, SUPER
from tropalg.errors import TooLarge
from tropalg.fixtures import fix_a, fix_c
from tropalg.matrix import Matrix
from tropalg.oracle import oracle_char_poly, oracle_compound, oracle_det, oracle_permanent
from tropalg.semiring import parse_element


def test_examples():
    assert oracle_det(fix_a(SMAX)) == parse_element("4", SMAX)
    assert oracle_permanent(fix_a(RMAX)) == parse_element("4", RMAX)
    assert [str(c) for c in oracle_char_poly(fix_a(SMAX))] == ["4", "~3", "0"]
    assert [str(c) for c in oracle_char_poly(Matrix.zeros(SMAX, 2))] == ["-inf", "-inf", "0"]
    sq = fix_a(SUPER) @ fix_a(SUPER)
    assert [str(c) for c in oracle_char_poly(sq)] == ["9v", "6", "0"]
    want = [["0", "0", "0"], ["~0", "0", "0"], ["~0", "~0", "0"]]
    assert [[str(x) for x in r] for r in oracle_compound(fix_c(), 2)] == want


def test_trivial_compounds():
    A = fix_c()
    assert oracle_compound(A, 1) == A.entries
    assert oracle_compound(A, 3) == [[oracle_det(A)]]


def test_size_limits():
    with pytest.raises(TooLarge):
        oracle_det(Matrix.identity(RMAX, 8))
    with pytest.raises(TooLarge):
        oracle_compound(Matrix.identity(RMAX, 7), 2)
    with pytest.raises(TooLarge):
        oracle_char_poly(Matrix.identity(RMAX, 6))
