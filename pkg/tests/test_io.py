import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import KINDS, RMAX, SMAX, SUPER, elements, matrices
from tropalg.charpoly import CornerRoot, Polynomial, char_poly, corner_roots
from tropalg.errors import ParseError
from tropalg.fixtures import fix_a
from tropalg.io import (
    error_obj,
    matrix_to_text,
    parse_matrix,
    parse_polynomial,
    print_matrix,
    print_polynomial,
    roots_to_obj,
    to_jsonable,
)
from tropalg.matrix import Matrix, adjoint, quasi_inverse
from tropalg.semiring import parse_element

any_matrix = st.sampled_from(KINDS).flatmap(lambda k: matrices(k, 1, 4, dens=(1, 2, 5)))


def test_fix_a_document():
    A = parse_matrix('{"semiring":"smax","entries":[["3","2o"],["1","1"]]}')
    assert A == fix_a(SMAX)
    I = parse_matrix('{"semiring":"rmax","entries":[["0","-inf"],["-inf","0"]]}')
    assert I == Matrix.identity(RMAX, 2)


def test_text_grid():
    A = parse_matrix("smax\n3 2o  # first row\n1 1\n")
    assert A == fix_a(SMAX)
    assert parse_matrix(matrix_to_text(A)) == A


@given(any_matrix)
def test_matrix_round_trip(A):
    assert parse_matrix(print_matrix(A)) == A
    assert parse_matrix(matrix_to_text(A)) == A


@given(any_matrix)
def test_produced_matrices_round_trip(A):
    for M in (adjoint(A), A @ A):
        assert parse_matrix(print_matrix(M)) == M
    f = char_poly(A)
    assert parse_polynomial(print_polynomial(f)) == f


@given(st.sampled_from(KINDS).flatmap(lambda k: st.lists(elements(k, dens=(1, 3)), min_size=1, max_size=5).map(
    lambda cs: Polynomial(k, cs))))
def test_polynomial_round_trip(f):
    assert parse_polynomial(print_polynomial(f)) == f


@pytest.mark.parametrize("src,line,col", [
    ('{"semiring":"smax","entries":[["5v"]]}', 1, 1),
    ('{"semiring":"smax","entries":[["1","2"],["3","x"]]}', 2, 2),
    ("smax\n1 2\n3 4v\n", 3, 3),
    ("smax\n1 2\n3\n", 3, None),
    ('{"semiring":"smax",', 1, None),
])
def test_parse_errors_carry_positions(src, line, col):
    with pytest.raises(ParseError) as ei:
        parse_matrix(src)
    if line is not None:
        assert ei.value.line == line
    if col is not None:
        assert ei.value.column == col
    d = error_obj(ei.value)
    assert d["error"] == "ParseError"


@pytest.mark.parametrize("src", [
    '{"semiring":"nope","entries":[["1"]]}',
    '{"entries":[["1"]]}',
    '{"semiring":"rmax","entries":[]}',
    '{"semiring":"rmax","entries":[[1.5]]}',
    "",
    "tropical\n1\n",
])
def test_bad_documents(src):
    with pytest.raises(ParseError):
        parse_matrix(src)


def test_roots_document():
    doc = roots_to_obj(RMAX, corner_roots(char_poly(fix_a(RMAX))))
    assert doc == {"semiring": "rmax", "roots": [{"value": "3", "multiplicity": 1}, {"value": "1", "multiplicity": 1}]}
    doc = roots_to_obj(SMAX, corner_roots(char_poly(fix_a(SMAX))))
    assert doc == {"semiring": "smax", "roots": [{"value": "3"}, {"value": "1"}]}


def test_to_jsonable():
    obj = {"A": quasi_inverse(fix_a(SMAX)), "x": parse_element("~2", SMAX), "r": CornerRoot(parse_element("1", RMAX), 2)}
    out = json.loads(json.dumps(to_jsonable(obj)))
    assert out == {"A": {"semiring": "smax", "entries": [["-3", "-2o"], ["~-3", "-1"]]}, "x": "~2", "r": "1 (x2)"}
