from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import RMAX, SMAX, SUPER
from tropalg.combinatorics import (
    Bijection,
    SubsetIndex,
    bijection_sign,
    bijections,
    binomial,
    cycles,
    elementary_cycles,
    elementary_paths,
    inversion_count,
    jacobi_index_map,
    restriction_sign_product,
    subset_from_rank,
    subsets,
    transposition_parity,
)
from tropalg.errors import BadArity
from tropalg.semiring import mul, one, parse_element

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_subsets_lexicographic():
    assert [s.members for s in subsets(4, 2)] == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert [s.members for s in subsets(4, 0)] == [()]
    assert [s.members for s in subsets(3, 3)] == [(1, 2, 3)]


@pytest.mark.parametrize("n", range(0, 7))
def test_subset_rank_round_trip(n):
    for k in range(n + 1):
        ss = subsets(n, k)
        assert len(ss) == binomial(n, k)
        for r, s in enumerate(ss, start=1):
            assert s.rank == r
            assert subset_from_rank(n, k, r) == s
            assert s.complement().complement() == s


def test_subset_validation():
    with pytest.raises(BadArity):
        SubsetIndex(3, (2, 1))
    with pytest.raises(BadArity):
        SubsetIndex(3, (0, 1))
    with pytest.raises(BadArity):
        subsets(3, 4)


@given(perms)
def test_inversions_match_transposition_parity(p):
    assert inversion_count(p) % 2 == transposition_parity(p)


@given(perms)
def test_bijection_group_laws(p):
    b = Bijection.permutation(p)
    ident = Bijection.permutation(sorted(p))
    assert b.compose(b.inverse()) == ident
    assert b.inverse().compose(b) == ident
    assert bijection_sign(b, SMAX) == bijection_sign(b.inverse(), SMAX)


@given(perms, perms)
def test_sign_is_multiplicative(p, q):
    if len(p) != len(q):
        return
    a, b = Bijection.permutation(p), Bijection.permutation(q)
    assert bijection_sign(a.compose(b), SMAX) == mul(bijection_sign(a, SMAX), bijection_sign(b, SMAX))


def test_sign_examples():
    assert bijection_sign(Bijection.permutation([1, 2, 3]), SMAX) == one(SMAX)
    assert bijection_sign(Bijection.permutation([2, 1]), SMAX) == parse_element("~0", SMAX)
    for p in permutations([1, 2, 3]):
        assert bijection_sign(Bijection.permutation(p), SUPER) == one(SUPER)
        assert bijection_sign(Bijection.permutation(p), RMAX) == one(RMAX)


def test_bijection_between_sets_counts_relative_order():
    b = Bijection.from_mapping({2: 7, 5: 3})
    assert b.inversions() == 1
    assert b(2) == 7
    assert len(list(bijections((1, 4), (2, 9)))) == 2
    with pytest.raises(BadArity):
        Bijection((1, 2), (1, 2), (1, 1))


def _product(t):
    return mul(mul(t[0], t[1]), t[2])


def test_restriction_sign_examples():
    assert _product(restriction_sign_product([2, 1], SubsetIndex(2, (1,)), SMAX)) == parse_element("~0", SMAX)
    assert _product(restriction_sign_product([4, 3, 2, 1], SubsetIndex(4, (1, 4)), SMAX)) == one(SMAX)
    for I in subsets(3, 2):
        assert _product(restriction_sign_product([1, 2, 3], I, SMAX)) == one(SMAX)


@pytest.mark.parametrize("n", range(1, 6))
def test_restriction_sign_product_exhaustive(n):
    for p in permutations(range(1, n + 1)):
        s = bijection_sign(Bijection.permutation(p), SMAX)
        for k in range(n + 1):
            for I in subsets(n, k):
                assert _product(restriction_sign_product(p, I, SMAX)) == s


def test_jacobi_index_map_examples():
    n3 = subsets(3, 2)
    img = jacobi_index_map(SubsetIndex(3, (1,)))
    assert [n3[r - 1].members for r in img.members] == [(1, 2), (1, 3)]
    assert jacobi_index_map(SubsetIndex(3, (1, 2, 3))).members == ()
    n4 = subsets(4, 3)
    img = jacobi_index_map(SubsetIndex(4, (2, 4)))
    assert [n4[r - 1].members for r in img.members] == [(1, 2, 4), (2, 3, 4)]


@pytest.mark.parametrize("n", range(1, 7))
def test_jacobi_index_map_is_a_bijection(n):
    top = subsets(n, n - 1)
    for k in range(n + 1):
        images = set()
        for I in subsets(n, k):
            J = jacobi_index_map(I)
            assert J.k == n - k
            # {i}^c for i outside I, read back through the ranking
            assert {tuple(sorted(set(range(1, n + 1)) - set(top[r - 1].members)))[0] for r in J.members} == set(
                I.complement().members)
            images.add(J)
        assert len(images) == binomial(n, k)


def test_cycles():
    assert cycles([2, 3, 1, 4]) == [(1, 2, 3), (4,)]
    assert cycles([1]) == [(1,)]


@pytest.mark.parametrize("n", range(1, 6))
def test_elementary_cycle_and_path_counts(n):
    # cycles through a fixed vertex set of size L: (L-1)!, with loops for L=1
    from math import factorial
    want = sum(binomial(n, L) * factorial(L - 1) for L in range(1, n + 1))
    assert len(list(elementary_cycles(n))) == want
    paths = list(elementary_paths(n))
    assert len(paths) == sum(len(list(permutations(range(n), L))) for L in range(2, n + 1))
    assert len(set(paths)) == len(paths)
    assert all(len(set(c)) == len(c) and c[0] == min(c) for c in elementary_cycles(n))


def test_binomial():
    assert [binomial(4, k) for k in range(-1, 6)] == [0, 1, 4, 6, 4, 1, 0]
    assert binomial(5, 2) == len(list(combinations(range(5), 2)))
