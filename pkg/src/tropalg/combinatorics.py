"""Subsets, bijections between ordered sets, and their signs.

Subsets are 1-based and ranked in lexicographic order, matching the row and
column order of compound matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from typing import Iterator, Sequence

from .errors import BadArity
from .semiring import Element, SemiringKind, minus_one_power


@lru_cache(maxsize=None)
def _subset_list(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def _rank_table(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: r for r, s in enumerate(_subset_list(n, k), start=1)}


@dataclass(frozen=True)
class SubsetIndex:
    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise BadArity(f"members must be strictly increasing: {members}")
        if members and (members[0] < 1 or members[-1] > self.n):
            raise BadArity(f"members must lie in [1, {self.n}]: {members}")

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def rank(self) -> int:
        return _rank_table(self.n, self.k)[self.members]

    @property
    def index(self) -> int:
        """0-based position, convenient for array indexing."""
        return self.rank - 1

    def complement(self) -> "SubsetIndex":
        s = set(self.members)
        return SubsetIndex(self.n, tuple(i for i in range(1, self.n + 1) if i not in s))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def subsets(n: int, k: int) -> list[SubsetIndex]:
    if k < 0 or k > n:
        raise BadArity(f"k={k} outside [0, {n}]")
    return [SubsetIndex(n, s) for s in _subset_list(n, k)]


def subset_from_rank(n: int, k: int, rank: int) -> SubsetIndex:
    return SubsetIndex(n, _subset_list(n, k)[rank - 1])


def zero_based_combos(n: int, k: int) -> list[tuple[int, ...]]:
    return [tuple(i - 1 for i in s) for s in _subset_list(n, k)]


@dataclass(frozen=True)
class Bijection:
    """Bijection between two equally sized ordered sets.

    ``images[p]`` is the image of the p-th smallest element of ``domain``.
    """

    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.domain) != len(self.codomain) or sorted(self.images) != sorted(self.codomain):
            raise BadArity("images must be a bijection onto the codomain")

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> "Bijection":
        dom = tuple(sorted(mapping))
        return cls(dom, tuple(sorted(mapping.values())), tuple(mapping[i] for i in dom))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "Bijection":
        """From a 1-based permutation word ``perm[i-1] = σ(i)``."""
        n = len(perm)
        return cls(tuple(range(1, n + 1)), tuple(range(1, n + 1)), tuple(perm))

    def __call__(self, i: int) -> int:
        return self.images[self.domain.index(i)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain, self.images))

    def restrict(self, part: Sequence[int]) -> "Bijection":
        d = self.as_dict()
        return Bijection.from_mapping({i: d[i] for i in part})

    def compose(self, other: "Bijection") -> "Bijection":
        """``self ∘ other``."""
        d = self.as_dict()
        return Bijection.from_mapping({i: d[j] for i, j in other.as_dict().items()})

    def inverse(self) -> "Bijection":
        return Bijection.from_mapping({j: i for i, j in self.as_dict().items()})

    def inversions(self) -> int:
        # positions in the codomain order are what matter
        pos = {c: r for r, c in enumerate(self.codomain)}
        w = [pos[x] for x in self.images]
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def bijections(domain: Sequence[int], codomain: Sequence[int]) -> Iterator[Bijection]:
    dom, cod = tuple(domain), tuple(codomain)
    for img in permutations(cod):
        yield Bijection(dom, cod, img)


def inversion_count(word: Sequence[int]) -> int:
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def transposition_parity(word: Sequence[int]) -> int:
    """Parity of a permutation word via its cycle decomposition."""
    order = sorted(word)
    pos = {v: i for i, v in enumerate(order)}
    p = [pos[v] for v in word]
    seen = [False] * len(p)
    swaps = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        length = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        swaps += length - 1
    return swaps % 2


def bijection_sign(sigma: Bijection, kind: SemiringKind) -> Element:
    return minus_one_power(kind, sigma.inversions())


def restriction_sign_product(perm: Sequence[int], I: SubsetIndex, kind: SemiringKind) -> tuple[Element, Element, Element]:
    """Factors whose product is sign(perm): restricted signs and the index-sum sign."""
    pi = Bijection.permutation(perm)
    Ic = I.complement()
    s_in = bijection_sign(pi.restrict(I.members), kind)
    s_out = bijection_sign(pi.restrict(Ic.members), kind)
    e = sum(i + pi(i) for i in I.members)
    return s_in, s_out, minus_one_power(kind, e)


def jacobi_index_map(I: SubsetIndex) -> SubsetIndex:
    """I ↦ {{i}^c : i ∈ I^c}, as a subset of the (n-1)-subsets of [n].

    The lexicographic rank of {i}^c among the (n-1)-subsets is n + 1 - i.
    """
    n = I.n
    ranks = sorted(n + 1 - i for i in I.complement().members)
    return SubsetIndex(n, tuple(ranks))


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycle decomposition of a 1-based permutation word, fixed points included."""
    n = len(perm)
    seen = [False] * (n + 1)
    out = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        cyc = []
        j = s
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j - 1]
        out.append(tuple(cyc))
    return out


def elementary_cycles(n: int) -> Iterator[tuple[int, ...]]:
    """Every elementary cycle on [n], each listed once starting at its minimum."""
    for length in range(1, n + 1):
        for nodes in combinations(range(1, n + 1), length):
            first, rest = nodes[0], nodes[1:]
            for tail in permutations(rest):
                yield (first, *tail)


def elementary_paths(n: int) -> Iterator[tuple[int, ...]]:
    """Every elementary (vertex-simple) path with at least two vertices."""
    for length in range(2, n + 1):
        for nodes in permutations(range(1, n + 1), length):
            yield nodes


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
