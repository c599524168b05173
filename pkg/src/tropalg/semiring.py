"""Scalars of the max-plus semiring and its two symmetric extensions.

Three semirings share one element type:

* ``RMAX``: the max-plus semiring, identity symmetry, every element is in
  the circ ideal.
* ``SMAX``: the symmetrized semiring, elements ``a``, ``~a`` (minus a) and
  ``a o`` (balanced).
* ``SUPERTROPICAL``: reals plus ghosts ``a v``; the symmetry is the identity
  and ``a + a`` is the ghost of ``a``.

Magnitudes are exact: a :class:`fractions.Fraction` or :data:`NEG_INF`, the
bottom element. Ties decide whether a sum is balanced/ghost, so floats are
never used for magnitudes.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import KindMismatch, NotInvertible, ParseError

NEG_INF = float("-inf")

Magnitude = Union[Fraction, float]


class SemiringKind(enum.Enum):
    RMAX = "rmax"
    SMAX = "smax"
    SUPERTROPICAL = "supertropical"

    @property
    def code(self) -> int:
        return _KIND_CODES[self]

    @property
    def circ_is_everything(self) -> bool:
        """True when the circ ideal is the whole semiring (RMAX)."""
        return self is SemiringKind.RMAX

    @property
    def minus_one_is_one(self) -> bool:
        return self is not SemiringKind.SMAX

    @property
    def idempotent(self) -> bool:
        return self is not SemiringKind.SUPERTROPICAL

    @classmethod
    def parse(cls, name: str) -> "SemiringKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ParseError(f"unknown semiring {name!r}") from None


_KIND_CODES = {SemiringKind.RMAX: 0, SemiringKind.SMAX: 1, SemiringKind.SUPERTROPICAL: 2}
KIND_FROM_CODE = {v: k for k, v in _KIND_CODES.items()}


class Tag(enum.IntEnum):
    """Element tag. ``POS`` doubles as "real" and ``CIRC`` as "ghost"."""

    POS = 0
    NEG = 1
    CIRC = 2


class Relation(enum.Enum):
    PRECEQ = "preceq"
    GEQ_CIRC = "geq_circ"
    BALANCE = "balance"
    CURLY = "curly"
    GEQ_CIRC_MOD = "geq_circ_mod"

    @property
    def symbol(self) -> str:
        return _REL_SYMBOLS[self]


_REL_SYMBOLS = {
    Relation.PRECEQ: "⪯",
    Relation.GEQ_CIRC: "⪰°",
    Relation.BALANCE: "∇",
    Relation.CURLY: "⋞",
    Relation.GEQ_CIRC_MOD: "⪰°|",
}


def _as_magnitude(value) -> Magnitude:
    if isinstance(value, float):
        if value == NEG_INF:
            return NEG_INF
        raise TypeError("float magnitudes are not exact; use int or Fraction")
    if value is None:
        return NEG_INF
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Element:
    """One semiring element. Construct with :func:`elem` to get normalization."""

    kind: SemiringKind
    mag: Magnitude
    tag: Tag = Tag.POS

    def __post_init__(self):
        m = self.mag
        if type(m) is float:
            if m != NEG_INF:
                raise TypeError("float magnitudes are not exact; use int or Fraction")
            if self.tag is not Tag.POS:
                object.__setattr__(self, "tag", Tag.POS)
        elif type(m) is not Fraction:
            object.__setattr__(self, "mag", Fraction(m))
        if self.kind is SemiringKind.RMAX and self.tag is not Tag.POS:
            raise KindMismatch("rmax elements carry no tag")
        if self.kind is SemiringKind.SUPERTROPICAL and self.tag is Tag.NEG:
            raise KindMismatch("supertropical elements have no sign")

    # classification ---------------------------------------------------
    @property
    def is_zero(self) -> bool:
        # the only float magnitude is NEG_INF
        return type(self.mag) is float

    @property
    def is_circ(self) -> bool:
        """Membership in the circ ideal (balanced/ghost elements and zero)."""
        return self.kind.circ_is_everything or self.is_zero or self.tag is Tag.CIRC

    @property
    def is_invertible(self) -> bool:
        return not self.is_zero and self.tag is not Tag.CIRC

    @property
    def is_thin(self) -> bool:
        return self.is_zero or self.is_invertible

    # operator sugar ---------------------------------------------------
    def __add__(self, other: "Element") -> "Element":
        return add(self, other)

    def __mul__(self, other: "Element") -> "Element":
        return mul(self, other)

    def __neg__(self) -> "Element":
        return negate(self)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({self.kind.value}:{format_element(self)})"


def elem(kind: SemiringKind, value, tag: Tag = Tag.POS) -> Element:
    return Element(kind, _as_magnitude(value), Tag(tag))


def zero(kind: SemiringKind) -> Element:
    return Element(kind, NEG_INF, Tag.POS)


def one(kind: SemiringKind) -> Element:
    return Element(kind, Fraction(0), Tag.POS)


def _check(a: Element, b: Element) -> SemiringKind:
    if a.kind is not b.kind:
        raise KindMismatch(f"{a.kind.value} vs {b.kind.value}")
    return a.kind


def add(a: Element, b: Element) -> Element:
    kind = _check(a, b)
    if type(b.mag) is float:
        return a
    if type(a.mag) is float:
        return b
    if a.mag > b.mag:
        return a
    if b.mag > a.mag:
        return b
    if kind is SemiringKind.SUPERTROPICAL:
        return Element(kind, a.mag, Tag.CIRC)
    if a.tag is b.tag:
        return a
    return Element(kind, a.mag, Tag.CIRC)


def mul(a: Element, b: Element) -> Element:
    kind = _check(a, b)
    if a.is_zero or b.is_zero:
        return zero(kind)
    if a.tag is Tag.CIRC or b.tag is Tag.CIRC:
        tag = Tag.CIRC
    else:
        tag = Tag(a.tag ^ b.tag)
    return Element(kind, a.mag + b.mag, tag)


def negate(a: Element) -> Element:
    if a.kind is not SemiringKind.SMAX or a.is_zero or a.tag is Tag.CIRC:
        return a
    return Element(a.kind, a.mag, Tag.NEG if a.tag is Tag.POS else Tag.POS)


def circ(a: Element) -> Element:
    return add(a, negate(a))


def modulus(a: Element) -> Magnitude:
    return a.mag


def inverse(a: Element) -> Element:
    if not a.is_invertible:
        raise NotInvertible(f"{format_element(a)} is not invertible")
    return Element(a.kind, -a.mag, a.tag)


def power(a: Element, k: int) -> Element:
    if k < 0:
        return power(inverse(a), -k)
    if k == 0:
        return one(a.kind)
    if a.is_zero:
        return a
    tag = a.tag
    if tag is Tag.NEG and k % 2 == 0:
        tag = Tag.POS
    return Element(a.kind, a.mag * k, tag)


def minus_one_power(kind: SemiringKind, k: int) -> Element:
    """(⊖𝟙)^k."""
    if kind is SemiringKind.SMAX and k % 2:
        return Element(kind, Fraction(0), Tag.NEG)
    return one(kind)


def relation(rel: Relation, a: Element, b: Element) -> bool:
    """Decide ``a REL b`` using closed forms (see tests for the witness oracle)."""
    kind = _check(a, b)
    if rel is Relation.CURLY:
        return add(a, b) == b
    if rel is Relation.BALANCE:
        return add(a, negate(b)).is_circ
    if rel is Relation.PRECEQ:
        if kind.circ_is_everything:
            return a.mag <= b.mag
        return a.mag < b.mag or a == b or (a.mag == b.mag and b.is_circ)
    if rel is Relation.GEQ_CIRC:
        if kind.circ_is_everything:
            return a.mag >= b.mag
        return a == b or (a.is_circ and a.mag >= b.mag)
    if rel is Relation.GEQ_CIRC_MOD:
        return a.mag == b.mag and relation(Relation.GEQ_CIRC, a, b)
    raise ValueError(rel)


# text form -----------------------------------------------------------------

_TOKEN = re.compile(r"^(~)?(-?\d+(?:/\d+)?)([ov])?$")


def parse_element(token: str, kind: SemiringKind) -> Element:
    text = token.strip()
    if text == "-inf":
        return zero(kind)
    m = _TOKEN.match(text)
    if m is None:
        raise ParseError(f"bad element token {token!r}")
    minus, number, suffix = m.groups()
    try:
        value = Fraction(number)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational in {token!r}") from None
    if minus and kind is not SemiringKind.SMAX:
        raise ParseError(f"'~' is only valid for smax, got {token!r} under {kind.value}")
    if suffix == "o" and kind is not SemiringKind.SMAX:
        raise ParseError(f"'o' suffix is only valid for smax, got {token!r}")
    if suffix == "v" and kind is not SemiringKind.SUPERTROPICAL:
        raise ParseError(f"'v' suffix is only valid for supertropical, got {token!r}")
    if suffix:
        tag = Tag.CIRC
    elif minus:
        tag = Tag.NEG
    else:
        tag = Tag.POS
    return Element(kind, value, tag)


def format_magnitude(mag: Magnitude) -> str:
    if mag == NEG_INF:
        return "-inf"
    if mag.denominator == 1:
        return str(mag.numerator)
    return f"{mag.numerator}/{mag.denominator}"


def format_element(a: Element) -> str:
    if a.is_zero:
        return "-inf"
    body = format_magnitude(a.mag)
    if a.tag is Tag.NEG:
        return "~" + body
    if a.tag is Tag.CIRC:
        return body + ("v" if a.kind is SemiringKind.SUPERTROPICAL else "o")
    return body


def all_tags(kind: SemiringKind) -> tuple[Tag, ...]:
    if kind is SemiringKind.RMAX:
        return (Tag.POS,)
    if kind is SemiringKind.SMAX:
        return (Tag.POS, Tag.NEG, Tag.CIRC)
    return (Tag.POS, Tag.CIRC)


def thin_tags(kind: SemiringKind) -> tuple[Tag, ...]:
    if kind is SemiringKind.SMAX:
        return (Tag.POS, Tag.NEG)
    return (Tag.POS,)
