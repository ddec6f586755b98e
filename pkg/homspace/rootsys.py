"""Root systems of the simple Lie algebras in exact rational coordinates.

Simple roots use the Bourbaki numbering, so a parabolic subset written as
indices means the same thing on every run:

- A_l (in dimension l + 1): a_i = e_i - e_{i+1}.
- B_l: a_i = e_i - e_{i+1} for i < l, a_l = e_l.
- C_l: a_i = e_i - e_{i+1} for i < l, a_l = 2 e_l.
- D_l: a_i = e_i - e_{i+1} for i < l, a_l = e_{l-1} + e_l.
- G2 (in the plane x + y + z = 0): a_1 = e_1 - e_2, a_2 = -2 e_1 + e_2 + e_3.
- F4: a_1 = e_2 - e_3, a_2 = e_3 - e_4, a_3 = e_4, a_4 = (e_1 - e_2 - e_3 - e_4) / 2.
- E8: a_1 = (e_1 - e_2 - ... - e_7 + e_8) / 2, a_2 = e_1 + e_2,
  a_i = e_{i-1} - e_{i-2} for 3 <= i <= 8.
- E7, E6: the E8 roots supported on a_1..a_7 and a_1..a_6.
"""
import itertools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

import sympy
from django.db import models

from .exceptions import DomainError, InvalidSimpleType, InvariantViolation

logger = logging.getLogger(__name__)


class Family(models.TextChoices):
    A = "A", "A_l"
    B = "B", "B_l"
    C = "C", "C_l"
    D = "D", "D_l"
    E6 = "E6", "E_6"
    E7 = "E7", "E_7"
    E8 = "E8", "E_8"
    F4 = "F4", "F_4"
    G2 = "G2", "G_2"


CLASSICAL_FAMILIES = (Family.A, Family.B, Family.C, Family.D)
EXCEPTIONAL_FAMILIES = (Family.E6, Family.E7, Family.E8, Family.F4, Family.G2)

MIN_RANK = {Family.A: 1, Family.B: 2, Family.C: 2, Family.D: 3}
EXCEPTIONAL_RANK = {Family.E6: 6, Family.E7: 7, Family.E8: 8, Family.F4: 4, Family.G2: 2}
EXCEPTIONAL_DIMENSION = {Family.E6: 78, Family.E7: 133, Family.E8: 248, Family.F4: 52, Family.G2: 14}
FORMULA = {Family.A: "l^2 + 2l", Family.B: "2l^2 + l", Family.C: "2l^2 + l", Family.D: "2l^2 - l"}
EXCEPTIONAL_NAMES = frozenset(f.value for f in EXCEPTIONAL_FAMILIES)

_TOKEN = re.compile(r"^([ABCD])(\d+)$")


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple family together with its rank.

    Exceptional families carry their fixed rank; passing ``rank=None`` fills it in.
    """

    family: Family
    rank: int | None = None

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            raise InvalidSimpleType(f"unknown simple family {self.family!r}", code="family") from None
        object.__setattr__(self, "family", family)

        if family in EXCEPTIONAL_RANK:
            fixed = EXCEPTIONAL_RANK[family]
            if self.rank not in (None, fixed):
                raise InvalidSimpleType(f"{family.value} has fixed rank {fixed}, got {self.rank}", code="rank")
            object.__setattr__(self, "rank", fixed)
            return

        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InvalidSimpleType(f"{family.value} needs an integer rank, got {self.rank!r}", code="rank")
        if self.rank < MIN_RANK[family]:
            raise InvalidSimpleType(
                f"{family.value} requires rank >= {MIN_RANK[family]}, got {self.rank}", code="rank"
            )

    def __str__(self) -> str:
        return self.family.value if self.is_exceptional else f"{self.family.value}{self.rank}"

    @classmethod
    def parse(cls, token: str) -> "SimpleType":
        """Parse ``A4``/``D5`` style classical tokens and bare exceptional names (``E6``)."""
        text = (token or "").strip().upper()
        if text in EXCEPTIONAL_NAMES:
            return cls(Family(text))
        m = _TOKEN.match(text)
        if not m:
            raise InvalidSimpleType(f"malformed type spec {token!r}", code="token")
        return cls(Family(m.group(1)), int(m.group(2)))

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_RANK

    @property
    def dimension(self) -> int:
        """Closed-form dimension of the Lie algebra."""
        l = self.rank
        if self.family == Family.A:
            return l * l + 2 * l
        if self.family in (Family.B, Family.C):
            return 2 * l * l + l
        if self.family == Family.D:
            return 2 * l * l - l
        return EXCEPTIONAL_DIMENSION[self.family]

    @property
    def formula(self) -> str:
        return FORMULA.get(self.family, str(self.dimension))


def simple_types_of_rank(l: int) -> tuple[SimpleType, ...]:
    found = [SimpleType(f, l) for f in CLASSICAL_FAMILIES if l >= MIN_RANK[f]]
    found += [SimpleType(f) for f in EXCEPTIONAL_FAMILIES if EXCEPTIONAL_RANK[f] == l]
    return tuple(sorted(found))


def all_types(max_rank: int, families=None) -> Iterator[SimpleType]:
    """Every valid simple type of rank <= max_rank, in family order then rank order."""
    for family in Family:
        if families is not None and family not in families:
            continue
        if family in EXCEPTIONAL_RANK:
            if EXCEPTIONAL_RANK[family] <= max_rank:
                yield SimpleType(family)
            continue
        for l in range(MIN_RANK[family], max_rank + 1):
            yield SimpleType(family, l)


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not any(self.coords):
            raise DomainError("the zero vector is not a root")

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def dot(self, other: "Root") -> Fraction:
        return sum((a * b for a, b in zip(self.coords, other.coords)), Fraction(0))


def vector(*entries) -> Root:
    return Root(tuple(Fraction(x) for x in entries))


@dataclass(frozen=True, eq=False)
class RootSystem:
    stype: SimpleType
    simple: tuple[Root, ...]
    positive: tuple[Root, ...]
    negative: tuple[Root, ...]
    decompositions: Mapping[Root, tuple[int, ...]]
    supports: Mapping[Root, frozenset[int]]

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def roots(self) -> frozenset[Root]:
        return frozenset(self.positive) | frozenset(self.negative)

    def __len__(self) -> int:
        return len(self.positive) + len(self.negative)

    def __repr__(self) -> str:
        return f"RootSystem({self.stype}, |roots|={len(self)})"


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


class _Decomposer:
    """Exact coordinates of vectors with respect to a set of simple roots."""

    def __init__(self, simple: tuple[Root, ...]):
        self.simple = simple
        gram = sympy.Matrix([[_rational(a.dot(b)) for b in simple] for a in simple])
        self.inverse = [[Fraction(int(x.p), int(x.q)) for x in row] for row in gram.inv().tolist()]

    def integral(self, root: Root) -> tuple[int, ...]:
        pairings = [root.dot(a) for a in self.simple]
        coeffs = [sum((g * p for g, p in zip(row, pairings)), Fraction(0)) for row in self.inverse]
        if any(c.denominator != 1 for c in coeffs):
            raise DomainError(f"{root} is not an integral combination of simple roots")
        recomposed = tuple(
            sum((c * a.coords[i] for c, a in zip(coeffs, self.simple)), Fraction(0))
            for i in range(len(root.coords))
        )
        if recomposed != root.coords:
            raise DomainError(f"{root} is outside the span of the simple roots")
        return tuple(int(c) for c in coeffs)


def _classical(family: Family, l: int) -> tuple[list[Root], list[Root]]:
    n = l + 1 if family == Family.A else l

    def e(*terms) -> Root:
        coords = [Fraction(0)] * n
        for i, c in terms:
            coords[i] += c
        return Root(tuple(coords))

    chain = [e((i, 1), (i + 1, -1)) for i in range(n - 1)]
    if family == Family.A:
        return [e((i, 1), (j, -1)) for i, j in itertools.permutations(range(n), 2)], chain

    roots = [
        e((i, si), (j, sj))
        for i, j in itertools.combinations(range(l), 2)
        for si, sj in itertools.product((1, -1), repeat=2)
    ]
    if family == Family.B:
        roots += [e((i, s)) for i in range(l) for s in (1, -1)]
        last = e((l - 1, 1))
    elif family == Family.C:
        roots += [e((i, 2 * s)) for i in range(l) for s in (1, -1)]
        last = e((l - 1, 2))
    else:
        last = e((l - 2, 1), (l - 1, 1))
    return roots, chain + [last]


def _g2() -> tuple[list[Root], list[Root]]:
    roots = []
    for i, j in itertools.permutations(range(3), 2):
        coords = [0, 0, 0]
        coords[i], coords[j] = 1, -1
        roots.append(vector(*coords))
    for i in range(3):
        for s in (1, -1):
            coords = [-s, -s, -s]
            coords[i] = 2 * s
            roots.append(vector(*coords))
    return roots, [vector(1, -1, 0), vector(-2, 1, 1)]


def _f4() -> tuple[list[Root], list[Root]]:
    half = Fraction(1, 2)
    roots = []
    for i in range(4):
        for s in (1, -1):
            coords = [0] * 4
            coords[i] = s
            roots.append(vector(*coords))
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            coords = [0] * 4
            coords[i], coords[j] = si, sj
            roots.append(vector(*coords))
    roots += [vector(*(s * half for s in signs)) for signs in itertools.product((1, -1), repeat=4)]
    simple = [vector(0, 1, -1, 0), vector(0, 0, 1, -1), vector(0, 0, 0, 1), vector(half, -half, -half, -half)]
    return roots, simple


def _e8() -> tuple[list[Root], list[Root]]:
    half = Fraction(1, 2)
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            coords = [0] * 8
            coords[i], coords[j] = si, sj
            roots.append(vector(*coords))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(vector(*(s * half for s in signs)))
    simple = [
        vector(half, -half, -half, -half, -half, -half, -half, half),
        vector(1, 1, 0, 0, 0, 0, 0, 0),
        *[vector(*[(-1 if k == i - 1 else 1 if k == i else 0) for k in range(8)]) for i in range(1, 7)],
    ]
    return roots, simple


def _construct(stype: SimpleType) -> tuple[list[Root], list[Root]]:
    family = stype.family
    if family in CLASSICAL_FAMILIES:
        return _classical(family, stype.rank)
    if family == Family.G2:
        return _g2()
    if family == Family.F4:
        return _f4()
    if family == Family.E8:
        return _e8()
    e8 = build_root_system(SimpleType(Family.E8))
    rank = stype.rank
    roots = [r for r, c in e8.decompositions.items() if not any(c[rank:])]
    return roots, list(e8.simple[:rank])


@lru_cache(maxsize=None)
def _build(stype: SimpleType) -> RootSystem:
    roots, simple = _construct(stype)
    simple = tuple(simple)
    decomposer = _Decomposer(simple)
    table = {r: decomposer.integral(r) for r in roots}

    for r, c in table.items():
        if any(x > 0 for x in c) and any(x < 0 for x in c):
            raise InvariantViolation(f"{stype}: root {r} has mixed-sign coordinates {c}")
    positive = sorted((r for r in roots if sum(table[r]) > 0), key=lambda r: (sum(table[r]), table[r]))
    negative = [-r for r in positive]
    if len(positive) + len(negative) != len(table) or any(r not in table for r in negative):
        raise InvariantViolation(f"{stype}: roots are not closed under negation")

    supports = {r: frozenset(i + 1 for i, x in enumerate(c) if x) for r, c in table.items()}
    logger.debug("built root system %s: %d roots, %d simple", stype, len(table), len(simple))
    return RootSystem(
        stype=stype,
        simple=simple,
        positive=tuple(positive),
        negative=tuple(negative),
        decompositions=MappingProxyType(table),
        supports=MappingProxyType(supports),
    )


def build_root_system(stype: SimpleType | str) -> RootSystem:
    if not isinstance(stype, SimpleType):
        stype = SimpleType.parse(stype)
    return _build(stype)


def algebra_dimension(stype: SimpleType | str) -> int:
    """Closed-form dimension, cross-checked against rank + |roots|."""
    rs = build_root_system(stype)
    closed = rs.stype.dimension
    enumerated = rs.rank + len(rs)
    if closed != enumerated:
        raise InvariantViolation(f"{rs.stype}: formula gives {closed}, enumeration gives {enumerated}")
    return closed


def simple_root_decomposition(r: Root, rs: RootSystem) -> tuple[int, ...]:
    try:
        return rs.decompositions[r]
    except KeyError:
        raise DomainError(f"{r} is not a root of {rs.stype}", code="not_a_root") from None


def highest_root(rs: RootSystem) -> Root:
    return rs.positive[-1]
