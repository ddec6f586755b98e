"""Maximal dimensions of simple and semisimple Lie algebras of a given rank.

D^s(l) is read off the dimension formulas of the simple families valid at
rank l. D^ss(l) follows the recurrence "best of D^s(l) and every split of l
into smaller ranks", evaluated over binary splits: any composition of l is
reached by repeatedly splitting in two, so the maximum is the same.
partition_max_dim() is the independent brute-force oracle.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy.utilities.iterables import partitions

from .exceptions import DomainError
from .rootsys import EXCEPTIONAL_FAMILIES, SimpleType, simple_types_of_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaxDimEntry:
    rank: int
    d_simple: int
    d_semisimple: int
    witnesses_simple: tuple[SimpleType, ...]
    witness_partition: tuple[int, ...]


@lru_cache(maxsize=None)
def simple_max_dim(l: int) -> tuple[int, tuple[SimpleType, ...]]:
    """D^s(l) with every simple type attaining it."""
    if l < 1:
        raise DomainError(f"there is no simple Lie algebra of rank {l}", code="rank")
    candidates = simple_types_of_rank(l)
    best = max(t.dimension for t in candidates)
    return best, tuple(t for t in candidates if t.dimension == best)


@lru_cache(maxsize=None)
def semisimple_max_dim(l: int) -> tuple[int, tuple[int, ...]]:
    """D^ss(l) and one maximising multiset of simple ranks (non-increasing).

    D^ss(0) = 0 by convention. Ties keep the fewest factors.
    """
    if l < 0:
        raise DomainError(f"rank must be nonnegative, got {l}", code="rank")
    if l == 0:
        return 0, ()
    best, _ = simple_max_dim(l)
    partition = (l,)
    for a in range(1, l // 2 + 1):
        left, left_parts = semisimple_max_dim(a)
        right, right_parts = semisimple_max_dim(l - a)
        if left + right > best:
            best = left + right
            partition = tuple(sorted(left_parts + right_parts, reverse=True))
    return best, partition


def partition_max_dim(l: int) -> tuple[int, tuple[int, ...]]:
    """Maximum of sum D^s(l_i) over every partition of l, by enumeration."""
    if l < 0:
        raise DomainError(f"rank must be nonnegative, got {l}", code="rank")
    best, witness = None, ()
    for counts in partitions(l):
        parts = tuple(sorted((p for p, m in counts.items() for _ in range(m)), reverse=True))
        value = sum(simple_max_dim(p)[0] for p in parts)
        if best is None or value > best:
            best, witness = value, parts
    return best, witness


def max_dim_entries(max_rank: int) -> list[MaxDimEntry]:
    entries = []
    for l in range(1, max_rank + 1):
        d_simple, witnesses = simple_max_dim(l)
        d_semisimple, partition = semisimple_max_dim(l)
        entries.append(MaxDimEntry(l, d_simple, d_semisimple, witnesses, partition))
    return entries


def exceptional_floor(stype: SimpleType, t_dim: int) -> int:
    """Lower bound on dim X for an affine G/H whose reductive H has centre of dimension t_dim.

    The semisimple part of H has rank at most rk G - t_dim, hence dimension at
    most D^ss(rk G - t_dim).
    """
    if not stype.is_exceptional:
        raise DomainError(f"{stype} is not an exceptional type", code="family")
    if not 1 <= t_dim <= stype.rank:
        raise DomainError(f"torus dimension {t_dim} out of range 1..{stype.rank} for {stype}", code="t_dim")
    return stype.dimension - t_dim - semisimple_max_dim(stype.rank - t_dim)[0]


def table3() -> tuple[tuple[SimpleType, tuple[int, ...]], ...]:
    rows = []
    for family in EXCEPTIONAL_FAMILIES:
        stype = SimpleType(family)
        rows.append((stype, tuple(exceptional_floor(stype, t) for t in range(1, stype.rank + 1))))
    logger.debug("computed %d exceptional rows", len(rows))
    return tuple(rows)
