"""Cell data for the three reference tables.

Every numeric cell is computed. Algebra dimensions come from root
enumeration, cross-checked against the closed forms; the rest comes from
maxdim.
"""
from dataclasses import dataclass

from . import conf
from .maxdim import max_dim_entries, table3
from .rootsys import CLASSICAL_FAMILIES, EXCEPTIONAL_FAMILIES, MIN_RANK, SimpleType, algebra_dimension

MISSING = "-"


@dataclass(frozen=True)
class Table:
    title: str
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def records(self) -> list[dict]:
        return [dict(zip(self.header, row)) for row in self.rows]


def table_one(max_rank: int) -> Table:
    """Simple Lie algebras: rank, dimension formula and dimensions for l = 1..max_rank."""
    ranks = range(1, max_rank + 1)
    header = ("algebra", "rank", "dim", *(f"l={l}" for l in ranks))
    rows = []
    for family in CLASSICAL_FAMILIES:
        cells = [str(algebra_dimension(SimpleType(family, l))) if l >= MIN_RANK[family] else MISSING for l in ranks]
        lowest = SimpleType(family, MIN_RANK[family])
        rows.append((f"{family.value}_l", f"l>={lowest.rank}", lowest.formula, *cells))
    for family in EXCEPTIONAL_FAMILIES:
        stype = SimpleType(family)
        dim = algebra_dimension(stype)
        cells = [str(dim) if l == stype.rank else MISSING for l in ranks]
        rows.append((str(stype), str(stype.rank), str(dim), *cells))
    return Table("Simple Lie algebras", header, tuple(rows))


def table_two(max_rank: int = 7) -> Table:
    """Maximal dimension of a simple and of a semisimple Lie algebra of each rank.

    The note column marks ranks where an exceptional algebra shares D^s with
    classical ones, which happens at rank 6 (B6, C6 and E6 all have dimension 78).
    """
    rows = []
    for entry in max_dim_entries(max_rank):
        witnesses = ",".join(str(t) for t in entry.witnesses_simple)
        exceptional = [str(t) for t in entry.witnesses_simple if t.is_exceptional]
        classical = [str(t) for t in entry.witnesses_simple if not t.is_exceptional]
        note = f"{','.join(exceptional)} ties with {','.join(classical)}" if exceptional and classical else ""
        rows.append(
            (
                str(entry.rank),
                f"{entry.d_simple} / {witnesses}",
                str(entry.d_semisimple),
                "+".join(str(p) for p in entry.witness_partition),
                note,
            )
        )
    return Table(
        "Maximal dimension with given rank", ("rank", "D^s / types", "D^ss", "partition", "note"), tuple(rows)
    )


def table_three() -> Table:
    """Lower bounds on dim X for the exceptional algebras, by dimension t of the centre."""
    data = table3()
    width = max(stype.rank for stype, _ in data)
    header = ("algebra", *(f"t={t}" for t in range(1, width + 1)))
    rows = tuple(
        (str(stype), *(str(v) for v in values), *([MISSING] * (width - len(values)))) for stype, values in data
    )
    return Table("Exceptional Lie algebras", header, rows)


def build_table(which: int, max_rank: int | None = None) -> Table:
    if which == 1:
        return table_one(max_rank or conf.max_rank_cap())
    if which == 2:
        return table_two(max_rank or 7)
    return table_three()
