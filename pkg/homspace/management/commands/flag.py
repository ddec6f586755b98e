from fractions import Fraction

from homspace import conf
from homspace.formatting import OutputFormat, render, render_text
from homspace.parabolic import ParabolicSpec, flag_invariants
from homspace.rootsys import SimpleType, build_root_system

from ._base import HomspaceCommand, usage_error

FIELDS = (
    "type",
    "parabolic",
    "dim_x",
    "picard_rank",
    "dim_parabolic",
    "dim_levi",
    "dim_unipotent_radical",
    "dim_algebra",
    "linear_slack",
    "sqrt_slack",
)


def flag_record(stype: SimpleType, text: str) -> dict:
    rs = build_root_system(stype)
    spec = ParabolicSpec.parse(rs, text)
    inv = flag_invariants(spec)
    k, dim_x = inv.picard_rank, inv.dim_x
    # Both bounds concern positive-dimensional X.
    linear = str(Fraction(2 * dim_x, rs.rank + 1) - k) if dim_x else None
    sqrt = 2 * dim_x - k * k if dim_x else None
    return {
        "type": str(rs.stype),
        "parabolic": spec.label,
        "dim_x": dim_x,
        "picard_rank": k,
        "dim_parabolic": inv.dim_parabolic,
        "dim_levi": inv.dim_levi,
        "dim_unipotent_radical": inv.dim_unipotent_radical,
        "dim_algebra": inv.dim_algebra,
        "linear_slack": linear,
        "sqrt_slack": sqrt,
    }


class Command(HomspaceCommand):
    help = "Invariants of the flag variety G/P_I for a simple type and a subset I of simple roots."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("type", help="Type spec such as A4, D5 or E7.")
        parser.add_argument(
            "--parabolic", default="", help='Comma-separated Bourbaki indices in I; "" is the Borel subgroup.'
        )

    def run(self, *args, **options):
        stype = SimpleType.parse(options["type"])
        if stype.rank > conf.max_rank_cap():
            raise usage_error(f"rank {stype.rank} of {stype} is above HOMSPACE_MAX_RANK = {conf.max_rank_cap()}")
        record = flag_record(stype, options["parabolic"])
        fmt = self.output_format(options)
        if fmt == OutputFormat.TABLE:
            rows = [(name, "-" if value is None else value) for name, value in record.items()]
            self.emit(render_text(("field", "value"), rows))
        else:
            self.emit(render(fmt, FIELDS, [record]))
