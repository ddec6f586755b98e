from django.core.management.base import CommandError

from homspace import conf
from homspace.formatting import render
from homspace.models import VerificationRun
from homspace.pdf import PdfExportError, write_table_pdf
from homspace.reports import REPORT_FIELDS, SweepSummary
from homspace.rootsys import EXCEPTIONAL_FAMILIES, EXCEPTIONAL_RANK, MIN_RANK, Family, all_types
from homspace.verify import Mode, SemisimpleProduct, SweepOptions, collect_reports, verify_semisimple_product

from ._base import VERIFICATION_FAILED, HomspaceCommand, usage_error


def family_min_rank(family: Family) -> int:
    return EXCEPTIONAL_RANK.get(family) or MIN_RANK[family]


class Command(HomspaceCommand):
    help = "Check the Picard-number bounds over every selected instance. Exit 1 if any row fails."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        scope = parser.add_mutually_exclusive_group()
        scope.add_argument("--affine", action="store_true", help="Affine homogeneous spaces only.")
        scope.add_argument("--projective", action="store_true", help="Flag varieties only.")
        scope.add_argument("--all", action="store_true", help="Both (the default).")
        parser.add_argument(
            "--type", action="append", default=[], dest="families", metavar="FAMILY",
            help="Restrict to a family (A, B, C, D, E6, E7, E8, F4, G2). Repeatable.",
        )
        parser.add_argument("--exceptional", action="store_true", help="Restrict to the exceptional families.")
        parser.add_argument("--max-rank", type=int, default=None, help="Rank cap (default HOMSPACE_MAX_RANK).")
        parser.add_argument("--product", default=None, metavar="T1,T2,...", help="Sweep a semisimple product.")
        parser.add_argument("--save", action="store_true", help="Store the run and its rows in the database.")
        parser.add_argument("--pdf", default=None, metavar="PATH", help="Also write the rows to a PDF file.")

    def modes(self, options) -> list[Mode]:
        if options["affine"]:
            return [Mode.AFFINE]
        if options["projective"]:
            return [Mode.PROJECTIVE]
        return [Mode.AFFINE, Mode.PROJECTIVE]

    def families(self, options, max_rank: int) -> list[Family] | None:
        selected = []
        for token in options["families"]:
            name = token.strip().upper()
            if name not in Family.values:
                raise usage_error(f"unknown family {token!r}")
            selected.append(Family(name))
        if options["exceptional"]:
            selected += EXCEPTIONAL_FAMILIES
        for family in selected:
            if family_min_rank(family) > max_rank:
                raise usage_error(
                    f"family {family.value} needs rank >= {family_min_rank(family)}, but --max-rank is {max_rank}"
                )
        return selected or None

    def run(self, *args, **options):
        max_rank = self.positive(options["max_rank"], "--max-rank") or conf.max_rank_cap()
        modes = self.modes(options)
        sweep = SweepOptions()

        if options["product"] is not None:
            product = SemisimpleProduct.parse(options["product"])
            reports = []
            for mode in modes:
                reports += verify_semisimple_product(product, mode, sweep)
            scope = f"{'+'.join(modes)} product={product.label}"
        else:
            families = self.families(options, max_rank)
            reports = collect_reports(all_types(max_rank, families), modes, sweep)
            names = ",".join(f.value for f in families) if families else "all"
            scope = f"{'+'.join(modes)} types={names}"

        summary = SweepSummary.of(reports)
        self.emit(render(self.output_format(options), REPORT_FIELDS, [r.to_dict() for r in reports]))
        self.stderr.write(summary.line())

        if options["save"]:
            run = VerificationRun.record(scope, max_rank, reports)
            self.stderr.write(f"saved run {run.pk}")
        if options["pdf"]:
            rows = [[r.to_dict()[f] for f in REPORT_FIELDS] for r in reports]
            try:
                path = write_table_pdf(options["pdf"], f"Verification: {scope}", REPORT_FIELDS, rows, summary.line())
            except (OSError, PdfExportError) as exc:
                raise usage_error(f"cannot write {options['pdf']}: {exc}") from exc
            self.stderr.write(f"wrote {path}")

        if not summary.passed:
            raise CommandError(f"{summary.failed} of {summary.total} rows failed", returncode=VERIFICATION_FAILED)
