from homspace.formatting import render
from homspace.pdf import PdfExportError, write_table_pdf
from homspace.tables import build_table

from ._base import HomspaceCommand, usage_error

TABLES = ("1", "2", "3")


class Command(HomspaceCommand):
    help = "Print a reference table: 1 simple algebras, 2 maximal dimension by rank, 3 exceptional floors."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("which", help="Table id: 1, 2 or 3.")
        parser.add_argument("--max-rank", type=int, default=None, help="Highest rank shown in tables 1 and 2.")
        parser.add_argument("--pdf", default=None, metavar="PATH", help="Also write the table to a PDF file.")

    def run(self, *args, **options):
        which = str(options["which"]).strip()
        if which not in TABLES:
            raise usage_error(f"unknown table {which!r}; choose one of {', '.join(TABLES)}")
        max_rank = self.positive(options["max_rank"], "--max-rank")

        table = build_table(int(which), max_rank)
        self.emit(render(self.output_format(options), table.header, table.records(), title=table.title))

        if options["pdf"]:
            try:
                path = write_table_pdf(options["pdf"], table.title, table.header, table.rows)
            except (OSError, PdfExportError) as exc:
                raise usage_error(f"cannot write {options['pdf']}: {exc}") from exc
            self.stderr.write(f"wrote {path}")
