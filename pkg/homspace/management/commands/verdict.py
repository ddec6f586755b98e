from homspace.formatting import OutputFormat, render
from homspace.verify import flag_variety_verdict

from ._base import HomspaceCommand


class Command(HomspaceCommand):
    help = "Decide whether rho > dim X rules out a generalized flag variety."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--dim", type=int, required=True, help="dim X")
        parser.add_argument("--rho", type=int, required=True, help="Picard number of X")

    def run(self, *args, **options):
        verdict = flag_variety_verdict(options["dim"], options["rho"])
        fmt = self.output_format(options)
        if fmt == OutputFormat.TABLE:
            self.stdout.write(verdict.value)
            return
        record = {"dim_x": options["dim"], "rho": options["rho"], "verdict": verdict.value}
        self.emit(render(fmt, tuple(record), [record]))
