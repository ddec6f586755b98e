from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from homspace.exceptions import message_of
from homspace.formatting import OutputFormat

USAGE_ERROR = 2
VERIFICATION_FAILED = 1


def usage_error(message: str) -> CommandError:
    return CommandError(message, returncode=USAGE_ERROR)


class HomspaceCommand(BaseCommand):
    """Shared plumbing: ``--format`` and the exit-code contract.

    Subclasses implement ``run``; any ValidationError escaping it becomes a
    usage error.
    """

    def add_arguments(self, parser):
        parser.add_argument(
            "--format",
            choices=OutputFormat.values,
            default=None,
            help="Output format (default: table on a terminal, json otherwise).",
        )

    def output_format(self, options) -> OutputFormat:
        if options.get("format"):
            return OutputFormat(options["format"])
        return OutputFormat.TABLE if self.stdout.isatty() else OutputFormat.JSON

    def positive(self, value, flag: str) -> int | None:
        if value is None:
            return None
        if value < 1:
            raise usage_error(f"{flag} must be a positive integer, got {value}")
        return value

    def emit(self, text: str):
        self.stdout.write(text, ending="")

    def handle(self, *args, **options):
        try:
            self.run(*args, **options)
        except ValidationError as exc:
            raise usage_error(message_of(exc)) from exc

    def run(self, *args, **options):  # pragma: no cover - abstract
        raise NotImplementedError
