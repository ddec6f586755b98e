import csv
import io
import json
from typing import Iterable, Sequence

from django.db import models


class OutputFormat(models.TextChoices):
    TABLE = "table", "Aligned text table"
    JSON = "json", "JSON lines"
    CSV = "csv", "CSV"


def render_text(header: Sequence[str], rows: Iterable[Sequence], title: str = "") -> str:
    """First column left-justified, the rest right-justified, one space between columns."""
    rows = [tuple(str(c) for c in row) for row in rows]
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    def line(cells):
        first, *rest = cells
        return " ".join([first.ljust(widths[0]), *(c.rjust(w) for c, w in zip(rest, widths[1:]))]).rstrip()

    lines = [title] if title else []
    lines.append(line(header))
    lines += [line(row) for row in rows]
    return "\n".join(lines) + "\n"


def render_json(records: Iterable[dict]) -> str:
    return "".join(json.dumps(record) + "\n" for record in records)


def render_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render(fmt: OutputFormat, header: Sequence[str], records: list[dict], title: str = "") -> str:
    """Render records (dicts keyed by ``header``) in the requested format."""
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return render_json(records)
    rows = [[record[h] for h in header] for record in records]
    if fmt == OutputFormat.CSV:
        return render_csv(header, rows)
    return render_text(header, rows, title)
