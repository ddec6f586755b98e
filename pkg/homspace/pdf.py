import io
import logging
from pathlib import Path

from django.template.loader import get_template
from xhtml2pdf import pisa

logger = logging.getLogger(__name__)


class PdfExportError(RuntimeError):
    pass


def render_to_pdf(template_src, context_dict=None) -> bytes:
    template = get_template(template_src)
    html = template.render(dict(context_dict or {}))
    result = io.BytesIO()
    pdf = pisa.pisaDocument(io.BytesIO(html.encode("UTF-8")), dest=result, encoding="UTF-8")
    if pdf.err:
        raise PdfExportError(f"xhtml2pdf reported {pdf.err} error(s) rendering {template_src}")
    return result.getvalue()


def write_table_pdf(path, title: str, header, rows, summary: str = "") -> Path:
    """Render a titled table to ``path`` and return the resolved path."""
    path = Path(path)
    if path.suffix.lower() != ".pdf":
        path = path.with_suffix(".pdf")
    content = render_to_pdf(
        "homspace/table_pdf.html",
        {"title": title, "header": list(header), "rows": [list(r) for r in rows], "summary": summary},
    )
    path.write_bytes(content)
    logger.info("wrote %s (%d bytes)", path, len(content))
    return path
