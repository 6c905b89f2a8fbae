"""Small shared helpers."""

from __future__ import annotations

import re
from datetime import date

_ISO_DATE_RE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


def parse_iso_date(lexical: str) -> date | None:
    """Parse a strict YYYY-MM-DD calendar date; None when invalid."""
    if not _ISO_DATE_RE.match(lexical):
        return None
    try:
        return date.fromisoformat(lexical)
    except ValueError:
        return None
