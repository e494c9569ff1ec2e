"""
Command output envelope and its JSON / CSV encodings
"""

import csv
import enum
import io
import json
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict

from app.utils.errors import UsageError


class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"


class OutputEnvelope(BaseModel):
    """A command's result; columns are set only for tabular payloads"""
    model_config = ConfigDict(frozen=True)

    command: List[str]
    payload: Any
    format: OutputFormat = OutputFormat.JSON
    columns: Optional[List[str]] = None

    @property
    def is_tabular(self) -> bool:
        return self.columns is not None

    def render(self) -> str:
        if self.format == OutputFormat.JSON:
            return json.dumps(self.payload, separators=(",", ":"), ensure_ascii=False)
        if not self.is_tabular:
            raise UsageError(f"'{' '.join(self.command[:2])}' has no tabular output; use --format json")

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.payload:
            values = [row[column] for column in self.columns] if isinstance(row, dict) else list(row)
            writer.writerow(["" if value is None else _csv_cell(value) for value in values])
        return buffer.getvalue().rstrip("\n")


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)
