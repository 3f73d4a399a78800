"""
Key/value report documents and their two renderings.

Every command produces one or more records: ordered mappings with stable
keys. ``machine`` prints them as ``key=value`` lines, records separated by
a blank line, so runs can be diffed; ``table`` prints them for people.
"""
import math
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Mapping, Sequence

from boltons.tableutils import Table

Record = Mapping[str, Any]


class Format(Enum):
    table = "table"
    machine = "machine"


def format_value(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return f"{value:.6g}"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value)
    return str(value)


def render_machine(records: Iterable[Record]) -> str:
    blocks = []
    for record in records:
        blocks.append("".join(f"{key}={format_value(value)}\n" for key, value in record.items()))
    return "\n".join(blocks)


def _same_keys(records: Sequence[Record]) -> bool:
    return len({tuple(r) for r in records}) == 1


def render_table(records: Sequence[Record]) -> str:
    """
    A single record is shown as a two-column key/value table; several
    records sharing their keys become one row each.
    """
    if not records:
        return ""
    if len(records) > 1 and _same_keys(records):
        rows = [{key: format_value(value) for key, value in r.items()} for r in records]
        return Table.from_dict(rows).to_text() + "\n"
    parts: List[str] = []
    for record in records:
        data = [[key, format_value(value)] for key, value in record.items()]
        parts.append(Table.from_data(data, headers=["key", "value"]).to_text() + "\n")
    return "\n".join(parts)


def render(records: Sequence[Record], fmt: Format = Format.table) -> str:
    if fmt is Format.machine:
        return render_machine(records)
    return render_table(records)
