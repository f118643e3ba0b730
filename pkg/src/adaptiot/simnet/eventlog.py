"""Event log serialization: UTF-8 JSON lines, one record per line.

Field order is fixed (tick, seq, kind, source, payload), floats are rendered
with exactly six decimal places and lines end with LF, so a log is a pure
function of the records and can be compared byte-for-byte.
"""

from __future__ import annotations

import json
from typing import Any

from adaptiot.simnet.engine import LogRecord


class LogParseError(Exception):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _render_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_render_value(v)}" for k, v in value.items())
        return "{" + items + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_render_value(v) for v in value) + "]"
    if value is None:
        return "null"
    raise TypeError(f"cannot render {type(value).__name__} into the log")


def render_record(record: LogRecord) -> str:
    return (
        "{"
        + f'"tick": {record.tick}, "seq": {record.seq}, '
        + f'"kind": {json.dumps(record.kind)}, "source": {json.dumps(record.source)}, '
        + f'"payload": {_render_value(record.payload)}'
        + "}"
    )


def render_log(records: list[LogRecord]) -> bytes:
    return "".join(render_record(r) + "\n" for r in records).encode("utf-8")


def parse_log(data: bytes | str) -> list[LogRecord]:
    """Parse a rendered log; raises LogParseError with the 1-based line number."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    records = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            records.append(
                LogRecord(obj["tick"], obj["seq"], obj["kind"], obj["source"], obj["payload"])
            )
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise LogParseError(line_no, str(exc)) from exc
    return records
