import io
import json

import numpy as np
import pandas as pd

FORMATS = ("json", "csv", "md")


def _native(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        return {key: _native(v) for key, v in value.items()}
    if isinstance(value, (tuple, list)):
        return [_native(v) for v in value]
    return value


def _cell(value) -> str:
    """One CSV/markdown cell. Booleans are lowercase and witnesses are joined with '+'."""
    value = _native(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "+".join(str(v) for v in value)
    return str(value)


def frame_records(frame: pd.DataFrame) -> list:
    """Rows of a frame as JSON-ready dicts, keys in column order."""
    return [{col: _native(val) for col, val in zip(frame.columns, row)} for row in frame.itertuples(index=False)]


def to_json(document) -> str:
    return json.dumps(_native(document), separators=(",", ":"))


def to_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.map(_cell).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue().rstrip("\n")


def to_markdown(frame: pd.DataFrame) -> str:
    cells = frame.map(_cell)
    lines = [
        "| " + " | ".join(str(col) for col in frame.columns) + " |",
        "| " + " | ".join("---" for _ in frame.columns) + " |",
    ]
    lines += ["| " + " | ".join(row) + " |" for row in cells.itertuples(index=False)]
    return "\n".join(lines)


def render(document, frame: pd.DataFrame, fmt: str = "json") -> str:
    """Render a result in one of FORMATS. JSON uses `document`; csv and md use `frame`."""
    if fmt == "json":
        return to_json(document)
    if fmt == "csv":
        return to_csv(frame)
    if fmt == "md":
        return to_markdown(frame)
    raise ValueError(f"Unknown format {fmt}. Supported formats are {list(FORMATS)}")
