"""File formats: JSON key and permutation files, CSV sequences, SVG scatter."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from xml.sax.saxutils import escape

from .errors import ValidationError
from .sequence import KeyMatrix


def atomic_write(path, data):
    """Write ``data`` (str or bytes) next to ``path`` and rename into place."""
    path = Path(path)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dumps_key(key):
    rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in key.entries)
    return f'{{"digits": {key.digits}, "matrix": [{rows}]}}\n'


def loads_key(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"key file is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "digits" not in obj or "matrix" not in obj:
        raise ValidationError('key file must be an object with "digits" and "matrix"')
    return KeyMatrix(obj["digits"], obj["matrix"])


def read_key(path):
    return loads_key(Path(path).read_text(encoding="utf-8"))


def write_key(path, key):
    atomic_write(path, dumps_key(key))


def dumps_sequence(values, header="r"):
    return header + "\n" + "".join(f"{int(v)}\n" for v in values)


def loads_sequence(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if lines and not lines[0].lstrip("-").isdigit():
        lines = lines[1:]
    try:
        return [int(ln) for ln in lines]
    except ValueError as exc:
        raise ValidationError(f"sequence CSV has a non-integer row: {exc}") from exc


def dumps_permutation(perm):
    return json.dumps(perm.to_dict()) + "\n"


def dumps_pairs(points):
    return "x,y\n" + "".join(f"{x},{y}\n" for x, y in points)


def scatter_svg(points, extent, size=400, margin=20, title="Sequential data representation"):
    """Scatter of ``points`` on unit axes; ``extent`` is the largest coordinate."""
    extent = max(extent, 1)
    span = size - 2 * margin

    def px(v):
        return margin + span * v / extent

    def py(v):
        return size - margin - span * v / extent

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{escape(title)}</title>",
        f'<line x1="{margin}" y1="{size - margin}" x2="{size - margin}" y2="{size - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{size - margin}" x2="{margin}" y2="{margin}" stroke="black"/>',
    ]
    for x, y in points:
        lines.append(f'<circle cx="{px(x):.3f}" cy="{py(y):.3f}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
