"""Matrix files.

Two formats are read:

* JSON ``{"dim": m, "entries": [[re, im], ...]}`` with ``m*m`` pairs in
  row-major order. Written by :func:`dumps`; float values round-trip
  bit-exactly.
* A plain text grid, one matrix row per line, whitespace-separated tokens
  such as ``2-4i``, ``-1``, ``5i`` or ``-i``. Lines starting with ``#`` are
  ignored.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError
from .linalg import as_matrix

_BARE_UNIT = re.compile(r"(^|[+-])j$")


def _reject_constant(name):
    raise MatrixFormatError(f"non-finite value {name} in matrix file", field="entries")


def loads_json(text: str) -> np.ndarray:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}", field="document") from None
    if not isinstance(doc, dict):
        raise MatrixFormatError("top level must be an object", field="document")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise MatrixFormatError(f"'dim' must be a positive integer, got {dim!r}", field="dim")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise MatrixFormatError("'entries' must be a list", field="entries")
    if len(entries) != dim * dim:
        raise MatrixFormatError(f"'entries' has {len(entries)} items, expected dim**2 = {dim * dim}",
                                field="entries")
    values = np.empty(dim * dim, dtype=np.complex128)
    for k, item in enumerate(entries):
        where = f"entries[{k}]"
        if not isinstance(item, list) or len(item) != 2:
            raise MatrixFormatError(f"{where} must be a [re, im] pair", field=where)
        for part in item:
            if isinstance(part, bool) or not isinstance(part, (int, float)) or not math.isfinite(part):
                raise MatrixFormatError(f"{where} has a non-finite or non-numeric part {part!r}", field=where)
        values[k] = complex(float(item[0]), float(item[1]))
    return as_matrix(values.reshape(dim, dim))


def dumps(t) -> str:
    t = as_matrix(t)
    entries = [[float(z.real), float(z.imag)] for z in t.ravel()]
    return json.dumps({"dim": t.shape[0], "entries": entries})


def parse_token(token: str) -> complex:
    s = _BARE_UNIT.sub(r"\g<1>1j", token.strip().replace("i", "j"))
    try:
        z = complex(s)
    except ValueError:
        raise MatrixFormatError(f"cannot parse matrix entry {token!r}", field="entries") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise MatrixFormatError(f"non-finite matrix entry {token!r}", field="entries")
    return z


def loads_text(text: str) -> np.ndarray:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_token(tok) for tok in line.split()])
    if not rows:
        raise MatrixFormatError("no matrix rows found", field="entries")
    m = len(rows)
    for r, row in enumerate(rows):
        if len(row) != m:
            raise MatrixFormatError(f"row {r} has {len(row)} entries, expected {m}", field=f"row {r}")
    return as_matrix(rows)


def loads(text: str) -> np.ndarray:
    if text.lstrip().startswith("{"):
        return loads_json(text)
    return loads_text(text)


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc.strerror}", field="path") from None
    return loads(text)


def write_matrix(path, t) -> None:
    Path(path).write_text(dumps(t) + "\n")
