"""Text file formats: sign-matrix CSV, OEIS-style b-files, table CSVs.

Matrix CSV layout::

    # {"level": 2, "scale_exponent": 2}
    1,0,-1,0
    0,1,0,1
    ...

The header line is JSON behind ``# ``; the body is the integer sign array, so
entry (j, k) of the matrix is ``sign / 2**scale_exponent``.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .combinatorics import SequenceQuad
from .decoherence import DecoherenceMatrix
from .exact import Dyadic


def dump_matrix(m: DecoherenceMatrix) -> str:
    header = json.dumps({"level": m.level, "scale_exponent": m.scale_exponent}, sort_keys=True)
    lines = ["# " + header]
    lines.extend(",".join(str(int(x)) for x in row) for row in m.signs)
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> DecoherenceMatrix:
    first, _, body = text.partition("\n")
    if not first.startswith("# "):
        raise ValueError("matrix CSV must start with a '# {json}' header")
    header = json.loads(first[2:])
    rows = [[int(x) for x in line.split(",")] for line in body.splitlines() if line.strip()]
    signs = np.array(rows, dtype=np.int8)
    n = header["level"]
    if signs.shape != (1 << n, 1 << n):
        raise ValueError(f"expected a {1 << n}x{1 << n} body, got {signs.shape}")
    if header["scale_exponent"] != n:
        raise ValueError("scale exponent must equal the level")
    return DecoherenceMatrix(n, signs)


def dump_bfile(values, offset: int = 0, comment: str | None = None) -> str:
    """One ``index value`` pair per line, indices starting at ``offset``."""
    lines = [f"# {comment}"] if comment else []
    lines.extend(f"{offset + i} {int(v)}" for i, v in enumerate(values))
    return "\n".join(lines) + "\n"


def load_bfile(text: str) -> list[tuple[int, int]]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        i, v = line.split()
        out.append((int(i), int(v)))
    return out


def _dyadic_cell(d: Dyadic) -> str:
    return str(d.to_fraction())


QUAD_COLUMNS = ["n", "s", "t", "u", "v", "2^(n-2)"]


def dump_quad_csv(rows: list[SequenceQuad]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(QUAD_COLUMNS)
    for q in rows:
        w.writerow([q.n, q.s, q.t, q.u, q.v, _dyadic_cell(q.quarter_power)])
    return buf.getvalue()


def load_quad_csv(text: str) -> list[SequenceQuad]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != QUAD_COLUMNS:
        raise ValueError(f"unexpected header {header}")
    return [SequenceQuad(*(int(x) for x in row[:5])) for row in reader if row]


def dump_mu_csv(values: list[tuple[int, Dyadic]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "mu", "decimal"])
    for n, d in values:
        w.writerow([n, str(d), str(d.to_decimal())])
    return buf.getvalue()


def load_mu_csv(text: str) -> list[tuple[int, Dyadic]]:
    reader = csv.DictReader(io.StringIO(text))
    return [(int(r["n"]), Dyadic.parse(r["mu"])) for r in reader]


def write_text(path, text: str) -> Path:
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path
