"""Plain-text persistence of structure-constant tables.

A ring file is a sequence of whitespace-separated integer fields::

    p 3
    dim 8
    unit 1 0 0 0 0 0 0 0
    table
    <d*d rows of d integers, row i*d+j = coordinates of e_i * e_j>
    grading 0 1 1 1 2 2 2 3
    name exterior(3,3)

Lines whose first nonblank character is '#' are comments.  ``grading`` and
``name`` are optional.  Writers emit the fields in the order above; readers
accept them in any order.
"""

from __future__ import annotations

import io
from typing import Optional

import numpy as np

from .core import FiniteAlgebra
from .errors import InvalidRingError
from .fplinalg import PrimeField
from .graded import Grading, check_grading

_FIELDS = {"p", "dim", "unit", "table", "grading", "name"}


def ring_text(algebra: FiniteAlgebra, grading: Optional[Grading] = None) -> str:
    out = io.StringIO()
    d = algebra.dim
    out.write(f"p {algebra.p}\n")
    out.write(f"dim {d}\n")
    out.write("unit " + " ".join(str(int(v)) for v in algebra.unit) + "\n")
    out.write("table\n")
    for i in range(d):
        for j in range(d):
            out.write(" ".join(str(int(v)) for v in algebra.table[i, j]) + "\n")
    if grading is not None:
        out.write("grading " + " ".join(str(g) for g in grading.degrees) + "\n")
    if algebra.name:
        out.write(f"name {algebra.name}\n")
    return out.getvalue()


def parse_ring_text(text: str) -> tuple[FiniteAlgebra, Optional[Grading]]:
    sections: dict[str, list[int]] = {}
    name: Optional[str] = None
    current: Optional[str] = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] in _FIELDS:
            key = tokens[0]
            if key == "name":
                name = line[len("name"):].strip()
                current = None
                continue
            if key in sections:
                raise InvalidRingError(f"duplicate field {key!r}")
            sections[key] = []
            current = key
            tokens = tokens[1:]
        if current is None:
            raise InvalidRingError(f"stray data outside any field: {line!r}")
        try:
            sections[current].extend(int(t) for t in tokens)
        except ValueError as exc:
            raise InvalidRingError(f"non-integer token in {current!r}") from exc

    for required in ("p", "dim", "unit", "table"):
        if required not in sections:
            raise InvalidRingError(f"missing field {required!r}")
    if len(sections["p"]) != 1 or len(sections["dim"]) != 1:
        raise InvalidRingError("fields p and dim take exactly one integer")
    p = sections["p"][0]
    d = sections["dim"][0]
    if d < 1:
        raise InvalidRingError("dim must be positive")
    if len(sections["unit"]) != d:
        raise InvalidRingError(f"unit must have {d} entries")
    if len(sections["table"]) != d * d * d:
        raise InvalidRingError(
            f"table must have {d}*{d}*{d} entries, got {len(sections['table'])}")
    field = PrimeField(p)
    table = np.array(sections["table"], dtype=np.int64).reshape(d, d, d)
    algebra = FiniteAlgebra(field, table, sections["unit"], name=name or "")

    grading = None
    if "grading" in sections:
        if len(sections["grading"]) != d:
            raise InvalidRingError(f"grading must have {d} entries")
        grading = Grading(tuple(sections["grading"]))
        if not check_grading(algebra, grading):
            raise InvalidRingError("grading block is incompatible with the table")
    return algebra, grading


def dump_ring(path, algebra: FiniteAlgebra,
              grading: Optional[Grading] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(ring_text(algebra, grading))


def load_ring(path) -> tuple[FiniteAlgebra, Optional[Grading]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ring_text(fh.read())
