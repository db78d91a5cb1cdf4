"""Random and exhaustive searches for noteworthy rings.

The random generator leans local (field base plus nilpotent part) because
central essentiality reduces to the local blocks, which raises the hit rate
for noncommutative centrally essential examples.  Searches are exploratory:
they tally, they never assert.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Optional

import numpy as np

from . import kernels
from .core import (DEFAULT_ENUM_CAP, FiniteAlgebra, PrimeField,
                   random_algebra)
from .errors import CapExceededError, InvalidRingError
from .ringfile import dump_ring
from .structure import AnalysisReport
from .verify import analyze

_EXHAUSTIVE_TABLE_CAP = 1 << 16


@dataclass
class SearchOutcome:
    reports: list[AnalysisReport]
    written: list[Path] = dataclass_field(default_factory=list)

    def tally_text(self) -> str:
        ce = [r for r in self.reports if r.centrally_essential is True]
        noncomm_ce = [r for r in ce if not r.commutative]
        sum_false = [r for r in ce if r.r_equals_c_plus_j is False]
        soc_false = [r for r in ce if r.socles_equal is False]
        lines = [
            f"searched {len(self.reports)}",
            f"ce {len(ce)}",
            f"noncommutative_ce {len(noncomm_ce)}",
            f"probe_center_plus_radical_false {len(sum_false)}",
            f"probe_socles_unequal {len(soc_false)}",
            f"written {len(self.written)}",
        ]
        return "\n".join(lines) + "\n"


def _derived_seed(seed: int, i: int) -> int:
    # stable child seed that can be replayed through `construct random`
    return seed * 1_000_003 + i


def enumerate_all_algebras(p: int, dim: int):
    """Every unital associative structure-constant table of the given shape,
    in table-index order.  Practical only for tiny shapes; gated by the
    number of candidate tables."""
    field = PrimeField(p)
    n_entries = dim ** 3
    total = p ** n_entries
    if total > _EXHAUSTIVE_TABLE_CAP:
        raise CapExceededError(
            f"exhaustive table enumeration needs {p}**{n_entries} candidates, "
            f"over the cap {_EXHAUSTIVE_TABLE_CAP}")
    eye = np.eye(dim, dtype=np.int64)
    for idx in range(total):
        digits = kernels.decode_index(idx, p, n_entries)
        table = digits.reshape(dim, dim, dim)
        unit = None
        for uidx in range(p ** dim):
            u = kernels.decode_index(uidx, p, dim)
            left = np.einsum("i,ijk->jk", u, table) % p
            right = np.einsum("j,ijk->ik", u, table) % p
            if np.array_equal(left, eye) and np.array_equal(right, eye):
                unit = u
                break
        if unit is None:
            continue
        if kernels.assoc_violation(table, p)[0] >= 0:
            continue
        yield FiniteAlgebra(field, table, unit,
                            name=f"enum(F{p},dim{dim},table{idx})")


def run_search(p: int, dim: int, count, seed: int = 0,
               out_dir: Optional[Path] = None,
               cap: int = DEFAULT_ENUM_CAP) -> SearchOutcome:
    """Generate and analyze `count` random algebras (or every algebra of
    the shape, when count == 'all'), writing each centrally essential
    noncommutative find to out_dir.  Same seed, same output, byte for byte.
    """
    if count == "all":
        algebras = list(enumerate_all_algebras(p, dim))
    else:
        count = int(count)
        if count < 0:
            raise InvalidRingError("count must be nonnegative or 'all'")
        algebras = [random_algebra(p, dim, _derived_seed(seed, i))
                    for i in range(count)]
    outcome = SearchOutcome(reports=[])
    for algebra in algebras:
        report = analyze(algebra, None, cap)
        outcome.reports.append(report)
        if report.centrally_essential is True and not report.commutative:
            if out_dir is not None:
                out_dir = Path(out_dir)
                out_dir.mkdir(parents=True, exist_ok=True)
                target = out_dir / f"{_safe(algebra.name)}.ring"
                dump_ring(target, algebra)
                outcome.written.append(target)
    return outcome


def _safe(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "._-" else "_" for ch in name)
