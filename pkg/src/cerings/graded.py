"""Predicates and formulas for algebras graded by nonnegative degrees.

A grading assigns a degree to every basis vector; the homogeneous component
of degree n is the span of the basis vectors of that degree.  The center
formula and the parity criterion implemented at the bottom are only valid
for generalized anticommutative, homogeneously faithful gradings without
additive 2-torsion, so those operations enforce their hypotheses hard
instead of warning: applying them outside their domain would silently
poison every cross-validation built on top.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, HypothesisError
from .fplinalg import Subspace, kernel, rref


@dataclass(frozen=True)
class Grading:
    """Degrees of the basis vectors, one nonnegative integer per index."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(d < 0 for d in self.degrees):
            raise DimensionError("degrees must be nonnegative")

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    def indices_of(self, degree: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == degree]


def _check_length(algebra, grading: Grading) -> None:
    if len(grading.degrees) != algebra.dim:
        raise DimensionError(
            f"grading of length {len(grading.degrees)} on a "
            f"{algebra.dim}-dimensional algebra")


def check_grading(algebra, grading: Grading) -> bool:
    """True iff the degree assignment is compatible with the multiplication
    table and the unit is homogeneous of degree 0."""
    _check_length(algebra, grading)
    deg = np.asarray(grading.degrees, dtype=np.int64)
    table = algebra.table
    needed = deg[:, None] + deg[None, :]
    compatible = (table == 0) | (deg[None, None, :] == needed[:, :, None])
    if not compatible.all():
        return False
    unit_support = np.flatnonzero(algebra.unit)
    return bool((deg[unit_support] == 0).all())


def component(algebra, grading: Grading, degree: int) -> Subspace:
    """Homogeneous component of the given degree as a canonical subspace."""
    _check_length(algebra, grading)
    idxs = grading.indices_of(degree)
    rows = np.zeros((len(idxs), algebra.dim), dtype=np.int64)
    for r, i in enumerate(idxs):
        rows[r, i] = 1
    return rref(rows, algebra.field, algebra.dim)


def even_part(algebra, grading: Grading) -> Subspace:
    """Span of the basis vectors of even degree (the 0-component of the
    induced Z_2-grading)."""
    _check_length(algebra, grading)
    idxs = [i for i, d in enumerate(grading.degrees) if d % 2 == 0]
    rows = np.zeros((len(idxs), algebra.dim), dtype=np.int64)
    for r, i in enumerate(idxs):
        rows[r, i] = 1
    return rref(rows, algebra.field, algebra.dim)


def _require_valid(algebra, grading: Grading) -> None:
    if not check_grading(algebra, grading):
        raise HypothesisError("degree assignment is not a valid grading")


def check_generalized_anticommutative(algebra, grading: Grading) -> bool:
    """True iff y*x = (-1)**(deg x * deg y) * x*y for homogeneous x, y.

    Bilinearity makes the check on basis pairs sufficient.
    """
    _require_valid(algebra, grading)
    p = algebra.field.p
    deg = np.asarray(grading.degrees, dtype=np.int64)
    sign = np.where((deg[:, None] * deg[None, :]) % 2 == 1, p - 1, 1)
    flipped = (algebra.table.transpose(1, 0, 2) * sign[:, :, None]) % p
    return bool(np.array_equal(flipped, algebra.table))


def check_homogeneously_faithful(algebra, grading: Grading) -> bool:
    """True iff for every pair (m, n) with a nonzero component of degree
    m + n: the degree-m component is nonzero and no nonzero x of degree m
    kills the whole degree-n component on the right.

    The quantifier over x is linear, so each pair costs one kernel
    computation; no element enumeration happens here.
    """
    _require_valid(algebra, grading)
    degs = grading.degrees
    present = set(degs)
    table = algebra.table
    for s in sorted(present):
        for m in range(s + 1):
            n = s - m
            if m not in present:
                return False
            rows_m = grading.indices_of(m)
            rows_n = grading.indices_of(n)
            block = table[np.ix_(rows_m, rows_n)]
            mat = block.transpose(1, 2, 0).reshape(-1, len(rows_m))
            if kernel(mat, algebra.field).dim > 0:
                return False
    return True


def _require_formula_hypotheses(algebra, grading: Grading) -> int:
    """Validate the hypotheses of the graded center formula; returns the top
    degree with a nonzero component."""
    if algebra.field.p == 2:
        raise HypothesisError(
            "the graded center formula requires no additive 2-torsion (p != 2)")
    _require_valid(algebra, grading)
    if not check_generalized_anticommutative(algebra, grading):
        raise HypothesisError("ring is not generalized anticommutative")
    if not check_homogeneously_faithful(algebra, grading):
        raise HypothesisError("ring is not homogeneously faithful")
    top = grading.max_degree
    # faithfulness forces the nonzero components to be exactly degrees 0..top
    assert set(grading.degrees) == set(range(top + 1))
    return top


def graded_center_predicted(algebra, grading: Grading) -> Subspace:
    """Center predicted from the grading alone: the even part, plus the top
    component when the top degree is odd."""
    top = _require_formula_hypotheses(algebra, grading)
    idxs = [i for i, d in enumerate(grading.degrees)
            if d % 2 == 0 or (top % 2 == 1 and d == top)]
    rows = np.zeros((len(idxs), algebra.dim), dtype=np.int64)
    for r, i in enumerate(idxs):
        rows[r, i] = 1
    return rref(rows, algebra.field, algebra.dim)


def graded_ce_criterion(algebra, grading: Grading) -> bool:
    """Parity criterion for central essentiality of a graded ring: true iff
    the ring is concentrated in degree 0, or the top nonzero degree is odd."""
    top = _require_formula_hypotheses(algebra, grading)
    return top == 0 or top % 2 == 1
