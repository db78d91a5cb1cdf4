"""Deciders for the centrally essential predicate.

A ring with center C is centrally essential when every nonzero C-submodule
of the ring meets C.  The submodule generated by x over the unital
commutative ring C is exactly x*C, so essentiality reduces to the cyclic
submodules: for every nonzero x, the subspace x*C must intersect C
nontrivially.  That makes the predicate decidable by one scan over the
element enumeration, which is the exhaustive route below.  For graded rings
satisfying the parity criterion's hypotheses there is a second,
enumeration-free route; when both apply they must agree, and that agreement
is the cross-validation spine of the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .core import DEFAULT_ENUM_CAP, FiniteAlgebra, require_enum_budget
from .errors import CapExceededError, HypothesisError, TheoremViolationError
from .fplinalg import intersect, rref
from .graded import Grading, graded_ce_criterion
from .structure import center


@dataclass
class CEVerdict:
    """Outcome of a central-essentiality decision.

    When the verdict is negative and came from the exhaustive route, the
    witness is a nonzero x whose cyclic module x*C misses the center; it is
    re-verified through the plain linear-algebra layer before being
    returned, so a stored witness can always be checked again.
    """

    value: bool
    method: str  # "exhaustive" | "graded-criterion" | "both"
    witness: Optional[np.ndarray] = None


def witness_is_valid(algebra: FiniteAlgebra, witness: np.ndarray) -> bool:
    """Independent re-check that x*C meets the center only in 0."""
    c = center(algebra)
    x = algebra.element(witness)
    if not x.any():
        return False
    xc = rref([algebra.mul(x, row) for row in c.basis],
              algebra.field, algebra.dim)
    return intersect(xc, c).dim == 0


def ce_exhaustive(algebra: FiniteAlgebra,
                  cap: int = DEFAULT_ENUM_CAP) -> CEVerdict:
    """Decide central essentiality by scanning cyclic modules x*C.

    x and λx generate the same module, so only projective representatives
    (first nonzero coordinate 1) are scanned, and x inside C is skipped
    since x itself lies in x*C ∩ C.  The reported witness is the
    scan-order-minimal one.
    """
    require_enum_budget(algebra.p, algebra.dim, cap,
                        "exhaustive essentiality scan "
                        "(a grading may enable the graded criterion)")
    c = center(algebra)
    hit = kernels.ce_scan(algebra.table, np.ascontiguousarray(c.basis),
                          np.asarray(c.pivots, dtype=np.int64),
                          algebra.p, algebra.cardinality)
    if hit < 0:
        return CEVerdict(value=True, method="exhaustive")
    witness = algebra.element_by_index(int(hit))
    if not witness_is_valid(algebra, witness):
        raise TheoremViolationError(
            f"essentiality witness for {algebra.name} failed re-verification")
    return CEVerdict(value=False, method="exhaustive", witness=witness)


def ce_decide(algebra: FiniteAlgebra, grading: Optional[Grading] = None,
              cap: int = DEFAULT_ENUM_CAP) -> CEVerdict:
    """Decide central essentiality by every applicable route.

    Runs the graded parity criterion when a grading is supplied and its
    hypotheses hold, and the exhaustive scan when the enumeration fits the
    cap.  When both run, they must agree; a mismatch is raised as a hard
    error because the agreement is a proved theorem.
    """
    graded_verdict: Optional[bool] = None
    if grading is not None:
        try:
            graded_verdict = graded_ce_criterion(algebra, grading)
        except HypothesisError:
            graded_verdict = None

    exhaustive_verdict: Optional[CEVerdict] = None
    if algebra.p ** algebra.dim <= cap:
        exhaustive_verdict = ce_exhaustive(algebra, cap)

    if graded_verdict is not None and exhaustive_verdict is not None:
        if graded_verdict != exhaustive_verdict.value:
            raise TheoremViolationError(
                f"essentiality routes disagree on {algebra.name}: graded "
                f"criterion says {graded_verdict}, exhaustive scan says "
                f"{exhaustive_verdict.value}")
        return CEVerdict(value=exhaustive_verdict.value, method="both",
                         witness=exhaustive_verdict.witness)
    if exhaustive_verdict is not None:
        return exhaustive_verdict
    if graded_verdict is not None:
        return CEVerdict(value=graded_verdict, method="graded-criterion")
    raise CapExceededError(
        f"central essentiality of {algebra.name} undecidable: enumeration "
        f"over the cap and no usable grading")


def quasi_identity_probe(algebra: FiniteAlgebra, n_max: int,
                         cap: int = DEFAULT_ENUM_CAP
                         ) -> Optional[tuple[int, list[np.ndarray],
                                             list[np.ndarray], np.ndarray]]:
    """Search for (x_1..x_n, y_1..y_n, r) with sum x_i y_i = 1,
    sum x_i r y_i = 0 and r nonzero, for n = 1..n_max.

    Centrally essential rings admit no such tuple; rings that are not may
    or may not reveal one within the budget.  This is a falsifier only:
    returning None means "no counterexample up to the budget", never "the
    quasi-identity holds".  Returns the scan-order-first counterexample as
    (n, xs, ys, r).
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        require_enum_budget(algebra.p, (2 * n + 1) * algebra.dim, cap,
                            f"quasi-identity probe at n={n}")
    for n in range(1, n_max + 1):
        out = kernels.quasi_probe_scan(algebra.table, algebra.unit,
                                       algebra.p, n, algebra.cardinality)
        if out.size:
            xs = [algebra.element_by_index(int(i)) for i in out[:n]]
            ys = [algebra.element_by_index(int(i)) for i in out[n:2 * n]]
            r = algebra.element_by_index(int(out[2 * n]))
            total = algebra.zero()
            ruined = algebra.zero()
            for x, y in zip(xs, ys):
                total = (total + algebra.mul(x, y)) % algebra.p
                ruined = (ruined + algebra.mul(algebra.mul(x, r), y)) % algebra.p
            if (not np.array_equal(total, algebra.unit) or ruined.any()
                    or not r.any()):
                raise TheoremViolationError(
                    f"quasi-identity counterexample for {algebra.name} "
                    "failed re-verification")
            return n, xs, ys, r
    return None
