"""Structure theory of a finite algebra: center, Jacobson radical, socles,
idempotents, locality, and the decomposition into central blocks.

The radical is produced by two genuinely independent routes.  The ground
truth is the unit-criterion oracle (x is radical iff 1 - a*x is a unit for
every a), assembled by greedy subspace growth over the element enumeration.
When the characteristic exceeds the dimension, the radical of the trace
bilinear form of the left regular representation gives a second, fast
route; whenever both run they must agree, and a disagreement is treated as
an implementation bug, never as data.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

import numpy as np

from . import kernels
from .core import (DEFAULT_ENUM_CAP, FiniteAlgebra, Ideal, quotient_algebra,
                   require_enum_budget, subalgebra_on)
from .errors import (CapExceededError, DecompositionUnavailableError,
                     TheoremViolationError)
from .fplinalg import (Subspace, intersect, kernel, member, rref,
                       zero_subspace)


def center(algebra: FiniteAlgebra) -> Subspace:
    """Elements commuting with every basis vector, via one kernel
    computation on the stacked left-minus-right multiplication matrices."""
    if "center" in algebra._memo:
        return algebra._memo["center"]
    t = algebra.table
    d = algebra.dim
    # block i: (e_i * x - x * e_i) as a linear map of x
    stacked = (t - t.transpose(1, 0, 2)).transpose(0, 2, 1).reshape(d * d, d)
    c = kernel(stacked % algebra.p, algebra.field)
    assert member(algebra.unit, c)
    for u in c.basis:
        for v in c.basis:
            assert member(algebra.mul(u, v), c)
    algebra._memo["center"] = c
    return c


def radical_unit_oracle(algebra: FiniteAlgebra,
                        cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """Jacobson radical by exhaustive membership testing."""
    require_enum_budget(algebra.p, algebra.dim, cap, "radical oracle")
    rows = kernels.radical_scan(algebra.table, algebra.unit, algebra.p,
                                algebra.cardinality)
    return rref(rows, algebra.field, algebra.dim)


def radical_trace_form(algebra: FiniteAlgebra) -> Subspace:
    """Radical of the trace form of the left regular representation.

    Equals the Jacobson radical when p > dim (nilpotent operators are
    trace-free in any characteristic, but the converse direction of the
    argument needs the characteristic to beat the dimension).
    """
    if algebra.p <= algebra.dim:
        raise CapExceededError(
            "trace-form radical requires p > dim "
            f"(p={algebra.p}, dim={algebra.dim})")
    t = algebra.table
    lmats = t.transpose(0, 2, 1)
    gram = np.einsum("iab,jba->ij", lmats, lmats) % algebra.p
    return kernel(gram, algebra.field)


def jacobson_radical(algebra: FiniteAlgebra, cap: int = DEFAULT_ENUM_CAP,
                     _self_check: bool = True) -> Subspace:
    """Jacobson radical: oracle route when the enumeration fits the cap,
    trace route when p > dim; cross-checked when both are available.

    Verified on the result: it is a two-sided ideal, it is nilpotent with
    index at most dim, and the quotient by it has zero radical.
    """
    oracle_ok = algebra.p ** algebra.dim <= cap
    trace_ok = algebra.p > algebra.dim
    if not oracle_ok and not trace_ok:
        raise CapExceededError(
            f"radical of {algebra.name}: {algebra.p}**{algebra.dim} over the "
            f"cap {cap} and no trace route (needs p > dim)")
    if "radical" in algebra._memo:
        return algebra._memo["radical"]
    j_oracle = radical_unit_oracle(algebra, cap) if oracle_ok else None
    j_trace = radical_trace_form(algebra) if trace_ok else None
    if j_oracle is not None and j_trace is not None and j_oracle != j_trace:
        raise TheoremViolationError(
            f"radical routes disagree on {algebra.name}: "
            f"oracle dim {j_oracle.dim}, trace dim {j_trace.dim}")
    j = j_oracle if j_oracle is not None else j_trace

    ideal = Ideal(algebra, j)  # raises if not closed under multiplication
    if _self_check:
        power = j
        nilpotency = 1
        while power.dim > 0:
            if nilpotency > algebra.dim:
                raise TheoremViolationError(
                    f"radical of {algebra.name} is not nilpotent within dim steps")
            rows = [algebra.mul(u, v) for u in power.basis for v in j.basis]
            power = rref(rows, algebra.field, algebra.dim)
            nilpotency += 1
        if j.dim < algebra.dim:
            quo = quotient_algebra(algebra, ideal)
            jq = jacobson_radical(quo, cap, _self_check=False)
            if jq.dim != 0:
                raise TheoremViolationError(
                    f"quotient of {algebra.name} by its radical is not semiprimitive")
    algebra._memo["radical"] = j
    return j


def annihilator(algebra: FiniteAlgebra, space: Subspace,
                side: str) -> Subspace:
    """side='right': {x : x*w = 0 for every w in the space};
    side='left': {x : w*x = 0 for every w in the space}."""
    if space.dim == 0:
        rows = np.eye(algebra.dim, dtype=np.int64)
        return rref(rows, algebra.field, algebra.dim)
    blocks = []
    for w in space.basis:
        if side == "right":
            blocks.append(algebra.right_mult_matrix(w))
        elif side == "left":
            blocks.append(algebra.left_mult_matrix(w))
        else:
            raise ValueError("side must be 'left' or 'right'")
    return kernel(np.vstack(blocks), algebra.field)


def socle_over_center(algebra: FiniteAlgebra,
                      cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """Socle of the algebra viewed as a module over its center C.

    C is finite and commutative, hence artinian, so the socle of any
    C-module is the annihilator of J(C); and J(C) = C ∩ J(R) because
    central nilpotents generate nilpotent ideals.
    """
    c = center(algebra)
    j = jacobson_radical(algebra, cap)
    jc = intersect(c, j)
    return annihilator(algebra, jc, side="right")


def right_socle(algebra: FiniteAlgebra, cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """Socle of the right regular module: {x : x * j = 0 for all j in J}."""
    return annihilator(algebra, jacobson_radical(algebra, cap), side="right")


def left_socle(algebra: FiniteAlgebra, cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """Socle of the left regular module: {x : j * x = 0 for all j in J}."""
    return annihilator(algebra, jacobson_radical(algebra, cap), side="left")


def socle_over_center_bruteforce(algebra: FiniteAlgebra,
                                 cap: int = 1 << 14) -> Subspace:
    """Independent small-ring oracle for the socle over the center: sum of
    the simple cyclic C-submodules x*C, simplicity checked by exhausting
    the submodule."""
    require_enum_budget(algebra.p, algebra.dim, cap, "brute-force socle")
    c = center(algebra)
    p = algebra.p
    soc = zero_subspace(algebra.field, algebra.dim)
    for idx in range(1, algebra.cardinality):
        x = algebra.element_by_index(idx)
        rows = [algebra.mul(x, cb) for cb in c.basis]
        xc = rref(rows, algebra.field, algebra.dim)
        if xc.dim == 0:
            continue
        require_enum_budget(p, xc.dim, cap, "brute-force socle submodule")
        simple = True
        for cidx in range(1, p ** xc.dim):
            coeffs = kernels.decode_index(cidx, p, xc.dim)
            y = (coeffs @ xc.basis) % p
            yc = rref([algebra.mul(y, cb) for cb in c.basis],
                      algebra.field, algebra.dim)
            if yc != xc:
                simple = False
                break
        if simple:
            soc = rref(np.vstack([soc.basis, xc.basis]) if soc.dim else xc.basis,
                       algebra.field, algebra.dim)
    return soc


def idempotents(algebra: FiniteAlgebra,
                cap: int = DEFAULT_ENUM_CAP) -> list[np.ndarray]:
    """All x with x*x = x, in lexicographic coordinate order."""
    require_enum_budget(algebra.p, algebra.dim, cap, "idempotent scan")
    if "idempotents" in algebra._memo:
        return [v.copy() for v in algebra._memo["idempotents"]]
    mask = kernels.idempotent_mask(algebra.table, algebra.p,
                                   algebra.cardinality)
    found = [algebra.element_by_index(int(i)) for i in np.flatnonzero(mask)]
    assert any(not v.any() for v in found)
    assert any(np.array_equal(v, algebra.unit) for v in found)
    algebra._memo["idempotents"] = found
    return [v.copy() for v in found]


def idempotents_all_central(algebra: FiniteAlgebra,
                            cap: int = DEFAULT_ENUM_CAP) -> bool:
    c = center(algebra)
    return all(member(e, c) for e in idempotents(algebra, cap))


def is_local(algebra: FiniteAlgebra, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff every element outside the radical is a unit (for a finite
    ring this is the division-ring-quotient condition)."""
    j = jacobson_radical(algebra, cap)
    require_enum_budget(algebra.p, algebra.dim, cap, "locality scan")
    hit = kernels.nonunit_outside_scan(
        algebra.table, np.ascontiguousarray(j.basis),
        np.asarray(j.pivots, dtype=np.int64), algebra.p, algebra.cardinality)
    local = hit < 0
    # cross-check on the quotient when the pair scan fits the budget
    quo_dim = algebra.dim - j.dim
    if algebra.p ** (2 * quo_dim) <= min(cap, 1 << 20):
        quo = (quotient_algebra(algebra, Ideal(algebra, j, _verified=True))
               if j.dim else algebra)
        if _has_zero_divisors(quo) == local:
            raise TheoremViolationError(
                f"locality routes disagree on {algebra.name}")
    return local


def _has_zero_divisors(algebra: FiniteAlgebra) -> bool:
    """Exhaustive pair check x*y = 0 with x, y nonzero, batched over x."""
    n = algebra.cardinality
    d = algebra.dim
    p = algebra.p
    allv = np.stack([algebra.element_by_index(i) for i in range(1, n)])
    lbas = algebra.table.transpose(0, 2, 1)
    chunk = max(1, (1 << 18) // (d * (n - 1) + 1))
    for start in range(0, n - 1, chunk):
        xs = allv[start: start + chunk]
        lmats = np.tensordot(xs, lbas, axes=(1, 0)) % p
        prods = (lmats @ allv.T) % p  # (chunk, d, n-1)
        if (~prods.any(axis=1)).any():
            return True
    return False


def central_idempotents(algebra: FiniteAlgebra,
                        cap: int = DEFAULT_ENUM_CAP) -> list[np.ndarray]:
    """Idempotents of the center, found by scanning the center subalgebra
    (p**dim(C) elements rather than p**dim)."""
    c = center(algebra)
    csub = subalgebra_on(algebra, c, algebra.unit, name=f"{algebra.name}|center")
    inner = idempotents(csub, cap)
    return [(e @ c.basis) % algebra.p for e in inner]


def local_decomposition(algebra: FiniteAlgebra,
                        cap: int = DEFAULT_ENUM_CAP) -> list[FiniteAlgebra]:
    """Corner algebras e*A*e over the primitive central idempotents.

    Requires every idempotent of the algebra to be central; the primitive
    central idempotents then form the unique complete orthogonal system and
    the corners reconstruct the algebra as a direct product.
    """
    if not idempotents_all_central(algebra, cap):
        raise DecompositionUnavailableError(
            f"{algebra.name} has a noncentral idempotent; "
            "central block decomposition does not apply")
    cents = central_idempotents(algebra, cap)
    nonzero = [e for e in cents if e.any()]

    def splits(e: np.ndarray) -> bool:
        for f in nonzero:
            if np.array_equal(f, e):
                continue
            rest = (e - f) % algebra.p
            if not rest.any():
                continue
            if not algebra.mul(f, rest).any():
                return True
        return False

    primitive = [e for e in nonzero if not splits(e)]
    total = algebra.zero()
    for e in primitive:
        total = (total + e) % algebra.p
    if not np.array_equal(total, algebra.unit):
        raise TheoremViolationError(
            f"primitive central idempotents of {algebra.name} do not sum to 1")
    for a in range(len(primitive)):
        for b in range(a + 1, len(primitive)):
            if algebra.mul(primitive[a], primitive[b]).any():
                raise TheoremViolationError(
                    f"primitive central idempotents of {algebra.name} "
                    "are not orthogonal")
    factors = []
    for pos, e in enumerate(primitive):
        rows = [algebra.mul(algebra.mul(e, algebra.basis_element(i)), e)
                for i in range(algebra.dim)]
        space = rref(rows, algebra.field, algebra.dim)
        factors.append(subalgebra_on(algebra, space, e,
                                     name=f"{algebra.name}|block{pos}"))
    if sum(f.dim for f in factors) != algebra.dim:
        raise TheoremViolationError(
            f"central block dimensions of {algebra.name} do not add up")
    return factors


# ---------------------------------------------------------------------------
# analysis report


_FLAG_ORDER = (
    "commutative", "centrally_essential", "local", "semiprime",
    "idempotents_central", "soc_in_center", "radical_quotient_commutative",
    "r_equals_c_plus_j", "socles_equal",
)


def _fmt(value) -> str:
    if value is None:
        return "unknown"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class AnalysisReport:
    """Everything the analyzer computed about one ring.

    Every field is a pure function of the input algebra (and grading), so
    re-running the analysis reproduces the report byte for byte.
    """

    name: str
    p: int
    dim: int
    dim_center: int
    dim_radical: Optional[int] = None
    dim_socle_center: Optional[int] = None
    commutative: bool = False
    centrally_essential: Optional[bool] = None
    ce_method: str = "none"
    ce_witness: Optional[tuple[int, ...]] = None
    local: Optional[bool] = None
    semiprime: Optional[bool] = None
    idempotents_central: Optional[bool] = None
    soc_in_center: Optional[bool] = None
    radical_quotient_commutative: Optional[bool] = None
    r_equals_c_plus_j: Optional[bool] = None
    socles_equal: Optional[bool] = None
    factor_count: Optional[int] = None
    notes: tuple[str, ...] = dataclass_field(default_factory=tuple)

    def to_text(self) -> str:
        lines = [
            f"name {self.name}",
            f"p {self.p}",
            f"dim {self.dim}",
            f"cardinality {self.p}^{self.dim}",
            f"dim_center {self.dim_center}",
            f"dim_radical {_fmt(self.dim_radical)}",
            f"dim_socle_center {_fmt(self.dim_socle_center)}",
        ]
        for flag in _FLAG_ORDER:
            lines.append(f"{flag} {_fmt(getattr(self, flag))}")
        lines.append(f"ce_method {self.ce_method}")
        if self.ce_witness is not None:
            lines.append("ce_witness " + " ".join(str(v) for v in self.ce_witness))
        lines.append(f"factor_count {_fmt(self.factor_count)}")
        for note in self.notes:
            lines.append(f"note {note}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "name": self.name,
            "p": self.p,
            "dim": self.dim,
            "cardinality": f"{self.p}^{self.dim}",
            "dim_center": self.dim_center,
            "dim_radical": self.dim_radical,
            "dim_socle_center": self.dim_socle_center,
        }
        for flag in _FLAG_ORDER:
            data[flag] = getattr(self, flag)
        data["ce_method"] = self.ce_method
        data["ce_witness"] = (list(self.ce_witness)
                              if self.ce_witness is not None else None)
        data["factor_count"] = self.factor_count
        data["notes"] = list(self.notes)
        return json.dumps(data)
