"""Exact linear algebra over prime fields F_p.

Vectors are numpy int64 arrays with entries reduced into [0, p).  Subspaces
are always stored through their reduced row echelon basis, so two Subspace
values describe the same subspace exactly when their basis arrays compare
equal.  Everything here is pure and allocation-fresh; nothing mutates its
inputs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, InvalidRingError

MAX_PRIME = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The field F_p with p prime, p < 2**16."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise InvalidRingError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise InvalidRingError(f"modulus {p} too large (must be < {MAX_PRIME})")
        self.p = p

    def reduce(self, data) -> np.ndarray:
        return np.asarray(data, dtype=np.int64) % self.p

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def _rref_array(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form of an int matrix mod p.

    Returns (nonzero rows, pivot columns).  Pivot entries are 1 and are the
    only nonzero entries in their columns.
    """
    m = np.array(mat, dtype=np.int64) % p
    if m.ndim != 2:
        raise DimensionError("expected a 2-d matrix")
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        hits = r + np.flatnonzero(m[r:, c])
        if hits.size == 0:
            continue
        pr = int(hits[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], tuple(pivots)


class Subspace:
    """A subspace of F_p^n held in canonical (RREF) form."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: PrimeField, ambient_dim: int, basis: np.ndarray,
                 pivots: tuple[int, ...]):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        b = np.ascontiguousarray(basis, dtype=np.int64)
        b.setflags(write=False)
        self.basis = b
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def coords_of(self, v) -> np.ndarray:
        """Coefficients of v in this basis; v must be a member."""
        v = self.field.reduce(v)
        if not member(v, self):
            raise ValueError("vector is not in the subspace")
        return v[list(self.pivots)].copy()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    def __hash__(self) -> int:
        return hash((self.field.p, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return (f"Subspace(F{self.field.p}, ambient={self.ambient_dim}, "
                f"dim={self.dim})")


def rref(rows: Iterable[Sequence[int]], field: PrimeField, ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given coordinate rows."""
    rows = list(rows)
    for row in rows:
        if len(row) != ambient_dim:
            raise DimensionError(
                f"row of length {len(row)} in ambient dimension {ambient_dim}")
    if not rows:
        m = np.zeros((0, ambient_dim), dtype=np.int64)
        return Subspace(field, ambient_dim, m, ())
    reduced, pivots = _rref_array(np.asarray(rows, dtype=np.int64), field.p)
    return Subspace(field, ambient_dim, reduced, pivots)


def zero_subspace(field: PrimeField, ambient_dim: int) -> Subspace:
    return rref([], field, ambient_dim)


def full_space(field: PrimeField, ambient_dim: int) -> Subspace:
    return rref(np.eye(ambient_dim, dtype=np.int64), field, ambient_dim)


def kernel(matrix, field: PrimeField) -> Subspace:
    """Null space {v : matrix @ v = 0} as a canonical subspace.

    Satisfies rank-nullity: dim(kernel) + rank(matrix) = number of columns.
    """
    try:
        m = np.asarray(matrix, dtype=np.int64)
    except ValueError as exc:
        raise DimensionError("kernel expects a rectangular matrix") from exc
    if m.ndim != 2:
        raise DimensionError("kernel expects a rectangular 2-d matrix")
    nrows, ncols = m.shape
    reduced, pivots = _rref_array(m, field.p)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vecs = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-int(reduced[r, f])) % field.p
        vecs.append(v)
    return rref(vecs, field, ncols)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    stacked = np.vstack([a.basis, b.basis]) if (a.dim or b.dim) else a.basis
    return rref(stacked, a.field, a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces.

    Computed through the kernel of the stacked generator matrix: a vector
    lies in both spans exactly when some coefficient pair (alpha, beta)
    satisfies alpha @ A - beta @ B = 0.
    """
    _check_compatible(a, b)
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(a.field, a.ambient_dim)
    p = a.field.p
    stacked = np.concatenate([a.basis.T, (-b.basis.T) % p], axis=1)
    coeffs = kernel(stacked, a.field)
    if coeffs.dim == 0:
        return zero_subspace(a.field, a.ambient_dim)
    alphas = coeffs.basis[:, : a.dim]
    vecs = (alphas @ a.basis) % p
    return rref(vecs, a.field, a.ambient_dim)


def member(v, s: Subspace) -> bool:
    """True iff the coordinate row v lies in the span of s."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (s.ambient_dim,):
        raise DimensionError(
            f"vector of shape {v.shape} in ambient dimension {s.ambient_dim}")
    p = s.field.p
    v = v % p
    for r, c in enumerate(s.pivots):
        f = int(v[c])
        if f:
            v = (v - f * s.basis[r]) % p
    return not v.any()


def contains(outer: Subspace, inner: Subspace) -> bool:
    """True iff inner is a subspace of outer."""
    _check_compatible(outer, inner)
    return all(member(row, outer) for row in inner.basis)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
