"""Finite-dimensional unital associative algebras over F_p.

An algebra is stored by its structure constants: table[i, j] holds the
coordinates of e_i * e_j.  The constructor proves associativity and the
unit law on the spot and refuses anything else, so every FiniteAlgebra in
circulation is a genuine ring.  Values are immutable after construction.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .errors import (CapExceededError, DegenerateQuotientError,
                     DimensionError, InvalidRingError, TheoremViolationError)
from .fplinalg import PrimeField, Subspace, member, rref
from .graded import Grading

DEFAULT_ENUM_CAP = 1 << 24
DEFAULT_DIM_CAP = 64


def require_enum_budget(p: int, dim: int, cap: int, what: str) -> None:
    """Gate an exhaustive routine on its p**dim element count."""
    if p ** dim > cap:
        raise CapExceededError(
            f"{what} would enumerate {p}**{dim} elements, over the cap {cap}")


class FiniteAlgebra:
    """A unital associative algebra of dimension d over F_p."""

    def __init__(self, field: PrimeField, table, unit, name: str = "",
                 dim_cap: int = DEFAULT_DIM_CAP):
        t = np.ascontiguousarray(table, dtype=np.int64) % field.p
        if t.ndim != 3 or t.shape[0] != t.shape[1] or t.shape[0] != t.shape[2]:
            raise DimensionError(
                f"structure constants must be d x d x d, got {t.shape}")
        d = t.shape[0]
        if d < 1:
            raise DimensionError("algebras here have dimension at least 1")
        if d > dim_cap:
            raise CapExceededError(f"dimension {d} over the cap {dim_cap}")
        u = np.ascontiguousarray(unit, dtype=np.int64) % field.p
        if u.shape != (d,):
            raise DimensionError(f"unit must be a length-{d} coordinate row")
        bad = kernels.assoc_violation(t, field.p)
        if bad[0] >= 0:
            i, j, k = (int(v) for v in bad)
            raise InvalidRingError(
                f"table is not associative at basis triple ({i}, {j}, {k})")
        left = np.einsum("i,ijk->jk", u, t) % field.p
        right = np.einsum("j,ijk->ik", u, t) % field.p
        eye = np.eye(d, dtype=np.int64)
        if not (np.array_equal(left, eye) and np.array_equal(right, eye)):
            raise InvalidRingError("declared unit does not satisfy the unit law")
        t.setflags(write=False)
        u.setflags(write=False)
        self.field = field
        self.table = t
        self.unit = u
        self.name = name or f"algebra(p={field.p},dim={d})"
        self._memo: dict = {}

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def cardinality(self) -> int:
        return self.p ** self.dim

    def element(self, data) -> np.ndarray:
        v = np.asarray(data, dtype=np.int64)
        if v.shape != (self.dim,):
            raise DimensionError(
                f"element of shape {v.shape} in a dimension-{self.dim} algebra")
        return v % self.p

    def basis_element(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def one(self) -> np.ndarray:
        return self.unit.copy()

    def element_by_index(self, idx: int) -> np.ndarray:
        return kernels.decode_index(idx, self.p, self.dim)

    def index_of(self, v) -> int:
        return kernels.encode_vector(self.element(v), self.p)

    def mul(self, x, y) -> np.ndarray:
        x = self.element(x)
        y = self.element(y)
        partial = np.einsum("i,ijk->jk", x, self.table) % self.p
        return np.einsum("j,jk->k", y, partial) % self.p

    def commutator(self, x, y) -> np.ndarray:
        return (self.mul(x, y) - self.mul(y, x)) % self.p

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix M with M @ y = x * y."""
        return np.einsum("i,ijk->kj", self.element(x), self.table) % self.p

    def right_mult_matrix(self, x) -> np.ndarray:
        """Matrix M with M @ a = a * x."""
        return np.einsum("j,ijk->ki", self.element(x), self.table) % self.p

    def is_unit(self, x) -> bool:
        """True iff left multiplication by x is invertible (two-sided
        invertibility follows in a finite ring)."""
        from .fplinalg import _rref_array
        _, pivots = _rref_array(self.left_mult_matrix(x), self.p)
        return len(pivots) == self.dim

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def __repr__(self) -> str:
        return f"FiniteAlgebra({self.name!r}, p={self.p}, dim={self.dim})"


# ---------------------------------------------------------------------------
# constructors


def field_algebra(p: int) -> FiniteAlgebra:
    """F_p as a 1-dimensional algebra over itself."""
    field = PrimeField(p)
    table = np.ones((1, 1, 1), dtype=np.int64)
    return FiniteAlgebra(field, table, [1], name=f"field({p})")


def exterior_algebra(p: int, n: int,
                     dim_cap: int = DEFAULT_DIM_CAP) -> tuple[FiniteAlgebra, Grading]:
    """Exterior algebra on n generators over F_p, with its natural grading.

    Basis vectors are indexed by the subsets of {1..n}, ordered by
    (cardinality, lexicographic), so degrees are contiguous.  The product of
    e_S and e_T is zero when S and T overlap and otherwise carries the sign
    (-1)**inversions of the concatenation of the two ascending index lists.
    Squares of generators vanish by construction, which keeps the table
    valid at p = 2 as well.
    """
    if n < 1:
        raise DimensionError("need at least one generator")
    field = PrimeField(p)
    if 2 ** n > dim_cap:
        raise CapExceededError(f"dimension 2**{n} over the cap {dim_cap}")
    subsets = sorted(
        (s for k in range(n + 1) for s in combinations(range(1, n + 1), k)),
        key=lambda s: (len(s), s))
    index = {s: i for i, s in enumerate(subsets)}
    d = len(subsets)
    table = np.zeros((d, d, d), dtype=np.int64)
    for i, s in enumerate(subsets):
        for j, t in enumerate(subsets):
            if set(s) & set(t):
                continue
            inversions = sum(1 for a in s for b in t if a > b)
            merged = tuple(sorted(s + t))
            sign = 1 if inversions % 2 == 0 else p - 1
            table[i, j, index[merged]] = sign
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    algebra = FiniteAlgebra(field, table, unit, name=f"exterior({p},{n})",
                            dim_cap=dim_cap)
    grading = Grading(tuple(len(s) for s in subsets))
    return algebra, grading


def matrix_algebra(n: int, p: int) -> FiniteAlgebra:
    """Full matrix algebra M_n(F_p); basis e_rc in row-major order."""
    if n < 1:
        raise DimensionError("matrix size must be positive")
    field = PrimeField(p)
    d = n * n
    table = np.zeros((d, d, d), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        table[a * n + b, c * n + e, a * n + e] = 1
    unit = np.zeros(d, dtype=np.int64)
    for a in range(n):
        unit[a * n + a] = 1
    return FiniteAlgebra(field, table, unit, name=f"matrix({n},F{p})")


def triangular_algebra(n: int, p: int) -> FiniteAlgebra:
    """Upper triangular n x n matrices over F_p."""
    if n < 1:
        raise DimensionError("matrix size must be positive")
    field = PrimeField(p)
    pairs = [(r, c) for r in range(n) for c in range(r, n)]
    index = {rc: i for i, rc in enumerate(pairs)}
    d = len(pairs)
    table = np.zeros((d, d, d), dtype=np.int64)
    for i, (a, b) in enumerate(pairs):
        for j, (c, e) in enumerate(pairs):
            if b == c:
                table[i, j, index[(a, e)]] = 1
    unit = np.zeros(d, dtype=np.int64)
    for a in range(n):
        unit[index[(a, a)]] = 1
    return FiniteAlgebra(field, table, unit, name=f"triangular({n},F{p})")


def _validate_group_table(g: np.ndarray) -> int:
    """Check the multiplication table of a finite group; returns the
    identity index."""
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise InvalidRingError("group table must be square")
    k = g.shape[0]
    if ((g < 0) | (g >= k)).any():
        raise InvalidRingError("group table entries out of range")
    identity = -1
    for e in range(k):
        if all(g[e, j] == j and g[j, e] == j for j in range(k)):
            identity = e
            break
    if identity < 0:
        raise InvalidRingError("group table has no identity element")
    for a in range(k):
        if identity not in g[a]:
            raise InvalidRingError(f"group element {a} has no right inverse")
        if identity not in g[:, a]:
            raise InvalidRingError(f"group element {a} has no left inverse")
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if g[g[a, b], c] != g[a, g[b, c]]:
                    raise InvalidRingError(
                        f"group table not associative at ({a}, {b}, {c})")
    return identity


def group_algebra(p: int, group_table, name: str = "") -> FiniteAlgebra:
    """Group algebra F_p[G] from an explicit multiplication table of G."""
    field = PrimeField(p)
    g = np.asarray(group_table, dtype=np.int64)
    identity = _validate_group_table(g)
    k = g.shape[0]
    table = np.zeros((k, k, k), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            table[a, b, g[a, b]] = 1
    unit = np.zeros(k, dtype=np.int64)
    unit[identity] = 1
    return FiniteAlgebra(field, table, unit,
                         name=name or f"groupalgebra(F{p},order{k})")


def named_group_table(name: str) -> np.ndarray:
    """Small catalog of groups by name: cN (cyclic), v4, s3, d4, q8."""
    name = name.lower()
    if name.startswith("c") and name[1:].isdigit():
        n = int(name[1:])
        if not 1 <= n <= 64:
            raise InvalidRingError(f"cyclic group order {n} out of range")
        return np.fromfunction(lambda i, j: (i + j) % n, (n, n), dtype=np.int64)
    if name == "v4":
        elems = [(0, 0), (0, 1), (1, 0), (1, 1)]
        idx = {e: i for i, e in enumerate(elems)}
        return np.array([[idx[((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)]
                          for b in elems] for a in elems], dtype=np.int64)
    if name == "s3":
        elems = sorted(permutations(range(3)))
        idx = {e: i for i, e in enumerate(elems)}
        compose = lambda s, t: tuple(s[t[i]] for i in range(3))
        return np.array([[idx[compose(a, b)] for b in elems] for a in elems],
                        dtype=np.int64)
    if name == "d4":
        elems = sorted({(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2),
                        (1, 0, 3, 2), (3, 2, 1, 0), (0, 3, 2, 1), (2, 1, 0, 3)})
        idx = {e: i for i, e in enumerate(elems)}
        compose = lambda s, t: tuple(s[t[i]] for i in range(4))
        return np.array([[idx[compose(a, b)] for b in elems] for a in elems],
                        dtype=np.int64)
    if name == "q8":
        # elements 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign)
        elems = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1)]
        mul_axis = {(0, a): (a, 0) for a in range(4)}
        mul_axis.update({(a, 0): (a, 0) for a in range(4)})
        rules = {(1, 2): (3, 0), (2, 3): (1, 0), (3, 1): (2, 0),
                 (2, 1): (3, 1), (3, 2): (1, 1), (1, 3): (2, 1),
                 (1, 1): (0, 1), (2, 2): (0, 1), (3, 3): (0, 1)}
        mul_axis.update(rules)

        def compose(a, b):
            axis, sign = mul_axis[(a[0], b[0])]
            return (axis, (sign + a[1] + b[1]) % 2)

        idx = {e: i for i, e in enumerate(elems)}
        return np.array([[idx[compose(a, b)] for b in elems] for a in elems],
                        dtype=np.int64)
    raise InvalidRingError(f"unknown group name {name!r}")


def random_algebra(p: int, dim: int, seed: int) -> FiniteAlgebra:
    """Seeded random algebra, biased toward local rings: basis vector 0 is
    the unit and generator v_i (i >= 1) carries weight i, with sampled
    products v_i * v_j confined to the span of {v_k : k >= i + j}.  The
    weight filtration forces the non-unit part to be nilpotent.  Tables
    that fail associativity are repaired by zeroing sampled products from
    the top weight down; the all-zero endpoint is associative, so the
    repair always terminates.
    """
    field = PrimeField(p)
    if dim < 1:
        raise DimensionError("dimension must be positive")
    rng = np.random.default_rng(seed)
    d = dim
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        table[0, i, i] = 1
        table[i, 0, i] = 1
    slots = [(i, j) for i in range(1, d) for j in range(1, d)]
    for i, j in slots:
        for k in range(i + j, d):
            table[i, j, k] = int(rng.integers(0, p))
    repair_order = sorted(slots, key=lambda ij: (ij[0] + ij[1], ij),
                          reverse=True)
    pos = 0
    while kernels.assoc_violation(table, p)[0] >= 0:
        i, j = repair_order[pos]
        table[i, j, :] = 0
        pos += 1
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    return FiniteAlgebra(field, table, unit,
                         name=f"random(F{p},dim{d},seed{seed})")


def product_algebra(a: FiniteAlgebra, b: FiniteAlgebra,
                    name: str = "") -> FiniteAlgebra:
    """Direct product with componentwise operations and unit (1, 1)."""
    if a.field != b.field:
        raise DimensionError("product factors must share the ground field")
    d = a.dim + b.dim
    table = np.zeros((d, d, d), dtype=np.int64)
    table[: a.dim, : a.dim, : a.dim] = a.table
    table[a.dim:, a.dim:, a.dim:] = b.table
    unit = np.concatenate([a.unit, b.unit])
    return FiniteAlgebra(a.field, table, unit,
                         name=name or f"product({a.name},{b.name})")


def product_grading(a: FiniteAlgebra, ga: Optional[Grading],
                    b: FiniteAlgebra, gb: Optional[Grading]) -> Optional[Grading]:
    """Concatenated grading of a direct product, when both factors carry one.
    Cross products vanish, so compatibility is inherited from the factors."""
    if ga is None or gb is None:
        return None
    return Grading(tuple(ga.degrees) + tuple(gb.degrees))


# ---------------------------------------------------------------------------
# ideals, quotients, subalgebras


class Ideal:
    """A two-sided ideal, carried as a canonical subspace.

    Construction verifies closure under multiplication by every basis
    vector on both sides.
    """

    def __init__(self, algebra: FiniteAlgebra, space: Subspace,
                 _verified: bool = False):
        if space.field != algebra.field or space.ambient_dim != algebra.dim:
            raise DimensionError("subspace does not live in the algebra")
        if not _verified:
            for v in space.basis:
                for i in range(algebra.dim):
                    e = algebra.basis_element(i)
                    if not member(algebra.mul(e, v), space):
                        raise InvalidRingError(
                            "subspace is not closed under left multiplication")
                    if not member(algebra.mul(v, e), space):
                        raise InvalidRingError(
                            "subspace is not closed under right multiplication")
        self.algebra = algebra
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim


def ideal_closure(algebra: FiniteAlgebra, gens: Iterable[Sequence[int]]) -> Ideal:
    """Smallest two-sided ideal containing the generators.

    Saturation: one left-multiply sweep then one right-multiply sweep per
    round until the dimension stabilizes.  The fixed point is a canonical
    subspace, independent of generator order.
    """
    gens = [algebra.element(g) for g in gens]
    space = rref(gens, algebra.field, algebra.dim)
    basis_elems = [algebra.basis_element(i) for i in range(algebra.dim)]
    while True:
        rows = list(space.basis)
        for v in space.basis:
            for e in basis_elems:
                rows.append(algebra.mul(e, v))
        halfway = rref(rows, algebra.field, algebra.dim)
        rows = list(halfway.basis)
        for v in halfway.basis:
            for e in basis_elems:
                rows.append(algebra.mul(v, e))
        grown = rref(rows, algebra.field, algebra.dim)
        if grown.dim == space.dim:
            return Ideal(algebra, grown, _verified=True)
        space = grown


def _reduce_mod_space(v: np.ndarray, space: Subspace, p: int) -> np.ndarray:
    out = v % p
    for r, c in enumerate(space.pivots):
        f = int(out[c])
        if f:
            out = (out - f * space.basis[r]) % p
    return out


def quotient_algebra(algebra: FiniteAlgebra, ideal: Ideal,
                     name: str = "") -> FiniteAlgebra:
    """Quotient by a two-sided ideal, on the complement basis of the
    non-pivot coordinates."""
    if ideal.space.field != algebra.field or ideal.space.ambient_dim != algebra.dim:
        raise DimensionError("ideal does not belong to this algebra")
    if ideal.dim == algebra.dim:
        raise DegenerateQuotientError("cannot form the quotient by the whole ring")
    p = algebra.p
    pivot_set = set(ideal.space.pivots)
    comp = [c for c in range(algebra.dim) if c not in pivot_set]
    q = len(comp)

    def project(v: np.ndarray) -> np.ndarray:
        return _reduce_mod_space(v, ideal.space, p)[comp]

    table = np.zeros((q, q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            prod = algebra.mul(algebra.basis_element(comp[a]),
                               algebra.basis_element(comp[b]))
            table[a, b] = project(prod)
    unit = project(algebra.unit)
    quotient = FiniteAlgebra(algebra.field, table, unit,
                             name=name or f"{algebra.name}/ideal{ideal.dim}")
    # the projection must be a ring homomorphism on all basis pairs
    for i in range(algebra.dim):
        pi = project(algebra.basis_element(i))
        for j in range(algebra.dim):
            pj = project(algebra.basis_element(j))
            direct = project(algebra.mul(algebra.basis_element(i),
                                         algebra.basis_element(j)))
            if not np.array_equal(quotient.mul(pi, pj), direct):
                raise TheoremViolationError(
                    "quotient projection failed to be multiplicative; "
                    "the ideal verification must be wrong")
    return quotient


def quotient_grading(algebra: FiniteAlgebra, ideal: Ideal,
                     grading: Grading) -> Optional[Grading]:
    """Induced grading on the quotient when the ideal is spanned by basis
    vectors; None otherwise."""
    for row in ideal.space.basis:
        support = np.flatnonzero(row)
        if len(support) != 1 or row[support[0]] != 1:
            return None
    pivot_set = set(ideal.space.pivots)
    degs = tuple(d for c, d in enumerate(grading.degrees) if c not in pivot_set)
    return Grading(degs)


def subalgebra_on(algebra: FiniteAlgebra, space: Subspace, unit_vec,
                  name: str = "") -> FiniteAlgebra:
    """The algebra structure induced on a multiplicatively closed subspace
    with the given unit."""
    unit_vec = algebra.element(unit_vec)
    if not member(unit_vec, space):
        raise InvalidRingError("designated unit lies outside the subspace")
    rows = space.basis
    k = space.dim
    table = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod = algebra.mul(rows[i], rows[j])
            try:
                table[i, j] = space.coords_of(prod)
            except ValueError:
                raise InvalidRingError(
                    "subspace is not closed under multiplication") from None
    return FiniteAlgebra(algebra.field, table, space.coords_of(unit_vec),
                         name=name or f"{algebra.name}|sub{k}")
