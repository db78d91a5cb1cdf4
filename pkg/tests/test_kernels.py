"""Cross-checks between the jit and pure-numpy kernel backends, plus an
independent python-integer elimination oracle for the overflow-prone range."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cerings import kernels
from cerings.core import (exterior_algebra, field_algebra, group_algebra,
                          matrix_algebra, named_group_table, product_algebra,
                          triangular_algebra)
from cerings.fplinalg import PrimeField, _rref_array

try:
    numba_impl = kernels.get_backend("numba")
    HAVE_NUMBA = True
except ImportError:
    numba_impl = None
    HAVE_NUMBA = False

numpy_impl = kernels.get_backend("numpy")

needs_numba = pytest.mark.skipif(not HAVE_NUMBA, reason="numba not installed")


def small_algebras():
    out = [
        field_algebra(5),
        matrix_algebra(2, 2),
        matrix_algebra(2, 3),
        triangular_algebra(2, 3),
        triangular_algebra(3, 2),
        product_algebra(field_algebra(3), field_algebra(3)),
        group_algebra(2, named_group_table("s3"), name="group(F2,s3)"),
        exterior_algebra(3, 2)[0],
        exterior_algebra(2, 3)[0],
    ]
    return out


def test_index_round_trip():
    for p, d in ((2, 5), (3, 4), (7, 3)):
        for idx in range(0, p ** d, max(1, p ** d // 50)):
            v = kernels.decode_index(idx, p, d)
            assert kernels.encode_vector(v, p) == idx


def test_decode_is_lexicographic():
    # ascending index must be ascending lexicographic coordinate order
    p, d = 3, 4
    prev = None
    for idx in range(p ** d):
        v = tuple(int(x) for x in kernels.decode_index(idx, p, d))
        if prev is not None:
            assert prev < v
        prev = v


@needs_numba
class TestBackendAgreement:
    def test_assoc_violation(self):
        for a in small_algebras():
            got_nb = numba_impl.assoc_violation(a.table, a.p)
            got_np = numpy_impl.assoc_violation(a.table, a.p)
            assert np.array_equal(got_nb, got_np)
        broken = np.array(matrix_algebra(2, 2).table)
        broken[3, 3, 0] = 1
        got_nb = numba_impl.assoc_violation(broken, 2)
        got_np = numpy_impl.assoc_violation(broken, 2)
        assert got_nb[0] >= 0
        assert np.array_equal(got_nb, got_np)

    def test_radical_scan(self):
        for a in small_algebras():
            got_nb = numba_impl.radical_scan(a.table, a.unit, a.p,
                                             a.cardinality)
            got_np = numpy_impl.radical_scan(a.table, a.unit, a.p,
                                             a.cardinality)
            assert np.array_equal(got_nb, got_np), a.name

    def test_ce_scan(self):
        from cerings.structure import center
        for a in small_algebras():
            c = center(a)
            args = (a.table, np.ascontiguousarray(c.basis),
                    np.asarray(c.pivots, dtype=np.int64), a.p, a.cardinality)
            assert numba_impl.ce_scan(*args) == numpy_impl.ce_scan(*args), a.name

    def test_idempotent_mask(self):
        for a in small_algebras():
            got_nb = numba_impl.idempotent_mask(a.table, a.p, a.cardinality)
            got_np = numpy_impl.idempotent_mask(a.table, a.p, a.cardinality)
            assert np.array_equal(got_nb, got_np), a.name

    def test_nonunit_outside_scan(self):
        from cerings.structure import jacobson_radical
        for a in small_algebras():
            j = jacobson_radical(a)
            args = (a.table, np.ascontiguousarray(j.basis),
                    np.asarray(j.pivots, dtype=np.int64), a.p, a.cardinality)
            assert (numba_impl.nonunit_outside_scan(*args)
                    == numpy_impl.nonunit_outside_scan(*args)), a.name

    def test_quasi_probe_scan(self):
        for a in (matrix_algebra(2, 2), field_algebra(3),
                  triangular_algebra(2, 2)):
            for n in (1, 2):
                got_nb = numba_impl.quasi_probe_scan(a.table, a.unit, a.p, n,
                                                     a.cardinality)
                got_np = numpy_impl.quasi_probe_scan(a.table, a.unit, a.p, n,
                                                     a.cardinality)
                assert np.array_equal(got_nb, got_np), (a.name, n)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_rref_against_python_int_oracle(data):
    """Big prime close to the modulus bound: catches any overflow in the
    vectorized elimination, checked against object-dtype arithmetic."""
    p = 65521
    rows = data.draw(st.integers(1, 4))
    cols = data.draw(st.integers(1, 4))
    m = np.array(data.draw(st.lists(
        st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows)), dtype=np.int64)

    def oracle_rref(mat):
        work = [[int(x) % p for x in row] for row in mat]
        nr, nc = len(work), len(work[0])
        r = 0
        for c in range(nc):
            if r == nr:
                break
            piv = next((i for i in range(r, nr) if work[i][c]), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            inv = pow(work[r][c], p - 2, p)
            work[r] = [(x * inv) % p for x in work[r]]
            for i in range(nr):
                if i != r and work[i][c]:
                    f = work[i][c]
                    work[i] = [(a - f * b) % p
                               for a, b in zip(work[i], work[r])]
            r += 1
        return [row for row in work[:r]]

    got, _ = _rref_array(m, p)
    assert [list(map(int, row)) for row in got] == oracle_rref(m)


def test_prime_field_bound_matches_overflow_analysis():
    # entries < 2**16 keep products + dim-64 sums far inside int64
    assert (2 ** 16 - 1) ** 2 * 64 < 2 ** 63 - 1
    with pytest.raises(Exception):
        PrimeField(2 ** 16 + 3)
