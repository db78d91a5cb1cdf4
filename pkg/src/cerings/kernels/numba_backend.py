"""Numba implementations of the enumeration kernels.

All functions take the structure-constant table as a C-contiguous
(d, d, d) int64 array with table[i, j, k] = k-th coordinate of e_i * e_j,
entries reduced mod p.  Element indices follow the shared convention of
``cerings.kernels``: base-p digits, most significant first.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _inv_mod(a, p):
    # extended Euclid; a must be nonzero mod p
    old_r, r = a % p, p
    old_s, s = 1, 0
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % p


@njit(cache=True)
def _rank_destructive(m, p):
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for rr in range(r, nrows):
            if m[rr, c] != 0:
                piv = rr
                break
        if piv == -1:
            continue
        if piv != r:
            for cc in range(ncols):
                tmp = m[r, cc]
                m[r, cc] = m[piv, cc]
                m[piv, cc] = tmp
        inv = _inv_mod(m[r, c], p)
        for cc in range(c, ncols):
            m[r, cc] = (m[r, cc] * inv) % p
        for rr in range(r + 1, nrows):
            f = m[rr, c]
            if f != 0:
                for cc in range(c, ncols):
                    m[rr, cc] = (m[rr, cc] - f * m[r, cc]) % p
        r += 1
    return r


@njit(cache=True)
def _reduce_in_span(rows, pivs, nrows, v, p):
    # reduce v in place against an RREF basis; afterwards v == 0 iff member
    for r in range(nrows):
        f = v[pivs[r]]
        if f != 0:
            for c in range(v.shape[0]):
                v[c] = (v[c] - f * rows[r, c]) % p


@njit(cache=True)
def _insert_rref(rows, pivs, nrows, v, p):
    # v: nonzero, already reduced against rows; keeps rows canonical
    d = v.shape[0]
    lead = 0
    while v[lead] == 0:
        lead += 1
    inv = _inv_mod(v[lead], p)
    for c in range(d):
        v[c] = (v[c] * inv) % p
    for r in range(nrows):
        f = rows[r, lead]
        if f != 0:
            for c in range(d):
                rows[r, c] = (rows[r, c] - f * v[c]) % p
    pos = nrows
    for r in range(nrows):
        if pivs[r] > lead:
            pos = r
            break
    for r in range(nrows, pos, -1):
        for c in range(d):
            rows[r, c] = rows[r - 1, c]
        pivs[r] = pivs[r - 1]
    for c in range(d):
        rows[pos, c] = v[c]
    pivs[pos] = lead
    return nrows + 1


@njit(cache=True)
def _mul(table, x, y, p, out):
    d = x.shape[0]
    for k in range(d):
        out[k] = 0
    for i in range(d):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(d):
            c = (xi * y[j]) % p
            if c == 0:
                continue
            for k in range(d):
                t = table[i, j, k]
                if t != 0:
                    out[k] = (out[k] + c * t) % p


@njit(cache=True)
def _left_mult_mat(table, y, p, out):
    # out[k, j] = sum_i y_i table[i, j, k]; then (y*z) = out @ z
    d = y.shape[0]
    for k in range(d):
        for j in range(d):
            out[k, j] = 0
    for i in range(d):
        yi = y[i]
        if yi == 0:
            continue
        for j in range(d):
            for k in range(d):
                t = table[i, j, k]
                if t != 0:
                    out[k, j] = (out[k, j] + yi * t) % p


@njit(cache=True)
def _right_mult_mat(table, x, p, out):
    # out[i, k] = sum_j x_j table[i, j, k]; then (a*x) = a @ out
    d = x.shape[0]
    for i in range(d):
        for k in range(d):
            out[i, k] = 0
    for j in range(d):
        xj = x[j]
        if xj == 0:
            continue
        for i in range(d):
            for k in range(d):
                t = table[i, j, k]
                if t != 0:
                    out[i, k] = (out[i, k] + xj * t) % p


@njit(cache=True)
def _advance(digits, p):
    # odometer step, least significant digit last; wraps to zero at the end
    k = digits.shape[0] - 1
    while k >= 0:
        digits[k] += 1
        if digits[k] == p:
            digits[k] = 0
            k -= 1
        else:
            break


@njit(cache=True)
def _is_rep(x):
    # first nonzero coordinate equals 1 (projective representative)
    for c in range(x.shape[0]):
        if x[c] != 0:
            return x[c] == 1
    return False


@njit(cache=True)
def assoc_violation(table, p):
    """First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
    d = table.shape[0]
    left = np.empty(d, np.int64)
    right = np.empty(d, np.int64)
    out = np.empty(3, np.int64)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    left[l] = 0
                    right[l] = 0
                for m in range(d):
                    t1 = table[i, j, m]
                    if t1 != 0:
                        for l in range(d):
                            t2 = table[m, k, l]
                            if t2 != 0:
                                left[l] = (left[l] + t1 * t2) % p
                    t1 = table[j, k, m]
                    if t1 != 0:
                        for l in range(d):
                            t2 = table[i, m, l]
                            if t2 != 0:
                                right[l] = (right[l] + t1 * t2) % p
                for l in range(d):
                    if left[l] != right[l]:
                        out[0] = i
                        out[1] = j
                        out[2] = k
                        return out
    out[0] = -1
    out[1] = -1
    out[2] = -1
    return out


@njit(cache=True)
def _forward_eliminate(m, p):
    """Row echelon (not reduced) in place; returns the rank.  Rows come out
    with strictly increasing pivots, pivot entries normalized to 1."""
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for rr in range(r, nrows):
            if m[rr, c] != 0:
                piv = rr
                break
        if piv == -1:
            continue
        if piv != r:
            for cc in range(ncols):
                tmp = m[r, cc]
                m[r, cc] = m[piv, cc]
                m[piv, cc] = tmp
        inv = _inv_mod(m[r, c], p)
        for cc in range(c, ncols):
            m[r, cc] = (m[r, cc] * inv) % p
        for rr in range(r + 1, nrows):
            f = m[rr, c]
            if f != 0:
                for cc in range(c, ncols):
                    m[rr, cc] = (m[rr, cc] - f * m[r, cc]) % p
        r += 1
    return r


@njit(cache=True)
def _radical_member(table, unit, p, x):
    """Unit-criterion membership: x is radical iff 1 - a*x is a unit for
    every a.  The products a*x fill exactly the row space of the right
    multiplication matrix of x, so the quantifier runs over that subspace:
    p**rank elements instead of p**dim, with the low-pivot direction
    cycling fastest (that is where witnesses live in the local case).
    """
    d = x.shape[0]
    rx = np.empty((d, d), np.int64)
    _right_mult_mat(table, x, p, rx)
    rank = _forward_eliminate(rx, p)
    count = 1
    for _ in range(rank):
        count *= p
    coeffs = np.zeros(rank, np.int64)
    w = np.zeros(d, np.int64)
    y = np.empty(d, np.int64)
    ly = np.empty((d, d), np.int64)
    for _ in range(count):
        for c in range(d):
            y[c] = (unit[c] - w[c]) % p
        _left_mult_mat(table, y, p, ly)
        if _rank_destructive(ly, p) < d:
            return False
        # odometer over the coefficients, low pivot fastest; w tracks the
        # combination incrementally (p equal additions cancel mod p)
        k = 0
        while k < rank:
            coeffs[k] += 1
            for c in range(d):
                w[c] = (w[c] + rx[k, c]) % p
            if coeffs[k] == p:
                coeffs[k] = 0
                k += 1
            else:
                break
    return True


@njit(cache=True)
def radical_scan(table, unit, p, n_elements):
    """Basis (RREF rows) of the Jacobson radical by the unit criterion.

    Walks all elements in index order; elements already inside the span of
    confirmed members are skipped, and scalar multiples share membership,
    so only projective representatives are tested.
    """
    d = table.shape[0]
    rows = np.zeros((d, d), np.int64)
    pivs = np.zeros(d, np.int64)
    n_rows = 0
    x = np.zeros(d, np.int64)
    v = np.empty(d, np.int64)
    lx = np.empty((d, d), np.int64)
    for _ in range(1, n_elements):
        _advance(x, p)
        if not _is_rep(x):
            continue
        for c in range(d):
            v[c] = x[c]
        _reduce_in_span(rows, pivs, n_rows, v, p)
        nonzero = False
        for c in range(d):
            if v[c] != 0:
                nonzero = True
                break
        if not nonzero:
            continue
        # a unit is never radical (a = its inverse gives 1 - a*x = 0)
        _left_mult_mat(table, x, p, lx)
        if _rank_destructive(lx, p) == d:
            continue
        if _radical_member(table, unit, p, x):
            n_rows = _insert_rref(rows, pivs, n_rows, v, p)
    return rows[:n_rows].copy()


@njit(cache=True)
def ce_scan(table, center_rows, center_pivs, p, n_elements):
    """Index of the first x with x*C meeting the center C only in 0, or -1.

    Elements inside C are skipped (x itself witnesses x*C ∩ C != 0), and
    only projective representatives are scanned since x*C = (λx)*C.
    """
    d = table.shape[0]
    cdim = center_rows.shape[0]
    x = np.zeros(d, np.int64)
    v = np.empty(d, np.int64)
    lx = np.empty((d, d), np.int64)
    prod = np.empty((cdim, d), np.int64)
    stacked = np.empty((2 * cdim, d), np.int64)
    idx = 0
    for _ in range(1, n_elements):
        idx += 1
        _advance(x, p)
        if not _is_rep(x):
            continue
        for c in range(d):
            v[c] = x[c]
        _reduce_in_span(center_rows, center_pivs, cdim, v, p)
        inside = True
        for c in range(d):
            if v[c] != 0:
                inside = False
                break
        if inside:
            continue
        _left_mult_mat(table, x, p, lx)
        for r in range(cdim):
            for k in range(d):
                s = 0
                for j in range(d):
                    cr = center_rows[r, j]
                    if cr != 0:
                        s += lx[k, j] * cr
                prod[r, k] = s % p
        for r in range(cdim):
            for k in range(d):
                stacked[r, k] = prod[r, k]
        rank_xc = _rank_destructive(stacked[:cdim], p)
        for r in range(cdim):
            for k in range(d):
                stacked[r, k] = prod[r, k]
                stacked[cdim + r, k] = center_rows[r, k]
        rank_sum = _rank_destructive(stacked, p)
        if rank_xc + cdim - rank_sum == 0:
            return idx
    return -1


@njit(cache=True)
def idempotent_mask(table, p, n_elements):
    """Boolean mask over element indices: mask[i] = 1 iff x_i**2 = x_i."""
    d = table.shape[0]
    mask = np.zeros(n_elements, np.uint8)
    x = np.zeros(d, np.int64)
    sq = np.empty(d, np.int64)
    mask[0] = 1
    for idx in range(1, n_elements):
        _advance(x, p)
        _mul(table, x, x, p, sq)
        ok = True
        for c in range(d):
            if sq[c] != x[c]:
                ok = False
                break
        if ok:
            mask[idx] = 1
    return mask


@njit(cache=True)
def nonunit_outside_scan(table, radical_rows, radical_pivs, p, n_elements):
    """Index of the first non-unit projective representative outside the
    radical span, or -1 when every element off the radical is a unit."""
    d = table.shape[0]
    n_rad = radical_rows.shape[0]
    x = np.zeros(d, np.int64)
    v = np.empty(d, np.int64)
    lx = np.empty((d, d), np.int64)
    idx = 0
    for _ in range(1, n_elements):
        idx += 1
        _advance(x, p)
        if not _is_rep(x):
            continue
        for c in range(d):
            v[c] = x[c]
        _reduce_in_span(radical_rows, radical_pivs, n_rad, v, p)
        inside = True
        for c in range(d):
            if v[c] != 0:
                inside = False
                break
        if inside:
            continue
        _left_mult_mat(table, x, p, lx)
        if _rank_destructive(lx, p) < d:
            return idx
    return -1


@njit(cache=True)
def quasi_probe_scan(table, unit, p, n, n_elements):
    """First tuple (x_1..x_n, y_1..y_n, r) with sum x_i y_i = 1,
    sum x_i r y_i = 0 and r != 0, in lexicographic tuple order.

    Returns the 2n+1 element indices, or an empty array when no tuple in
    the budget satisfies the relations.
    """
    d = table.shape[0]
    counters = np.zeros(2 * n, np.int64)
    vecs = np.zeros((2 * n, d), np.int64)
    s = np.empty(d, np.int64)
    t1 = np.empty(d, np.int64)
    t2 = np.empty(d, np.int64)
    r = np.zeros(d, np.int64)
    total = 1
    for _ in range(2 * n):
        total *= n_elements
    for _t in range(total):
        # sum of x_i y_i
        for c in range(d):
            s[c] = 0
        for i in range(n):
            _mul(table, vecs[i], vecs[n + i], p, t1)
            for c in range(d):
                s[c] = (s[c] + t1[c]) % p
        is_one = True
        for c in range(d):
            if s[c] != unit[c]:
                is_one = False
                break
        if is_one:
            for c in range(d):
                r[c] = 0
            for ridx in range(1, n_elements):
                _advance(r, p)
                for c in range(d):
                    s[c] = 0
                for i in range(n):
                    _mul(table, vecs[i], r, p, t1)
                    _mul(table, t1, vecs[n + i], p, t2)
                    for c in range(d):
                        s[c] = (s[c] + t2[c]) % p
                zero = True
                for c in range(d):
                    if s[c] != 0:
                        zero = False
                        break
                if zero:
                    out = np.empty(2 * n + 1, np.int64)
                    for i in range(2 * n):
                        out[i] = counters[i]
                    out[2 * n] = ridx
                    return out
        # advance the (x_1..x_n, y_1..y_n) tuple odometer
        slot = 2 * n - 1
        while slot >= 0:
            counters[slot] += 1
            _advance(vecs[slot], p)
            if counters[slot] == n_elements:
                counters[slot] = 0
                slot -= 1
            else:
                break
    return np.empty(0, np.int64)
