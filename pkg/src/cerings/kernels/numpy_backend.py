"""Vectorized pure-numpy implementations of the enumeration kernels.

Mirrors ``numba_backend`` exactly: same signatures, same element index
convention, same scan order, hence identical outputs.  Work is processed in
chunks so that early exits (witness searches, membership failures) stay
cheap without giving up vectorization.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 4096


def _inv_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return inv


def _decode_batch(idxs: np.ndarray, p: int, d: int) -> np.ndarray:
    powers = p ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (idxs[:, None] // powers[None, :]) % p


def _powers(p: int, d: int) -> np.ndarray:
    return p ** np.arange(d - 1, -1, -1, dtype=np.int64)


def _first_nonzero_is_one(X: np.ndarray) -> np.ndarray:
    nz = X != 0
    has = nz.any(axis=1)
    first = nz.argmax(axis=1)
    return has & (X[np.arange(len(X)), first] == 1)


def _reduce_batch(X: np.ndarray, rows: np.ndarray, pivs, p: int) -> np.ndarray:
    R = X % p
    for r, c in enumerate(pivs):
        R = (R - R[:, [c]] * rows[r][None, :]) % p
    return R


def _batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices mod p; destroys its input."""
    m = mats
    nb, nrows, ncols = m.shape
    rank = np.zeros(nb, dtype=np.int64)
    rows = np.arange(nrows)
    inv = _inv_table(p)
    for col in range(ncols):
        nz = (m[:, :, col] != 0) & (rows[None, :] >= rank[:, None])
        has = nz.any(axis=1) & (rank < nrows)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        piv = nz[b].argmax(axis=1)
        rk = rank[b]
        tmp = m[b, rk].copy()
        m[b, rk] = m[b, piv]
        m[b, piv] = tmp
        pv = m[b, rk, col]
        m[b, rk] = (m[b, rk] * inv[pv][:, None]) % p
        below = rows[None, :] > rk[:, None]
        f = m[b, :, col] * below
        m[b] = (m[b] - f[:, :, None] * m[b, rk][:, None, :]) % p
        rank[b] += 1
    return rank


def _left_mult_basis(table: np.ndarray) -> np.ndarray:
    # stack of left-multiplication matrices: out[k] @ z = e_k * z
    return np.ascontiguousarray(table.transpose(0, 2, 1))


def _batch_left_mats(table: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    return np.tensordot(Y, _left_mult_basis(table), axes=(1, 0)) % p


def _batch_is_unit(table: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    d = table.shape[0]
    mats = _batch_left_mats(table, Y, p)
    return _batch_rank(mats, p) == d


def _insert_rref_py(rows: list, pivs: list, v: np.ndarray, p: int) -> None:
    lead = int(np.flatnonzero(v)[0])
    v = (v * pow(int(v[lead]), p - 2, p)) % p
    for r in range(len(rows)):
        f = int(rows[r][lead])
        if f:
            rows[r] = (rows[r] - f * v) % p
    pos = len(rows)
    for r, c in enumerate(pivs):
        if c > lead:
            pos = r
            break
    rows.insert(pos, v)
    pivs.insert(pos, lead)


def assoc_violation(table: np.ndarray, p: int) -> np.ndarray:
    d = table.shape[0]
    for i in range(d):
        left = np.tensordot(table[i], table, axes=(1, 0)) % p
        right = np.tensordot(table, table[i], axes=(2, 0)) % p
        bad = (left != right).any(axis=2)
        if bad.any():
            j, k = np.argwhere(bad)[0]
            return np.array([i, j, k], dtype=np.int64)
    return np.array([-1, -1, -1], dtype=np.int64)


def _row_space_basis(mat: np.ndarray, p: int) -> np.ndarray:
    """Echelon basis of the row space, pivots increasing."""
    m = mat % p
    R, pivots = _rref(m, p)
    return R


def _rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    m = mat.copy() % p
    nrows, ncols = m.shape
    inv = _inv_table(p)
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
        m[r] = (m[r] * inv[m[r, c]]) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _radical_member(table: np.ndarray, unit: np.ndarray, p: int,
                    x: np.ndarray) -> bool:
    """Unit-criterion membership over the row space of the right
    multiplication matrix of x (the exact set of products a*x), with the
    low-pivot coefficient cycling fastest.  Chunks grow geometrically:
    non-members usually reveal a witness within the first few elements."""
    rx = np.einsum("j,ijk->ik", x, table) % p
    basis = _row_space_basis(rx, p)
    rank = basis.shape[0]
    count = p ** rank
    rev_powers = p ** np.arange(rank, dtype=np.int64)
    start = 0
    chunk = 16
    while start < count:
        idxs = np.arange(start, min(start + chunk, count), dtype=np.int64)
        coeffs = (idxs[:, None] // rev_powers[None, :]) % p
        W = (coeffs @ basis) % p
        Y = (unit[None, :] - W) % p
        if not _batch_is_unit(table, Y, p).all():
            return False
        start += len(idxs)
        chunk = min(chunk * 8, _CHUNK)
    return True


def radical_scan(table: np.ndarray, unit: np.ndarray, p: int,
                 n_elements: int) -> np.ndarray:
    d = table.shape[0]
    rows: list[np.ndarray] = []
    pivs: list[int] = []
    for start in range(1, n_elements, _CHUNK):
        idxs = np.arange(start, min(start + _CHUNK, n_elements), dtype=np.int64)
        X = _decode_batch(idxs, p, d)
        keep = _first_nonzero_is_one(X)
        if rows:
            keep &= _reduce_batch(X, np.array(rows), pivs, p).any(axis=1)
        if keep.any():
            # units are never radical (the inverse witnesses 1 - a*x = 0)
            keep[keep] &= ~_batch_is_unit(table, X[keep], p)
        for x in X[keep]:
            v = x.copy()
            for r, c in enumerate(pivs):
                f = int(v[c])
                if f:
                    v = (v - f * rows[r]) % p
            if not v.any():
                continue
            if _radical_member(table, unit, p, x):
                _insert_rref_py(rows, pivs, v, p)
    if not rows:
        return np.zeros((0, d), dtype=np.int64)
    return np.array(rows, dtype=np.int64)


def ce_scan(table: np.ndarray, center_rows: np.ndarray, center_pivs,
            p: int, n_elements: int) -> int:
    d = table.shape[0]
    cdim = center_rows.shape[0]
    lbas = _left_mult_basis(table)
    for start in range(1, n_elements, _CHUNK):
        idxs = np.arange(start, min(start + _CHUNK, n_elements), dtype=np.int64)
        X = _decode_batch(idxs, p, d)
        keep = _first_nonzero_is_one(X)
        keep &= _reduce_batch(X, center_rows, center_pivs, p).any(axis=1)
        if not keep.any():
            continue
        Xk = X[keep]
        kidx = idxs[keep]
        L = np.tensordot(Xk, lbas, axes=(1, 0)) % p
        xc = (L @ center_rows.T).transpose(0, 2, 1) % p
        rank_xc = _batch_rank(xc.copy(), p)
        stacked = np.concatenate(
            [xc, np.broadcast_to(center_rows, (len(Xk), cdim, d))], axis=1)
        rank_sum = _batch_rank(np.ascontiguousarray(stacked), p)
        hits = np.flatnonzero(rank_xc + cdim - rank_sum == 0)
        if hits.size:
            return int(kidx[hits[0]])
    return -1


def idempotent_mask(table: np.ndarray, p: int, n_elements: int) -> np.ndarray:
    d = table.shape[0]
    mask = np.zeros(n_elements, dtype=np.uint8)
    flat = table.reshape(d, d * d)
    for start in range(0, n_elements, _CHUNK):
        idxs = np.arange(start, min(start + _CHUNK, n_elements), dtype=np.int64)
        X = _decode_batch(idxs, p, d)
        partial = (X @ flat).reshape(len(X), d, d) % p
        sq = np.einsum("nj,njk->nk", X, partial) % p
        mask[idxs] = (sq == X).all(axis=1)
    return mask


def nonunit_outside_scan(table: np.ndarray, radical_rows: np.ndarray,
                         radical_pivs, p: int, n_elements: int) -> int:
    d = table.shape[0]
    for start in range(1, n_elements, _CHUNK):
        idxs = np.arange(start, min(start + _CHUNK, n_elements), dtype=np.int64)
        X = _decode_batch(idxs, p, d)
        keep = _first_nonzero_is_one(X)
        if radical_rows.shape[0]:
            keep &= _reduce_batch(X, radical_rows, radical_pivs, p).any(axis=1)
        if not keep.any():
            continue
        Xk = X[keep]
        kidx = idxs[keep]
        bad = np.flatnonzero(~_batch_is_unit(table, Xk, p))
        if bad.size:
            return int(kidx[bad[0]])
    return -1


def _right_mult_mat(table: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    # out[k, i]: (z * y) = out @ z
    return np.einsum("j,ijk->ki", y, table) % p


def quasi_probe_scan(table: np.ndarray, unit: np.ndarray, p: int, n: int,
                     n_elements: int) -> np.ndarray:
    """Same search as the jit version: tuples (x_1..x_n, y_1..y_n) walked in
    lexicographic index order with the inner r scan vectorized."""
    d = table.shape[0]
    allv = _decode_batch(np.arange(n_elements, dtype=np.int64), p, d)
    lbas = _left_mult_basis(table)
    lmats = np.tensordot(allv, lbas, axes=(1, 0)) % p   # lmats[i] @ z = v_i * z

    def r_search(xs: list[int], ys: list[int]) -> int:
        # first r >= 1 with sum x_i r y_i = 0
        acc = np.zeros((n_elements, d), dtype=np.int64)
        for xi, yi in zip(xs, ys):
            m = (lmats[xi] @ _right_mult_mat(table, allv[yi], p)) % p
            acc = (acc + allv @ m.T) % p
        zeros = np.flatnonzero(~acc.any(axis=1))
        zeros = zeros[zeros > 0]
        return int(zeros[0]) if zeros.size else -1

    counters = [0] * (2 * n)
    total = n_elements ** (2 * n)
    prods = np.zeros((n, d), dtype=np.int64)
    for _ in range(total):
        for i in range(n):
            prods[i] = lmats[counters[i]] @ allv[counters[n + i]] % p
        if np.array_equal(prods.sum(axis=0) % p, unit):
            ridx = r_search(counters[:n], counters[n:])
            if ridx >= 0:
                return np.array(counters + [ridx], dtype=np.int64)
        slot = 2 * n - 1
        while slot >= 0:
            counters[slot] += 1
            if counters[slot] == n_elements:
                counters[slot] = 0
                slot -= 1
            else:
                break
    return np.empty(0, dtype=np.int64)
