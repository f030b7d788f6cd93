# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`starspline._bareiss`.

Same fraction-free elimination, same pivoting and rescaling policy, same
results; Cython only removes the interpreter overhead of the sweep loops.
Entries stay arbitrary-precision Python objects (``int`` or ``mpz``), so
the big-integer arithmetic itself is unchanged.
"""

from math import gcd as _int_gcd

RESCALE_EVERY = 4


def rank_of_rows(list rows, Py_ssize_t rescale_every=RESCALE_EVERY,
                 bint reorder_columns=True, gcd_fn=_int_gcd):
    """Rank of the integer matrix whose rows are ``rows`` (consumed)."""
    cdef Py_ssize_t nrows, ncols, rank, col, sweeps, i, j, p_i, count
    cdef Py_ssize_t key_nnz, ntail
    cdef list row, r0, ri, tail0, new_tail, order_rows, density, order, nnz
    cdef object a, u, g, prev, a0, p_val

    rows = [row for row in rows if any(row)]
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(<list>rows[0])

    if reorder_columns:
        density = [0] * ncols
        for i in range(nrows):
            row = <list>rows[i]
            for j in range(ncols):
                if row[j]:
                    density[j] = <object>density[j] + 1
        order = sorted(range(ncols), key=density.__getitem__)
        order_rows = []
        for i in range(nrows):
            row = <list>rows[i]
            order_rows.append([row[j] for j in order])
        rows = order_rows

    nnz = []
    for i in range(nrows):
        row = <list>rows[i]
        count = 0
        for j in range(ncols):
            if row[j]:
                count += 1
        nnz.append(count)

    rank = 0
    col = 0
    prev = 1
    sweeps = 0
    while rank < nrows and col < ncols:
        if sweeps >= rescale_every:
            for i in range(rank, nrows):
                row = <list>rows[i]
                g = 0
                count = 0
                for j in range(col, ncols):
                    a = row[j]
                    if a:
                        count += 1
                        if g != 1:
                            g = gcd_fn(g, a)
                if g > 1:
                    for j in range(col, ncols):
                        row[j] = row[j] // g
                nnz[i] = count
            prev = 1
            sweeps = 0
        p_i = -1
        p_val = None
        key_nnz = 0
        for i in range(rank, nrows):
            row = <list>rows[i]
            a = row[col]
            if a:
                if a < 0:
                    a = -a
                if p_i < 0 or <Py_ssize_t>nnz[i] < key_nnz or \
                        (<Py_ssize_t>nnz[i] == key_nnz and a < p_val):
                    p_i = i
                    p_val = a
                    key_nnz = <Py_ssize_t>nnz[i]
        if p_i < 0:
            col += 1
            continue
        if p_i != rank:
            rows[rank], rows[p_i] = rows[p_i], rows[rank]
            nnz[rank], nnz[p_i] = nnz[p_i], nnz[rank]
        r0 = <list>rows[rank]
        a0 = r0[col]
        tail0 = r0[col + 1:]
        ntail = ncols - col - 1
        for i in range(rank + 1, nrows):
            ri = <list>rows[i]
            u = ri[col]
            if u:
                new_tail = [None] * ntail
                if prev == 1:
                    for j in range(ntail):
                        new_tail[j] = a0 * ri[col + 1 + j] - u * tail0[j]
                else:
                    for j in range(ntail):
                        new_tail[j] = (a0 * ri[col + 1 + j] - u * tail0[j]) // prev
                ri[col + 1:] = new_tail
            elif prev != a0:
                new_tail = [None] * ntail
                for j in range(ntail):
                    new_tail[j] = (a0 * ri[col + 1 + j]) // prev
                ri[col + 1:] = new_tail
        prev = a0
        rank += 1
        col += 1
        sweeps += 1
    return rank
