"""Fraction-free rank elimination over the integers (pure Python kernel).

The core is Bareiss' fraction-free Gaussian elimination: a cross
multiplication step followed by an exact division by the previous pivot,
so intermediate entries are exact minors of the input and no fractions
ever appear.  Three refinements keep those minors small on the
block-sparse constraint matrices this package produces, where they make
the difference between seconds and hours:

* columns are processed in order of increasing initial density;
* the pivot in each column is the candidate whose row has the fewest
  nonzeros (ties by smallest absolute value, then lowest index), which
  empirically bounds minor growth far better than largest-entry
  pivoting;
* every ``rescale_every`` sweeps the active rows are divided by their
  gcd and the Bareiss divisor reset to 1.  Only the rank is ever wanted
  (never a determinant), so restarting the recurrence on the rescaled
  submatrix is sound: it is plain Bareiss on a fresh integer matrix.

Entries may be Python ``int`` or any exact integer type with the same
operators (``gmpy2.mpz`` is used by :mod:`starspline.linalg` when
available).  A compiled twin of this module (``_bareiss_cy``) is
preferred at import time when it has been built.
"""

from math import gcd as _int_gcd

#: Sweeps between gcd rescalings of the active rows.
RESCALE_EVERY = 4


def rank_of_rows(rows, rescale_every=RESCALE_EVERY, reorder_columns=True,
                 gcd_fn=_int_gcd):
    """Rank of the integer matrix whose rows are ``rows`` (consumed)."""
    rows = [row for row in rows if any(row)]
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])

    if reorder_columns:
        density = [0] * ncols
        for row in rows:
            for j, a in enumerate(row):
                if a:
                    density[j] += 1
        order = sorted(range(ncols), key=lambda j: density[j])
        rows = [[row[j] for j in order] for row in rows]

    nnz = [sum(1 for a in row if a) for row in rows]
    rank = 0
    col = 0
    prev = 1          # divisor carried by the Bareiss recurrence
    sweeps = 0
    while rank < nrows and col < ncols:
        if sweeps >= rescale_every:
            for i in range(rank, nrows):
                row = rows[i]
                g = 0
                count = 0
                for j in range(col, ncols):
                    if row[j]:
                        count += 1
                        if g != 1:
                            g = gcd_fn(g, row[j])
                if g > 1:
                    row[col:] = [a // g for a in row[col:]]
                nnz[i] = count
            prev = 1
            sweeps = 0
        # pivot: sparsest candidate row, then smallest |entry|, then index
        p_i = -1
        p_key = None
        for i in range(rank, nrows):
            a = rows[i][col]
            if a:
                key = (nnz[i], -a if a < 0 else a)
                if p_i < 0 or key < p_key:
                    p_i, p_key = i, key
        if p_i < 0:
            col += 1
            continue
        if p_i != rank:
            rows[rank], rows[p_i] = rows[p_i], rows[rank]
            nnz[rank], nnz[p_i] = nnz[p_i], nnz[rank]
        r0 = rows[rank]
        a0 = r0[col]
        tail0 = r0[col + 1:]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            u = ri[col]
            if u:
                if prev == 1:
                    ri[col + 1:] = [
                        a0 * z - u * x for z, x in zip(ri[col + 1:], tail0)
                    ]
                else:
                    ri[col + 1:] = [
                        (a0 * z - u * x) // prev
                        for z, x in zip(ri[col + 1:], tail0)
                    ]
            elif prev != a0:
                ri[col + 1:] = [(a0 * z) // prev for z in ri[col + 1:]]
        prev = a0
        rank += 1
        col += 1
        sweeps += 1
    return rank
