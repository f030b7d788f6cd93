"""Exact rational matrices with deterministic rank and kernel queries.

Every dimension reported by this package is ultimately a rank of an
:class:`ExactMatrix` over the rationals, computed with zero tolerance.
Entries are :class:`fractions.Fraction` values (plain ``int`` is accepted
anywhere a rational is); rank clears denominators row by row and hands
integer rows to a fraction-free Bareiss elimination kernel.

Two interchangeable kernels exist: the pure Python one in
:mod:`starspline._bareiss` and a compiled Cython twin ``_bareiss_cy``.
The compiled one is used when importable; set ``STARSPLINE_PURE=1`` to
force the pure kernel.  When :mod:`gmpy2` is installed its ``mpz``
integers are used inside the elimination, which speeds up the large
multiplications considerably; results are identical either way.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

Rational = Fraction

if os.environ.get("STARSPLINE_PURE"):
    from . import _bareiss as _kernel
else:
    try:
        from . import _bareiss_cy as _kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _bareiss as _kernel

try:
    if os.environ.get("STARSPLINE_NO_GMPY"):
        raise ImportError
    from gmpy2 import gcd as _fast_gcd
    from gmpy2 import mpz as _mpz
except ImportError:
    _mpz = None
    _fast_gcd = gcd

KERNEL_NAME = _kernel.__name__.rsplit(".", 1)[-1]


def integerize_row(row):
    """Scale a row of rationals to coprime integers (gcd 1, same rank row)."""
    lcm = 1
    for a in row:
        if isinstance(a, Fraction):
            den = a.denominator
            if den != 1:
                lcm = lcm // gcd(lcm, den) * den
    ints = [int(a * lcm) if isinstance(a, Fraction) else a * lcm for a in row]
    g = 0
    for a in ints:
        if a:
            g = gcd(g, a)
            if g == 1:
                break
    if g > 1:
        ints = [a // g for a in ints]
    return ints


def rank_of_int_rows(rows):
    """Rank of a list of integer rows.  Rows are consumed."""
    if _mpz is not None:
        rows = [[_mpz(a) for a in row] for row in rows]
        return _kernel.rank_of_rows(rows, gcd_fn=_fast_gcd)
    return _kernel.rank_of_rows(rows)


class ExactMatrix:
    """Dense rational matrix with exact rank/kernel-dimension queries.

    Immutable by convention: nothing in this package mutates a built
    matrix, so instances are safe to share across concurrent workers.
    """

    __slots__ = ("row_count", "col_count", "_rows")

    def __init__(self, row_count: int, col_count: int, entries=None):
        if row_count < 0 or col_count < 0:
            raise ValueError("negative matrix dimension")
        self.row_count = row_count
        self.col_count = col_count
        if entries is None:
            self._rows = [[0] * col_count for _ in range(row_count)]
        else:
            entries = list(entries)
            if len(entries) != row_count * col_count:
                raise ValueError(
                    f"expected {row_count * col_count} entries, got {len(entries)}"
                )
            self._rows = [
                entries[i * col_count:(i + 1) * col_count] for i in range(row_count)
            ]

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        m = cls.__new__(cls)
        m.row_count = len(rows)
        m.col_count = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != m.col_count:
                raise ValueError("ragged rows")
        m._rows = rows
        return m

    @classmethod
    def from_triplets(cls, row_count, col_count, triplets) -> "ExactMatrix":
        """Sparse constructor: ``triplets`` yields ``(i, j, value)``; repeated
        positions accumulate."""
        m = cls(row_count, col_count)
        rows = m._rows
        for i, j, v in triplets:
            rows[i][j] += v
        return m

    @classmethod
    def identity(cls, n) -> "ExactMatrix":
        m = cls(n, n)
        for i in range(n):
            m._rows[i][i] = 1
        return m

    def entry(self, i, j):
        return self._rows[i][j]

    @property
    def entries(self):
        """Row-major sequence of entries."""
        return [a for row in self._rows for a in row]

    def transpose(self) -> "ExactMatrix":
        t = ExactMatrix.__new__(ExactMatrix)
        t.row_count = self.col_count
        t.col_count = self.row_count
        t._rows = [list(col) for col in zip(*self._rows)] if self._rows else []
        return t

    def rank(self) -> int:
        """Exact rank over the rationals; deterministic and tolerance-free."""
        if self.row_count == 0 or self.col_count == 0:
            return 0
        return rank_of_int_rows([integerize_row(r) for r in self._rows])

    def kernel_dim(self) -> int:
        """Dimension of the right kernel: ``col_count - rank``."""
        return self.col_count - self.rank()

    def __repr__(self):
        return f"ExactMatrix({self.row_count}x{self.col_count})"


def rank(m: ExactMatrix) -> int:
    return m.rank()


def kernel_dim(m: ExactMatrix) -> int:
    return m.kernel_dim()
