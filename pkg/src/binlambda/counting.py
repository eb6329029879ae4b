"""Exact counts of terms by size and free-index bound.

S(m, n) is the number of terms of size n with at most m distinct free
indices, and S(inf, n) the number of all terms of size n:

    S(m, 0) = S(m, 1) = 0
    S(m, n+2) = [m >= n+1] + S(m+1, n) + sum_{k=0..n} S(m, k) S(m, n-k)
    S(inf, n+2) = 1 + S(inf, n) + sum_{k=0..n} S(inf, k) S(inf, n-k)

An index of value >= n does not fit in a term of size n, so S(m, n) equals
S(inf, n) as soon as m >= n - 1.  Queries are clamped accordingly, which
keeps the table triangular.
"""
from __future__ import annotations

import math
from operator import mul

INF = math.inf


class CountTable:
    """Lazily grown, memoized table of S(m, n) with Python big integers.

    Rows are only ever appended to, so a prefix that has been materialized
    never changes; growing the table is not synchronized.
    """

    def __init__(self):
        self._all = [0, 0]
        # m -> [S(m, 0), S(m, 1), ...]
        self._rows: dict[int, list[int]] = {}

    def count_all(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"size must be non-negative, got {n}")
        s = self._all
        for k in range(len(s), n + 1):
            h = k - 2
            s.append(1 + s[h] + sum(map(mul, s[: h + 1], s[h::-1])))
        return s[n]

    def count(self, m, n: int) -> int:
        """S(m, n); ``m`` may be ``math.inf``."""
        if n < 0 or m < 0:
            raise ValueError(f"m and n must be non-negative, got m={m}, n={n}")
        if n < 2:
            return 0
        if m >= n - 1:
            return self.count_all(n)
        row = self._rows.get(m)
        if row is None or len(row) <= n:
            self._fill(m, n)
            row = self._rows[m]
        return row[n]

    def _fill(self, m: int, n: int) -> None:
        # S(m, n) needs S(m+1, n-2), which needs S(m+2, n-4), ...; walk the
        # chain down to a saturated or trivial entry, then fill back up.
        chain = []
        r, k = m, n
        while k >= 2 and r < k - 1:
            chain.append((r, k))
            r, k = r + 1, k - 2
        for r, k in reversed(chain):
            self._extend_row(r, k)

    def _extend_row(self, r: int, upto: int) -> None:
        row = self._rows.setdefault(r, [0, 0])
        for k in range(len(row), upto + 1):
            h = k - 2
            head = 1 if r >= k - 1 else 0
            row.append(head + self.count(r + 1, h) + sum(map(mul, row[: h + 1], row[h::-1])))

    def column(self, m, n_max: int) -> list[int]:
        return [self.count(m, n) for n in range(n_max + 1)]


_default = CountTable()


def default_table() -> CountTable:
    return _default


def count(m, n: int) -> int:
    """Number of terms of size ``n`` with at most ``m`` distinct free indices."""
    return _default.count(m, n)


def count_all(n: int) -> int:
    """Number of terms of size ``n`` (any number of free indices)."""
    return _default.count_all(n)
