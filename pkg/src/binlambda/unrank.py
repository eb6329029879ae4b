"""Ranking and unranking of terms, and exact-size uniform generation.

Ranks run from 1 to S(m, n).  Within a class the order is: abstractions
first (ranks 1..S(m+1, n-2)), then applications grouped by the size j of
the function part (j = 0, 1, ..., n-2; inside a group the function's rank
varies slowest), and finally, when m >= n-1, the lone index n-1 takes the
top rank S(m, n).

``unrank`` and ``rank`` recurse once per constructor, so their depth is at
most about n/2 frames; with the default interpreter limit this is fine for
sizes up to roughly 1500, well beyond where the big-integer counting is
practical anyway.
"""
from __future__ import annotations

import random
from functools import lru_cache

from binlambda.counting import count
from binlambda.errors import EmptyClass, FreeBoundExceeded, NoTypableTerm, RankOutOfRange
from binlambda.term import Abs, App, Index, Term, free_bound


def _clamp(m, n):
    # every m >= n-1 describes the same (saturated) class
    if m >= n - 1:
        return max(n - 1, 0)
    return m


def unrank(m, n: int, k: int) -> Term:
    """Return the k-th term (1-based) of size n with at most m free indices."""
    total = count(m, n)
    if total == 0:
        raise EmptyClass(f"no term of size {n} with at most {m} free indices")
    if not 1 <= k <= total:
        raise RankOutOfRange(f"rank {k} outside 1..{total} for m={m}, n={n}")
    return _unrank(_clamp(m, n), n, k)


def _unrank(m: int, n: int, k: int) -> Term:
    if m >= n - 1 and k == count(m, n):
        return Index(n - 1)
    n_abs = count(m + 1, n - 2)
    if k <= n_abs:
        return Abs(_unrank(m + 1, n - 2, k))
    r = k - n_abs
    h = n - 2
    for j in range(h + 1):
        right = count(m, h - j)
        block = count(m, j) * right
        if r <= block:
            q, s = divmod(r - 1, right)
            return App(_unrank(m, j, q + 1), _unrank(m, h - j, s + 1))
        r -= block
    raise AssertionError("rank not covered by any application block")


def rank(m, t: Term) -> int:
    """Inverse of :func:`unrank`: ``unrank(m, size(t), rank(m, t)) == t``."""
    fb = free_bound(t)
    if fb > m:
        raise FreeBoundExceeded(f"term has {fb} free indices, more than m={m}")
    return _rank(m, t)[0]


def _rank(m, t: Term) -> tuple[int, int]:
    # returns (rank, size)
    if type(t) is Index:
        n = t.i + 1
        return count(m, n), n
    if type(t) is Abs:
        k, body_size = _rank(m + 1, t.body)
        return k, body_size + 2
    kf, lf = _rank(m, t.fun)
    ka, la = _rank(m, t.arg)
    n = lf + la + 2
    h = n - 2
    k = count(m + 1, h)
    for j in range(lf):
        k += count(m, j) * count(m, h - j)
    k += (kf - 1) * count(m, la) + ka
    return k, n


def enumerate_terms(m, n: int):
    """Yield every term of the class in rank order.

    Equivalent to ``unrank(m, n, k) for k in 1..S(m, n)`` but shares work
    between consecutive ranks.
    """
    if count(m, n) == 0:
        return
    yield from _enum(_clamp(m, n), n)


_LIST_CACHE_LIMIT = 20000


@lru_cache(maxsize=None)
def _small_class(m: int, n: int) -> tuple:
    return tuple(_enum_raw(m, n))


def _enum(m: int, n: int):
    if count(m, n) <= _LIST_CACHE_LIMIT:
        return _small_class(m, n)
    return _enum_raw(m, n)


def _enum_raw(m: int, n: int):
    if n < 2:
        return
    for body in _enum(_clamp(m + 1, n - 2), n - 2):
        yield Abs(body)
    h = n - 2
    for j in range(h + 1):
        if count(m, j) == 0 or count(m, h - j) == 0:
            continue
        args = _enum(_clamp(m, h - j), h - j)
        if not isinstance(args, tuple):
            args = tuple(args)
        for fun in _enum(_clamp(m, j), j):
            for arg in args:
                yield App(fun, arg)
    if m >= n - 1:
        yield Index(n - 1)


def uniform_rank(total: int, rng: random.Random) -> int:
    """Uniform integer in 1..total by rejection over random bit blocks."""
    if total < 1:
        raise ValueError("total must be positive")
    bits = total.bit_length()
    while True:
        c = rng.getrandbits(bits)
        if c < total:
            return c + 1


def sample_uniform(m, n: int, rng: random.Random) -> Term:
    total = count(m, n)
    if total == 0:
        raise EmptyClass(f"no term of size {n} with at most {m} free indices")
    return _unrank(_clamp(m, n), n, uniform_rank(total, rng))


def sample_uniform_typable(m, n: int, rng: random.Random, check_after: int = 1000,
                           exhaustive_limit: int = 10**6) -> Term:
    """Uniform term of the class among the simply typable ones.

    Draws uniform terms and keeps the first typable one.  After
    ``check_after`` consecutive rejections the class is enumerated once
    (if it has at most ``exhaustive_limit`` terms) to rule out an empty
    typable subclass, which would otherwise loop forever.
    """
    from binlambda.simpletypes import count_typable, is_typable

    total = count(m, n)
    if total == 0:
        raise EmptyClass(f"no term of size {n} with at most {m} free indices")
    mc = _clamp(m, n)
    rejected = 0
    while True:
        t = _unrank(mc, n, uniform_rank(total, rng))
        if is_typable(t):
            return t
        rejected += 1
        if rejected == check_after and total <= exhaustive_limit:
            if count_typable(mc, n) == 0:
                raise NoTypableTerm(f"no typable term of size {n} with at most {m} free indices")
