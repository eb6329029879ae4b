"""Numerics behind the growth law of the term counts.

The generating function of all terms is

    S_inf(z) = ((1-z)(1-z^2) - sqrt((1-z) R(z))) / (2 z^2 (1-z)),
    R(z)     = 1 - z - 2z^2 + 2z^3 - 3z^4 - z^5,

so its radius of convergence rho is the root of R in (0, 1), and a square
root singularity there gives S(inf, n) ~ C rho^-n n^-3/2.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from functools import lru_cache

from numpy.polynomial import Polynomial

from binlambda.counting import count, count_all

R_INF = Polynomial([1, -1, -2, 2, -3, -1])
# Gamma(-1/2); the only value of the Gamma function needed here
GAMMA_MINUS_HALF = -2.0 * math.sqrt(math.pi)


def bisect_root(f, lo: float, hi: float, tol: float = 0.0) -> float:
    """Root of ``f`` in [lo, hi] given a sign change.

    With ``tol=0`` the bracket is halved until it cannot shrink any more
    in double precision.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo if abs(flo) <= abs(f(hi)) else hi


@lru_cache(maxsize=None)
def dominant_singularity() -> float:
    """rho, the unique root of R in (0.4, 0.6)."""
    return bisect_root(R_INF, 0.4, 0.6)


def q_at_rho() -> float:
    """Value at rho of Q(z) = R(z) / ((1-z)(rho-z)), the regular factor left
    under the square root once the singular factor (1 - z/rho) is split off;
    z = rho is a removable singularity, hence the derivative."""
    rho = dominant_singularity()
    return -float(R_INF.deriv()(rho)) / (1.0 - rho)


def asymptotic_constant() -> tuple[float, float]:
    """(c_tilde, c) with S(inf, n) ~ c rho^-n n^-3/2 and c = c_tilde / Gamma(-1/2)."""
    rho = dominant_singularity()
    c_tilde = -math.sqrt(rho * q_at_rho()) / (2.0 * rho * rho)
    return c_tilde, c_tilde / GAMMA_MINUS_HALF


def _scaled(value: int, n: int) -> float:
    # value * rho^n * n^1.5 without overflowing: value can have hundreds of digits
    if value == 0:
        return 0.0
    rho = dominant_singularity()
    return math.exp(math.log(value) + n * math.log(rho) + 1.5 * math.log(n))


def growth_ratio(n: int) -> float:
    """S(inf, n) rho^n n^{3/2}, which tends to the constant c."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _scaled(count_all(n), n)


def ratio_table(m_max: int, n_max: int) -> list[tuple[int, int, float]]:
    """Rows (m, n, S(m, n) rho^n n^{3/2}) for m = 0..m_max, n = 1..n_max."""
    return [(m, n, _scaled(count(m, n), n))
            for m in range(m_max + 1) for n in range(1, n_max + 1)]


def ratio_table_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "ratio"])
    for m, n, r in rows:
        w.writerow([m, n, f"{r:.10g}"])
    return buf.getvalue()


def family_polynomial(m: int) -> Polynomial:
    """P_m(z) = 4 z^4 (1 - z^m) - (1-z)^3 (1+z)^2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    z = Polynomial([0, 1])
    p = 4 * z**4 * (1 - z**m) - (1 - z) ** 3 * (1 + z) ** 2
    return p.trim()


def family_limit_polynomial() -> Polynomial:
    """P_inf(z) = 4 z^4 - (1-z)^3 (1+z)^2, which equals -R(z)."""
    z = Polynomial([0, 1])
    return (4 * z**4 - (1 - z) ** 3 * (1 + z) ** 2).trim()


def family_root(m: int, grid: int = 5000) -> float:
    """Smallest positive root sigma_m of P_m.

    P_m < 0 on (0, rho), and P_m(1) = 0 for every m, so the root is found
    by scanning [0.5, 1] for the first sign change and bisecting there.
    P_0 = -(1-z)^3 (1+z)^2 has no root below 1.
    """
    p = family_polynomial(m)
    lo = 0.5
    step = 0.5 / grid
    for i in range(1, grid):
        hi = 0.5 + i * step
        if p(hi) > 0:
            return bisect_root(p, lo, hi)
        lo = hi
    return 1.0


@dataclass
class AsymptoticReport:
    rho: float
    inv_rho: float
    c_tilde: float
    c: float
    samples: list[tuple[int, float]] = field(default_factory=list)


def asymptotic_report(check_ns=(50, 100, 200, 400, 600)) -> AsymptoticReport:
    rho = dominant_singularity()
    c_tilde, c = asymptotic_constant()
    return AsymptoticReport(rho, 1.0 / rho, c_tilde, c,
                            [(n, growth_ratio(n)) for n in check_ns])
