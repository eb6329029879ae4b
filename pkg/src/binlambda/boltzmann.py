"""Boltzmann samplers for lambda terms under the binary size model.

A free sampler with parameter x returns a term t with probability
x^|t| / S_inf(x).  It picks an index, an abstraction or an application with
probabilities

    p_var = x^2 / ((1-x) S_inf(x)),   p_abs = x^2,   p_app = x^2 S_inf(x),

and indices are geometric: i with probability (1-x) x^(i-1).

Terms are grown in pre-order with an explicit frontier counter and then
assembled bottom-up, so no recursion is involved and multi-million-node
terms are fine.  Random numbers come from :class:`random.Random`
(Mersenne Twister MT19937), seeded explicitly for reproducibility.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from binlambda.analytic import dominant_singularity
from binlambda.errors import AttemptsExhausted, DomainError
from binlambda.term import Term, build_from_prefix, size

# (1-z)(1-z^2) and (1-z) R(z), ascending coefficients
_P = (1.0, -1.0, -1.0, 1.0)
_Q = (1.0, -2.0, -1.0, 4.0, -5.0, 2.0, 1.0)


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deriv(coeffs):
    return tuple(k * c for k, c in enumerate(coeffs))[1:]


_P1, _P2 = _deriv(_P), _deriv(_deriv(_P))


def _deflate(coeffs, root):
    # W with coeffs(z) = (root - z) W(z), by synthetic division
    out = []
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    # out[-1] is the (negligible) remainder
    return tuple(-c for c in reversed(out[:-1]))


# Q = (rho - z) W; evaluating the factor rho - z directly keeps Q accurate
# right up to the singularity, where the plain polynomial cancels badly
_W = _deflate(_Q, dominant_singularity())
_W1, _W2 = _deriv(_W), _deriv(_deriv(_W))


def make_rng(seed: Optional[int] = None) -> random.Random:
    return random.Random(seed)


def _check_x(x: float, allow_rho: bool = True) -> float:
    rho = dominant_singularity()
    if not x > 0 or x > rho or (x == rho and not allow_rho):
        bound = "rho]" if allow_rho else "rho)"
        raise DomainError(f"x = {x!r} outside (0, {bound} with rho = {rho!r}")
    return rho


def _denominator(x: float):
    """D and its first two derivatives, where S_inf(x) = 2 x^2 / D(x).

    D = (1-x)(1-x^2) + sqrt((1-x) R(x)); this form follows from
    rationalizing the numerator of the closed form and avoids the
    cancellation the original form suffers for small x.
    """
    e = dominant_singularity() - x
    w, w1 = _horner(_W, x), _horner(_W1, x)
    q = max(e * w, 0.0)
    u = math.sqrt(q)
    d = _horner(_P, x) + u
    if u == 0.0:
        return d, math.inf, math.inf
    q1 = e * w1 - w
    q2 = e * _horner(_W2, x) - 2 * w1
    u1 = q1 / (2 * u)
    u2 = q2 / (2 * u) - q1 * q1 / (4 * u**3)
    return d, _horner(_P1, x) + u1, _horner(_P2, x) + u2


def s_infinity_gf(x: float) -> float:
    """Closed form of the generating function of all terms, for 0 < x <= rho."""
    _check_x(x)
    return 2 * x * x / _denominator(x)[0]


def gf_derivatives(x: float) -> tuple[float, float, float]:
    """(S_inf, S_inf', S_inf'') at 0 < x < rho, analytically."""
    _check_x(x, allow_rho=False)
    d, d1, d2 = _denominator(x)
    c = 2 * x * x / d
    c1 = 4 * x / d - 2 * x * x * d1 / d**2
    c2 = 4 / d - 8 * x * d1 / d**2 - 2 * x * x * d2 / d**2 + 4 * x * x * d1 * d1 / d**3
    return c, c1, c2


def expected_size(x: float) -> float:
    """E_x(N) = x C'(x) / C(x) for C = S_inf."""
    c, c1, _ = gf_derivatives(x)
    return x * c1 / c


def std_dev(x: float) -> float:
    c, c1, c2 = gf_derivatives(x)
    second = (x * x * c2 + x * c1) / c
    mean = x * c1 / c
    return math.sqrt(max(second - mean * mean, 0.0))


@dataclass(frozen=True)
class SamplerParams:
    x: float
    p_var: float
    p_abs: float
    p_app: float

    @property
    def p1(self) -> float:
        return self.p_var

    @property
    def p2(self) -> float:
        return self.p_var + self.p_abs


@dataclass(frozen=True)
class SamplerStats:
    target_mean: float
    expected_size: float
    std_dev: float


def make_params(x: float) -> SamplerParams:
    s = s_infinity_gf(x)
    x2 = x * x
    return SamplerParams(x, x2 / ((1 - x) * s), x2, x2 * s)


def rho_params() -> SamplerParams:
    """Parameters at x = rho, where p_var = p_app = (1 - rho^2) / 2."""
    rho = dominant_singularity()
    r2 = rho * rho
    half = (1 - r2) / 2
    return SamplerParams(rho, half, r2, half)


def tune(target_mean: float) -> float:
    """x in (0, rho) with E_x(N) = target_mean, by bisection.

    E_x(N) increases from 2 (as x -> 0) to infinity (as x -> rho), so any
    target above 2 has exactly one solution.  Near rho neighbouring doubles
    give mean sizes a relative 1e-6 apart at a target of about 2.5e5, so
    larger targets raise ArithmeticError rather than return an x that
    misses the tolerance.
    """
    if not math.isfinite(target_mean) or target_mean <= 2:
        raise ValueError(f"target mean must be finite and > 2, got {target_mean}")
    lo, hi = 0.0, dominant_singularity()
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if expected_size(mid) < target_mean:
            lo = mid
        else:
            hi = mid
    best = min((x for x in (lo, hi) if 0 < x < dominant_singularity()),
               key=lambda x: abs(expected_size(x) - target_mean))
    err = abs(expected_size(best) - target_mean)
    if err > 1e-6 * target_mean:
        raise ArithmeticError(f"tuning stalled {err} away from {target_mean}")
    return best


def sampler_stats(target_mean: float) -> SamplerStats:
    x = tune(target_mean)
    return SamplerStats(target_mean, expected_size(x), std_dev(x))


def sample_index(x: float, rng: random.Random) -> int:
    """Geometric de Bruijn index: P(i) = (1-x) x^(i-1)."""
    r = rng.random
    i = 1
    while r() < x:
        i += 1
    return i


def sample_free(params: SamplerParams, rng: random.Random) -> Term:
    """Unbounded Boltzmann sample; at x = rho the mean size is infinite."""
    r = rng.random
    x, p1, p2 = params.x, params.p1, params.p2
    tokens = []
    pending = 1
    while pending:
        u = r()
        if u < p1:
            i = 1
            while r() < x:
                i += 1
            tokens.append(i)
            pending -= 1
        elif u < p2:
            tokens.append(0)
        else:
            tokens.append(-1)
            pending += 1
    return build_from_prefix(tokens)


def sample_ceiled(params: SamplerParams, uplimit: int, rng: random.Random) -> Optional[Term]:
    """Boltzmann sample of size <= uplimit, or None.

    The draw is abandoned as soon as the size already generated plus the
    minimum size 2 of each pending subterm exceeds the limit; such a draw
    could only end above the limit, so conditioned on success the output
    is distributed as a free sample conditioned on size <= uplimit.
    """
    if uplimit < 2:
        raise ValueError("uplimit must be >= 2")
    r = rng.random
    x, p1, p2 = params.x, params.p1, params.p2
    tokens = []
    pending = 1
    used = 0
    while pending:
        u = r()
        if u < p1:
            pending -= 1
            used += 2
            budget = uplimit - 2 * pending
            if used > budget:
                return None
            i = 1
            while r() < x:
                i += 1
                used += 1
                if used > budget:
                    return None
            tokens.append(i)
        elif u < p2:
            used += 2
            tokens.append(0)
        else:
            used += 2
            pending += 1
            tokens.append(-1)
        if used + 2 * pending > uplimit:
            return None
    return build_from_prefix(tokens)


def sample_window(params: SamplerParams, lo: int, hi: int, rng: random.Random,
                  max_attempts: int = 100_000) -> Term:
    """Ceiled samples with uplimit ``hi``, kept once the size reaches ``lo``."""
    if lo > hi:
        raise ValueError(f"empty window {lo}:{hi}")
    for _ in range(max_attempts):
        t = sample_ceiled(params, hi, rng)
        if t is not None and size(t) >= lo:
            return t
    raise AttemptsExhausted(f"no term with size in [{lo}, {hi}] after {max_attempts} attempts")
