"""Rigorous enclosures of the fractional Dehn twist coefficient.

The FDTC is the homogenization ``omega(b) = lim floor(b^k) / k`` of the
Dehornoy floor.  The floor is quasi-additive on powers: if
``Delta^{2m} <= b < Delta^{2m+2}`` then
``Delta^{2km} <= b^k < Delta^{2k(m+1)}``, because ``Delta^2`` is central and
the order is left-invariant.  Hence ``floor(b^k) <= k*omega(b) <= floor(b^k) + 1``
and every ``k`` yields an exact interval of width ``1/k``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import dehornoy
from .errors import BadStrandCount, StrandMismatch
from .intervals import RationalInterval, as_fraction
from .words import DEFAULT_MAX_WORD_LENGTH, BraidWord, concat, power, random_word

__all__ = [
    "floor_interval",
    "fdtc_estimate",
    "homogenize",
    "defect_witness",
    "lemma_witness",
    "DefectWitness",
    "defect_search",
]


def floor_interval(
    u: BraidWord,
    k: int,
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
    max_steps: int = dehornoy.DEFAULT_STEP_BUDGET,
) -> RationalInterval:
    """``[floor(u^k)/k, (floor(u^k)+1)/k]``, an interval containing ``omega(u)``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    base = dehornoy.dehornoy_floor(u, max_steps)
    if k == 1:
        m = base
    else:
        uk = power(u, k, max_length)
        # floor(u^k) lies in [k*base, k*base + k - 1]; dehornoy_floor raises if
        # that contradicts the normal-form bracket.
        m = dehornoy.dehornoy_floor(uk, max_steps, bounds=(k * base, k * base + k - 1))
    return RationalInterval(Fraction(m, k), Fraction(m + 1, k))


def fdtc_estimate(
    u: BraidWord,
    tolerance,
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
    max_steps: int = dehornoy.DEFAULT_STEP_BUDGET,
) -> RationalInterval:
    """Enclosure of ``omega(u)`` of width at most ``tolerance``."""
    tol = as_fraction(tolerance)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    k = math.ceil(1 / tol)
    return floor_interval(u, k, max_length, max_steps)


def homogenize(
    f: Callable[[BraidWord], int],
    u: BraidWord,
    k_max: int,
    max_length: int = DEFAULT_MAX_WORD_LENGTH,
) -> list[tuple[int, Fraction]]:
    """Convergence table ``[(k, f(u^k)/k) for k = 1..k_max]``."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    return [(k, Fraction(f(power(u, k, max_length)), k)) for k in range(1, k_max + 1)]


def defect_witness(alpha: BraidWord, beta: BraidWord, k: int, **kw) -> RationalInterval:
    """Enclosure of ``omega(alpha beta) - omega(alpha) - omega(beta)``."""
    if alpha.strands != beta.strands:
        raise StrandMismatch(f"B_{alpha.strands} vs B_{beta.strands}")
    ab = floor_interval(concat(alpha, beta), k, **kw)
    return ab - floor_interval(alpha, k, **kw) - floor_interval(beta, k, **kw)


def lemma_witness(n: int) -> tuple[BraidWord, BraidWord]:
    """``alpha = a_2 ... a_{n-1} a_{n-1} ... a_2`` and ``beta = a_1 a_1``.

    ``alpha`` lives in the embedded ``B_{n-1}``, ``beta`` in a ``B_2``, and
    ``alpha beta`` is conjugate to ``a_1 ... a_{n-1} a_{n-1} ... a_1``, which is
    ``Delta^2 Delta_R^-2``.  So the FDTC gap of this pair is exactly 1.
    """
    if n < 3:
        raise BadStrandCount(f"the lemma pair needs n >= 3, got {n}")
    up = list(range(2, n))
    alpha = BraidWord(n, tuple(up + up[::-1]))
    beta = BraidWord(n, (1, 1))
    return alpha, beta


@dataclass(frozen=True)
class DefectWitness:
    alpha: BraidWord
    beta: BraidWord
    interval: RationalInterval
    source: str  # "lemma" or "sample"


def defect_search(
    n: int,
    sample_count: int,
    max_length: int,
    k: int,
    seed: int,
    *,
    include_lemma: bool = True,
) -> DefectWitness:
    """Best certified lower bound on the FDTC defect among random pairs.

    Pairs are uniform words with lengths uniform in ``0..max_length``, drawn from
    ``random.Random(seed)``.  For ``n >= 3`` the lemma pair is always a
    candidate; ties keep the earliest candidate.
    """
    rng = random.Random(seed)
    best: DefectWitness | None = None
    if include_lemma and n >= 3:
        a, b = lemma_witness(n)
        best = DefectWitness(a, b, defect_witness(a, b, k), "lemma")
    for _ in range(sample_count):
        a = random_word(rng, n, rng.randint(0, max_length))
        b = random_word(rng, n, rng.randint(0, max_length))
        w = DefectWitness(a, b, defect_witness(a, b, k), "sample")
        if best is None or w.interval.lo > best.interval.lo:
            best = w
    if best is None:
        raise BadStrandCount("no candidates: need n >= 3 or sample_count >= 1")
    return best
