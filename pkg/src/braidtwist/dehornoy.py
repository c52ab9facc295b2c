"""Dehornoy order on ``B_n`` via handle reduction.

Positivity is witnessed at the *lowest* generator index: ``beta > 1`` when some
word for ``beta`` contains ``a_i``, no ``a_i^-1`` and no ``a_j^{+-1}`` for
``j < i``.  The order is left-invariant: ``beta >= alpha`` iff
``alpha^-1 beta >= 1``.
"""

from __future__ import annotations

import enum

import numpy as np

from . import garside
from ._kernels import reduce_kernel
from .errors import BadStrandCount, NotSigma1Positive, StepBudgetExceeded, StrandMismatch
from .words import BraidWord, delta, full_twist, inverse

__all__ = [
    "DEFAULT_STEP_BUDGET",
    "OrderSign",
    "handle_reduce",
    "order_sign",
    "compare",
    "dehornoy_floor",
    "to_sigma1_positive_word",
    "main_generator",
]

DEFAULT_STEP_BUDGET = 10**7


class OrderSign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __str__(self) -> str:
        return {-1: "LT", 0: "EQ", 1: "GT"}[int(self)]


def _reduce_letters_py(w: list[int], max_steps: int) -> list[int]:
    """Reduce handles until none is left, innermost first.

    A handle is ``a_i^e v a_i^-e`` with every letter of ``v`` of index > i.
    Letters move from ``pending`` onto ``out``, which is kept handle-free; the
    first handle found therefore has its right end leftmost and contains no
    handle, so each reduction is a permitted one.  Each letter ``a_{i+1}^d``
    of ``v`` becomes ``a_{i+1}^-e a_i^d a_{i+1}^e``; higher letters commute
    with ``a_i`` and stay put.  The rewritten ``v`` goes back onto ``pending``.
    """
    if not w:
        return []
    top = max(abs(x) for x in w) + 2
    pending = w[::-1]
    out: list[int] = []
    # snaps[t][i]: last position <= t in out holding a letter of index <= i
    snaps: list[list[int]] = []
    last = [-1] * top
    steps = 0
    while pending:
        x = pending.pop()
        i = x if x > 0 else -x
        p = last[i]
        if p >= 0 and out[p] == -x:
            steps += 1
            if steps > max_steps:
                raise StepBudgetExceeded(f"handle reduction exceeded {max_steps} steps")
            e = 1 if x < 0 else -1
            up = i + 1
            rewritten = []
            for y in out[p + 1 :]:
                if y == up:
                    rewritten += (-e * up, i, e * up)
                elif y == -up:
                    rewritten += (-e * up, -i, e * up)
                else:
                    rewritten.append(y)
            del out[p:]
            del snaps[p:]
            last = list(snaps[-1]) if snaps else [-1] * top
            rewritten.reverse()
            pending += rewritten
            continue
        t = len(out)
        out.append(x)
        last = last[:i] + [t] * (top - i)
        snaps.append(last)
    return out


def _reduce_letters(w, max_steps: int) -> list[int]:
    if reduce_kernel is None or len(w) < 32:
        return _reduce_letters_py(list(w), max_steps)
    top = max(abs(x) for x in w) + 2
    out, steps = reduce_kernel(np.asarray(w, dtype=np.int64), top, max_steps)
    if steps < 0:
        raise StepBudgetExceeded(f"handle reduction exceeded {max_steps} steps")
    return out.tolist()


def handle_reduce(u: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> BraidWord:
    """Return a handle-free word equal to ``u`` in ``B_n``.

    The result has no handles of any index, in particular no ``a_1``-handle,
    so it is empty or sigma-positive/negative at its lowest index.
    """
    return BraidWord(u.strands, tuple(_reduce_letters(list(u.letters), max_steps)))


def main_generator(letters) -> tuple[int, int]:
    """``(i, sign)`` for a handle-free word: lowest index and its sign."""
    if not letters:
        return 0, 0
    low = min(abs(e) for e in letters)
    sign = 1 if low in letters else -1
    return low, sign


def _sign_of_letters(letters, max_steps: int) -> int:
    reduced = _reduce_letters(list(letters), max_steps)
    return main_generator(reduced)[1]


def order_sign(u: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> OrderSign:
    if garside.is_trivial(u):
        return OrderSign.ZERO
    s = _sign_of_letters(u.letters, max_steps)
    if s == 0:
        raise AssertionError(f"nontrivial braid {u} reduced to the empty word")
    return OrderSign(s)


def compare(u: BraidWord, v: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> OrderSign:
    """Sign of ``u^-1 v``: ``POSITIVE`` means ``v > u``."""
    if u.strands != v.strands:
        raise StrandMismatch(f"B_{u.strands} vs B_{v.strands}")
    return order_sign(BraidWord(u.strands, inverse(u).letters + v.letters), max_steps)


def dehornoy_floor(
    u: BraidWord,
    max_steps: int = DEFAULT_STEP_BUDGET,
    bounds: tuple[int, int] | None = None,
) -> int:
    """The unique ``m`` with ``Delta^{2m} <= u < Delta^{2m+2}``.

    The normal form gives ``Delta^inf <= u <= Delta^sup``, hence
    ``floor(inf/2) <= m <= ceil(sup/2)``; a bisection over that range follows.
    ``bounds`` may narrow the range further when the caller already knows it
    (it is intersected, never trusted blindly beyond that).
    """
    n = u.strands
    if n < 2:
        raise BadStrandCount("the Dehornoy floor needs n >= 2")
    nf = garside.to_normal_form(u)
    lo = nf.infimum // 2
    hi = -(-nf.supremum // 2)
    if bounds is not None:
        lo, hi = max(lo, bounds[0]), min(hi, bounds[1])
        if lo > hi:
            raise ValueError(f"bounds {bounds} are incompatible with the normal form")
    twist = full_twist(n).letters
    twist_inv = inverse(full_twist(n)).letters
    half = delta(n).letters
    half_inv = inverse(delta(n)).letters
    nf_tail = nf.to_word().letters[len(half) * abs(nf.infimum) :]

    def at_least(m: int) -> bool:
        # u >= Delta^{2m}  iff  Delta^{-2m} u >= 1
        shift = nf.infimum - 2 * m
        if shift >= 0:
            return True
        from_nf = half_inv * -shift + nf_tail
        from_raw = (twist_inv * m if m >= 0 else twist * -m) + u.letters
        word = from_raw if len(from_raw) <= len(from_nf) else from_nf
        return _sign_of_letters(word, max_steps) > 0

    while lo < hi:
        mid = (lo + hi + 1) // 2
        if at_least(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def to_sigma1_positive_word(u: BraidWord, max_steps: int = DEFAULT_STEP_BUDGET) -> BraidWord:
    """A word for ``u`` containing ``a_1`` and no ``a_1^-1``."""
    if 1 in u.letters and -1 not in u.letters:
        return u
    r = handle_reduce(u, max_steps)
    if 1 in r.letters and -1 not in r.letters:
        return r
    raise NotSigma1Positive(f"{u} has no sigma_1-positive form")
