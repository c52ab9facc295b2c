"""Rewriting a sigma_1-positive braid as a conjugate of ``Delta^{2l} prod L_i R_i``.

Write ``beta = prod_{i=1}^{2l} (a_1 beta_i)`` with every ``beta_i`` free of
``a_1^{+-1}``.  Using ``Delta^{+-1} x = bar(x) Delta^{+-1}`` each pair of blocks
becomes

    a_1 b a_1 c = Delta^2 Delta_R^-1 (a_1^-1 ... a_{n-2}^-1) bar(b) Delta_L^-1
                  (a_{n-1}^-1 ... a_2^-1) c

and collecting the ``Delta_R^-1`` gives
``beta = Delta_R^-1 (Delta^{2l} prod L_i R_i) Delta_R`` where ``L_i`` avoids
``a_{n-1}^{+-1}`` and ``R_i`` avoids ``a_1^{+-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import garside
from .dehornoy import to_sigma1_positive_word
from .errors import BadStrandCount, NotSigma1PositiveWord
from .words import (
    BraidWord,
    bar,
    concat,
    delta_L,
    delta_R,
    format_word,
    free_reduce,
    full_twist,
    inverse,
    power,
)

__all__ = ["Decomposition", "factor_by_a1", "decompose", "verify_decomposition", "reconstruct"]


@dataclass(frozen=True)
class Decomposition:
    strands: int
    l: int  # noqa: E741
    left_factors: tuple[BraidWord, ...]
    right_factors: tuple[BraidWord, ...]
    conjugator: BraidWord
    doubled: bool

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "doubled": self.doubled,
            "conjugator": format_word(self.conjugator),
            "L": [format_word(w) for w in self.left_factors],
            "R": [format_word(w) for w in self.right_factors],
        }


def _require_sigma1_positive(u: BraidWord) -> None:
    if 1 not in u.letters or -1 in u.letters:
        raise NotSigma1PositiveWord(f"{format_word(u)!r} is not a word with a_1 and without a_1^-1")


def _rotate_to_a1(u: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Cyclic rotation starting with ``a_1``, and the prefix ``p`` moved to the
    back; the rotated word equals ``p^-1 u p``."""
    r = u.letters.index(1)
    return BraidWord(u.strands, u.letters[r:] + u.letters[:r]), BraidWord(u.strands, u.letters[:r])


def _split(rotated: BraidWord) -> list[BraidWord]:
    blocks: list[list[int]] = []
    for e in rotated.letters:
        if e == 1:
            blocks.append([])
        else:
            blocks[-1].append(e)
    return [BraidWord(rotated.strands, tuple(b)) for b in blocks]


def factor_by_a1(u: BraidWord) -> list[BraidWord]:
    """The blocks ``beta_i`` of the rotated word ``a_1 beta_1 a_1 beta_2 ...``."""
    _require_sigma1_positive(u)
    rotated, _ = _rotate_to_a1(u)
    return _split(rotated)


def decompose(u: BraidWord, *, find_positive_word: bool = False) -> Decomposition:
    """Build ``(l, L_i, R_i, conjugator)`` with
    ``conjugator^-1 Delta^{2l} prod(L_i R_i) conjugator == u`` (or ``u u``).

    With ``find_positive_word`` a sigma_1-positive word for ``u`` is first
    produced by handle reduction.
    """
    n = u.strands
    if n < 3:
        raise BadStrandCount(f"the decomposition needs n >= 3, got {n}")
    if find_positive_word:
        u = to_sigma1_positive_word(u)
    _require_sigma1_positive(u)

    doubled = u.letters.count(1) % 2 == 1
    w = concat(u, u) if doubled else u
    rotated, prefix = _rotate_to_a1(w)
    blocks = _split(rotated)

    a_head = BraidWord(n, tuple(-i for i in range(1, n - 1)))  # a_1^-1 ... a_{n-2}^-1
    b_head = BraidWord(n, tuple(-i for i in range(n - 1, 1, -1)))  # a_{n-1}^-1 ... a_2^-1
    dl_inv = inverse(delta_L(n))
    dr_inv = inverse(delta_R(n))

    lefts, rights = [], []
    for b, c in zip(blocks[0::2], blocks[1::2]):
        lefts.append(free_reduce(concat(a_head, bar(b), dl_inv)))
        rights.append(free_reduce(concat(b_head, c, dr_inv)))
    conjugator = free_reduce(concat(delta_R(n), inverse(prefix)))
    return Decomposition(n, len(lefts), tuple(lefts), tuple(rights), conjugator, doubled)


def reconstruct(d: Decomposition) -> BraidWord:
    """``conjugator^-1 * Delta^{2l} prod(L_i R_i) * conjugator``."""
    body = [power(full_twist(d.strands), d.l)]
    for left, right in zip(d.left_factors, d.right_factors):
        body += [left, right]
    return concat(inverse(d.conjugator), *body, d.conjugator)


def verify_decomposition(d: Decomposition, u: BraidWord) -> bool:
    n = d.strands
    if u.strands != n or d.l != len(d.left_factors) or d.l != len(d.right_factors):
        return False
    if any(abs(e) == n - 1 for w in d.left_factors for e in w.letters):
        return False
    if any(abs(e) == 1 for w in d.right_factors for e in w.letters):
        return False
    target = concat(u, u) if d.doubled else u
    return garside.are_equal(reconstruct(d), target)
