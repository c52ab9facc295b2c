"""Left-greedy Garside normal form and the word problem in ``B_n``.

Simple elements (positive braids in which any two strands cross at most once)
are stored as permutations.  Internally a simple is a tuple ``p`` with
``p[j]`` the final 0-based position of the strand starting at ``j``; this is
the same convention as :class:`braidtwist.words.Permutation`, shifted to 0-based.

A braid ``Delta^d * x_1 ... x_r`` is in left normal form when no ``x_i`` is
trivial or ``Delta`` and every adjacent pair is left-weighted: every generator
that can start ``x_{i+1}`` can already finish ``x_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import StrandMismatch
from .words import BraidWord, Permutation, delta, inverse

__all__ = [
    "GarsideNormalForm",
    "to_normal_form",
    "are_equal",
    "is_trivial",
    "infimum",
    "supremum",
    "canonical_length",
    "starting_set",
    "finishing_set",
    "is_left_weighted",
]

Simple = tuple  # tuple[int, ...]


# -- simple elements -----------------------------------------------------------


@lru_cache(maxsize=None)
def _half_twist(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def _unit(n: int) -> Simple:
    return tuple(range(n))


@lru_cache(maxsize=None)
def _generator(n: int, g: int) -> Simple:
    """Permutation of ``a_{g+1}``."""
    p = list(range(n))
    p[g], p[g + 1] = g + 1, g
    return tuple(p)


@lru_cache(maxsize=None)
def _complement_of_generator(n: int, g: int) -> Simple:
    """The simple ``Delta * a_{g+1}^-1``."""
    return tuple(g + 1 if x == g else g if x == g + 1 else x for x in _half_twist(n))


@lru_cache(maxsize=1 << 16)
def _start_mask(p: Simple) -> int:
    mask = 0
    for g in range(len(p) - 1):
        if p[g] > p[g + 1]:
            mask |= 1 << g
    return mask


@lru_cache(maxsize=1 << 16)
def _finish_mask(p: Simple) -> int:
    q = [0] * len(p)
    for j, x in enumerate(p):
        q[x] = j
    mask = 0
    for g in range(len(p) - 1):
        if q[g] > q[g + 1]:
            mask |= 1 << g
    return mask


@lru_cache(maxsize=1 << 16)
def _flip(p: Simple) -> Simple:
    """Conjugation by Delta: ``x -> Delta x Delta^-1``, i.e. ``w0 o p o w0``."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - j] for j in range(n))


@lru_cache(maxsize=1 << 18)
def _slide(a: Simple, b: Simple) -> tuple[Simple, Simple]:
    """Make ``(a, b)`` left-weighted by moving generators from the front of
    ``b`` onto the back of ``a``; the product ``a*b`` is unchanged."""
    la, lb = list(a), list(b)
    while True:
        extra = _start_mask(tuple(lb)) & ~_finish_mask(tuple(la))
        if not extra:
            return tuple(la), tuple(lb)
        g = (extra & -extra).bit_length() - 1
        # a <- a * a_g : swap final positions g, g+1
        for j, x in enumerate(la):
            if x == g:
                la[j] = g + 1
            elif x == g + 1:
                la[j] = g
        # b <- a_g^-1 * b : swap the strands starting at g, g+1
        lb[g], lb[g + 1] = lb[g + 1], lb[g]


def _simple_word(p: Simple) -> list[int]:
    """A positive word (1-based letters) for the permutation braid ``p``."""
    p = list(p)
    out = []
    while True:
        for g in range(len(p) - 1):
            if p[g] > p[g + 1]:
                out.append(g + 1)
                p[g], p[g + 1] = p[g + 1], p[g]
                break
        else:
            return out


def starting_set(p: Permutation) -> set[int]:
    """Generator indices ``i`` such that some word for ``p`` starts with ``a_i``."""
    mask = _start_mask(tuple(x - 1 for x in p.images))
    return {g + 1 for g in range(p.size - 1) if mask >> g & 1}


def finishing_set(p: Permutation) -> set[int]:
    mask = _finish_mask(tuple(x - 1 for x in p.images))
    return {g + 1 for g in range(p.size - 1) if mask >> g & 1}


def is_left_weighted(a: Permutation, b: Permutation) -> bool:
    return starting_set(b) <= finishing_set(a)


# -- normal form ---------------------------------------------------------------


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    infimum: int
    factors: tuple[Permutation, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def to_word(self) -> BraidWord:
        """A word representing the same braid: ``Delta^inf`` then the factors."""
        n = self.strands
        d = delta(n)
        head = d.letters if self.infimum >= 0 else inverse(d).letters
        letters = list(head * abs(self.infimum))
        for f in self.factors:
            letters.extend(_simple_word(tuple(x - 1 for x in f.images)))
        return BraidWord(n, tuple(letters))

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "infimum": self.infimum,
            "factors": [list(f.images) for f in self.factors],
        }


class _Builder:
    """Incremental left normal form under right multiplication by letters.

    Factors are kept in a twisted frame: the true factor list is
    ``flip^parity`` applied to ``self.factors``.  Moving a ``Delta^-1`` to the
    front flips every factor, so it only toggles ``parity``.
    """

    def __init__(self, n: int):
        self.n = n
        self.d = 0
        self.parity = 0
        self.factors: list[Simple] = []
        self._unit = _unit(n)

    def push_simple(self, x: Simple) -> None:
        if self.parity:
            x = _flip(x)
        f = self.factors
        f.append(x)
        i = len(f) - 2
        while i >= 0:
            a, b = _slide(f[i], f[i + 1])
            if a == f[i]:
                break
            f[i], f[i + 1] = a, b
            i -= 1
        while f and f[-1] == self._unit:
            f.pop()

    def push_letter(self, e: int) -> None:
        g = abs(e) - 1
        if e > 0:
            self.push_simple(_generator(self.n, g))
        else:
            self.d -= 1
            self.parity ^= 1
            self.push_simple(_complement_of_generator(self.n, g))

    def result(self) -> GarsideNormalForm:
        n = self.n
        w0 = _half_twist(n)
        f = self.factors
        lead = 0
        while lead < len(f) and f[lead] == w0:
            lead += 1
        body = f[lead:]
        if self.parity:
            body = [_flip(x) for x in body]
        perms = tuple(Permutation(tuple(x + 1 for x in p)) for p in body)
        return GarsideNormalForm(n, self.d + lead, perms)


def to_normal_form(u: BraidWord) -> GarsideNormalForm:
    if u.strands == 1:
        return GarsideNormalForm(1, 0, ())
    b = _Builder(u.strands)
    for e in u.letters:
        b.push_letter(e)
    return b.result()


def are_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise StrandMismatch(f"B_{u.strands} vs B_{v.strands}")
    return to_normal_form(u) == to_normal_form(v)


def is_trivial(u: BraidWord) -> bool:
    nf = to_normal_form(u)
    return nf.infimum == 0 and not nf.factors


def infimum(u: BraidWord) -> int:
    return to_normal_form(u).infimum


def supremum(u: BraidWord) -> int:
    return to_normal_form(u).supremum


def canonical_length(u: BraidWord) -> int:
    return to_normal_form(u).canonical_length
