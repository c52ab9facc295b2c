"""Braid words over Artin generators.

A letter ``e`` is a nonzero integer; ``+i`` stands for ``a_i`` and ``-i`` for
``a_i^-1``.  The strand count travels with every word so that embeddings
``B_{n-1} -> B_n`` can never be confused.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadStrandCount, IndexOutOfRange, MalformedToken, StrandMismatch, WordTooLong

__all__ = [
    "DEFAULT_MAX_WORD_LENGTH",
    "BraidWord",
    "Permutation",
    "parse_word",
    "format_word",
    "identity",
    "concat",
    "inverse",
    "power",
    "conjugate",
    "free_reduce",
    "writhe",
    "bar",
    "underlying_permutation",
    "closure_components",
    "is_pure",
    "delta",
    "full_twist",
    "delta_small",
    "delta_L",
    "delta_R",
    "embed",
    "random_word",
]

DEFAULT_MAX_WORD_LENGTH = 2**20


@dataclass(frozen=True)
class BraidWord:
    """An immutable word in the Artin generators of ``B_n``."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BadStrandCount(f"strand count must be >= 1, got {self.strands}")
        letters = tuple(int(e) for e in self.letters)
        for e in letters:
            if e == 0:
                raise MalformedToken("letter 0 is not a generator")
            if abs(e) >= self.strands:
                raise IndexOutOfRange(f"letter {e} is out of range for B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class Permutation:
    """Image of a braid in the symmetric group.

    ``images[j-1]`` is the final position of the strand that starts at
    position ``j`` (positions are 1-based).  Letters act left to right, so
    ``perm(u * v) == perm(v).compose(perm(u))``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.images[other.images[j] - 1] for j in range(len(self.images))))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(img == j for j, img in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            j = start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out


# -- text format ---------------------------------------------------------------


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 -2 1"``."""
    letters = []
    for token in text.split():
        try:
            e = int(token)
        except ValueError:
            raise MalformedToken(f"not an integer: {token!r}") from None
        if e == 0:
            raise MalformedToken("letter 0 is not a generator")
        letters.append(e)
    return BraidWord(n, tuple(letters))


def format_word(u: BraidWord) -> str:
    return " ".join(str(e) for e in u.letters)


# -- group structure -------------------------------------------------------------


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def _check_same(*words: BraidWord) -> int:
    n = words[0].strands
    for w in words[1:]:
        if w.strands != n:
            raise StrandMismatch(f"B_{n} vs B_{w.strands}")
    return n


def _guard(length: int, max_length: int) -> None:
    if length > max_length:
        raise WordTooLong(f"word of length {length} exceeds the guard {max_length}")


def concat(*words: BraidWord, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> BraidWord:
    n = _check_same(*words)
    letters = tuple(e for w in words for e in w.letters)
    _guard(len(letters), max_length)
    return BraidWord(n, letters)


def inverse(u: BraidWord) -> BraidWord:
    return BraidWord(u.strands, tuple(-e for e in reversed(u.letters)))


def power(u: BraidWord, k: int, max_length: int = DEFAULT_MAX_WORD_LENGTH) -> BraidWord:
    """``u^k``, materialized letter by letter; negative ``k`` uses the inverse."""
    base = u if k >= 0 else inverse(u)
    _guard(len(base.letters) * abs(k), max_length)
    return BraidWord(u.strands, base.letters * abs(k))


def conjugate(u: BraidWord, g: BraidWord) -> BraidWord:
    """``g u g^-1``."""
    return concat(g, u, inverse(g))


def free_reduce(u: BraidWord) -> BraidWord:
    stack: list[int] = []
    for e in u.letters:
        if stack and stack[-1] == -e:
            stack.pop()
        else:
            stack.append(e)
    return BraidWord(u.strands, tuple(stack))


# -- invariants ------------------------------------------------------------------


def writhe(u: BraidWord) -> int:
    return sum(1 if e > 0 else -1 for e in u.letters)


def bar(u: BraidWord) -> BraidWord:
    """Flip generator indices: ``a_i^{+-1} -> a_{n-i}^{+-1}``."""
    n = u.strands
    return BraidWord(n, tuple((n - e) if e > 0 else -(n + e) for e in u.letters))


def underlying_permutation(u: BraidWord) -> Permutation:
    # strand_at[p] = strand currently at position p
    n = u.strands
    strand_at = list(range(n))
    for e in u.letters:
        i = abs(e)
        strand_at[i - 1], strand_at[i] = strand_at[i], strand_at[i - 1]
    images = [0] * n
    for p, s in enumerate(strand_at):
        images[s] = p + 1
    return Permutation(tuple(images))


def closure_components(u: BraidWord) -> int:
    return len(underlying_permutation(u).cycles())


def is_pure(u: BraidWord) -> bool:
    return underlying_permutation(u).is_identity()


# -- distinguished elements ----------------------------------------------------


def delta(n: int) -> BraidWord:
    """Positive half twist ``prod_{i=1}^{n-1} a_1 a_2 ... a_{n-i}``."""
    if n < 1:
        raise BadStrandCount(f"need n >= 1, got {n}")
    return BraidWord(n, tuple(j for i in range(1, n) for j in range(1, n - i + 1)))


def full_twist(n: int) -> BraidWord:
    """``(a_1 ... a_{n-1})^n``, the generator of the centre for ``n >= 3``."""
    return power(delta_small(n), n)


def delta_small(n: int) -> BraidWord:
    if n < 1:
        raise BadStrandCount(f"need n >= 1, got {n}")
    return BraidWord(n, tuple(range(1, n)))


def embed(u: BraidWord, mode: str = "shift") -> BraidWord:
    """Include ``B_{n-1}`` into ``B_n``.

    ``shift`` sends ``a_i`` to ``a_{i+1}`` (the standard inclusion, onto the last
    ``n-1`` strands); ``keep`` sends ``a_i`` to ``a_i``.
    """
    if mode == "shift":
        return BraidWord(u.strands + 1, tuple(e + 1 if e > 0 else e - 1 for e in u.letters))
    if mode == "keep":
        return BraidWord(u.strands + 1, u.letters)
    raise ValueError(f"unknown embedding mode {mode!r}")


def delta_L(n: int) -> BraidWord:
    """Half twist on the first ``n-1`` strands."""
    if n < 3:
        raise BadStrandCount(f"delta_L needs n >= 3, got {n}")
    return embed(delta(n - 1), "keep")


def delta_R(n: int) -> BraidWord:
    """Half twist on the last ``n-1`` strands."""
    if n < 3:
        raise BadStrandCount(f"delta_R needs n >= 3, got {n}")
    return embed(delta(n - 1), "shift")


def random_word(rng, n: int, length: int) -> BraidWord:
    """Uniform word of exactly ``length`` letters (helper for sampling and tests)."""
    if n < 2:
        return BraidWord(n, ())
    letters = []
    for _ in range(length):
        i = rng.randrange(1, n)
        letters.append(i if rng.random() < 0.5 else -i)
    return BraidWord(n, tuple(letters))

