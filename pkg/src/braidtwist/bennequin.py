"""Quasipositive braids and slice-Bennequin type inequalities.

For a quasipositive braid ``prod_{j=1}^{l} w_j a_{i_j} w_j^-1`` in ``B_n`` the
closure bounds a surface in the 4-ball of Euler characteristic ``n - l``, and
that value is optimal.  This is the only class of inputs where this module
reports ``chi_4``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadStrandCount, EmptyFactorization, IndexOutOfRange, MalformedToken
from .fdtc import floor_interval
from .intervals import RationalInterval, format_rational
from .words import (
    BraidWord,
    closure_components,
    concat,
    delta_small,
    format_word,
    inverse,
    parse_word,
    random_word,
    writhe,
)

__all__ = [
    "QuasipositiveFactorization",
    "Status",
    "InequalityReport",
    "parse_factorization",
    "format_factorization",
    "qp_build",
    "qp_chi4",
    "qp_g4",
    "check_writhe_bennequin",
    "check_fdtc_bennequin",
    "check_qp_fdtc_bound",
    "check_chi_bookkeeping",
    "run_all_checks",
    "random_factorization",
]


@dataclass(frozen=True)
class QuasipositiveFactorization:
    strands: int
    factors: tuple[tuple[BraidWord, int], ...] = ()

    def __post_init__(self):
        for w, i in self.factors:
            if w.strands != self.strands:
                raise BadStrandCount(f"conjugator in B_{w.strands}, expected B_{self.strands}")
            if not 1 <= i <= self.strands - 1:
                raise IndexOutOfRange(f"generator index {i} out of range for B_{self.strands}")

    def __len__(self) -> int:
        return len(self.factors)

    def power_times_delta(self, k: int) -> QuasipositiveFactorization:
        """Factorization of ``beta^k * a_1 a_2 ... a_{n-1}``."""
        empty = BraidWord(self.strands, ())
        tail = tuple((empty, i) for i in range(1, self.strands))
        return QuasipositiveFactorization(self.strands, self.factors * k + tail)


def parse_factorization(text: str, n: int) -> QuasipositiveFactorization:
    """Parse ``"w:i;w:i;..."``, e.g. ``"2:1;:2"`` for ``(a_2 a_1 a_2^-1)(a_2)``."""
    factors = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        if ":" not in chunk:
            raise MalformedToken(f"factor {chunk!r} is missing ':'")
        w, _, i = chunk.rpartition(":")
        try:
            index = int(i)
        except ValueError:
            raise MalformedToken(f"bad generator index {i!r}") from None
        factors.append((parse_word(w, n), index))
    return QuasipositiveFactorization(n, tuple(factors))


def format_factorization(f: QuasipositiveFactorization) -> str:
    return ";".join(f"{format_word(w)}:{i}" for w, i in f.factors)


def qp_build(f: QuasipositiveFactorization) -> BraidWord:
    parts = []
    for w, i in f.factors:
        parts += [w, BraidWord(f.strands, (i,)), inverse(w)]
    return concat(BraidWord(f.strands, ()), *parts)


def qp_chi4(f: QuasipositiveFactorization) -> int:
    return f.strands - len(f.factors)


def qp_g4(f: QuasipositiveFactorization) -> int:
    """Slice genus; only defined when the closure is a knot."""
    if closure_components(qp_build(f)) != 1:
        raise ValueError("g_4 is only reported for knot closures; use chi_4")
    return (1 - qp_chi4(f)) // 2


class Status(enum.Enum):
    VERIFIED = "Verified"
    VIOLATED = "Violated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class InequalityReport:
    """``lhs <= rhs``; ``lhs`` is exact or an enclosure."""

    name: str
    lhs: RationalInterval | Fraction
    rhs: Fraction
    status: Status
    details: dict = field(default_factory=dict)

    @property
    def equality(self) -> bool:
        return not isinstance(self.lhs, RationalInterval) and self.lhs == self.rhs

    def to_json(self) -> dict:
        lhs = self.lhs.to_json() if isinstance(self.lhs, RationalInterval) else format_rational(self.lhs)
        return {
            "name": self.name,
            "lhs": lhs,
            "rhs": format_rational(self.rhs),
            "status": self.status.value,
            **self.details,
        }


def _exact_status(lhs: Fraction, rhs: Fraction) -> Status:
    return Status.VERIFIED if lhs <= rhs else Status.VIOLATED


def _interval_status(lhs: RationalInterval, rhs: Fraction) -> Status:
    if lhs.hi <= rhs:
        return Status.VERIFIED
    if lhs.lo > rhs:
        return Status.VIOLATED
    return Status.INCONCLUSIVE


def _closure_details(f: QuasipositiveFactorization) -> dict:
    components = closure_components(qp_build(f))
    out = {"components": components, "chi4": qp_chi4(f)}
    if components == 1:
        out["g4"] = qp_g4(f)
    return out


def check_writhe_bennequin(f: QuasipositiveFactorization) -> InequalityReport:
    """``|wr(beta)| <= -chi_4 + n``; an equality on quasipositive braids."""
    lhs = Fraction(abs(writhe(qp_build(f))))
    rhs = Fraction(-qp_chi4(f) + f.strands)
    return InequalityReport("writhe-bennequin", lhs, rhs, _exact_status(lhs, rhs), _closure_details(f))


def _require_fdtc_strands(f: QuasipositiveFactorization) -> None:
    if f.strands < 3:
        raise BadStrandCount(f"FDTC inequalities are checked for n >= 3, got n = {f.strands}")


def check_fdtc_bennequin(
    f: QuasipositiveFactorization, k: int = 32, omega: RationalInterval | None = None
) -> InequalityReport:
    """``|omega(beta)| <= -chi_4 + n`` with ``omega`` known to width ``1/k``.

    ``omega`` may be passed in when ``floor_interval(qp_build(f), k)`` is
    already known.
    """
    _require_fdtc_strands(f)
    if omega is None:
        omega = floor_interval(qp_build(f), k)
    lhs = abs(omega)
    rhs = Fraction(-qp_chi4(f) + f.strands)
    return InequalityReport("fdtc-bennequin", lhs, rhs, _interval_status(lhs, rhs), {"omega": omega.to_json(), "k": k})


def check_qp_fdtc_bound(
    f: QuasipositiveFactorization, k: int = 32, omega: RationalInterval | None = None
) -> InequalityReport:
    """``omega(beta) <= -chi_4 + n - 1`` for quasipositive ``beta != 1``."""
    _require_fdtc_strands(f)
    if not f.factors:
        raise EmptyFactorization("the bound is stated for nontrivial quasipositive braids")
    lhs = omega if omega is not None else floor_interval(qp_build(f), k)
    rhs = Fraction(-qp_chi4(f) + f.strands - 1)
    return InequalityReport("qp-fdtc-bound", lhs, rhs, _interval_status(lhs, rhs), {"k": k})


def check_chi_bookkeeping(f: QuasipositiveFactorization, k_powers: int = 1) -> InequalityReport:
    """``1 - chi_4(closure of beta^{nk} delta) <= nk (1 - chi_4(closure of beta)) + nk (n-1)``.

    ``beta^{nk} delta`` is again quasipositive, so both sides are exact.
    """
    if k_powers < 1:
        raise ValueError("k_powers must be >= 1")
    n = f.strands
    nk = n * k_powers
    big = f.power_times_delta(nk)
    if qp_build(big) != concat(qp_build(f) ** nk, delta_small(n)):
        raise AssertionError("factorization of beta^{nk} delta does not spell that braid")
    lhs = Fraction(1 - qp_chi4(big))
    rhs = Fraction(nk * (1 - qp_chi4(f)) + nk * (n - 1))
    return InequalityReport("chi-bookkeeping", lhs, rhs, _exact_status(lhs, rhs), {"k": k_powers, "nk": nk})


def run_all_checks(f: QuasipositiveFactorization, k: int = 32) -> list[InequalityReport]:
    reports = [check_writhe_bennequin(f), check_chi_bookkeeping(f, 1)]
    if f.strands >= 3:
        omega = floor_interval(qp_build(f), k)
        reports.append(check_fdtc_bennequin(f, k, omega))
        if f.factors:
            reports.append(check_qp_fdtc_bound(f, k, omega))
    return reports


def random_factorization(rng, n: int, max_factors: int, max_conjugator: int) -> QuasipositiveFactorization:
    factors = []
    for _ in range(rng.randint(0, max_factors)):
        w = random_word(rng, n, rng.randint(0, max_conjugator))
        factors.append((w, rng.randint(1, n - 1)))
    return QuasipositiveFactorization(n, tuple(factors))
