"""Braid-group toolkit: Garside normal forms, the Dehornoy order and floor,
rigorous enclosures of the fractional Dehn twist coefficient, the
Delta^2-decomposition of sigma_1-positive braids, and slice-Bennequin checks
on quasipositive braids."""

from .bennequin import (
    InequalityReport,
    QuasipositiveFactorization,
    Status,
    check_chi_bookkeeping,
    check_fdtc_bennequin,
    check_qp_fdtc_bound,
    check_writhe_bennequin,
    parse_factorization,
    qp_build,
    qp_chi4,
)
from .decomposition import Decomposition, decompose, factor_by_a1, verify_decomposition
from .dehornoy import OrderSign, compare, dehornoy_floor, handle_reduce, order_sign, to_sigma1_positive_word
from .errors import *  # noqa: F403
from .fdtc import defect_search, defect_witness, fdtc_estimate, floor_interval, homogenize, lemma_witness
from .garside import GarsideNormalForm, are_equal, is_trivial, to_normal_form
from .intervals import RationalInterval
from .words import (
    BraidWord,
    Permutation,
    bar,
    closure_components,
    concat,
    conjugate,
    delta,
    delta_L,
    delta_R,
    delta_small,
    embed,
    free_reduce,
    full_twist,
    inverse,
    is_pure,
    parse_word,
    power,
    underlying_permutation,
    writhe,
)

__version__ = "0.1.0"
