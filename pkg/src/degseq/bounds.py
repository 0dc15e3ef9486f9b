"""Closed-form sufficient conditions for graphicality.

Each predicate compares two exact integers, never a float.  A condition
of the form ``n >= p / q`` is evaluated as ``q * n >= p``; the verdict
records both sides of the comparison actually performed.

========================  ===============================================
predicate                 comparison (``lhs >= rhs``)
========================  ===============================================
``ZZ_GENERAL``            ``4 b n >= (1 + a + b)**2``
``ZZ_SIMPLIFIED``         ``4 dn n >= (1 + d1 + dn)**2``
``ZZ_COROLLARY``          ``4 n >= (d1 + 2)**2``
``IMPROVED_FLOOR``        ``n >= d1**2 // 4 + d1``
``BHJW``                  ``4 dn n >= (1 + d1 + dn)**2 - eps``
========================  ===============================================

``eps`` is 0 when ``d1 + dn`` is odd and 1 otherwise.  Every predicate
also needs an even degree sum; odd-sum input gives ``applicable=False``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import BadParameters
from .seqcore import DegreeSequence, EGReport, erdos_gallai_check

__all__ = [
    "Predicate",
    "BoundVerdict",
    "BoundsSummary",
    "zz_general",
    "zz_simplified",
    "zz_corollary",
    "improved_bound",
    "bhjw_bound",
    "bounds_summary",
    "remark_thresholds",
    "min_length",
]


class Predicate(enum.Enum):
    ZZ_GENERAL = "zz_general"
    ZZ_SIMPLIFIED = "zz_simplified"
    ZZ_COROLLARY = "zz_corollary"
    IMPROVED_FLOOR = "improved_floor"
    BHJW = "bhjw"


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of one sufficiency predicate.

    ``min_n`` is the least length at which the comparison succeeds for the
    same ``d1`` and ``dn`` (or ``a`` and ``b``); parity is not part of it.
    """

    predicate: Predicate
    applicable: bool
    holds: bool
    lhs: int
    rhs: int
    min_n: int
    epsilon_prime: Optional[int] = None


class BoundsSummary(NamedTuple):
    verdicts: tuple
    eg: EGReport


def _ceil_div(p, q):
    return -((-p) // q)


def _verdict(pred, seq, scale, target, eps=None):
    # Comparison is scale * n >= target with scale > 0.
    lhs = scale * seq.n
    applicable = seq.sum % 2 == 0
    min_n = max(1, _ceil_div(target, scale))
    return BoundVerdict(
        predicate=pred,
        applicable=applicable,
        holds=applicable and lhs >= target,
        lhs=lhs,
        rhs=target,
        min_n=min_n,
        epsilon_prime=eps,
    )


def zz_general(seq: DegreeSequence, a: int, b: int) -> BoundVerdict:
    """Zverovich–Zverovich bound with parameters ``a >= d1`` and ``1 <= b <= dn``.

    Raises
    ------
    BadParameters
        If ``a < d1``, ``b > dn`` or ``b < 1``.
    """
    if a < seq.d1 or b > seq.dn or b < 1:
        raise BadParameters(f"need a >= d1={seq.d1} and 1 <= b <= dn={seq.dn}; got a={a}, b={b}")
    return _verdict(Predicate.ZZ_GENERAL, seq, 4 * b, (1 + a + b) ** 2)


def zz_simplified(seq: DegreeSequence) -> BoundVerdict:
    v = zz_general(seq, seq.d1, seq.dn)
    return BoundVerdict(Predicate.ZZ_SIMPLIFIED, v.applicable, v.holds, v.lhs, v.rhs, v.min_n)


def zz_corollary(seq: DegreeSequence) -> BoundVerdict:
    return _verdict(Predicate.ZZ_COROLLARY, seq, 4, (seq.d1 + 2) ** 2)


def improved_bound(seq: DegreeSequence) -> BoundVerdict:
    """The floor bound ``n >= floor(d1**2 / 4 + d1)``, which is sharp."""
    d1 = seq.d1
    return _verdict(Predicate.IMPROVED_FLOOR, seq, 1, d1 * d1 // 4 + d1)


def bhjw_bound(seq: DegreeSequence) -> BoundVerdict:
    d1, dn = seq.d1, seq.dn
    eps = 0 if (d1 + dn) % 2 else 1
    return _verdict(Predicate.BHJW, seq, 4 * dn, (1 + d1 + dn) ** 2 - eps, eps)


def bounds_summary(seq: DegreeSequence, *, naive: bool = False) -> BoundsSummary:
    """All five verdicts in :class:`Predicate` order, plus the exact EG verdict."""
    verdicts = (
        zz_general(seq, seq.d1, seq.dn),
        zz_simplified(seq),
        zz_corollary(seq),
        improved_bound(seq),
        bhjw_bound(seq),
    )
    return BoundsSummary(verdicts, erdos_gallai_check(seq, naive=naive))


def min_length(pred: Predicate, d1: int, dn: int) -> int:
    """``min_n`` of ``pred`` for a sequence with first entry d1 and last dn."""
    probe = DegreeSequence(((d1, 1),) if d1 == dn else ((d1, 1), (dn, 1)))
    fn = {
        Predicate.ZZ_GENERAL: lambda s: zz_general(s, d1, dn),
        Predicate.ZZ_SIMPLIFIED: zz_simplified,
        Predicate.ZZ_COROLLARY: zz_corollary,
        Predicate.IMPROVED_FLOOR: improved_bound,
        Predicate.BHJW: bhjw_bound,
    }[pred]
    return fn(probe).min_n


def remark_thresholds(x: int) -> tuple:
    """Least lengths for ``d1 = 2x + 1``, ``dn = 1`` under three bounds.

    Returns ``(zz_simplified, bhjw, improved_floor)`` thresholds, which are
    ``x**2 + 3x + 3``, ``x**2 + 3x + 2`` and ``x**2 + 3x + 1``.
    """
    if x < 1:
        raise BadParameters(f"x must be >= 1, got {x}")
    base = x * x + 3 * x
    return base + 3, base + 2, base + 1
