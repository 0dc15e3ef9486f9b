"""Constructors for the named extremal families.

``witness_nongraphic(d)`` sits one below the floor bound and is not
graphic; ``gap_example(x)`` meets the floor bound while failing the
``d1**2/4 + d1 + 1`` bound, and is graphic.  Both check their own
post-conditions with the EG engine and raise if any fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import improved_bound, zz_corollary
from .errors import BadParameters, IndexOutOfRange
from .seqcore import DegreeSequence, erdos_gallai_check

__all__ = [
    "FamilyParams",
    "family_params",
    "witness_nongraphic",
    "gap_example",
    "proof_extremal_form",
    "proof_forms",
]


@dataclass(frozen=True)
class FamilyParams:
    d: int
    x: int

    @property
    def even(self) -> bool:
        return self.d % 2 == 0


def family_params(d: int) -> FamilyParams:
    if d < 2:
        raise BadParameters(f"d must be >= 2, got {d}")
    return FamilyParams(d=d, x=d // 2)


def _runs(*pairs):
    return DegreeSequence(tuple((v, c) for v, c in pairs if c > 0))


def _postcondition(ok, what, seq):
    if not ok:
        raise AssertionError(f"{seq}: {what}")


def witness_nongraphic(d: int) -> DegreeSequence:
    """Even-sum, non-graphic sequence with largest entry ``d`` and length
    ``d*d // 4 + d - 1``.

    >>> str(witness_nongraphic(5))
    '5^3,1^7'
    """
    p = family_params(d)
    x = p.x
    ones = x * x + x - 2 if p.even else x * x + 2 * x - 1
    seq = _runs((d, x + 1), (1, ones))
    _postcondition(seq.n == d * d // 4 + d - 1, "length off the threshold", seq)
    _postcondition(seq.sum % 2 == 0, "odd sum", seq)
    _postcondition(not erdos_gallai_check(seq).graphic, "graphic", seq)
    return seq


def gap_example(x: int) -> DegreeSequence:
    """Graphic sequence of length ``x*x + 2x`` with ``d1 = 2x``.

    >>> str(gap_example(2))
    '4^2,1^6'
    """
    if x < 1:
        raise BadParameters(f"x must be >= 1, got {x}")
    d = 2 * x
    if x % 2:
        seq = _runs((d, 1), (1, x * x + 2 * x - 1))
    else:
        seq = _runs((d, 2), (1, x * x + 2 * x - 2))
    _postcondition(seq.n == x * x + 2 * x, "length off the threshold", seq)
    _postcondition(seq.sum % 2 == 0, "odd sum", seq)
    _postcondition(improved_bound(seq).holds, "floor bound fails", seq)
    _postcondition(not zz_corollary(seq).holds, "corollary bound holds", seq)
    _postcondition(erdos_gallai_check(seq).graphic, "not graphic", seq)
    return seq


def proof_extremal_form(d1: int, n: int, k: int) -> DegreeSequence:
    """``(d1^k, 1^(n-k))``."""
    if d1 < 1:
        raise BadParameters(f"d1 must be >= 1, got {d1}")
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    if d1 == 1:
        return DegreeSequence(((1, n),))
    return _runs((d1, k), (1, n - k))


def proof_forms(x: int) -> tuple:
    """The three candidate counterexamples ruled out by parity, for given x.

    They are ``((2x)^(x+1), 1^(x^2+x-1))``, ``((2x-1)^x, 1^(x^2-1))`` and
    ``((2x-1)^(x+1), 1^(x^2-2))``; their sums are always odd.  The third
    needs ``x >= 2`` (at ``x = 1`` its ones-count is negative) and is
    replaced by ``(1^1)`` there, whose sum is also odd.
    """
    if x < 1:
        raise BadParameters(f"x must be >= 1, got {x}")
    even_case = proof_extremal_form(2 * x, x * x + 2 * x, x + 1)
    odd_low = proof_extremal_form(2 * x - 1, x * x + x - 1, x)
    if x >= 2:
        odd_high = proof_extremal_form(2 * x - 1, x * x + x - 1, x + 1)
    else:
        odd_high = DegreeSequence(((1, 1),))
    return even_case, odd_low, odd_high
