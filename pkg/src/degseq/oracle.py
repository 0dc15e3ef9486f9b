"""Exhaustive ground truth at desk scale.

Sequences are streamed in lexicographically decreasing order; the current
sequence doubles as a resume cursor.  Work is split into partitions (by
first entry for :func:`cross_check`, by length for :func:`sharpness_scan`),
and partition results are merged in a fixed order, so reports are
identical for any number of worker processes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bounds import bhjw_bound, improved_bound, zz_corollary, zz_general, zz_simplified
from .errors import BadParameters, NotGraphic, Refused
from .extremal import witness_nongraphic
from .seqcore import (
    DegreeSequence,
    eg_terms,
    erdos_gallai_check,
    flatten_at,
    havel_hakimi_realize,
    realization_problems,
)

__all__ = [
    "ViolationReport",
    "SharpnessResult",
    "enumerate_sequences",
    "count_sequences",
    "cross_check",
    "sharpness_scan",
    "SCAN_GUARD",
]

SCAN_GUARD = 12


@dataclass
class ViolationReport:
    """Findings of :func:`cross_check`; every list is empty on a correct build.

    Sequences are stored in canonical text form.
    """

    nmax: int
    dmax: int
    sequences_checked: int = 0
    graphic_count: int = 0
    realizations_checked: int = 0
    violations: list = field(default_factory=list)
    eg_hh_mismatches: list = field(default_factory=list)
    rle_naive_mismatches: list = field(default_factory=list)
    flatten_failures: list = field(default_factory=list)
    realization_failures: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (self.violations or self.eg_hh_mismatches or self.rle_naive_mismatches
                    or self.flatten_failures or self.realization_failures)

    def merge(self, other: "ViolationReport") -> None:
        self.sequences_checked += other.sequences_checked
        self.graphic_count += other.graphic_count
        self.realizations_checked += other.realizations_checked
        self.violations += other.violations
        self.eg_hh_mismatches += other.eg_hh_mismatches
        self.rle_naive_mismatches += other.rle_naive_mismatches
        self.flatten_failures += other.flatten_failures
        self.realization_failures += other.realization_failures


@dataclass
class SharpnessResult:
    d1: int
    threshold: int
    witness_at_threshold_minus_1: DegreeSequence
    witness_graphic: bool
    lengths_confirmed: list
    sequences_checked: dict
    counterexamples: list
    confirmed: bool
    note: str = ("lengths beyond the scanned window are covered by the floor bound "
                 "itself, not by this scan")


# -- enumeration -----------------------------------------------------------------


def enumerate_sequences(n: int, dmax: int, even_only: bool = False, *,
                        first: Optional[int] = None,
                        after: Optional[DegreeSequence] = None) -> Iterator[DegreeSequence]:
    """Yield every non-increasing length-``n`` sequence over ``1..dmax``.

    Parameters
    ----------
    n, dmax : int
        Length and largest allowed entry, both at least 1.
    even_only : bool
        Skip sequences with odd sum.
    first : int, optional
        Only sequences whose first entry is exactly ``first``.
    after : DegreeSequence, optional
        Resume strictly after this sequence.

    Yields
    ------
    DegreeSequence
        In lexicographically decreasing order, each exactly once.
    """
    if n < 1 or dmax < 1:
        raise BadParameters(f"need n >= 1 and dmax >= 1, got n={n}, dmax={dmax}")
    top = dmax if first is None else first
    if not 1 <= top <= dmax:
        return
    width = top
    # counts[i] is the multiplicity of value top - i
    counts = [0] * width
    if after is None:
        counts[0] = n
    else:
        if after.n != n or after.d1 > top:
            raise BadParameters(f"cursor {after} is not a length-{n} sequence under {top}")
        if first is not None and after.d1 != first:
            raise BadParameters(f"cursor {after} does not start with {first}")
        for v, c in after.runs:
            counts[top - v] = c
        if not _advance(counts, first is not None):
            return
    while True:
        runs = tuple((top - i, c) for i, c in enumerate(counts) if c)
        total = 0
        for v, c in runs:
            total += v * c
        if not (even_only and total & 1):
            yield DegreeSequence._trusted(runs, n, total)
        if not _advance(counts, first is not None):
            return


def _advance(counts, pin_first):
    # Next composition in lexicographically decreasing order, in place.
    last = len(counts) - 1
    j = last - 1
    while j >= 0 and counts[j] == 0:
        j -= 1
    if j < 0 or (pin_first and j == 0 and counts[0] == 1):
        return False
    counts[j] -= 1
    tail = counts[last] + 1
    counts[last] = 0
    counts[j + 1] = tail
    return True


def count_sequences(n: int, dmax: int) -> int:
    """Number of multisets of size ``n`` over ``dmax`` values."""
    return math.comb(n + dmax - 1, dmax - 1)


# -- cross check -------------------------------------------------------------------


def _check_one(seq, report):
    text = str(seq)
    eg = erdos_gallai_check(seq, all_violations=True)
    naive = erdos_gallai_check(seq, naive=True, all_violations=True)
    if eg != naive:
        report.rle_naive_mismatches.append(text)
    if eg.graphic:
        report.graphic_count += 1

    try:
        real = havel_hakimi_realize(seq)
    except NotGraphic:
        hh = False
    else:
        hh = True
        report.realizations_checked += 1
        problems = realization_problems(real, seq)
        if problems:
            report.realization_failures.append((text, "; ".join(problems)))
    if hh != eg.graphic:
        report.eg_hh_mismatches.append(text)

    d1, dn = seq.d1, seq.dn
    for verdict in (zz_general(seq, d1, dn), zz_simplified(seq), zz_corollary(seq),
                    improved_bound(seq), bhjw_bound(seq)):
        if verdict.holds and not eg.graphic:
            report.violations.append(
                (text, verdict.predicate.value, f"holds ({verdict.lhs} >= {verdict.rhs}) on non-graphic input"))

    for v in eg.violations:
        lhs, rhs = eg_terms(flatten_at(seq, v.k), v.k)
        if lhs <= rhs:
            report.flatten_failures.append((text, v.k))


def _cross_check_partition(args):
    first, nmax, dmax = args
    report = ViolationReport(nmax=nmax, dmax=dmax)
    for n in range(1, nmax + 1):
        for seq in enumerate_sequences(n, dmax, first=first):
            report.sequences_checked += 1
            _check_one(seq, report)
    return report


def _run_partitions(fn, parts, jobs):
    if jobs <= 1 or len(parts) <= 1:
        return [fn(p) for p in parts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, parts))


def cross_check(nmax: int, dmax: int, *, jobs: int = 1) -> ViolationReport:
    """Check every sequence with ``1 <= n <= nmax`` and ``d1 <= dmax``.

    For each sequence: predicate soundness against EG, EG against
    Havel–Hakimi, run-length EG against per-index EG, realization validity,
    and survival of each EG violation under :func:`flatten_at`.
    """
    if nmax < 1 or dmax < 1:
        raise BadParameters(f"need nmax >= 1 and dmax >= 1, got {nmax}, {dmax}")
    parts = [(f, nmax, dmax) for f in range(dmax, 0, -1)]
    report = ViolationReport(nmax=nmax, dmax=dmax)
    for part in _run_partitions(_cross_check_partition, parts, jobs):
        report.merge(part)
    return report


# -- sharpness -----------------------------------------------------------------------


def _scan_length(args):
    d1, length, naive = args
    checked = 0
    bad = []
    for seq in enumerate_sequences(length, d1, even_only=True, first=d1):
        checked += 1
        if not erdos_gallai_check(seq, naive=naive).graphic:
            bad.append(str(seq))
    return checked, bad


def sharpness_scan(d1: int, extra_lengths: int = 2, *, force: bool = False,
                   jobs: int = 1, naive: bool = False) -> SharpnessResult:
    """Confirm that ``d1**2 // 4 + d1`` is the exact length threshold for ``d1``.

    The witness one below the threshold must be even-sum and non-graphic,
    and every even-sum sequence with largest entry exactly ``d1`` and length
    in ``threshold .. threshold + extra_lengths`` must be graphic.

    Raises
    ------
    BadParameters
        ``d1 < 2`` or ``extra_lengths < 0``.
    Refused
        ``d1 > 12`` unless ``force`` is set.
    """
    if d1 < 2 or extra_lengths < 0:
        raise BadParameters(f"need d1 >= 2 and extra_lengths >= 0, got {d1}, {extra_lengths}")
    if d1 > SCAN_GUARD and not force:
        raise Refused(f"d1={d1} exceeds {SCAN_GUARD}; the search is exponential in d1 (use force)")
    threshold = d1 * d1 // 4 + d1
    witness = witness_nongraphic(d1)
    witness_graphic = erdos_gallai_check(witness).graphic
    witness_ok = (witness.n == threshold - 1 and witness.sum % 2 == 0 and not witness_graphic)

    lengths = list(range(threshold, threshold + extra_lengths + 1))
    results = _run_partitions(_scan_length, [(d1, L, naive) for L in lengths], jobs)
    confirmed_lengths = []
    checked = {}
    counterexamples = []
    for L, (count, bad) in zip(lengths, results):
        checked[L] = count
        counterexamples += bad
        if not bad:
            confirmed_lengths.append(L)
    return SharpnessResult(
        d1=d1,
        threshold=threshold,
        witness_at_threshold_minus_1=witness,
        witness_graphic=witness_graphic,
        lengths_confirmed=confirmed_lengths,
        sequences_checked=checked,
        counterexamples=counterexamples,
        confirmed=witness_ok and not counterexamples,
    )
