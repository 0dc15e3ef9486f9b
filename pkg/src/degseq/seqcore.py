"""Degree sequences: representation, parsing, Erdős–Gallai testing, realization.

A :class:`DegreeSequence` stores a non-increasing sequence of positive
integers as runs ``(value, count)``.  Every algorithm here works on the
runs directly, so sequences such as ``(500^251, 1^62499)`` cost no more than
their handful of runs.

Python integers are unbounded, so the sums and products below are exact
at any magnitude; the parser still caps each value and count at 2**63 - 1
to keep the text format interoperable with fixed-width readers.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import (
    EmptySequence,
    IndexOutOfRange,
    Malformed,
    NotGraphic,
    Overflow,
    ZeroEntry,
)

__all__ = [
    "DegreeSequence",
    "Violation",
    "EGReport",
    "Realization",
    "parse_sequence",
    "format_sequence",
    "erdos_gallai_check",
    "eg_terms",
    "havel_hakimi_realize",
    "realization_problems",
    "flatten_at",
]

INT64_MAX = 2**63 - 1


@dataclass(frozen=True, slots=True)
class DegreeSequence:
    """Non-increasing sequence of positive integers in run-length form.

    Parameters
    ----------
    runs : tuple of (value, count)
        Values strictly decreasing, all values and counts at least 1.

    Examples
    --------
    >>> s = DegreeSequence(((3, 2), (1, 2)))
    >>> s.n, s.sum, s.d1, s.dn
    (4, 8, 3, 1)
    >>> str(s)
    '3^2,1^2'
    """

    runs: tuple
    n: int = field(init=False, compare=False)
    sum: int = field(init=False, compare=False)

    def __post_init__(self):
        runs = tuple((int(v), int(c)) for v, c in self.runs)
        if not runs:
            raise ValueError("a degree sequence needs at least one run")
        prev = None
        for v, c in runs:
            if v < 1 or c < 1:
                raise ValueError(f"run ({v}, {c}) must have value and count >= 1")
            if prev is not None and v >= prev:
                raise ValueError("run values must be strictly decreasing")
            prev = v
        object.__setattr__(self, "runs", runs)
        object.__setattr__(self, "n", sum(c for _, c in runs))
        object.__setattr__(self, "sum", sum(v * c for v, c in runs))

    @classmethod
    def _trusted(cls, runs, n, total):
        # Skips validation; callers guarantee the run invariants.
        obj = object.__new__(cls)
        object.__setattr__(obj, "runs", runs)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "sum", total)
        return obj

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DegreeSequence":
        """Build from degrees in any order; zeros and negatives are rejected."""
        vals = sorted((int(v) for v in values), reverse=True)
        runs = tuple((v, len(list(g))) for v, g in itertools.groupby(vals))
        return cls(runs)

    @property
    def d1(self) -> int:
        return self.runs[0][0]

    @property
    def dn(self) -> int:
        return self.runs[-1][0]

    def __len__(self):
        return self.n

    def __iter__(self) -> Iterator[int]:
        for v, c in self.runs:
            yield from itertools.repeat(v, c)

    def to_list(self) -> list:
        return list(self)

    def __str__(self):
        return format_sequence(self)


class Violation(NamedTuple):
    """One index where the Erdős–Gallai inequality is reversed."""

    k: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class EGReport:
    """Erdős–Gallai verdict.

    ``first_violation`` is the least ``k`` with ``lhs > rhs``, computed
    whatever the parity of the sum.  ``violations`` is filled only when
    every violating index was requested.
    """

    parity_even: bool
    first_violation: Optional[Violation]
    graphic: bool
    violations: Optional[tuple] = None


@dataclass(frozen=True)
class Realization:
    """A simple graph on vertices ``0..n-1``; vertex ``i`` carries the
    ``i``-th entry of the expanded sequence."""

    n: int
    edges: tuple

    def degrees(self) -> list:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


# -- text format -------------------------------------------------------------

_TERM = re.compile(r"[ \t\n\r\f\v]*([0-9]+)[ \t\n\r\f\v]*(?:\^[ \t\n\r\f\v]*([0-9]+)[ \t\n\r\f\v]*)?")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4^2,1^6"``-style text into a :class:`DegreeSequence`.

    Terms may appear in any order; they are sorted into non-increasing
    order.  Raises one of the :class:`~degseq.errors.ParseError` subclasses
    ``EmptySequence``, ``Malformed``, ``Overflow`` or ``ZeroEntry``.

    >>> parse_sequence("2, 3, 1").runs
    ((3, 1), (2, 1), (1, 1))
    """
    if not isinstance(text, str):
        raise Malformed(f"expected text, got {type(text).__name__}")
    if not text.isascii():
        raise Malformed("sequence text must be ASCII")
    if not text.strip(" \t\n\r\f\v"):
        raise EmptySequence("no terms")
    counts: dict = {}
    for pos, term in enumerate(text.split(",")):
        m = _TERM.fullmatch(term)
        if m is None:
            raise Malformed(f"term {pos + 1} {term.strip()!r} is not V or V^C")
        v = int(m.group(1))
        c = int(m.group(2)) if m.group(2) is not None else 1
        if v > INT64_MAX or c > INT64_MAX:
            raise Overflow(f"term {pos + 1} exceeds 2**63 - 1")
        if v == 0 or c == 0:
            raise ZeroEntry(f"term {pos + 1} {term.strip()!r} has a zero")
        counts[v] = counts.get(v, 0) + c
    return DegreeSequence(tuple(sorted(counts.items(), reverse=True)))


def format_sequence(seq: DegreeSequence) -> str:
    """Canonical text: ``V^C`` per run, ``^C`` dropped when ``C == 1``."""
    return ",".join(str(v) if c == 1 else f"{v}^{c}" for v, c in seq.runs)


# -- Erdős–Gallai --------------------------------------------------------------


def _durfee(runs) -> int:
    """Largest ``k`` with ``d_k >= k``."""
    m = 0
    start = 0
    for v, c in runs:
        end = start + c
        top = min(end, v)
        if top <= start:
            break
        m = top
        start = end
    return m


def _eg_rle(runs, want_all):
    # Beyond the Durfee index m the slack rhs - lhs never decreases, so the
    # least violation (if any) sits at k <= m.  Inside a run of value v
    # spanning (s, e], and between consecutive tail values, the slack is
    # linear in k; each such piece is solved exactly.
    r = len(runs)
    m = _durfee(runs)
    # suffix weighted sums W[j] = sum_{t>=j} v_t * c_t
    W = [0] * (r + 1)
    for j in range(r - 1, -1, -1):
        W[j] = W[j + 1] + runs[j][0] * runs[j][1]
    found = []
    prefix = 0
    start = 0
    for i in range(r):
        v, c = runs[i]
        end = start + c
        lo, hi = start + 1, min(end, m)
        k = lo
        while k <= hi:
            q = i + 1
            c_ge = 0
            while q < r and runs[q][0] >= k:
                c_ge += runs[q][1]
                q += 1
            seg_hi = hi if q == i + 1 else min(hi, runs[q - 1][0])
            a = prefix - v * start - W[q]
            b = v + 1 - end - c_ge
            if b > 0:
                first, last = max(k, (-a) // b + 1), seg_hi
            elif b == 0:
                first, last = (k, seg_hi) if a > 0 else (1, 0)
            else:
                first, last = k, min(seg_hi, (a - 1) // (-b))
            for kk in range(first, last + 1):
                lhs = prefix + v * (kk - start)
                found.append(Violation(kk, lhs, lhs - (a + b * kk)))
                if not want_all:
                    return found
            k = seg_hi + 1
        if hi < end:
            break
        prefix += v * c
        start = end
    if want_all and m < _total_n(runs):
        # Slack is non-decreasing past m, so violations there form a prefix.
        lo, hi = m, _total_n(runs)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            lhs, rhs = _terms(runs, mid)
            if lhs > rhs:
                lo = mid
            else:
                hi = mid - 1
        for kk in range(m + 1, lo + 1):
            found.append(Violation(kk, *_terms(runs, kk)))
    return found


def _total_n(runs) -> int:
    return sum(c for _, c in runs)


def _terms(runs, k):
    lhs = 0
    rhs = k * (k - 1)
    seen = 0
    for v, c in runs:
        inside = min(c, max(0, k - seen))
        lhs += v * inside
        rhs += (c - inside) * min(k, v)
        seen += c
    return lhs, rhs


def _eg_naive(runs, want_all):
    # Every k in 1..n, tail sum recomputed over the runs each time.
    found = []
    lhs = 0
    k = 0
    for i, (v, c) in enumerate(runs):
        for used in range(1, c + 1):
            k += 1
            lhs += v
            rhs = k * (k - 1) + (c - used) * min(k, v)
            for vv, cc in runs[i + 1:]:
                rhs += cc * min(k, vv)
            if lhs > rhs:
                found.append(Violation(k, lhs, rhs))
                if not want_all:
                    return found
    return found


def eg_terms(seq: DegreeSequence, k: int) -> tuple:
    """Both sides ``(lhs, rhs)`` of the Erdős–Gallai inequality at index ``k``."""
    if not 1 <= k <= seq.n:
        raise IndexOutOfRange(f"k={k} outside 1..{seq.n}")
    return _terms(seq.runs, k)


def erdos_gallai_check(seq: DegreeSequence, *, naive: bool = False,
                       all_violations: bool = False) -> EGReport:
    """Decide graphicality by the Erdős–Gallai inequalities.

    Parameters
    ----------
    seq : DegreeSequence
    naive : bool
        Evaluate every index ``k = 1..n`` one by one instead of the
        run-length evaluation.  Both give identical reports.
    all_violations : bool
        Also collect every violating index into ``report.violations``.

    Examples
    --------
    >>> erdos_gallai_check(parse_sequence("3,3,1,1")).first_violation
    Violation(k=2, lhs=6, rhs=4)
    """
    runs = seq.runs
    found = (_eg_naive if naive else _eg_rle)(runs, all_violations)
    parity_even = seq.sum % 2 == 0
    first = found[0] if found else None
    return EGReport(
        parity_even=parity_even,
        first_violation=first,
        graphic=parity_even and first is None,
        violations=tuple(found) if all_violations else None,
    )


# -- realization ---------------------------------------------------------------


def havel_hakimi_realize(seq: DegreeSequence) -> Realization:
    """Build one simple graph with the given degrees, or raise NotGraphic.

    The pivot is the vertex with the largest residual degree, ties to the
    lowest index; it is joined to the next vertices in that same order.
    """
    residual = seq.to_list()
    n = len(residual)
    edges = []
    if seq.sum % 2:
        raise NotGraphic(seq)
    alive = list(range(n))
    while alive:
        alive.sort(key=lambda u: (-residual[u], u))
        pivot = alive[0]
        d = residual[pivot]
        if d == 0:
            break
        targets = alive[1:d + 1]
        if len(targets) < d or residual[targets[-1]] == 0:
            raise NotGraphic(seq)
        for t in targets:
            residual[t] -= 1
            edges.append((pivot, t) if pivot < t else (t, pivot))
        residual[pivot] = 0
        alive = [u for u in alive[1:] if residual[u] > 0]
    return Realization(n=n, edges=tuple(sorted(edges)))


def realization_problems(real: Realization, seq: DegreeSequence) -> list:
    """Everything wrong with ``real`` as a realization of ``seq``; empty if valid."""
    problems = []
    if real.n != seq.n:
        problems.append(f"vertex count {real.n} != {seq.n}")
    seen = set()
    for u, v in real.edges:
        if u == v:
            problems.append(f"loop at {u}")
        if not (0 <= u < real.n and 0 <= v < real.n):
            problems.append(f"endpoint out of range in {(u, v)}")
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            problems.append(f"duplicate edge {key}")
        seen.add(key)
    if not problems and sorted(real.degrees(), reverse=True) != seq.to_list():
        problems.append("degree multiset differs from the sequence")
    return problems


# -- proof device ----------------------------------------------------------------


def flatten_at(seq: DegreeSequence, k: int) -> DegreeSequence:
    """Raise the first ``k`` entries to ``d1`` and lower the rest to ``dn``.

    An Erdős–Gallai violation at ``k`` survives this replacement.

    >>> str(flatten_at(parse_sequence("5,3,2,2,1"), 1))
    '5,1^4'
    """
    if not 1 <= k <= seq.n:
        raise IndexOutOfRange(f"k={k} outside 1..{seq.n}")
    d1, dn, n = seq.d1, seq.dn, seq.n
    if k == n or d1 == dn:
        return DegreeSequence(((d1, n),))
    return DegreeSequence(((d1, k), (dn, n - k)))
