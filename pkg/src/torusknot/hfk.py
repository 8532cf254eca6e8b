"""Knot Floer staircase complexes of L-space knots, and their widths.

For an L-space knot (torus knots in particular) the knot Floer homology is a
"staircase": one generator per nonzero Alexander coefficient.  Writing the
Alexander polynomial as

    Delta(t) = (-1)^k + sum_{l=1..k} (-1)^{k-l} (t^{s_l} + t^{-s_l}),

with 0 = s_0 < s_1 < ... < s_k, the generator in Alexander grading s_l has
Maslov grading m_l determined by m_k = 0 and, descending,

    m_l = m_{l+1} - 2(s_{l+1} - s_l) + 1    if k - l is odd,
    m_l = m_{l+1} - 1                       if k - l is even (and > 0).

Generators with negative Alexander grading follow from the symmetry
(s, m) <-> (-s, m - 2s) and are never stored; only l = 0..k lives in memory.
The delta grading delta_l = s_l - m_l obeys the analogous descending
recursion, and the homological width is max(delta) - min(delta) + 1.

Everything here is exact integer arithmetic on numpy arrays; the recursions
are evaluated as reversed cumulative sums, so a width is O(k) after the
Alexander polynomial is known.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .alexander import alexander_torus, normalize_torus_params
from .laurent import LaurentPolynomial

__all__ = [
    "NotLSpaceForm",
    "Staircase",
    "HFKTable",
    "WidthReport",
    "ConjectureViolation",
    "extract_staircase",
    "hfk_from_staircase",
    "delta_sequence",
    "width_torus",
    "width_formula",
    "scan_conjecture",
    "scan_conjecture_parallel",
]


class NotLSpaceForm(ValueError):
    """The polynomial is not the Alexander polynomial of any L-space knot."""


@dataclass(frozen=True)
class Staircase:
    """The nonnegative step heights 0 = s_0 < s_1 < ... < s_k."""

    k: int
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.s) == self.k + 1 and self.s[0] == 0


@dataclass(frozen=True)
class HFKTable:
    """Generators of the staircase complex.

    ``s`` and ``m`` hold the Alexander and Maslov gradings for l = 0..k only;
    the full generator list (including the mirror half) is materialized by
    :meth:`generators`.
    """

    k: int
    s: tuple[int, ...]
    m: tuple[int, ...]

    def generators(self) -> list[tuple[int, int, int]]:
        """All (alexander, maslov, rank) triples, by descending Alexander grading.

        Ranks are always 1 for a staircase.  The negative-grading half is
        produced on demand via the symmetry (s, m) -> (-s, m - 2s).
        """
        upper = [(s, m, 1) for s, m in zip(self.s, self.m)]
        lower = [(-s, m - 2 * s, 1) for s, m in zip(self.s, self.m) if s > 0]
        return sorted(upper + lower, key=lambda g: -g[0])

    def euler_characteristic(self) -> LaurentPolynomial:
        """sum over generators of (-1)^maslov * t^alexander."""
        return LaurentPolynomial.from_terms(
            [(s, (-1) ** (m % 2)) for s, m, _ in self.generators()]
        )


@dataclass(frozen=True)
class WidthReport:
    """Delta-grading spread of a staircase."""

    delta_max: int
    delta_min: int
    width: int
    deltas: tuple[int, ...] = field(repr=False)


@dataclass(frozen=True)
class ConjectureViolation:
    """A coprime pair where the width jump differs from the predicted step."""

    p: int
    q: int
    width: int
    previous_width: int
    expected_jump: int


def extract_staircase(delta: LaurentPolynomial) -> Staircase:
    """Read the staircase steps off an L-space-form Alexander polynomial.

    Requirements checked (NotLSpaceForm otherwise): the polynomial is
    palindromic, every nonzero coefficient is +-1, the constant coefficient is
    nonzero, the signs strictly alternate along the support, and the leading
    coefficient is +1.

    >>> extract_staircase(LaurentPolynomial.from_text("t^{-1}-1+t"))
    Staircase(k=1, s=(0, 1))
    """
    arr = delta.coefficients
    support_idx = np.flatnonzero(arr)
    if support_idx.size == 0:
        raise NotLSpaceForm("the zero polynomial has no staircase")
    coeffs = arr[support_idx]
    exponents = support_idx + delta.min_exponent
    if not np.all(np.abs(coeffs) == 1):
        raise NotLSpaceForm("coefficients must all be +-1")
    if not (
        np.array_equal(exponents, -exponents[::-1])
        and np.array_equal(coeffs, coeffs[::-1])
    ):
        raise NotLSpaceForm("polynomial is not palindromic")
    if not np.any(exponents == 0):
        raise NotLSpaceForm("constant coefficient must be nonzero")
    if not np.all(coeffs[1:] == -coeffs[:-1]):
        raise NotLSpaceForm("signs must alternate along the support")
    if coeffs[-1] != 1:
        raise NotLSpaceForm("leading coefficient must be +1")
    s = exponents[exponents >= 0]
    return Staircase(k=len(s) - 1, s=tuple(int(e) for e in s))


def _descending_sums(s: np.ndarray, odd_step: np.ndarray, even_step: np.ndarray) -> np.ndarray:
    """Evaluate v_k = 0, v_l = v_{l+1} + w_l with w_l chosen by parity of k-l.

    ``odd_step[l]`` / ``even_step[l]`` give w_l for k-l odd / even; returns the
    full vector v_0..v_k.
    """
    k = len(s) - 1
    if k == 0:
        return np.zeros(1, dtype=np.int64)
    l = np.arange(k)
    w = np.where((k - l) % 2 == 1, odd_step, even_step)
    v = np.zeros(k + 1, dtype=np.int64)
    v[:k] = np.cumsum(w[::-1])[::-1]
    return v


def hfk_from_staircase(stair: Staircase) -> HFKTable:
    """Maslov gradings of the staircase generators (l = 0..k half).

    >>> hfk_from_staircase(Staircase(1, (0, 1))).generators()
    [(1, 0, 1), (0, -1, 1), (-1, -2, 1)]
    """
    s = np.asarray(stair.s, dtype=np.int64)
    diffs = np.diff(s)
    m = _descending_sums(s, -2 * diffs + 1, np.full(len(diffs), -1, dtype=np.int64))
    return HFKTable(k=stair.k, s=stair.s, m=tuple(int(x) for x in m))


def delta_sequence(stair: Staircase) -> WidthReport:
    """Delta gradings delta_l = s_l - m_l and the width of their spread."""
    s = np.asarray(stair.s, dtype=np.int64)
    diffs = np.diff(s)
    deltas = s[-1] + _descending_sums(s, diffs - 1, -diffs + 1)
    table = hfk_from_staircase(stair)
    assert np.array_equal(deltas, s - np.asarray(table.m, dtype=np.int64))
    dmax, dmin = int(deltas.max()), int(deltas.min())
    return WidthReport(
        delta_max=dmax,
        delta_min=dmin,
        width=dmax - dmin + 1,
        deltas=tuple(int(d) for d in deltas),
    )


def width_torus(p: int, q: int) -> WidthReport:
    """Homological width of the (p, q) torus knot.

    >>> width_torus(4, 5).width
    3
    """
    return delta_sequence(extract_staircase(alexander_torus(p, q)))


def width_formula(p: int, q: int) -> int:
    """Closed-form width for the families that admit one.

    Covered: q = pn+1 and q = pn-1 for any p >= 2 (n >= 1), and q = 5n+2 /
    5n+3 for p = 5.  Raises ValueError for parameters outside those families
    (use :func:`width_torus` instead, which always works).
    """
    p, q = normalize_torus_params(p, q)
    if p == 1:
        return 1
    n, r = divmod(q, p)
    quarter = ((p - 1) ** 2) // 4
    if r == 1:
        return n * quarter + 1
    if r == p - 1:
        return (n + 1) * quarter - (p - 1) // 2 + 1
    if p == 5 and r == 2:
        return 4 * n + 1
    if p == 5 and r == 3:
        return 4 * n + 2
    raise ValueError(f"no closed-form width is implemented for ({p}, {q})")


def _memo_width(p: int, q: int, cache: dict[tuple[int, int], int]) -> int:
    if p > q:
        p, q = q, p
    if p == 1:
        return 1
    key = (p, q)
    got = cache.get(key)
    if got is None:
        got = width_torus(p, q).width
        cache[key] = got
    return got


def scan_conjecture(
    bound: int, q_range: tuple[int, int] | None = None
) -> tuple[int, list[ConjectureViolation]]:
    """Check the width jump width(p,q) - width(p,q-p) == floor((p-1)^2/4).

    Scans all coprime pairs 1 < p < q < bound (optionally restricted to
    q in [q_range)), comparing each width with the width of the previous
    knot in its column; (p, q-p) pairs with q - p <= 1 have width 1.
    Returns (number of pairs checked, violations).  An empty violation list
    over the full range is the conjecture holding below the bound.
    """
    cache: dict[tuple[int, int], int] = {}
    violations: list[ConjectureViolation] = []
    checked = 0
    q_lo, q_hi = q_range if q_range is not None else (3, bound)
    q_hi = min(q_hi, bound)
    for q in range(max(q_lo, 3), q_hi):
        for p in range(2, q):
            if math.gcd(p, q) != 1:
                continue
            checked += 1
            w = _memo_width(p, q, cache)
            w_prev = _memo_width(min(p, q - p), max(p, q - p), cache)
            jump = ((p - 1) ** 2) // 4
            if w - w_prev != jump:
                violations.append(ConjectureViolation(p, q, w, w_prev, jump))
    violations.sort(key=lambda v: (v.q, v.p))
    return checked, violations


def _scan_chunk(args: tuple[int, tuple[int, int]]):
    bound, q_range = args
    return scan_conjecture(bound, q_range)


def scan_conjecture_parallel(
    bound: int, jobs: int = 1
) -> tuple[int, list[ConjectureViolation]]:
    """Fork-join version of :func:`scan_conjecture`.

    Splits the q-range into contiguous chunks of roughly equal work
    (cost per column grows like q**3), maps them over a process pool,
    and merges deterministically: totals are summed and violations
    re-sorted, so the result is identical for every worker count.
    """
    if jobs <= 1 or bound <= 4:
        return scan_conjecture(bound)
    import multiprocessing

    weights = [(q, q**3) for q in range(3, bound)]
    total = sum(w for _, w in weights)
    n_chunks = min(8 * jobs, max(1, bound - 3))
    target = total / n_chunks
    chunks: list[tuple[int, int]] = []
    lo, acc = 3, 0
    for q, w in weights:
        acc += w
        if acc >= target and q + 1 < bound:
            chunks.append((lo, q + 1))
            lo, acc = q + 1, 0
    chunks.append((lo, bound))

    with multiprocessing.Pool(processes=jobs) as pool:
        parts = pool.map(_scan_chunk, [(bound, c) for c in chunks])
    checked = sum(part[0] for part in parts)
    violations = [v for part in parts for v in part[1]]
    violations.sort(key=lambda v: (v.q, v.p))
    return checked, violations
