"""Two-sided bounds for Turaev genus and dealternating number of torus links.

For a torus link T(p, q) the toolkit can certify:

* a lower bound from knot Floer width (knots only): both invariants are
  at least ``width - 1``;
* an upper bound by evaluating the diagram invariants on concrete closed
  braid diagrams -- the tabulated low-crossing word for the families that
  have one, and the standard ``(sigma_1 ... sigma_{p-1})^q`` closure
  otherwise.

The bracket's ``upper`` is always a value some in-scope diagram actually
attains.  For several families a smaller dealternating upper bound is known
from hand-modified diagrams that are not generated here; those targets are
reported alongside the bracket (see :class:`KnownUpper`) so callers can tell
when importing such a diagram as a PD file would tighten the bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .braid import BraidWord, UnsupportedTorusFamily, lemma_word, torus_braid_word
from .diagram import (
    Diagram,
    closure_diagram,
    dealternating_number_diagram,
    turaev_genus_diagram,
)
from .hfk import width_torus

__all__ = [
    "BoundBracket",
    "KnownUpper",
    "bounds",
    "bounds_report",
    "known_dealternating_upper",
]


@dataclass(frozen=True)
class BoundBracket:
    """A certified interval ``lower <= invariant <= upper``.

    ``lower_source`` and ``upper_source`` say where each side comes from:
    the lower bound is either ``"floer-width"`` or ``"none"`` (links), and
    the upper bound names the diagram whose computed value it is.
    """

    invariant: str
    lower: int
    upper: int
    lower_source: str
    upper_source: str

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise AssertionError(
                f"inconsistent bracket for {self.invariant}: "
                f"[{self.lower}, {self.upper}]"
            )

    def is_sharp(self) -> bool:
        """True when the bracket pins the invariant exactly."""
        return self.lower == self.upper


@dataclass(frozen=True)
class KnownUpper:
    """Best dealternating upper bound known for a family, with provenance.

    ``needs_pd_import`` is True when no diagram built by this package
    attains ``value``; reaching it requires importing a hand-modified
    diagram as a PD file.
    """

    value: int
    needs_pd_import: bool
    note: str


def known_dealternating_upper(p: int, q: int) -> KnownUpper | None:
    """Best known dealternating upper bound for T(p, q), if tabulated.

    Returns None for parameter families with no tabulated value.  The
    returned value is a *target*: when ``needs_pd_import`` is set, the
    diagrams generated here do not attain it.
    """
    a, b = min(p, q), max(p, q)
    if a < 4 or a > 6:
        return None
    n, r = divmod(b, a)
    if n < 1:
        return None
    wrap = "attained by a hand-modified closure (import as a PD file)"
    if a == 4:
        if r in (0, 1):
            return KnownUpper(2 * n + 1, True, wrap)
        if r == 2:
            return KnownUpper(2 * n + 2, True, wrap)
        return KnownUpper(
            2 * n + 2,
            True,
            "best known value; the hand-modified closure attains 2n+3, "
            "one more than this",
        )
    if a == 5:
        if r in (0, 1):
            return KnownUpper(4 * n + 1, True, wrap)
        return KnownUpper(4 * n + r, True, wrap)
    if r in (0, 1):
        return KnownUpper(6 * n + 2, False, "attained by the tabulated diagram")
    return None


def _candidate_diagrams(p: int, q: int) -> list[tuple[str, Diagram]]:
    """Diagrams the bounds are evaluated on, labelled by origin."""
    pool: list[tuple[str, Diagram]] = []
    try:
        word = lemma_word(p, q)
    except UnsupportedTorusFamily:
        pass
    else:
        pool.append(("tabulated diagram", closure_diagram(word)))
    pool.append(("standard closure", closure_diagram(torus_braid_word(p, q))))
    return pool


def _best(
    pool: list[tuple[str, Diagram]], evaluate
) -> tuple[int, str]:
    best_value: int | None = None
    best_label = ""
    for label, diagram in pool:
        value = evaluate(diagram)
        if best_value is None or value < best_value:
            best_value, best_label = value, label
    assert best_value is not None
    return best_value, best_label


def bounds(p: int, q: int) -> tuple[BoundBracket, BoundBracket]:
    """Certified (turaev_genus, dealternating) brackets for T(p, q).

    Accepts any positive p, q, including non-coprime parameters (torus
    links with several components).  The Floer-width lower bound only
    applies to knots; for links the lower bound is 0.

    >>> g, d = bounds(4, 5)
    >>> (g.lower, g.upper), (d.lower, d.upper)
    ((2, 2), (2, 4))
    >>> bounds(3, 2)[0].upper
    0
    """
    if p < 1 or q < 1:
        raise ValueError(f"torus link parameters must be positive, got ({p}, {q})")
    a, b = min(p, q), max(p, q)

    if math.gcd(a, b) == 1:
        lower = width_torus(a, b).width - 1
        lower_source = "floer-width"
    else:
        lower = 0
        lower_source = "none"

    pool = _candidate_diagrams(a, b)
    g_upper, g_label = _best(pool, turaev_genus_diagram)
    d_upper, d_label = _best(
        pool, lambda d: dealternating_number_diagram(d).minimum_changes
    )

    turaev = BoundBracket("turaev_genus", lower, g_upper, lower_source, g_label)
    dealt = BoundBracket("dealternating", lower, d_upper, lower_source, d_label)
    return turaev, dealt


def bounds_report(p: int, q: int) -> dict:
    """JSON-friendly summary of :func:`bounds` plus the known-upper table."""
    a, b = min(p, q), max(p, q)
    turaev, dealt = bounds(p, q)
    known = known_dealternating_upper(a, b)
    report = {
        "p": a,
        "q": b,
        "is_knot": math.gcd(a, b) == 1,
        "turaev_genus": {
            "lower": turaev.lower,
            "upper": turaev.upper,
            "lower_source": turaev.lower_source,
            "upper_source": turaev.upper_source,
            "sharp": turaev.is_sharp(),
        },
        "dealternating": {
            "lower": dealt.lower,
            "upper": dealt.upper,
            "lower_source": dealt.lower_source,
            "upper_source": dealt.upper_source,
            "sharp": dealt.is_sharp(),
        },
    }
    if known is not None:
        report["dealternating"]["known_upper"] = {
            "value": known.value,
            "needs_pd_import": known.needs_pd_import,
            "margin": dealt.upper - known.value,
            "note": known.note,
        }
    return report
