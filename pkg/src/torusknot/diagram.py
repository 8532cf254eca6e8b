"""Link diagrams from braid closures: Kauffman states, Turaev genus,
alternation defects, and PD-code interchange.

A diagram is a list of crossings plus a perfect matching ("arcs") on their
string-ends.  Each crossing has four ends numbered counterclockwise starting
at the incoming under-strand, so end ids are ``4*c + slot`` with

    slot 0 = incoming under,   slot 1 = outgoing over,
    slot 2 = outgoing under,   slot 3 = incoming over,

and a strand passes through a crossing from slot s to slot (s+2) % 4.  For
the positive crossing of a braid letter the over-strand runs bottom-left to
top-right, so the bottom-right / top-right / top-left / bottom-left corners
carry slots 0/1/2/3.  Crossingless circle components (closed strands that
meet no crossing) are counted separately in ``free_circles``.

Kauffman smoothings: the A-smoothing joins slots 0-1 and 2-3 (for a braid
letter this is the identity pattern, so the all-A state of a p-strand braid
closure has exactly p circles), and the B-smoothing joins 0-3 and 1-2.  For
a diagram D with c crossings whose all-A and all-B states have s_A and s_B
circles, the Turaev surface has genus

    g_T(D) = (2 + c - s_A - s_B) / 2,

defined for connected diagrams.

The minimum number of crossing changes making a diagram alternating is
decided exactly: along every component the passes must alternate over/under,
which pins the relative flip state of consecutive crossings; the resulting
GF(2) constraints split into connected components with exactly two
solutions each, and the optimum picks the smaller side of each.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MalformedPDCode",
    "DisconnectedDiagram",
    "InconsistentConstraints",
    "Diagram",
    "KauffmanState",
    "ConstraintComponent",
    "DaltReport",
    "closure_diagram",
    "state_components",
    "all_a",
    "all_b",
    "turaev_genus_diagram",
    "is_alternating",
    "change_crossings",
    "dealternating_number_diagram",
    "brute_force_dealternating",
    "import_pd",
    "export_pd",
]


class MalformedPDCode(ValueError):
    """The PD data does not describe a diagram."""


class DisconnectedDiagram(ValueError):
    """The diagram's underlying projection is not connected."""


class InconsistentConstraints(ValueError):
    """No set of crossing changes can make the diagram alternating."""


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def roots(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


class Diagram:
    """A crossing list plus an arc matching on the ends.

    ``signs[c]`` is '+' or '-'; ``arcs`` pairs end ids (``4*c + slot``);
    ``labels[i]`` is the PD edge label of ``arcs[i]``; ``free_circles``
    counts crossingless circle components; ``strands`` remembers the braid
    width for closures (None for imported codes without one).
    """

    def __init__(
        self,
        signs: Sequence[str],
        arcs: Sequence[tuple[int, int]],
        labels: Sequence[int],
        free_circles: int = 0,
        strands: int | None = None,
    ):
        self.signs = tuple(signs)
        self.arcs = tuple((int(u), int(v)) for u, v in arcs)
        self.labels = tuple(int(x) for x in labels)
        self.free_circles = int(free_circles)
        self.strands = strands
        n = len(self.signs)
        if any(s not in "+-" for s in self.signs):
            raise MalformedPDCode("crossing signs must be '+' or '-'")
        if len(self.labels) != len(self.arcs):
            raise MalformedPDCode("one label per arc required")
        if self.free_circles < 0:
            raise MalformedPDCode("negative circle count")
        seen = [False] * (4 * n)
        for u, v in self.arcs:
            for e in (u, v):
                if not 0 <= e < 4 * n or seen[e]:
                    raise MalformedPDCode(f"end {e} is not matched exactly once")
                seen[e] = True
        if not all(seen):
            raise MalformedPDCode("every crossing end must belong to an arc")
        self._partner: list[int] = [0] * (4 * n)
        for u, v in self.arcs:
            self._partner[u] = v
            self._partner[v] = u
        self._cycles: list[list[tuple[int, bool]]] | None = None

    # -- basics ---------------------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    def end_label(self, end: int) -> int:
        """PD edge label carried by the arc at this end."""
        for i, (u, v) in enumerate(self.arcs):
            if end in (u, v):
                return self.labels[i]
        raise IndexError(end)

    def pd_rows(self) -> list[list[object]]:
        """Per-crossing PD rows: [label slot0..slot3, sign]."""
        lab = [0] * (4 * self.n_crossings)
        for i, (u, v) in enumerate(self.arcs):
            lab[u] = self.labels[i]
            lab[v] = self.labels[i]
        return [
            [lab[4 * c], lab[4 * c + 1], lab[4 * c + 2], lab[4 * c + 3], self.signs[c]]
            for c in range(self.n_crossings)
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return (
            self.pd_rows() == other.pd_rows()
            and self.free_circles == other.free_circles
            and self.strands == other.strands
        )

    def __repr__(self) -> str:
        return (
            f"Diagram({self.n_crossings} crossings, "
            f"{self.components()} components, free_circles={self.free_circles})"
        )

    # -- traversal --------------------------------------------------------

    def pass_cycles(self) -> list[list[tuple[int, bool]]]:
        """Strand components as cyclic pass sequences.

        Each component of the underlying curve is one cycle; its entries are
        (crossing, goes_over) in traversal order.  Odd slots are the
        over-strand's ends.
        """
        if self._cycles is None:
            visited = [False] * (4 * self.n_crossings)
            cycles: list[list[tuple[int, bool]]] = []
            for start in range(4 * self.n_crossings):
                if visited[start]:
                    continue
                cycle: list[tuple[int, bool]] = []
                end = start
                while not visited[end]:
                    visited[end] = True
                    crossing, slot = divmod(end, 4)
                    cycle.append((crossing, slot % 2 == 1))
                    through = 4 * crossing + (slot + 2) % 4
                    visited[through] = True
                    end = self._partner[through]
                cycles.append(cycle)
            self._cycles = cycles
        return self._cycles

    def components(self) -> int:
        """Number of link components (curve cycles plus free circles)."""
        return len(self.pass_cycles()) + self.free_circles


def closure_diagram(word) -> Diagram:
    """The closure of a positive braid word as a diagram.

    Crossings are numbered in word order (bottom to top); strands that meet
    no crossing close into free circles.  All crossings are positive.
    """
    p = word.strands
    first_bottom: list[int | None] = [None] * p
    open_end: list[int | None] = [None] * p
    arcs: list[tuple[int, int]] = []
    for c, g in enumerate(word.letters):
        for col, end in ((g - 1, 4 * c + 3), (g, 4 * c)):
            if open_end[col] is None:
                first_bottom[col] = end
            else:
                arcs.append((open_end[col], end))
        open_end[g - 1] = 4 * c + 2
        open_end[g] = 4 * c + 1
    free = 0
    for col in range(p):
        if open_end[col] is None:
            free += 1
        else:
            arcs.append((open_end[col], first_bottom[col]))
    return Diagram(
        signs="+" * len(word.letters),
        arcs=arcs,
        labels=range(1, len(arcs) + 1),
        free_circles=free,
        strands=p,
    )


# ----------------------------------------------------------------------
# Kauffman states


@dataclass(frozen=True)
class KauffmanState:
    """A smoothing assignment and the circle count of the resulting state."""

    assignment: tuple[str, ...]
    component_count: int


_SMOOTHING_JOINS = {"A": ((0, 1), (2, 3)), "B": ((0, 3), (1, 2))}


def state_components(diagram: Diagram, assignment: Iterable[str]) -> KauffmanState:
    """Count the circles of the Kauffman state given by ``assignment``.

    ``assignment`` gives 'A' or 'B' per crossing, in crossing order.  The
    all-A state of a braid closure recovers the braid strands, e.g. 4
    circles for a closed 4-strand braid.
    """
    choice = tuple(assignment)
    if len(choice) != diagram.n_crossings:
        raise ValueError(
            f"need {diagram.n_crossings} smoothings, got {len(choice)}"
        )
    if any(x not in ("A", "B") for x in choice):
        raise ValueError("smoothings must be 'A' or 'B'")
    uf = _UnionFind(4 * diagram.n_crossings)
    for u, v in diagram.arcs:
        uf.union(u, v)
    for c, x in enumerate(choice):
        for s, t in _SMOOTHING_JOINS[x]:
            uf.union(4 * c + s, 4 * c + t)
    return KauffmanState(choice, uf.roots() + diagram.free_circles)


def all_a(diagram: Diagram) -> KauffmanState:
    """The all-A state."""
    return state_components(diagram, "A" * diagram.n_crossings)


def all_b(diagram: Diagram) -> KauffmanState:
    """The all-B state."""
    return state_components(diagram, "B" * diagram.n_crossings)


def _is_connected(diagram: Diagram) -> bool:
    if diagram.n_crossings == 0:
        return diagram.free_circles == 1
    if diagram.free_circles:
        return False
    uf = _UnionFind(4 * diagram.n_crossings)
    for u, v in diagram.arcs:
        uf.union(u, v)
    for c in range(diagram.n_crossings):
        uf.union(4 * c, 4 * c + 1)
        uf.union(4 * c, 4 * c + 2)
        uf.union(4 * c, 4 * c + 3)
    return uf.roots() == 1


def turaev_genus_diagram(diagram: Diagram) -> int:
    """Genus of the Turaev surface of a connected diagram.

    (2 + c - s_A - s_B) / 2; raises DisconnectedDiagram when the projection
    is not connected (the surface is defined component-by-component only).
    """
    if not _is_connected(diagram):
        raise DisconnectedDiagram(
            "the Turaev surface needs a connected diagram"
        )
    c = diagram.n_crossings
    s_a = all_a(diagram).component_count
    s_b = all_b(diagram).component_count
    doubled = 2 + c - s_a - s_b
    assert doubled % 2 == 0 and doubled >= 0, (c, s_a, s_b)
    return doubled // 2


# ----------------------------------------------------------------------
# alternation


def is_alternating(diagram: Diagram) -> bool:
    """Whether every component alternates over/under along its passes."""
    for cycle in diagram.pass_cycles():
        for (_, bit), (_, next_bit) in zip(cycle, cycle[1:] + cycle[:1]):
            if bit == next_bit:
                return False
    return True


def change_crossings(diagram: Diagram, crossings: Iterable[int]) -> Diagram:
    """Switch over- and under-strand at the given crossings.

    A change re-aims the slot numbering at the new incoming under-strand:
    slots rotate by +1 at a '+' crossing (which becomes '-') and by -1 at a
    '-' crossing (which becomes '+'), keeping slot 0 on the incoming
    under-strand.  Arc labels are preserved.
    """
    chosen = set(crossings)
    n = diagram.n_crossings
    for c in chosen:
        if not 0 <= c < n:
            raise IndexError(f"no crossing {c} in a {n}-crossing diagram")

    def remap(end: int) -> int:
        c, slot = divmod(end, 4)
        if c not in chosen:
            return end
        step = 1 if diagram.signs[c] == "+" else -1
        return 4 * c + (slot + step) % 4

    signs = [
        ("-" if s == "+" else "+") if c in chosen else s
        for c, s in enumerate(diagram.signs)
    ]
    return Diagram(
        signs=signs,
        arcs=[(remap(u), remap(v)) for u, v in diagram.arcs],
        labels=diagram.labels,
        free_circles=diagram.free_circles,
        strands=diagram.strands,
    )


@dataclass(frozen=True)
class ConstraintComponent:
    """One connected block of the crossing-change constraint graph."""

    crossings: tuple[int, ...]
    changes: tuple[int, ...]


@dataclass(frozen=True)
class DaltReport:
    """Exact minimum crossing changes to alternation, with a witness."""

    minimum_changes: int
    witness: tuple[int, ...]
    component_structure: tuple[ConstraintComponent, ...]


def dealternating_number_diagram(diagram: Diagram) -> DaltReport:
    """Minimize crossing changes until the diagram alternates, exactly.

    Consecutive passes along a component visit crossings c1, c2 with
    over-bits t1, t2; alternation forces flip variables x with
    x_c1 xor x_c2 = t1 xor t2 xor 1.  Each connected block of these
    constraints has exactly two solutions (a set and its complement); the
    minimum takes the smaller side per block, preferring the side containing
    the block's lowest crossing index on ties.  The returned witness is
    verified to alternate before returning.

    Raises InconsistentConstraints when no flip set alternates (impossible
    for braid closures; reachable for hand-written PD codes whose curves
    traverse an odd pass cycle).
    """
    n = diagram.n_crossings
    if n == 0:
        return DaltReport(0, (), ())
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for cycle in diagram.pass_cycles():
        for (c1, b1), (c2, b2) in zip(cycle, cycle[1:] + cycle[:1]):
            parity = (b1 != b2) ^ 1
            if c1 == c2:
                if parity:
                    raise InconsistentConstraints(
                        f"crossing {c1} meets itself on consecutive passes"
                    )
                continue
            adjacency[c1].append((c2, parity))
            adjacency[c2].append((c1, parity))
    value = [-1] * n
    blocks: list[ConstraintComponent] = []
    witness: list[int] = []
    total = 0
    for seed in range(n):
        if value[seed] != -1:
            continue
        value[seed] = 0
        stack = [seed]
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            for y, parity in adjacency[x]:
                want = value[x] ^ parity
                if value[y] == -1:
                    value[y] = want
                    stack.append(y)
                elif value[y] != want:
                    raise InconsistentConstraints(
                        f"crossings {x} and {y} receive contradictory flips"
                    )
        ones = sorted(m for m in members if value[m] == 1)
        zeros = sorted(m for m in members if value[m] == 0)
        chosen = zeros if len(zeros) <= len(ones) else ones
        # the seed (lowest index in the block) has value 0, so ties pick
        # the side containing it
        total += len(chosen)
        witness.extend(chosen)
        blocks.append(
            ConstraintComponent(tuple(sorted(members)), tuple(chosen))
        )
    report = DaltReport(total, tuple(sorted(witness)), tuple(blocks))
    assert is_alternating(change_crossings(diagram, report.witness))
    return report


def brute_force_dealternating(diagram: Diagram, limit: int = 14) -> int:
    """Reference minimum by trying every crossing subset (c <= limit).

    Independent of the constraint solver; used to cross-check it.
    """
    n = diagram.n_crossings
    if n > limit:
        raise ValueError(f"{n} crossings exceed the brute-force limit {limit}")
    cycles = diagram.pass_cycles()
    best = n + 1
    for mask in range(1 << n):
        size = mask.bit_count()
        if size >= best:
            continue
        ok = True
        for cycle in cycles:
            previous = None
            first = None
            for c, bit in cycle:
                eff = bit ^ (mask >> c & 1)
                if first is None:
                    first = eff
                elif eff == previous:
                    ok = False
                    break
                previous = eff
            if not ok:
                break
            if len(cycle) > 1 and previous == first:
                ok = False
                break
            if len(cycle) == 1:
                ok = False
                break
        if ok:
            best = size
    if best > n:
        raise InconsistentConstraints("no subset of changes alternates")
    return best


# ----------------------------------------------------------------------
# PD-code JSON interchange


def export_pd(diagram: Diagram) -> str:
    """Serialize to the PD JSON format (see README: format notes).

    Keys: optional "strands", optional "circles" (crossingless circle
    count, when nonzero), and "crossings": one [e0, e1, e2, e3, sign] row
    per crossing, slots counterclockwise from the incoming under-strand.
    ``import_pd(export_pd(d))`` reproduces ``d`` exactly, and re-exporting
    reproduces the byte-identical text.
    """
    obj: dict[str, object] = {}
    if diagram.strands is not None:
        obj["strands"] = diagram.strands
    if diagram.free_circles:
        obj["circles"] = diagram.free_circles
    obj["crossings"] = diagram.pd_rows()
    return json.dumps(obj)


def import_pd(text: str) -> Diagram:
    """Parse the PD JSON format; raises MalformedPDCode on any defect."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedPDCode(f"not valid JSON: {err}") from None
    if not isinstance(obj, dict) or "crossings" not in obj:
        raise MalformedPDCode('expected an object with a "crossings" list')
    rows = obj["crossings"]
    if not isinstance(rows, list):
        raise MalformedPDCode('"crossings" must be a list')
    strands = obj.get("strands")
    if strands is not None and (not isinstance(strands, int) or strands < 1):
        raise MalformedPDCode('"strands" must be a positive integer')
    circles = obj.get("circles", 0)
    if not isinstance(circles, int) or circles < 0:
        raise MalformedPDCode('"circles" must be a nonnegative integer')
    signs: list[str] = []
    where: dict[int, list[int]] = {}
    for c, row in enumerate(rows):
        if (
            not isinstance(row, list)
            or len(row) != 5
            or not all(isinstance(e, int) for e in row[:4])
            or row[4] not in ("+", "-")
        ):
            raise MalformedPDCode(
                f"crossing {c} must be [end, end, end, end, '+'|'-']"
            )
        signs.append(row[4])
        for slot, label in enumerate(row[:4]):
            where.setdefault(label, []).append(4 * c + slot)
    arcs: list[tuple[int, int]] = []
    labels: list[int] = []
    for label, ends in sorted(where.items()):
        if len(ends) != 2:
            raise MalformedPDCode(
                f"edge label {label} appears {len(ends)} times (need exactly 2)"
            )
        arcs.append((ends[0], ends[1]))
        labels.append(label)
    return Diagram(
        signs=signs,
        arcs=arcs,
        labels=labels,
        free_circles=circles,
        strands=strands,
    )
