"""Partial proper edge-colorings and exact nu_k computation."""

from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterator

from config import COMPLEMENT_CAP
from services.matching_service import maximum_matching
from utils.certificate import Certificate, Claim, Verdict
from utils.errors import CapExceededError, PreconditionError
from utils.multigraph import EdgeSet, MultiGraph, is_matching, require_cubic

COLORS = (1, 2, 3)
UNCOLORED = 0


@dataclass(frozen=True)
class PartialColoring:
    """
    Per-edge assignment in {0, 1, 2, 3} on a fixed graph, 0 meaning uncolored.

    Values are never mutated; `recolor` returns a new coloring.
    """
    graph: MultiGraph
    assignment: tuple[int, ...]

    @classmethod
    def empty(cls, g: MultiGraph) -> "PartialColoring":
        return cls(g, (UNCOLORED,) * g.m)

    @classmethod
    def from_list(cls, g: MultiGraph, assignment: list[int]) -> "PartialColoring":
        if len(assignment) != g.m:
            raise PreconditionError(f"assignment has {len(assignment)} entries for {g.m} edges")
        if any(c not in (UNCOLORED, *COLORS) for c in assignment):
            raise PreconditionError(f"assignment values must be in 0..3: {assignment}")
        return cls(g, tuple(assignment))

    def color(self, e: int) -> int:
        return self.assignment[e]

    @property
    def size(self) -> int:
        return sum(1 for c in self.assignment if c != UNCOLORED)

    def colored_edges(self) -> EdgeSet:
        return frozenset(e for e, c in enumerate(self.assignment) if c != UNCOLORED)

    def uncolored_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.assignment) if c == UNCOLORED]

    def color_class(self, c: int) -> EdgeSet:
        return frozenset(e for e, color in enumerate(self.assignment) if color == c)

    def edge_with_color(self, v: int, c: int) -> int | None:
        """The edge at v carrying color c (lowest id if the coloring is improper)."""
        for e in self.graph.incidence[v]:
            if self.assignment[e] == c:
                return e
        return None

    def recolor(self, updates: dict[int, int]) -> "PartialColoring":
        assignment = list(self.assignment)
        for e, c in updates.items():
            assignment[e] = c
        return PartialColoring(self.graph, tuple(assignment))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.graph.n, "m": self.graph.m, "assignment": list(self.assignment)}


@dataclass(frozen=True)
class NuRecord:
    """Exact nu_k with a witness coloring that uses colors 1..k."""
    k: int
    value: int
    witness: PartialColoring

    def matchings(self) -> list[EdgeSet]:
        return [self.witness.color_class(c) for c in range(1, self.k + 1)]

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "value": self.value,
            "witness": self.witness.to_json(),
            "matchings": [sorted(matching) for matching in self.matchings()],
        }


def colors_at(c: PartialColoring, v: int) -> frozenset[int]:
    """Colors on the colored edges incident to v."""
    return frozenset(c.assignment[e] for e in c.graph.incidence[v] if c.assignment[e] != UNCOLORED)


def validate(c: PartialColoring) -> bool:
    """True iff no two edges sharing a vertex carry the same color."""
    if len(c.assignment) != c.graph.m:
        return False
    for v in range(c.graph.n):
        seen = [c.assignment[e] for e in c.graph.incidence[v] if c.assignment[e] != UNCOLORED]
        if len(seen) != len(set(seen)):
            return False
    return True


class _BranchAndBound:
    """
    Exact search for a maximum k-edge-colorable subgraph.

    Edges are decided in id order, each getting a color or staying
    uncolored. Colors are introduced in increasing order only (a new color
    is always the smallest unused one), which is lossless under color
    permutation. The first pass finds the optimum value with colors tried
    before "uncolored"; the second pass returns the lexicographically
    smallest assignment achieving it.
    """

    def __init__(self, g: MultiGraph, k: int, required: EdgeSet):
        self.g = g
        self.k = k
        self.full = (1 << k) - 1
        self.required = required
        self.ends = g.endpoints
        self.used = [0] * g.n
        self.assignment = [UNCOLORED] * g.m

    def _bound(self, i: int) -> int:
        """Upper bound on edges still colorable from index i; negative when a required edge is blocked."""
        remaining = 0
        touching = [0] * self.g.n
        for j in range(i, self.g.m):
            u, v = self.ends[j]
            if self.full & ~(self.used[u] | self.used[v]):
                remaining += 1
                touching[u] += 1
                touching[v] += 1
            elif j in self.required:
                return -self.g.m - 1
        capacity = sum(
            min(touching[v], self.k - bin(self.used[v]).count("1")) for v in range(self.g.n)
        )
        return min(remaining, capacity // 2)

    def _options(self, i: int, top: int, uncolored_first: bool) -> list[int]:
        u, v = self.ends[i]
        free = self.full & ~(self.used[u] | self.used[v])
        colors = [c for c in range(1, min(top + 1, self.k) + 1) if free & (1 << (c - 1))]
        if i in self.required:
            return colors
        return [UNCOLORED] + colors if uncolored_first else colors + [UNCOLORED]

    def _set(self, i: int, c: int):
        self.assignment[i] = c
        if c != UNCOLORED:
            u, v = self.ends[i]
            self.used[u] |= 1 << (c - 1)
            self.used[v] |= 1 << (c - 1)

    def _unset(self, i: int, c: int):
        self.assignment[i] = UNCOLORED
        if c != UNCOLORED:
            u, v = self.ends[i]
            self.used[u] &= ~(1 << (c - 1))
            self.used[v] &= ~(1 << (c - 1))

    def optimum(self) -> int:
        best = -1

        def descend(i: int, colored: int, top: int):
            nonlocal best
            if colored + self._bound(i) <= best:
                return
            if i == self.g.m:
                best = colored
                return
            for c in self._options(i, top, uncolored_first=False):
                self._set(i, c)
                descend(i + 1, colored + (c != UNCOLORED), max(top, c))
                self._unset(i, c)

        descend(0, 0, 0)
        return best

    def smallest_with(self, target: int) -> list[int] | None:
        def descend(i: int, colored: int, top: int) -> bool:
            if colored + self._bound(i) < target:
                return False
            if i == self.g.m:
                return True
            for c in self._options(i, top, uncolored_first=True):
                self._set(i, c)
                if descend(i + 1, colored + (c != UNCOLORED), max(top, c)):
                    return True
                self._unset(i, c)
            return False

        if descend(0, 0, 0):
            return list(self.assignment)
        return None


def nu(g: MultiGraph, k: int, required: EdgeSet = frozenset()) -> NuRecord | None:
    """
    Exact nu_k(G), the largest total size of k pairwise disjoint matchings.

    Args:
        g: The graph (cubic not required)
        k: Number of colors, 1 to 3
        required: Edges that must be colored

    Returns:
        The value with its canonical (lexicographically smallest) witness,
        or None when `required` itself is not k-edge-colorable
    """
    if k not in (1, 2, 3):
        raise PreconditionError(f"k must be 1, 2 or 3, got {k}")
    required = frozenset(required)

    if k == 1 and not required:
        matching = maximum_matching(g)
        search = _BranchAndBound(g, 1, required)
        witness = search.smallest_with(len(matching))
    else:
        search = _BranchAndBound(g, k, required)
        value = search.optimum()
        if value < 0:
            return None
        witness = _BranchAndBound(g, k, required).smallest_with(value)

    coloring = PartialColoring(g, tuple(witness))
    return NuRecord(k=k, value=coloring.size, witness=coloring)


def edge_colorable(g: MultiGraph, k: int, removed: EdgeSet = frozenset()) -> list[int] | None:
    """
    Plain backtracking test: can E(G) minus `removed` be properly k-colored?

    Returns:
        An assignment (0 on removed edges) or None
    """
    used = [0] * g.n
    assignment = [UNCOLORED] * g.m
    order = [e for e in range(g.m) if e not in removed]

    def descend(position: int, top: int) -> bool:
        if position == len(order):
            return True
        e = order[position]
        u, v = g.endpoints[e]
        for c in range(1, min(top + 1, k) + 1):
            bit = 1 << (c - 1)
            if (used[u] | used[v]) & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            assignment[e] = c
            if descend(position + 1, max(top, c)):
                return True
            assignment[e] = UNCOLORED
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    return assignment if descend(0, 0) else None


def brute_force_nu(g: MultiGraph, k: int) -> int:
    """Independent oracle: smallest removable set leaving a k-edge-colorable graph."""
    for size in range(g.m + 1):
        for removed in combinations(range(g.m), size):
            if edge_colorable(g, k, frozenset(removed)) is not None:
                return g.m - size
    return 0


def iter_max_3ec_subgraphs(g: MultiGraph, cap: int = COMPLEMENT_CAP) -> Iterator[tuple[EdgeSet, list[int]]]:
    """Yield (E(G) minus E(H), coloring of H) for every maximum 3-edge-colorable H."""
    if g.n > cap:
        raise CapExceededError("enumerate_max_3ec_complements", g.n, cap, "COMPLEMENT_CAP")
    value = nu(g, 3).value
    for removed in combinations(range(g.m), g.m - value):
        assignment = edge_colorable(g, 3, frozenset(removed))
        if assignment is not None:
            yield frozenset(removed), assignment


def enumerate_max_3ec_complements(g: MultiGraph, cap: int = COMPLEMENT_CAP) -> list[EdgeSet]:
    """The distinct sets E(G) minus E(H) over all maximum 3-edge-colorable subgraphs H."""
    return [removed for removed, _ in iter_max_3ec_subgraphs(g, cap)]


def check_complement_matching(g: MultiGraph, cap: int = COMPLEMENT_CAP) -> Certificate:
    """
    Check that every maximum 3-edge-colorable subgraph leaves a matching uncolored.

    Returns:
        PASS with one coloring per complement, or FAIL carrying the violating subgraph
    """
    require_cubic(g, "check_complement_matching")
    value = nu(g, 3).value
    subgraphs = []
    for removed, assignment in iter_max_3ec_subgraphs(g, cap):
        if not is_matching(g, removed):
            return Certificate(Claim.T1, g, Verdict.FAIL, {
                "nu3": value,
                "uncolored": sorted(removed),
                "assignment": assignment,
            })
        subgraphs.append({"uncolored": sorted(removed), "assignment": assignment})
    return Certificate(Claim.T1, g, Verdict.PASS, {"nu3": value, "subgraphs": subgraphs})
