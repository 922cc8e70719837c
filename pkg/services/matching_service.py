"""Maximum matchings, 1-factors, 2-factors and matching enumeration."""

from dataclasses import dataclass

import networkx as nx

from config import MAXIMAL_MATCHING_CAP, PERFECT_MATCHING_CAP
from utils.errors import CapExceededError, PreconditionError
from utils.multigraph import EdgeSet, MultiGraph, is_matching, require_cubic, to_simple_networkx


@dataclass(frozen=True)
class OneFactor:
    """A perfect matching (symbol F)."""
    edges: EdgeSet

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular edge set (symbol F-bar)."""
    edges: EdgeSet

    def sorted_edges(self) -> list[int]:
        return sorted(self.edges)


def maximum_matching(g: MultiGraph) -> EdgeSet:
    """
    Exact maximum-cardinality matching.

    Parallel edges do not change matchability, so the blossom search runs on
    the underlying simple graph and each matched pair maps back to its lowest
    edge id.
    """
    pairs = nx.max_weight_matching(to_simple_networkx(g), maxcardinality=True)
    return frozenset(min(g.edges_between(u, v)) for u, v in pairs)


def is_perfect_matching(g: MultiGraph, edges: EdgeSet) -> bool:
    return 2 * len(edges) == g.n and is_matching(g, edges)


def find_one_factor(g: MultiGraph) -> OneFactor | None:
    """
    Find a perfect matching of a cubic graph.

    Returns:
        A OneFactor, or None when the graph has none (the maximum matching
        is then smaller than n/2, which certifies absence)
    """
    require_cubic(g, "find_one_factor")
    matching = maximum_matching(g)
    if 2 * len(matching) != g.n:
        return None
    return OneFactor(matching)


def complement_two_factor(g: MultiGraph, f: OneFactor) -> TwoFactor:
    """E(G) minus a perfect matching, checked to be 2-regular."""
    if not is_perfect_matching(g, f.edges):
        raise PreconditionError(f"edges {sorted(f.edges)} are not a perfect matching")
    rest = frozenset(range(g.m)) - f.edges
    degrees = [0] * g.n
    for e in rest:
        u, v = g.endpoints[e]
        degrees[u] += 1
        degrees[v] += 1
    if any(d != 2 for d in degrees):
        raise PreconditionError("complement of the factor is not 2-regular; is the graph cubic?")
    return TwoFactor(rest)


def enumerate_perfect_matchings(g: MultiGraph, cap: int = PERFECT_MATCHING_CAP) -> list[OneFactor]:
    """
    All perfect matchings, each once, in lexicographic order of sorted edge ids.

    Raises:
        CapExceededError: when n > cap
    """
    require_cubic(g, "enumerate_perfect_matchings")
    if g.n > cap:
        raise CapExceededError(
            "enumerate_perfect_matchings", g.n, cap, "PERFECT_MATCHING_CAP",
            "sample factors with find_one_factor on random graphs instead",
        )

    covered = [False] * g.n
    chosen: list[int] = []
    found: list[list[int]] = []

    def extend(start: int):
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            found.append(sorted(chosen))
            return
        covered[v] = True
        for e in g.incidence[v]:
            w = g.other_end(e, v)
            if covered[w]:
                continue
            covered[w] = True
            chosen.append(e)
            extend(v + 1)
            chosen.pop()
            covered[w] = False
        covered[v] = False

    extend(0)
    return [OneFactor(frozenset(edges)) for edges in sorted(found)]


def enumerate_maximal_matchings(g: MultiGraph, cap: int = MAXIMAL_MATCHING_CAP) -> list[EdgeSet]:
    """
    All inclusion-maximal matchings, lexicographic by sorted edge ids.

    Cubic input is not required.
    """
    if g.n > cap:
        raise CapExceededError("enumerate_maximal_matchings", g.n, cap, "MAXIMAL_MATCHING_CAP")

    covered = [False] * g.n
    chosen: list[int] = []
    found: list[list[int]] = []

    def blocked(e: int) -> bool:
        u, v = g.endpoints[e]
        return covered[u] or covered[v]

    def extend(i: int, skipped: list[int]):
        if i == g.m:
            # every skipped edge must be blocked by the final matching
            if all(blocked(e) for e in skipped):
                found.append(list(chosen))
            return
        u, v = g.endpoints[i]
        if not covered[u] and not covered[v]:
            covered[u] = covered[v] = True
            chosen.append(i)
            extend(i + 1, skipped)
            chosen.pop()
            covered[u] = covered[v] = False
            skipped.append(i)
            extend(i + 1, skipped)
            skipped.pop()
        else:
            extend(i + 1, skipped)

    extend(0, [])
    return [frozenset(edges) for edges in sorted(found)]
