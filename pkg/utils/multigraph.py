"""Loopless multigraph representation specialized for cubic graphs."""

import hashlib
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from utils.errors import GraphError, NotCubicError

EdgeSet = frozenset[int]


@dataclass(frozen=True)
class MultiGraph:
    """
    Immutable loopless multigraph with dense 0-based vertex and edge ids.

    Parallel edges are distinct edges with equal endpoint pairs; every
    set-valued notion in the toolkit is over edge ids.
    """
    n: int
    endpoints: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.endpoints)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints[e]
        return b if a == v else a

    def edges_between(self, u: int, v: int) -> list[int]:
        """All edge ids joining u and v, ascending."""
        return [e for e in self.incidence[u] if self.other_end(e, u) == v]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.edges_between(u, v))

    def is_simple(self) -> bool:
        pairs = [tuple(sorted(p)) for p in self.endpoints]
        return len(pairs) == len(set(pairs))

    def edge_list(self) -> list[tuple[int, int]]:
        return [tuple(p) for p in self.endpoints]


def build(n: int, edges: Iterable[tuple[int, int]]) -> MultiGraph:
    """
    Build a multigraph; edge ids follow input order.

    Args:
        n: Number of vertices
        edges: Endpoint pairs, repeated pairs become parallel edges

    Returns:
        The immutable graph

    Raises:
        GraphError: on a loop or an endpoint outside [0, n)
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")

    endpoints = []
    incidence: list[list[int]] = [[] for _ in range(n)]
    for index, pair in enumerate(edges):
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {index} ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"edge {index} ({u}, {v}) is a loop; loops are not allowed")
        endpoints.append((u, v))
        incidence[u].append(index)
        incidence[v].append(index)

    return MultiGraph(
        n=n,
        endpoints=tuple(endpoints),
        incidence=tuple(tuple(edge_ids) for edge_ids in incidence),
    )


def is_cubic(g: MultiGraph) -> bool:
    """True iff every vertex has degree exactly 3, counting multiplicity."""
    return all(len(edge_ids) == 3 for edge_ids in g.incidence)


def require_cubic(g: MultiGraph, operation: str):
    """Raise NotCubicError unless g is cubic."""
    if not is_cubic(g):
        degrees = sorted({g.degree(v) for v in range(g.n)})
        raise NotCubicError(f"{operation} requires a cubic graph (degrees seen: {degrees})")


def is_matching(g: MultiGraph, s: Iterable[int]) -> bool:
    """True iff no two edges of s share an endpoint; parallel pairs are not a matching."""
    covered = set()
    for e in s:
        u, v = g.endpoints[e]
        if u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def to_networkx(g: MultiGraph) -> nx.MultiGraph:
    """networkx view of g; edge keys are the toolkit's edge ids."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.n))
    for e, (u, v) in enumerate(g.endpoints):
        graph.add_edge(u, v, key=e)
    return graph


def to_simple_networkx(g: MultiGraph) -> nx.Graph:
    """Underlying simple graph with edge attribute `mult` (multiplicity as a string)."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    for u, v in g.endpoints:
        if graph.has_edge(u, v):
            graph[u][v]["count"] += 1
        else:
            graph.add_edge(u, v, count=1)
    for _, _, data in graph.edges(data=True):
        data["mult"] = str(data["count"])
    return graph


def connected_components(g: MultiGraph) -> list[list[int]]:
    """Vertex partition by reachability; parts sorted, ordered by smallest vertex."""
    parts = [sorted(part) for part in nx.connected_components(to_networkx(g))]
    return sorted(parts, key=lambda part: part[0])


def is_connected(g: MultiGraph) -> bool:
    return len(connected_components(g)) <= 1


def invariant_hash(g: MultiGraph) -> int:
    """
    64-bit isomorphism invariant.

    Weisfeiler-Lehman refinement over the underlying simple graph, with edge
    multiplicities as edge labels; n and m are mixed in so graphs of
    different size never collide.
    """
    wl = nx.weisfeiler_lehman_graph_hash(to_simple_networkx(g), edge_attr="mult", iterations=4)
    digest = hashlib.blake2b(f"{g.n}:{g.m}:{wl}".encode("ascii"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def hash_hex(g: MultiGraph) -> str:
    return f"{invariant_hash(g):016x}"


def are_isomorphic(a: MultiGraph, b: MultiGraph) -> bool:
    """Exact multigraph isomorphism (multiplicity-preserving)."""
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(map(len, a.incidence)) != sorted(map(len, b.incidence)):
        return False
    if invariant_hash(a) != invariant_hash(b):
        return False
    return nx.is_isomorphic(
        to_simple_networkx(a),
        to_simple_networkx(b),
        edge_match=lambda x, y: x["count"] == y["count"],
    )


def disjoint_union(a: MultiGraph, b: MultiGraph) -> MultiGraph:
    shifted = [(u + a.n, v + a.n) for u, v in b.endpoints]
    return build(a.n + b.n, list(a.endpoints) + shifted)


def relabel(g: MultiGraph, permutation: list[int]) -> MultiGraph:
    """Copy of g with vertex v renamed permutation[v]; edge order kept."""
    return build(g.n, [(permutation[u], permutation[v]) for u, v in g.endpoints])
