"""Exhaustive and random generation of loopless cubic multigraphs."""

from dataclasses import dataclass
from enum import Enum
from functools import partial
from typing import Iterator

import numpy as np

from config import EXHAUSTIVE_CAP
from utils.errors import CapExceededError, PreconditionError
from utils.multigraph import MultiGraph, are_isomorphic, build, invariant_hash, is_connected
from utils.parallel import ordered_map

# Edges fixed before the pairing search is split across workers
_SPLIT_DEPTH = 4


class GenMode(Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


@dataclass(frozen=True)
class GenConfig:
    """Generation request; n must be even (3n stubs pair up)."""
    n: int
    mode: GenMode = GenMode.EXHAUSTIVE
    count: int = 1
    seed: int = 0
    connected_only: bool = True
    simple_only: bool = False

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise PreconditionError(f"n must be an even integer >= 2, got {self.n}")
        if self.mode is GenMode.EXHAUSTIVE and self.n > EXHAUSTIVE_CAP:
            raise CapExceededError("enumerate_cubic", self.n, EXHAUSTIVE_CAP, "EXHAUSTIVE_CAP")
        if self.mode is GenMode.RANDOM and (self.count < 0 or self.seed < 0):
            raise PreconditionError("count and seed must be non-negative")


class IsomorphDedup:
    """Keeps the first graph of every isomorphism class, bucketed by invariant hash."""

    def __init__(self):
        self.graphs: list[MultiGraph] = []
        self._buckets: dict[int, list[MultiGraph]] = {}

    def add(self, g: MultiGraph) -> bool:
        bucket = self._buckets.setdefault(invariant_hash(g), [])
        if any(are_isomorphic(g, seen) for seen in bucket):
            return False
        bucket.append(g)
        self.graphs.append(g)
        return True


def _pairings(n: int, connected_only: bool, prefix: list[tuple[int, int]], stop_at: int | None = None) -> list[list[tuple[int, int]]]:
    """
    Depth-first pairing of 3n stubs, vertex by vertex.

    The lowest vertex with free stubs pairs them in non-decreasing partner
    order. Untouched vertices are interchangeable, so only the lowest one
    may be chosen; touched vertices always form a prefix of the labels.
    With stop_at set, partial pairings of that many edges are returned.
    """
    free = [3] * n
    for a, b in prefix:
        free[a] -= 1
        free[b] -= 1
    edges = list(prefix)
    found: list[list[tuple[int, int]]] = []

    def descend():
        if stop_at is not None and len(edges) == stop_at:
            found.append(list(edges))
            return
        v = next((x for x in range(n) if free[x]), None)
        if v is None:
            found.append(list(edges))
            return
        if connected_only and v > 0 and free[v] == 3:
            return
        low = max((w for a, w in edges if a == v), default=v + 1)
        fresh = next((x for x in range(v + 1, n) if free[x] == 3), None)
        for w in range(low, n):
            if free[w] == 0 or (free[w] == 3 and w != fresh):
                continue
            free[v] -= 1
            free[w] -= 1
            edges.append((v, w))
            descend()
            edges.pop()
            free[v] += 1
            free[w] += 1

    descend()
    return found


def _complete_prefix(prefix: list[tuple[int, int]], n: int, connected_only: bool) -> list[list[tuple[int, int]]]:
    return _pairings(n, connected_only, prefix)


def enumerate_cubic(cfg: GenConfig, jobs: int = 1) -> Iterator[MultiGraph]:
    """
    Every loopless cubic multigraph on cfg.n vertices once up to isomorphism.

    Workers complete disjoint pairing prefixes; deduplication is a single
    sequential pass in search order, so the stream does not depend on jobs.
    """
    if cfg.mode is not GenMode.EXHAUSTIVE:
        raise PreconditionError("enumerate_cubic needs an EXHAUSTIVE config")
    m = 3 * cfg.n // 2
    prefixes = _pairings(cfg.n, cfg.connected_only, [], stop_at=min(_SPLIT_DEPTH, m))
    task = partial(_complete_prefix, n=cfg.n, connected_only=cfg.connected_only)
    dedup = IsomorphDedup()
    for completions in ordered_map(task, prefixes, jobs):
        for edges in completions:
            g = build(cfg.n, edges)
            if cfg.simple_only and not g.is_simple():
                continue
            if dedup.add(g):
                yield g


def _subdivide(endpoints: list[tuple[int, int]], e: int, x: int) -> list[tuple[int, int]]:
    a, b = endpoints[e]
    return endpoints[:e] + [(a, x), (x, b)] + endpoints[e + 1:]


def insert_edge(g: MultiGraph, i: int, j: int) -> MultiGraph:
    """Subdivide edges i and j (i == j subdivides one edge twice) and join the new vertices."""
    x, y = g.n, g.n + 1
    endpoints = list(g.endpoints)
    if i == j:
        a, b = endpoints[i]
        endpoints = endpoints[:i] + [(a, x), (x, y), (y, b)] + endpoints[i + 1:]
    else:
        first, second = sorted((i, j))
        endpoints = _subdivide(endpoints, second, y if second == j else x)
        endpoints = _subdivide(endpoints, first, x if first == i else y)
    endpoints.append((x, y))
    return build(g.n + 2, endpoints)


def bridge_join(a: MultiGraph, i: int, b: MultiGraph, j: int) -> MultiGraph:
    """Subdivide edge i of a and edge j of b, then join the two new vertices."""
    x, y = a.n + b.n, a.n + b.n + 1
    left = _subdivide(list(a.endpoints), i, x)
    right = _subdivide([(u + a.n, v + a.n) for u, v in b.endpoints], j, y)
    return build(a.n + b.n + 2, left + right + [(x, y)])


def theta() -> MultiGraph:
    return build(2, [(0, 1), (0, 1), (0, 1)])


def enumerate_cubic_by_insertion(n: int, simple_only: bool = False) -> list[MultiGraph]:
    """
    Connected loopless cubic multigraphs on n vertices, built independently of
    the stub pairing: every such graph other than the theta graph arises by
    inserting an edge into a smaller connected one or by joining two smaller
    connected ones with a bridge.
    """
    if n < 2 or n % 2:
        raise PreconditionError(f"n must be an even integer >= 2, got {n}")
    if n > EXHAUSTIVE_CAP:
        raise CapExceededError("enumerate_cubic_by_insertion", n, EXHAUSTIVE_CAP, "EXHAUSTIVE_CAP")

    levels: dict[int, list[MultiGraph]] = {2: [theta()]}
    for size in range(4, n + 1, 2):
        dedup = IsomorphDedup()
        for g in levels[size - 2]:
            for i in range(g.m):
                for j in range(i, g.m):
                    dedup.add(insert_edge(g, i, j))
        for n1 in range(2, size - 2, 2):
            n2 = size - 2 - n1
            if n1 > n2:
                break
            for a in levels[n1]:
                for b in levels[n2]:
                    for i in range(a.m):
                        for j in range(b.m):
                            dedup.add(bridge_join(a, i, b, j))
        levels[size] = dedup.graphs

    graphs = levels[n]
    if simple_only:
        graphs = [g for g in graphs if g.is_simple()]
    return graphs


def _random_sample(index: int, n: int, seed: int, connected_only: bool) -> MultiGraph:
    """Configuration-model sample; loops and (optionally) disconnection trigger a resample."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
    stubs = np.repeat(np.arange(n), 3)
    while True:
        rng.shuffle(stubs)
        pairs = stubs.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        g = build(n, sorted((int(min(p)), int(max(p))) for p in pairs))
        if connected_only and not is_connected(g):
            continue
        return g


def random_cubic(cfg: GenConfig, jobs: int = 1) -> Iterator[MultiGraph]:
    """
    cfg.count configuration-model samples.

    Sample i draws from its own PCG64 substream keyed by (seed, i), so the
    stream is reproducible for any worker count.
    """
    if cfg.mode is not GenMode.RANDOM:
        raise PreconditionError("random_cubic needs a RANDOM config")
    task = partial(_random_sample, n=cfg.n, seed=cfg.seed, connected_only=cfg.connected_only)
    for g in ordered_map(task, range(cfg.count), jobs):
        if cfg.simple_only and not g.is_simple():
            continue
        yield g


def generate(cfg: GenConfig, jobs: int = 1) -> Iterator[MultiGraph]:
    if cfg.mode is GenMode.EXHAUSTIVE:
        return enumerate_cubic(cfg, jobs)
    return random_cubic(cfg, jobs)
