"""Shared graph corpora for the test suite."""

from functools import cache

from services.generator_service import GenConfig, enumerate_cubic
from utils.multigraph import MultiGraph, build


@cache
def cubic_graphs(n: int) -> tuple[MultiGraph, ...]:
    """Connected cubic multigraphs on n vertices, enumerated once per session."""
    return tuple(enumerate_cubic(GenConfig(n)))


def graphs_up_to(max_n: int) -> list[MultiGraph]:
    return [g for n in range(2, max_n + 1, 2) for g in cubic_graphs(n)]


def no_factor_graph() -> MultiGraph:
    """Center vertex joined by bridges to three blocks of three vertices; no perfect matching."""
    edges = [(0, 1), (0, 4), (0, 7)]
    for a in (1, 4, 7):
        edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2), (a + 1, a + 2)]
    return build(10, edges)


def prism() -> MultiGraph:
    return build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
