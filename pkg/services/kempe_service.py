"""Kempe chains, odd cycles at uncolored edges, and factor extension."""

from dataclasses import dataclass
from typing import Any

from config import EXTENSION_CAP_FACTOR
from services.coloring_service import (
    COLORS,
    UNCOLORED,
    PartialColoring,
    colors_at,
    nu,
    validate,
)
from services.matching_service import OneFactor, is_perfect_matching
from utils.errors import ClassificationViolation, PreconditionError
from utils.logger import log_extension
from utils.multigraph import MultiGraph, require_cubic


@dataclass(frozen=True)
class AlternatingPath:
    """
    Maximal walk from `start` whose edges alternate colors[0], colors[1].

    A Kempe component that is an even cycle is returned whole, with
    closed=True and end == start.
    """
    start: int
    colors: tuple[int, int]
    edges: tuple[int, ...]
    end: int
    closed: bool = False

    def to_json(self) -> dict[str, Any]:
        return {
            "start": self.start,
            "colors": list(self.colors),
            "edges": list(self.edges),
            "end": self.end,
            "closed": self.closed,
        }


@dataclass(frozen=True)
class AlternatingCycle:
    """
    The odd cycle through an uncolored edge e of a maximum coloring.

    vertices[i] and vertices[i + 1] are joined by cycle_edges[i]; e joins
    the last vertex back to vertices[0]. cycle_edges alternate beta, gamma
    and every edge hanging off the cycle carries alpha.
    """
    uncolored_edge: int
    vertices: tuple[int, ...]
    cycle_edges: tuple[int, ...]
    alpha: int
    beta: int
    gamma: int
    pendant_edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.cycle_edges) + 1

    def ring(self) -> tuple[list[int], list[int]]:
        """Closed vertex/edge rings; ring edge i joins ring vertex i and i + 1."""
        return list(self.vertices), list(self.cycle_edges) + [self.uncolored_edge]

    def to_json(self) -> dict[str, Any]:
        return {
            "uncolored_edge": self.uncolored_edge,
            "vertices": list(self.vertices),
            "cycle_edges": list(self.cycle_edges),
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "pendant_edges": list(self.pendant_edges),
        }


def _path_vertices(g: MultiGraph, p: AlternatingPath) -> set[int]:
    seen = {p.start}
    v = p.start
    for e in p.edges:
        v = g.other_end(e, v)
        seen.add(v)
    return seen


def alternating_path(c: PartialColoring, start: int, alpha: int, gamma: int) -> AlternatingPath:
    """
    Trace the maximal alpha-gamma path from `start`, first edge colored alpha.

    Returns:
        The path; empty when `start` has no alpha edge
    """
    if alpha == gamma or alpha not in COLORS or gamma not in COLORS:
        raise PreconditionError(f"need two distinct colors, got ({alpha}, {gamma})")
    g = c.graph
    edges: list[int] = []
    used: set[int] = set()
    v = start
    want, other = alpha, gamma
    while True:
        e = next(
            (e for e in g.incidence[v] if c.assignment[e] == want and e not in used),
            None,
        )
        if e is None:
            return AlternatingPath(start, (alpha, gamma), tuple(edges), v)
        edges.append(e)
        used.add(e)
        v = g.other_end(e, v)
        want, other = other, want
        if v == start:
            return AlternatingPath(start, (alpha, gamma), tuple(edges), v, closed=True)


def is_maximal(c: PartialColoring, p: AlternatingPath) -> bool:
    """True iff no edge of either color extends p at its start or its end."""
    if p.closed:
        return True
    g = c.graph
    alpha, gamma = p.colors
    path_edges = set(p.edges)
    if not p.edges:
        return c.edge_with_color(p.start, alpha) is None
    # the start must not continue the walk backwards with gamma
    if any(c.assignment[e] == gamma and e not in path_edges for e in g.incidence[p.start]):
        return False
    last_color = c.assignment[p.edges[-1]]
    follow = gamma if last_color == alpha else alpha
    return not any(c.assignment[e] == follow and e not in path_edges for e in g.incidence[p.end])


def shift_path(c: PartialColoring, p: AlternatingPath) -> PartialColoring:
    """
    Swap the two colors along a maximal alternating path (or even cycle).

    Raises:
        PreconditionError: when p is not maximal in c
    """
    if not is_maximal(c, p):
        raise PreconditionError(f"path {list(p.edges)} from {p.start} is not maximal")
    alpha, gamma = p.colors
    swapped = c.recolor({e: gamma if c.assignment[e] == alpha else alpha for e in p.edges})
    if not validate(swapped) or swapped.size != c.size:
        raise ClassificationViolation(
            "shift broke properness", {"path": list(p.edges), "assignment": list(c.assignment)}
        )
    return swapped


def _trace(c: PartialColoring, **extra: Any) -> dict[str, Any]:
    return {"edges": [list(pair) for pair in c.graph.endpoints], "assignment": list(c.assignment), **extra}


def find_odd_cycle(c: PartialColoring, e: int) -> AlternatingCycle:
    """
    Build the odd cycle C_e attached to the uncolored edge e = (u, v).

    With alpha the color shared by u and v, beta the color only at u and
    gamma the color only at v, the beta-gamma path from u must end at v.

    Raises:
        PreconditionError: e is colored
        ClassificationViolation: the colors at u, v or the traced cycle do not
            have the structure a maximum coloring guarantees
    """
    if c.assignment[e] != UNCOLORED:
        raise PreconditionError(f"edge {e} is colored; C_e needs an uncolored edge")
    g = c.graph
    u, v = g.endpoints[e]
    at_u, at_v = colors_at(c, u), colors_at(c, v)
    shared = at_u & at_v
    if len(shared) != 1 or (at_u | at_v) != set(COLORS):
        raise ClassificationViolation(
            f"colors at the ends of edge {e} are {sorted(at_u)} and {sorted(at_v)}",
            _trace(c, edge=e),
        )
    (alpha,) = shared
    (beta,) = at_u - at_v
    (gamma,) = at_v - at_u

    path = alternating_path(c, u, beta, gamma)
    if path.end != v or path.closed:
        raise ClassificationViolation(
            f"beta-gamma path from {u} ends at {path.end}, not {v}",
            _trace(c, edge=e, path=list(path.edges)),
        )

    vertices = [u]
    for edge in path.edges:
        vertices.append(g.other_end(edge, vertices[-1]))
    on_cycle = set(path.edges) | {e}
    pendants = sorted({
        edge for w in vertices for edge in g.incidence[w] if edge not in on_cycle
    })

    cycle = AlternatingCycle(e, tuple(vertices), path.edges, alpha, beta, gamma, tuple(pendants))
    alternates = all(
        c.assignment[edge] == (beta if i % 2 == 0 else gamma) for i, edge in enumerate(path.edges)
    )
    if cycle.length % 2 == 0 or not alternates or any(c.assignment[edge] != alpha for edge in pendants):
        raise ClassificationViolation(
            f"cycle through edge {e} has length {cycle.length}, broken alternation or a non-alpha pendant",
            _trace(c, cycle=cycle.to_json()),
        )
    return cycle


def _initial_coloring(g: MultiGraph) -> PartialColoring:
    return nu(g, 3).witness


def _require_factor(g: MultiGraph, f: OneFactor, operation: str):
    require_cubic(g, operation)
    if not is_perfect_matching(g, f.edges):
        raise PreconditionError(f"{operation}: edges {sorted(f.edges)} are not a perfect matching")


def extend_one_factor(g: MultiGraph, f: OneFactor) -> PartialColoring:
    """
    Recolor a maximum 3-edge-colorable subgraph until it contains the factor f.

    Each step colors an uncolored factor edge (u, v) with a color alpha seen
    at u but not at v and uncolors the alpha edge at u, which is never in f.

    Returns:
        A coloring with nu_3(g) colored edges and f inside the colored set
    """
    _require_factor(g, f, "extend_one_factor")
    c = _initial_coloring(g)
    target = c.size
    inside = len(f.edges & c.colored_edges())
    cap = EXTENSION_CAP_FACTOR * max(g.m, 1)

    iterations = 0
    while True:
        missing = sorted(f.edges - c.colored_edges())
        if not missing:
            break
        iterations += 1
        if iterations > cap:
            raise ClassificationViolation("extend_one_factor exceeded its iteration cap", _trace(c, factor=sorted(f.edges)))

        e = missing[0]
        u, v = g.endpoints[e]
        choices = sorted(colors_at(c, u) - colors_at(c, v))
        if not choices:
            raise ClassificationViolation(
                f"no color to move onto factor edge {e}", _trace(c, factor=sorted(f.edges), edge=e)
            )
        alpha = choices[0]
        displaced = c.edge_with_color(u, alpha)
        c = c.recolor({displaced: UNCOLORED, e: alpha})

        now_inside = len(f.edges & c.colored_edges())
        if not validate(c) or c.size != target or now_inside <= inside:
            raise ClassificationViolation(
                f"step on factor edge {e} made no progress", _trace(c, factor=sorted(f.edges), edge=e)
            )
        inside = now_inside

    log_extension("contain", c.size, iterations)
    return c


def _walk_from(cycle: AlternatingCycle, start: int, first_edge: int) -> list[int]:
    """Cycle edges in order, leaving ring vertex `start` along `first_edge` and skipping the other edge at start."""
    vertices, edges = cycle.ring()
    size = len(edges)
    i = vertices.index(start)
    if edges[i] == first_edge:
        return [edges[(i + step) % size] for step in range(size - 1)]
    return [edges[(i - 1 - step) % size] for step in range(size - 1)]


def _color_alternately(c: PartialColoring, path: list[int], first: int, second: int) -> PartialColoring:
    return c.recolor({e: first if i % 2 == 0 else second for i, e in enumerate(path)})


def _rotate_uncolored(c: PartialColoring, cycle: AlternatingCycle, removed: int) -> PartialColoring:
    """Uncolor `removed` (a cycle edge) and color the rest of the odd cycle beta, gamma alternately."""
    vertices, edges = cycle.ring()
    i = edges.index(removed)
    start = vertices[(i + 1) % len(vertices)]
    path = _walk_from(cycle, start, edges[(i + 1) % len(edges)])
    return _color_alternately(c.recolor({removed: UNCOLORED}), path, cycle.beta, cycle.gamma)


def _move_into_pendant(c: PartialColoring, cycle: AlternatingCycle) -> PartialColoring:
    """
    Cycle disjoint from the factor: free alpha at some cycle vertex w by a
    Kempe shift off the cycle, leave the pendant at the far end z of a cycle
    edge x = (w, z) uncolored, color x alpha and the rest beta, gamma from w.
    """
    g = c.graph
    vertices, edges = cycle.ring()
    on_cycle = set(vertices)
    theta = c.recolor({e: UNCOLORED for e in edges})

    for w in sorted(on_cycle):
        path = alternating_path(theta, w, cycle.alpha, cycle.gamma)
        if path.end in on_cycle:
            continue
        i = vertices.index(w)
        x, y = sorted((edges[i], edges[i - 1]))
        z = g.other_end(x, w)
        shifted = shift_path(theta, path)
        pendant_z = next(
            (e for e in g.incidence[z] if e not in edges and shifted.assignment[e] == cycle.alpha),
            None,
        )
        if pendant_z is None:
            raise ClassificationViolation(
                f"no alpha-colored pendant edge at cycle vertex {z} after the shift",
                _trace(shifted, cycle=cycle.to_json(), shifted_from=w),
            )
        shifted = shifted.recolor({pendant_z: UNCOLORED, x: cycle.alpha})
        return _color_alternately(shifted, _walk_from(cycle, w, y), cycle.beta, cycle.gamma)

    raise ClassificationViolation(
        "every alpha-gamma path from the odd cycle ends on the cycle",
        _trace(c, cycle=cycle.to_json()),
    )


def extend_avoiding(g: MultiGraph, f: OneFactor) -> PartialColoring:
    """
    Recolor a maximum 3-edge-colorable subgraph until every uncolored edge lies in f.

    Each step takes the lowest uncolored edge e outside f and its odd cycle
    C_e. If C_e meets f, one such factor edge is uncolored instead of e;
    otherwise a pendant edge of C_e (all of them lie in f) is. Either way
    the number of colored factor edges drops by one.

    Returns:
        A coloring with nu_3(g) colored edges whose uncolored edges lie in f,
        so the complementary 2-factor is fully colored
    """
    _require_factor(g, f, "extend_avoiding")
    c = _initial_coloring(g)
    target = c.size
    inside = len(f.edges & c.colored_edges())
    cap = EXTENSION_CAP_FACTOR * max(g.m, 1)

    iterations = 0
    while True:
        outside = [e for e in c.uncolored_edges() if e not in f.edges]
        if not outside:
            break
        iterations += 1
        if iterations > cap:
            raise ClassificationViolation("extend_avoiding exceeded its iteration cap", _trace(c, factor=sorted(f.edges)))

        cycle = find_odd_cycle(c, outside[0])
        meeting = sorted(set(cycle.cycle_edges) & f.edges)
        if meeting:
            c = _rotate_uncolored(c, cycle, meeting[0])
        else:
            c = _move_into_pendant(c, cycle)

        now_inside = len(f.edges & c.colored_edges())
        if not validate(c) or c.size != target or now_inside >= inside:
            raise ClassificationViolation(
                f"step on edge {outside[0]} made no progress",
                _trace(c, factor=sorted(f.edges), cycle=cycle.to_json(), case=1 if meeting else 2),
            )
        inside = now_inside

    log_extension("avoid", c.size, iterations)
    return c


def augment_coloring(c: PartialColoring) -> PartialColoring:
    """
    Grow a proper coloring until its uncolored edges form a matching.

    Repeats two moves, each adding one colored edge: color an uncolored
    edge with a color free at both ends; or, for uncolored edges (u1, u0)
    and (u1, u2), shift the alpha-gamma path from u0 or u2 that avoids u1
    and color the freed edge alpha.
    """
    if not validate(c):
        raise PreconditionError("augment_coloring needs a proper coloring")
    if any(len(edge_ids) > 3 for edge_ids in c.graph.incidence):
        raise PreconditionError("augment_coloring needs maximum degree at most 3")
    while True:
        grown = _color_free_edge(c)
        if grown is None:
            grown = _color_adjacent_pair(c)
        if grown is None:
            return c
        if not validate(grown) or grown.size != c.size + 1:
            raise ClassificationViolation("augmenting step broke the coloring", _trace(grown))
        c = grown


def _color_free_edge(c: PartialColoring) -> PartialColoring | None:
    for e in c.uncolored_edges():
        u, v = c.graph.endpoints[e]
        free = set(COLORS) - colors_at(c, u) - colors_at(c, v)
        if free:
            return c.recolor({e: min(free)})
    return None


def _color_adjacent_pair(c: PartialColoring) -> PartialColoring | None:
    g = c.graph
    for u1 in range(g.n):
        bare = [e for e in g.incidence[u1] if c.assignment[e] == UNCOLORED]
        if len(bare) < 2:
            continue
        first, second = bare[0], bare[1]
        u0, u2 = g.other_end(first, u1), g.other_end(second, u1)
        at_u1 = colors_at(c, u1)
        if len(at_u1) != 1 or colors_at(c, u0) != colors_at(c, u2):
            raise ClassificationViolation(
                f"uncolored edges {first}, {second} at {u1} without the expected colors",
                _trace(c, vertex=u1),
            )
        (gamma,) = at_u1
        alpha = min(colors_at(c, u0))
        for end, edge in ((u0, first), (u2, second)):
            path = alternating_path(c, end, alpha, gamma)
            if u1 in _path_vertices(g, path):
                continue
            return shift_path(c, path).recolor({edge: alpha})
        raise ClassificationViolation(
            f"both alpha-gamma paths from the neighbours of {u1} reach it", _trace(c, vertex=u1)
        )
    return None
