import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from services.coloring_service import COLORS, UNCOLORED, PartialColoring, colors_at, nu, validate
from services.generator_service import GenConfig, GenMode, random_cubic
from services.kempe_service import (
    alternating_path,
    augment_coloring,
    extend_avoiding,
    extend_one_factor,
    find_odd_cycle,
    is_maximal,
    shift_path,
)
from services import kempe_service
from services.matching_service import OneFactor, enumerate_perfect_matchings
from tests.helpers import graphs_up_to
from utils.errors import ClassificationViolation, PreconditionError
from utils.logger import ActionLogger, ActionType
from utils.multigraph import MultiGraph, is_matching

relaxed = settings(deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
exhaustive = settings(relaxed, max_examples=10_000)


def random_graph(draw) -> MultiGraph:
    n = draw(st.sampled_from([2, 4, 6, 8]))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return next(random_cubic(GenConfig(n, GenMode.RANDOM, count=1, seed=seed)))


@st.composite
def partial_colorings(draw) -> PartialColoring:
    """Proper colorings built greedily in a random edge order with random choices."""
    g = random_graph(draw)
    assignment = [UNCOLORED] * g.m
    used = [set() for _ in range(g.n)]
    for e in draw(st.permutations(range(g.m))):
        u, v = g.endpoints[e]
        options = [UNCOLORED] + [c for c in COLORS if c not in used[u] | used[v]]
        color = draw(st.sampled_from(options))
        assignment[e] = color
        if color != UNCOLORED:
            used[u].add(color)
            used[v].add(color)
    return PartialColoring(g, tuple(assignment))


@st.composite
def maximum_colorings(draw) -> PartialColoring:
    """Maximum colorings reached from the canonical witness by random Kempe shifts."""
    c = nu(random_graph(draw), 3).witness
    for _ in range(draw(st.integers(min_value=0, max_value=6))):
        start = draw(st.integers(min_value=0, max_value=c.graph.n - 1))
        a, b = draw(st.permutations(COLORS))[:2]
        if c.edge_with_color(start, b) is None:
            c = shift_path(c, alternating_path(c, start, a, b))
    return c


def check_cycle(c: PartialColoring, e: int):
    cycle = find_odd_cycle(c, e)
    assert cycle.length % 2 == 1
    assert {cycle.alpha, cycle.beta, cycle.gamma} == set(COLORS)
    for i, edge in enumerate(cycle.cycle_edges):
        assert c.color(edge) == (cycle.beta if i % 2 == 0 else cycle.gamma)
    assert all(c.color(edge) == cycle.alpha for edge in cycle.pendant_edges)


def check_shift(c: PartialColoring, start: int, a: int, b: int):
    assume(c.edge_with_color(start, b) is None)
    path = alternating_path(c, start, a, b)
    assert is_maximal(c, path)
    shifted = shift_path(c, path)
    assert validate(shifted)
    assert shifted.size == c.size
    back = shift_path(shifted, alternating_path(shifted, start, b, a))
    assert back.assignment == c.assignment


@relaxed
@given(partial_colorings(), st.data())
def test_shift_preserves_coloring(c, data):
    start = data.draw(st.integers(min_value=0, max_value=c.graph.n - 1))
    a, b = data.draw(st.permutations(COLORS))[:2]
    check_shift(c, start, a, b)


@relaxed
@given(maximum_colorings())
def test_odd_cycle_structure(c):
    for e in c.uncolored_edges():
        check_cycle(c, e)


@relaxed
@given(partial_colorings())
def test_augment_leaves_a_matching(c):
    grown = augment_coloring(c)
    assert validate(grown)
    assert grown.size >= c.size
    assert is_matching(grown.graph, grown.uncolored_edges())


@pytest.mark.slow
@exhaustive
@given(partial_colorings(), st.data())
def test_shift_preserves_coloring_many(c, data):
    start = data.draw(st.integers(min_value=0, max_value=c.graph.n - 1))
    a, b = data.draw(st.permutations(COLORS))[:2]
    check_shift(c, start, a, b)


@pytest.mark.slow
@exhaustive
@given(maximum_colorings())
def test_odd_cycle_structure_many(c):
    for e in c.uncolored_edges():
        check_cycle(c, e)


def test_odd_cycle_of_s6(s6_witness):
    cycle = find_odd_cycle(s6_witness, 3)
    assert (cycle.alpha, cycle.beta, cycle.gamma) == (1, 2, 3)
    assert cycle.cycle_edges == (1, 2)
    assert cycle.vertices == (1, 0, 2)
    assert cycle.pendant_edges == (0, 4)
    assert cycle.length == 3
    assert cycle.ring() == ([1, 0, 2], [1, 2, 3])


def test_odd_cycle_needs_uncolored_edge(s6_witness):
    with pytest.raises(PreconditionError):
        find_odd_cycle(s6_witness, 0)


def test_path_through_both_triangles(s6_witness):
    path = alternating_path(s6_witness, 1, 1, 3)
    assert path.edges == (0, 2, 4, 7, 5)
    assert path.end == 4
    assert not path.closed
    shifted = shift_path(s6_witness, path)
    assert shifted.assignment == (3, 2, 1, 0, 3, 3, 2, 1, 0)
    assert colors_at(shifted, 1) == {2, 3}


def test_path_from_y1_without_alpha_edge_is_empty(s6_witness):
    # y1 carries colors 1 and 2 only
    path = alternating_path(s6_witness, 1, 3, 1)
    assert path.edges == ()
    assert path.end == 1
    assert is_maximal(s6_witness, path)
    assert shift_path(s6_witness, path).assignment == s6_witness.assignment


def test_odd_cycles_of_petersen(petersen):
    c = nu(petersen, 3).witness
    uncolored = c.uncolored_edges()
    assert len(uncolored) == 2
    for e in uncolored:
        check_cycle(c, e)
        assert find_odd_cycle(c, e).length >= 5


def test_missing_pendant_after_shift_is_a_violation(s6_witness, monkeypatch):
    cycle = find_odd_cycle(s6_witness, 3)

    def drop_alpha(c, path):
        alpha = path.colors[0]
        return c.recolor({e: UNCOLORED for e in range(c.graph.m) if c.assignment[e] == alpha})

    monkeypatch.setattr(kempe_service, "shift_path", drop_alpha)
    with pytest.raises(ClassificationViolation) as info:
        kempe_service._move_into_pendant(s6_witness, cycle)
    assert info.value.trace["shifted_from"] == 2
    assert info.value.trace["cycle"] == cycle.to_json()


def test_shift_rejects_non_maximal_path(s6_witness):
    # vertex 3 also has a color-3 edge, so the walk continues backwards
    path = alternating_path(s6_witness, 3, 1, 3)
    assert path.edges == (5,)
    assert not is_maximal(s6_witness, path)
    with pytest.raises(PreconditionError):
        shift_path(s6_witness, path)


def test_alternating_path_needs_two_colors(s6_witness):
    with pytest.raises(PreconditionError):
        alternating_path(s6_witness, 0, 2, 2)


def test_even_kempe_cycle_is_closed(k4):
    c = nu(k4, 3).witness
    a, b = c.color(0), next(x for x in COLORS if x != c.color(0))
    path = alternating_path(c, 0, a, b)
    assert path.closed
    assert path.end == 0
    assert len(path.edges) == 4


def test_contain_on_theta(theta):
    c = extend_one_factor(theta, OneFactor(frozenset({2})))
    assert c.color(2) != UNCOLORED
    assert c.size == 3


def test_contain_on_s6(s6):
    for f in enumerate_perfect_matchings(s6):
        c = extend_one_factor(s6, f)
        assert validate(c)
        assert c.size == 7
        assert f.edges <= c.colored_edges()


def test_avoid_on_s6(s6):
    for f in enumerate_perfect_matchings(s6):
        c = extend_avoiding(s6, f)
        assert validate(c)
        assert c.size == 7
        assert set(c.uncolored_edges()) <= f.edges


def test_avoid_on_petersen(petersen):
    for f in enumerate_perfect_matchings(petersen):
        c = extend_avoiding(petersen, f)
        assert validate(c)
        assert c.size == 13
        assert set(c.uncolored_edges()) <= f.edges


def test_extensions_log_their_runs(s6):
    f = enumerate_perfect_matchings(s6)[-1]
    extend_one_factor(s6, f)
    extend_avoiding(s6, f)
    modes = [entry["details"]["mode"] for entry in ActionLogger.get_logs_by_type(ActionType.EXTENSION)]
    assert modes == ["contain", "avoid"]


def test_extension_needs_a_factor(s6):
    with pytest.raises(PreconditionError):
        extend_one_factor(s6, OneFactor(frozenset({0, 1})))
    with pytest.raises(PreconditionError):
        extend_avoiding(s6, OneFactor(frozenset({4})))


def test_extensions_up_to_six_vertices():
    for g in graphs_up_to(6):
        value = nu(g, 3).value
        for f in enumerate_perfect_matchings(g):
            contained = extend_one_factor(g, f)
            assert contained.size == value and f.edges <= contained.colored_edges()
            avoided = extend_avoiding(g, f)
            assert avoided.size == value and set(avoided.uncolored_edges()) <= f.edges


def test_augment_from_empty(petersen, k4):
    grown = augment_coloring(PartialColoring.empty(petersen))
    assert validate(grown)
    assert is_matching(petersen, grown.uncolored_edges())
    assert augment_coloring(PartialColoring.empty(k4)).size >= 5


def test_augment_needs_proper_coloring(theta):
    with pytest.raises(PreconditionError):
        augment_coloring(PartialColoring(theta, (1, 1, 0)))
