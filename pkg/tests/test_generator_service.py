import pytest

from services.generator_service import (
    GenConfig,
    GenMode,
    enumerate_cubic,
    enumerate_cubic_by_insertion,
    generate,
    random_cubic,
)
from tests.helpers import cubic_graphs, prism
from utils.errors import CapExceededError, PreconditionError
from utils.multigraph import are_isomorphic, build, invariant_hash, is_connected, is_cubic

GOLDEN = {2: 1, 4: 2, 6: 6, 8: 20}


def matches_one_to_one(left, right) -> bool:
    """Every graph of left is isomorphic to exactly one graph of right, and the sizes agree."""
    if len(left) != len(right):
        return False
    buckets = {}
    for g in right:
        buckets.setdefault(invariant_hash(g), []).append(g)
    return all(
        sum(are_isomorphic(g, h) for h in buckets.get(invariant_hash(g), [])) == 1 for g in left
    )


@pytest.mark.parametrize("n, count", sorted(GOLDEN.items()))
def test_golden_counts(n, count):
    assert len(cubic_graphs(n)) == count


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_two_strategies_agree(n):
    by_insertion = enumerate_cubic_by_insertion(n)
    assert len(by_insertion) == GOLDEN[n]
    assert matches_one_to_one(by_insertion, cubic_graphs(n))


@pytest.mark.slow
def test_ten_vertices():
    stubs = list(enumerate_cubic(GenConfig(10)))
    assert len(stubs) == 91
    assert matches_one_to_one(enumerate_cubic_by_insertion(10), stubs)


def test_n2_is_theta(theta):
    assert [g.edge_list() for g in cubic_graphs(2)] == [theta.edge_list()]


def test_n4_corpus(k4):
    double_square = build(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
    found = cubic_graphs(4)
    assert any(are_isomorphic(g, k4) for g in found)
    assert any(are_isomorphic(g, double_square) for g in found)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_graphs_are_cubic_connected_and_loopless(n):
    for g in cubic_graphs(n):
        assert is_cubic(g)
        assert is_connected(g)
        assert all(u != v for u, v in g.endpoints)


@pytest.mark.parametrize("n", [4, 6])
def test_no_isomorphic_duplicates(n):
    graphs = cubic_graphs(n)
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert not are_isomorphic(g, h)


def test_simple_graphs_on_six_vertices(k33):
    simple = list(enumerate_cubic(GenConfig(6, simple_only=True)))
    assert len(simple) == 2
    assert any(are_isomorphic(g, k33) for g in simple)
    assert any(are_isomorphic(g, prism()) for g in simple)
    assert len(enumerate_cubic_by_insertion(6, simple_only=True)) == 2


def test_simple_graphs_on_eight_vertices():
    assert len(list(enumerate_cubic(GenConfig(8, simple_only=True)))) == 5


@pytest.mark.parametrize("n, count", [(4, 3), (6, 9)])
def test_disconnected_graphs_included_on_request(n, count):
    graphs = list(enumerate_cubic(GenConfig(n, connected_only=False)))
    assert len(graphs) == count


def test_worker_count_does_not_change_the_stream():
    cfg = GenConfig(6)
    assert [g.endpoints for g in enumerate_cubic(cfg, jobs=2)] == [g.endpoints for g in cubic_graphs(6)]


def test_random_theta(theta):
    cfg = GenConfig(2, GenMode.RANDOM, count=3, seed=99)
    assert [g.edge_list() for g in random_cubic(cfg)] == [theta.edge_list()] * 3


def test_random_stream_is_reproducible():
    cfg = GenConfig(10, GenMode.RANDOM, count=100, seed=42)
    first = [g.endpoints for g in random_cubic(cfg)]
    second = [g.endpoints for g in random_cubic(cfg)]
    assert first == second
    assert len(first) == 100


def test_random_graphs_are_cubic_and_connected():
    for g in random_cubic(GenConfig(10, GenMode.RANDOM, count=30, seed=7)):
        assert is_cubic(g)
        assert is_connected(g)
        assert all(u != v for u, v in g.endpoints)


def test_random_stream_ignores_worker_count():
    cfg = GenConfig(8, GenMode.RANDOM, count=6, seed=5)
    assert [g.endpoints for g in random_cubic(cfg, jobs=3)] == [g.endpoints for g in random_cubic(cfg)]


def test_seeds_differ():
    a = [g.endpoints for g in random_cubic(GenConfig(12, GenMode.RANDOM, count=5, seed=1))]
    b = [g.endpoints for g in random_cubic(GenConfig(12, GenMode.RANDOM, count=5, seed=2))]
    assert a != b


def test_odd_n_is_rejected():
    with pytest.raises(PreconditionError):
        GenConfig(3)
    with pytest.raises(PreconditionError):
        GenConfig(3, GenMode.RANDOM)


def test_exhaustive_cap():
    with pytest.raises(CapExceededError, match="EXHAUSTIVE_CAP"):
        GenConfig(14)
    assert GenConfig(14, GenMode.RANDOM).n == 14


def test_generate_dispatches_on_mode():
    assert len(list(generate(GenConfig(4)))) == 2
    assert len(list(generate(GenConfig(4, GenMode.RANDOM, count=4)))) == 4


def test_modes_are_not_mixed():
    with pytest.raises(PreconditionError):
        list(random_cubic(GenConfig(4)))
    with pytest.raises(PreconditionError):
        list(enumerate_cubic(GenConfig(4, GenMode.RANDOM)))

