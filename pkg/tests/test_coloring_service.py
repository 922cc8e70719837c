import pytest

from services.coloring_service import (
    PartialColoring,
    brute_force_nu,
    check_complement_matching,
    colors_at,
    edge_colorable,
    enumerate_max_3ec_complements,
    nu,
    validate,
)
from services.generator_service import GenConfig, GenMode, random_cubic
from tests.helpers import cubic_graphs, graphs_up_to
from utils.certificate import Verdict
from utils.errors import CapExceededError, PreconditionError
from utils.multigraph import is_matching


@pytest.mark.parametrize("k, value", [(1, 1), (2, 2), (3, 3)])
def test_nu_theta(theta, k, value):
    assert nu(theta, k).value == value


@pytest.mark.parametrize("k, value", [(1, 3), (2, 5), (3, 7)])
def test_nu_s6(s6, k, value):
    assert nu(s6, k).value == value


@pytest.mark.parametrize("k, value", [(1, 2), (2, 4), (3, 6)])
def test_nu_k4(k4, k, value):
    assert nu(k4, k).value == value


@pytest.mark.parametrize("k, value", [(1, 5), (2, 9), (3, 13)])
def test_nu_petersen(petersen, k, value):
    assert nu(petersen, k).value == value


def test_witness_is_canonical(theta, s6):
    assert nu(theta, 1).witness.assignment == (0, 0, 1)
    assert nu(s6, 3).witness.assignment == (0, 1, 2, 3, 1, 0, 1, 2, 3)


def test_record_json(s6):
    data = nu(s6, 2).to_json()
    assert data["k"] == 2
    assert data["value"] == 5
    assert sum(len(m) for m in data["matchings"]) == 5
    assert data["witness"]["assignment"] == list(nu(s6, 2).witness.assignment)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_witness_is_proper_and_uses_k_colors(petersen, k):
    record = nu(petersen, k)
    assert validate(record.witness)
    assert record.witness.size == record.value
    assert max(record.witness.assignment) <= k
    assert all(is_matching(petersen, m) for m in record.matchings())


def test_bad_k(theta):
    with pytest.raises(PreconditionError):
        nu(theta, 4)


def test_required_edges(s6, k4):
    record = nu(s6, 3, required=frozenset({3, 8}))
    assert record.value == 7
    assert record.witness.color(3) and record.witness.color(8)

    # a triangle is not 2-edge-colorable
    assert nu(k4, 2, required=frozenset({0, 1, 3})) is None


def test_hand_checked_witness(s6_witness):
    assert validate(s6_witness)
    assert s6_witness.size == 7
    assert colors_at(s6_witness, 1) == {1, 2}
    assert s6_witness.uncolored_edges() == [3, 8]


def test_validate_detects_clash(theta):
    assert not validate(PartialColoring(theta, (1, 1, 0)))
    assert validate(PartialColoring(theta, (1, 2, 0)))


def test_from_list_checks_input(theta):
    with pytest.raises(PreconditionError):
        PartialColoring.from_list(theta, [1, 2])
    with pytest.raises(PreconditionError):
        PartialColoring.from_list(theta, [1, 2, 4])


def test_recolor_returns_a_new_value(s6_witness):
    moved = s6_witness.recolor({3: 3, 2: 0})
    assert s6_witness.color(3) == 0
    assert moved.color(3) == 3
    assert moved.size == s6_witness.size


def test_edge_colorable(k4, petersen):
    assignment = edge_colorable(k4, 3)
    assert validate(PartialColoring(k4, tuple(assignment)))
    assert edge_colorable(petersen, 3) is None
    removed = enumerate_max_3ec_complements(petersen)[0]
    assert len(removed) == 2
    assert edge_colorable(petersen, 3, removed) is not None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_oracle_on_canonical_graphs(theta, k4, s6, k, petersen):
    for g in (theta, k4, s6):
        assert nu(g, k).value == brute_force_nu(g, k)
    assert nu(petersen, 3).value == brute_force_nu(petersen, 3)


@pytest.mark.parametrize("k", [2, 3])
def test_oracle_up_to_six_vertices(k):
    for g in graphs_up_to(6):
        assert nu(g, k).value == brute_force_nu(g, k)


@pytest.mark.slow
def test_oracle_on_eight_vertices():
    for g in cubic_graphs(8):
        assert nu(g, 3).value == brute_force_nu(g, 3)


@pytest.mark.slow
def test_oracle_on_random_ten_vertex_graphs():
    cfg = GenConfig(10, GenMode.RANDOM, count=200, seed=42)
    for g in random_cubic(cfg):
        assert nu(g, 3).value == brute_force_nu(g, 3)


def test_s6_complements(s6):
    complements = enumerate_max_3ec_complements(s6)
    assert frozenset({3, 8}) in complements
    assert frozenset({0, 5}) in complements
    assert all(len(u) == 2 and is_matching(s6, u) for u in complements)


def test_complement_cap(petersen):
    with pytest.raises(CapExceededError, match="COMPLEMENT_CAP"):
        enumerate_max_3ec_complements(petersen, cap=8)


def test_complement_matching_certificate(s6):
    cert = check_complement_matching(s6)
    assert cert.verdict is Verdict.PASS
    assert cert.witness["nu3"] == 7
    assert len(cert.witness["subgraphs"]) == len(enumerate_max_3ec_complements(s6))


def test_colorable_graph_has_empty_complement(k4):
    assert enumerate_max_3ec_complements(k4) == [frozenset()]
    assert check_complement_matching(k4).passed


def check_nu_chain(graphs):
    for g in graphs:
        nu1, nu2, nu3 = (nu(g, k).value for k in (1, 2, 3))
        assert nu1 <= nu2 <= nu3 <= g.m
        assert nu2 <= 2 * nu1


def test_nu_chain_up_to_eight_vertices():
    check_nu_chain(graphs_up_to(8))


@pytest.mark.slow
def test_nu_chain_on_ten_vertices():
    check_nu_chain(cubic_graphs(10))
