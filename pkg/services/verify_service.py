"""Claim checkers, the canonical graph corpus, campaigns and offline re-validation."""

from dataclasses import dataclass
from typing import Any, Callable, Iterable

from config import CONJECTURE_CAP, EXTREMAL_CAP, PERFECT_MATCHING_CAP
from services.coloring_service import (
    PartialColoring,
    check_complement_matching,
    iter_max_3ec_subgraphs,
    nu,
    validate,
)
from services.generator_service import GenConfig, enumerate_cubic
from services.kempe_service import extend_avoiding, extend_one_factor
from services.matching_service import (
    enumerate_maximal_matchings,
    enumerate_perfect_matchings,
    is_perfect_matching,
)
from utils.certificate import Certificate, Claim, Verdict
from utils.errors import CapExceededError, ClassificationViolation, PreconditionError
from utils.logger import log_certificate, log_extremal
from utils.multigraph import MultiGraph, build, hash_hex, is_matching, require_cubic
from utils.parallel import ordered_map


@dataclass(frozen=True)
class CanonGraph:
    name: str
    graph: MultiGraph


def _theta() -> MultiGraph:
    return build(2, [(0, 1)] * 3)


def _k4() -> MultiGraph:
    return build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def _k33() -> MultiGraph:
    return build(6, [(a, b) for a in range(3) for b in range(3, 6)])


def _petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return build(10, outer + spokes + inner)


def _s6() -> MultiGraph:
    # x1=0 y1=1 z1=2, x2=3 y2=4 z2=5; each triangle doubles its x-y edge
    return build(6, [
        (0, 1), (0, 1), (0, 2), (1, 2),
        (2, 5),
        (3, 4), (3, 4), (3, 5), (4, 5),
    ])


CANON_GRAPHS: dict[str, Callable[[], MultiGraph]] = {
    "THETA": _theta,
    "K4": _k4,
    "K33": _k33,
    "PETERSEN": _petersen,
    "S6": _s6,
}


def canon(name: str) -> CanonGraph:
    """Look up a graph of the shipped corpus by name (case-insensitive)."""
    key = name.upper()
    if key not in CANON_GRAPHS:
        raise PreconditionError(f"unknown graph {name!r}; corpus: {', '.join(CANON_GRAPHS)}")
    return CanonGraph(key, CANON_GRAPHS[key]())


def check_t1(g: MultiGraph) -> Certificate:
    return check_complement_matching(g)


def _violation(claim: Claim, g: MultiGraph, factor: list[int], exc: ClassificationViolation) -> Certificate:
    return Certificate(claim, g, Verdict.VIOLATION, {
        "factor": factor,
        "message": str(exc),
        "trace": exc.trace,
    })


def _check_extensions(claim: Claim, g: MultiGraph, extend, accept, cap: int) -> Certificate:
    require_cubic(g, f"check_{claim.value.lower()}")
    factors = enumerate_perfect_matchings(g, cap)
    value = nu(g, 3).value
    if not factors:
        return Certificate(claim, g, Verdict.PASS, {"nu3": value, "extensions": [], "note": "no 1-factor"})

    extensions = []
    for f in factors:
        try:
            c = extend(g, f)
        except ClassificationViolation as exc:
            return _violation(claim, g, f.sorted_edges(), exc)
        record = {"factor": f.sorted_edges(), "assignment": list(c.assignment)}
        if not (validate(c) and c.size == value and accept(c, f.edges)):
            return Certificate(claim, g, Verdict.FAIL, {"nu3": value, **record})
        extensions.append(record)
    return Certificate(claim, g, Verdict.PASS, {"nu3": value, "extensions": extensions})


def _contains_factor(c: PartialColoring, factor: frozenset[int]) -> bool:
    return factor <= c.colored_edges()


def _avoids_two_factor(c: PartialColoring, factor: frozenset[int]) -> bool:
    return set(c.uncolored_edges()) <= factor


def check_t2(g: MultiGraph, cap: int = PERFECT_MATCHING_CAP) -> Certificate:
    """Every 1-factor extends to a maximum 3-edge-colorable subgraph."""
    return _check_extensions(Claim.T2, g, extend_one_factor, _contains_factor, cap)


def check_t3(g: MultiGraph, cap: int = PERFECT_MATCHING_CAP) -> Certificate:
    """
    For every 1-factor F some maximum 3-edge-colorable subgraph H has
    E(H) and F covering E(G), i.e. the complementary 2-factor inside H.

    A failure of the alternating-cycle structure is reported as
    VIOLATION-FOUND with the trace of the offending state.
    """
    return _check_extensions(Claim.T3, g, extend_avoiding, _avoids_two_factor, cap)


def _nu_values(g: MultiGraph) -> dict[str, Any]:
    two, three = nu(g, 2), nu(g, 3)
    return {
        "nu2": two.value,
        "nu3": three.value,
        "nu2_assignment": list(two.witness.assignment),
        "nu3_assignment": list(three.witness.assignment),
    }


def check_t5(g: MultiGraph) -> Certificate:
    """nu_2 + nu_3 >= 2n, with both witnesses and an equality flag."""
    require_cubic(g, "check_t5")
    witness = _nu_values(g)
    total = witness["nu2"] + witness["nu3"]
    witness["equality"] = total == 2 * g.n
    verdict = Verdict.PASS if total >= 2 * g.n else Verdict.FAIL
    return Certificate(Claim.T5, g, verdict, witness)


def check_bounds(g: MultiGraph) -> Certificate:
    """
    nu_2 >= 4n/5 and nu_3 >= 7n/6, compared in integers.

    The two bounds can never be tight together (their sum is below 2n);
    a graph reporting both_tight fails.
    """
    require_cubic(g, "check_bounds")
    witness = _nu_values(g)
    nu2, nu3 = witness["nu2"], witness["nu3"]
    witness["nu2_tight"] = 5 * nu2 == 4 * g.n
    witness["nu3_tight"] = 6 * nu3 == 7 * g.n
    witness["both_tight"] = witness["nu2_tight"] and witness["nu3_tight"]
    holds = 5 * nu2 >= 4 * g.n and 6 * nu3 >= 7 * g.n and not witness["both_tight"]
    return Certificate(Claim.BOUNDS, g, Verdict.PASS if holds else Verdict.FAIL, witness)


def check_factor_nu2(g: MultiGraph, cap: int = PERFECT_MATCHING_CAP) -> Certificate:
    """
    Report which 1-factors lie in some maximum 2-edge-colorable subgraph.

    Unlike the 3-color case this can fail; FAIL here is data, not an error.
    """
    require_cubic(g, "check_factor_nu2")
    best = nu(g, 2)
    factors = []
    for f in enumerate_perfect_matchings(g, cap):
        record = nu(g, 2, required=f.edges)
        extendable = record is not None and record.value == best.value
        entry = {"factor": f.sorted_edges(), "extendable": extendable}
        if record is not None:
            entry["value"] = record.value
            entry["assignment"] = list(record.witness.assignment)
        factors.append(entry)
    verdict = Verdict.PASS if all(entry["extendable"] for entry in factors) else Verdict.FAIL
    return Certificate(Claim.F2, g, verdict, {
        "nu2": best.value,
        "nu2_assignment": list(best.witness.assignment),
        "factors": factors,
    })


def conjecture_certificates(g: MultiGraph, cap: int = CONJECTURE_CAP) -> list[Certificate]:
    """
    One certificate per maximal matching F: PASS when the uncolored set of
    some maximum 3-edge-colorable subgraph lies inside F. A FAIL lists every
    such uncolored set, each with its coloring.
    """
    require_cubic(g, "check_conjecture")
    if g.n > cap:
        raise CapExceededError("check_conjecture", g.n, cap, "CONJECTURE_CAP")
    value = nu(g, 3).value
    subgraphs = [
        {"uncolored": sorted(removed), "assignment": assignment}
        for removed, assignment in iter_max_3ec_subgraphs(g)
    ]

    certificates = []
    for matching in enumerate_maximal_matchings(g):
        cover = next((s for s in subgraphs if set(s["uncolored"]) <= matching), None)
        witness: dict[str, Any] = {"nu3": value, "matching": sorted(matching), "covered_by": cover}
        if cover is None:
            witness["complements"] = subgraphs
        certificates.append(Certificate(Claim.CONJ, g, Verdict.PASS if cover is not None else Verdict.FAIL, witness))
    return certificates


def check_conjecture(g: MultiGraph, cap: int = CONJECTURE_CAP) -> Certificate:
    cases = conjecture_certificates(g, cap)
    verdict = Verdict.PASS if all(cert.passed for cert in cases) else Verdict.FAIL
    return Certificate(Claim.CONJ, g, verdict, {
        "nu3": cases[0].witness["nu3"] if cases else nu(g, 3).value,
        "cases": [{key: val for key, val in cert.witness.items() if key != "nu3"} for cert in cases],
    })


def run_campaign(
    graphs: Iterable[MultiGraph],
    checker: Callable[[MultiGraph], Certificate | list[Certificate]],
    jobs: int = 1,
) -> list[Certificate]:
    """
    Run a checker over many graphs, certificates in input order.

    Args:
        graphs: The corpus
        checker: A top-level checker returning one certificate or a list
        jobs: Worker processes

    Returns:
        Flat list of certificates, each logged once
    """
    certificates = []
    for result in ordered_map(checker, graphs, jobs):
        certificates.extend(result if isinstance(result, list) else [result])
    for cert in certificates:
        log_certificate(cert.claim.value, cert.verdict.value, hash_hex(cert.graph))
    return certificates


def search_extremal(max_n: int, jobs: int = 1) -> list[Certificate]:
    """
    Connected cubic multigraphs on at most max_n vertices with nu_2 + nu_3 = 2n.

    Returns:
        EXTREMAL certificates carrying the check_t5 witness, by n then
        enumeration order
    """
    if max_n > EXTREMAL_CAP:
        raise CapExceededError("search_extremal", max_n, EXTREMAL_CAP, "EXTREMAL_CAP")
    found = []
    for n in range(2, max_n + 1, 2):
        graphs = list(enumerate_cubic(GenConfig(n), jobs))
        for cert in ordered_map(check_t5, graphs, jobs):
            if cert.witness["equality"]:
                found.append(Certificate(Claim.EXTREMAL, cert.graph, Verdict.PASS, cert.witness))
    log_extremal(max_n, len(found))
    return found


def _coloring(g: MultiGraph, assignment: list[int], k: int) -> PartialColoring | None:
    """Parse an assignment using colors 1..k, or None when it is malformed or improper."""
    if len(assignment) != g.m or any(c not in range(k + 1) for c in assignment):
        return None
    c = PartialColoring(g, tuple(assignment))
    return c if validate(c) else None


def _has_size(g: MultiGraph, assignment: list[int], k: int, size: int) -> bool:
    c = _coloring(g, assignment, k)
    return c is not None and c.size == size


def _uncolored_exactly(g: MultiGraph, assignment: list[int], uncolored: list[int], size: int) -> bool:
    c = _coloring(g, assignment, 3)
    return c is not None and c.size == size and c.uncolored_edges() == sorted(uncolored)


def _is_maximal_matching(g: MultiGraph, edges: list[int]) -> bool:
    if not is_matching(g, edges):
        return False
    covered = {v for e in edges for v in g.endpoints[e]}
    return all(u in covered or v in covered for u, v in g.endpoints)


def _revalidate_values(g: MultiGraph, w: dict[str, Any]) -> bool:
    return _has_size(g, w["nu2_assignment"], 2, w["nu2"]) and _has_size(g, w["nu3_assignment"], 3, w["nu3"])


def _revalidate_conj_case(g: MultiGraph, nu3: int, case: dict[str, Any]) -> bool:
    if not _is_maximal_matching(g, case["matching"]):
        return False
    cover = case["covered_by"]
    if cover is not None:
        return (
            set(cover["uncolored"]) <= set(case["matching"])
            and _uncolored_exactly(g, cover["assignment"], cover["uncolored"], nu3)
        )
    return all(
        not set(s["uncolored"]) <= set(case["matching"])
        and _uncolored_exactly(g, s["assignment"], s["uncolored"], nu3)
        for s in case["complements"]
    )


def revalidate(cert: Certificate) -> bool:
    """
    Re-check a certificate from its own payload; no search is repeated.

    Witness colorings prove the stated values are attained, so PASS
    verdicts on lower bounds are fully certified; FAIL verdicts are
    checked for internal consistency.
    """
    g, w = cert.graph, cert.witness
    if cert.verdict is Verdict.VIOLATION:
        return bool(w.get("trace"))
    passed = cert.verdict is Verdict.PASS

    if cert.claim is Claim.T1:
        if not passed:
            return (
                not is_matching(g, w["uncolored"])
                and _uncolored_exactly(g, w["assignment"], w["uncolored"], w["nu3"])
            )
        return bool(w["subgraphs"]) and all(
            is_matching(g, s["uncolored"]) and _uncolored_exactly(g, s["assignment"], s["uncolored"], w["nu3"])
            for s in w["subgraphs"]
        )

    if cert.claim in (Claim.T2, Claim.T3):
        records = w["extensions"] if passed else [w]

        def holds(record: dict[str, Any]) -> bool:
            factor = frozenset(record["factor"])
            c = _coloring(g, record["assignment"], 3)
            if c is None or c.size != w["nu3"] or not is_perfect_matching(g, factor):
                return False
            if cert.claim is Claim.T2:
                return _contains_factor(c, factor)
            return _avoids_two_factor(c, factor)

        return all(holds(r) for r in records) if passed else not holds(w)

    if cert.claim in (Claim.T5, Claim.EXTREMAL):
        total = w["nu2"] + w["nu3"]
        if not _revalidate_values(g, w) or w["equality"] != (total == 2 * g.n):
            return False
        if cert.claim is Claim.EXTREMAL:
            return passed and w["equality"]
        return passed == (total >= 2 * g.n)

    if cert.claim is Claim.BOUNDS:
        nu2, nu3 = w["nu2"], w["nu3"]
        consistent = (
            _revalidate_values(g, w)
            and w["nu2_tight"] == (5 * nu2 == 4 * g.n)
            and w["nu3_tight"] == (6 * nu3 == 7 * g.n)
        )
        holds = 5 * nu2 >= 4 * g.n and 6 * nu3 >= 7 * g.n and not (w["nu2_tight"] and w["nu3_tight"])
        return consistent and passed == holds

    if cert.claim is Claim.F2:
        if not _has_size(g, w["nu2_assignment"], 2, w["nu2"]):
            return False
        for entry in w["factors"]:
            if not is_perfect_matching(g, frozenset(entry["factor"])):
                return False
            if entry["extendable"]:
                c = _coloring(g, entry["assignment"], 2)
                if c is None or c.size != w["nu2"] or not frozenset(entry["factor"]) <= c.colored_edges():
                    return False
        return passed == all(entry["extendable"] for entry in w["factors"])

    if cert.claim is Claim.CONJ:
        cases = w["cases"] if "cases" in w else [w]
        return passed == all(c["covered_by"] is not None for c in cases) and all(
            _revalidate_conj_case(g, w["nu3"], case) for case in cases
        )

    return False


CHECKERS: dict[str, Callable[[MultiGraph], Certificate | list[Certificate]]] = {
    "t1": check_t1,
    "t2": check_t2,
    "t3": check_t3,
    "t5": check_t5,
    "bounds": check_bounds,
    "conjecture": conjecture_certificates,
    "f2": check_factor_nu2,
}
