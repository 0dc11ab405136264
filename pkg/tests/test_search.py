from __future__ import annotations

from collections import Counter

import pytest

from hexprism.bases import load_base
from hexprism.catalog import CatalogKey, CatalogKind, get as catalog_get
from hexprism.core import (
    Complete,
    CompleteBipartite,
    Explicit,
    Hexagon,
    Kind,
    Prism,
    block_edges,
    canonical_form,
    host_edges,
)
from hexprism.search import (
    InfeasibleBoundError,
    MultigraphHostError,
    SearchConfig,
    Status,
    confirm_nonexistence,
    find_extremal,
    hexagons_through,
    prisms_through,
    search_multidecomposition,
)
from hexprism.verifier import verify_design


def _complete_adjacency(n):
    return {v: set(range(n)) - {v} for v in range(n)}


def test_hexagons_through_complete_host():
    adj = _complete_adjacency(6)
    found = hexagons_through(adj, (0, 1))
    # 6-cycles through a fixed edge of K6: choose and order the path 4!
    assert len(found) == 24
    assert len({canonical_form(h) for h in found}) == 24
    for h in found:
        assert (0, 1) in [tuple(sorted(e)) for e in map(sorted, block_edges(h))] or (
            0,
            1,
        ) in block_edges(h)


def test_prisms_through_complete_host():
    adj = _complete_adjacency(6)
    found = prisms_through(adj, (0, 1))
    canon = {canonical_form(p) for p in found}
    assert len(found) == len(canon)
    # brute force: of the 60 labeled prisms on 6 vertices, those using edge 0-1
    from itertools import permutations

    expect = {
        canonical_form(Prism(perm[:3], perm[3:]))
        for perm in permutations(range(6))
        if (0, 1) in block_edges(Prism(perm[:3], perm[3:]))
    }
    assert canon == expect


def test_search_k6_matches_bundled_design():
    outcome = search_multidecomposition(
        Complete(6), SearchConfig(symmetry_breaking=True)
    )
    assert outcome.status is Status.FOUND
    report = verify_design(outcome.design)
    assert report.valid
    bundled = catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 6))
    assert Counter(map(canonical_form, outcome.design.blocks)) == Counter(
        map(canonical_form, bundled.blocks)
    )


def test_search_k7_exhausts():
    outcome = search_multidecomposition(
        Complete(7), SearchConfig(symmetry_breaking=True)
    )
    assert outcome.status is Status.EXHAUSTED
    assert outcome.design is None
    assert outcome.stats.nodes >= 1


def test_search_k12_finds_both_shapes():
    outcome = search_multidecomposition(
        Complete(12),
        SearchConfig(
            min_hexagons=1, min_prisms=1, symmetry_breaking=True, node_budget=100_000
        ),
    )
    assert outcome.status is Status.FOUND
    report = verify_design(outcome.design)
    assert report.valid
    assert report.hexagon_count >= 1 and report.prism_count >= 1


def test_search_k9_hexagons_matches_frozen():
    outcome = search_multidecomposition(
        Complete(9),
        SearchConfig(prisms=False, symmetry_breaking=True),
    )
    assert outcome.status is Status.FOUND
    frozen = load_base("k9_hexagons")
    assert Counter(map(canonical_form, outcome.design.blocks)) == Counter(
        map(canonical_form, frozen.blocks)
    )


def test_search_k10_prisms_matches_frozen():
    outcome = search_multidecomposition(
        Complete(10),
        SearchConfig(hexagons=False, symmetry_breaking=True),
    )
    assert outcome.status is Status.FOUND
    frozen = load_base("k10_prisms")
    assert Counter(map(canonical_form, outcome.design.blocks)) == Counter(
        map(canonical_form, frozen.blocks)
    )


def test_search_bipartite_host():
    host = CompleteBipartite(frozenset(range(6)), frozenset(range(6, 12)))
    outcome = search_multidecomposition(
        host, SearchConfig(prisms=False, symmetry_breaking=True, node_budget=50_000)
    )
    assert outcome.status is Status.FOUND
    assert len(outcome.design.blocks) == 6
    assert verify_design(outcome.design, require_both_types=False).valid


def test_budget_halts_search():
    outcome = search_multidecomposition(
        Complete(12), SearchConfig(symmetry_breaking=True, node_budget=2)
    )
    assert outcome.status is Status.BUDGET
    assert outcome.design is None


def test_large_host_requires_budget():
    with pytest.raises(ValueError, match="budget"):
        search_multidecomposition(Complete(12), SearchConfig())


def test_multigraph_host_rejected():
    with pytest.raises(MultigraphHostError):
        search_multidecomposition(
            Explicit(((0, 1), (0, 1), (1, 2))), SearchConfig()
        )


def test_infeasible_edge_count_exhausts_immediately():
    # 10 edges cannot be 6x + 9y
    host = Explicit(tuple(sorted(host_edges(Complete(5)))))
    outcome = search_multidecomposition(host, SearchConfig())
    assert outcome.status is Status.EXHAUSTED


def test_extremal_packing_bound_rejected_arithmetically():
    with pytest.raises(InfeasibleBoundError, match="no solution"):
        find_extremal(Complete(7), Kind.PACKING, 3)
    with pytest.raises(InfeasibleBoundError):
        find_extremal(Complete(8), Kind.PACKING, 2)


def test_extremal_covering_bound_three_exhausts_on_k7():
    outcome = find_extremal(Complete(7), Kind.COVERING, 3)
    assert outcome.status is Status.EXHAUSTED
    assert outcome.design is None
    assert outcome.stats.nodes > 0


def test_extremal_packing_finds_k8_leave_one():
    outcome = find_extremal(Complete(8), Kind.PACKING, 1)
    assert outcome.status is Status.FOUND
    design = outcome.design
    assert design.kind is Kind.PACKING
    assert len(design.leave) == 1
    assert verify_design(design).valid


def test_extremal_covering_finds_k8_padding_two():
    outcome = find_extremal(Complete(8), Kind.COVERING, 2, node_budget=200_000)
    assert outcome.status is Status.FOUND
    design = outcome.design
    assert design.kind is Kind.COVERING
    assert len(design.padding) == 2
    assert verify_design(design).valid


def test_nonexistence_order_seven():
    report = confirm_nonexistence(7)
    assert report.nonexistent
    assert report.branches_agree
    assert report.cases == ((2, 1),)
    assert report.analytic_complete
    assert report.enumerative_complete


def test_nonexistence_order_nine():
    report = confirm_nonexistence(9)
    assert report.nonexistent
    assert report.branches_agree
    assert set(report.cases) == {(3, 2)}
    assert report.enumerative_complete


def test_nonexistence_order_ten():
    report = confirm_nonexistence(10)
    assert report.nonexistent
    assert report.branches_agree
    assert set(report.cases) == {(6, 1), (3, 3)}
    # the all-prisms case falls to arithmetic; the mixed case only to
    # enumeration, since degree 9 admits both one and three prisms per vertex
    assert (6, 1) in report.analytic_eliminated
    assert (3, 3) not in report.analytic_eliminated
    assert report.enumerative_complete


def test_nonexistence_rejects_other_orders():
    with pytest.raises(ValueError):
        confirm_nonexistence(8)
