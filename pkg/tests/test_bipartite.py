from __future__ import annotations

import random

import pytest

from hexprism.bipartite import (
    BipartiteSpec,
    InfeasibleParametersError,
    c6_decompose_bipartite,
    side_partition,
)
from hexprism.core import CompleteBipartite, Hexagon
from hexprism.verifier import verify_design


def test_side_partition_values():
    assert side_partition(4) == (4,)
    assert side_partition(6) == (6,)
    assert side_partition(8) == (4, 4)
    assert side_partition(10) == (4, 6)
    assert side_partition(12) == (6, 6)
    assert side_partition(14) == (4, 4, 6)
    assert side_partition(16) == (4, 6, 6)
    assert side_partition(18) == (6, 6, 6)
    assert side_partition(20) == (4, 4, 6, 6)


def test_side_partition_rejects_bad_sizes():
    for bad in (2, 3, 5, 7, 9):
        with pytest.raises(ValueError):
            side_partition(bad)


def test_spec_validation():
    with pytest.raises(ValueError):
        BipartiteSpec(frozenset(), frozenset({1}))
    with pytest.raises(ValueError):
        BipartiteSpec(frozenset({1, 2}), frozenset({2, 3}))


def _sides(m, n):
    return BipartiteSpec(frozenset(range(m)), frozenset(range(m, m + n)))


def test_infeasible_parameters():
    with pytest.raises(InfeasibleParametersError, match="at least 4"):
        c6_decompose_bipartite(_sides(2, 6))
    with pytest.raises(InfeasibleParametersError, match="even"):
        c6_decompose_bipartite(_sides(5, 6))
    with pytest.raises(InfeasibleParametersError, match="divisible by 6"):
        c6_decompose_bipartite(_sides(4, 4))
    with pytest.raises(InfeasibleParametersError, match="divisible by 6"):
        c6_decompose_bipartite(_sides(8, 10))


def test_decomposes_seed_shapes():
    for m, n in [(4, 6), (6, 6)]:
        design = c6_decompose_bipartite(_sides(m, n))
        assert len(design.blocks) == m * n // 6
        report = verify_design(design, require_both_types=False)
        assert report.valid


def test_blocks_alternate_sides():
    spec = _sides(8, 12)
    design = c6_decompose_bipartite(spec)
    for block in design.blocks:
        assert isinstance(block, Hexagon)
        pattern = ["L" if v in spec.left else "R" for v in block.vertices]
        assert pattern in (["L", "R"] * 3, ["R", "L"] * 3)


def test_full_even_grid():
    """All feasible even-by-even shapes with both sides in range decompose."""
    for m in range(4, 21, 2):
        for n in range(4, 21, 2):
            if (m * n) % 6 != 0:
                continue
            design = c6_decompose_bipartite(_sides(m, n))
            assert len(design.blocks) == m * n // 6
            report = verify_design(design, require_both_types=False)
            assert report.valid, (m, n)


def test_arbitrary_vertex_labels():
    rng = random.Random(23)
    labels = rng.sample(range(1000), 18)
    left = frozenset(labels[:6])
    right = frozenset(labels[6:])
    design = c6_decompose_bipartite(BipartiteSpec(left, right))
    assert design.host == CompleteBipartite(left, right)
    report = verify_design(design, require_both_types=False)
    assert report.valid
    assert len(design.blocks) == 12


def test_deterministic_output():
    a = c6_decompose_bipartite(_sides(6, 10))
    b = c6_decompose_bipartite(_sides(6, 10))
    assert a == b
