"""Hexagon decompositions of complete bipartite graphs.

Every admissible K_{m,n} (sides at least 4 and even, 6 dividing mn) is tiled
from two bundled seeds, a 6-by-6 and a 4-by-6 decomposition, translated
across a grid of side groups.  Under the admissibility conditions one side
is always divisible by 6: both sides are even, and 3 divides mn, so 3 (and
hence 6) divides one of them.  That side is cut into groups of 6; the other
follows side_partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bases import load_base
from .core import CompleteBipartite, Design, Kind, relabel_block


class InfeasibleParametersError(ValueError):
    """Bipartite parameters outside the admissible set; names the clause."""


@dataclass(frozen=True)
class BipartiteSpec:
    left: frozenset
    right: frozenset

    def __init__(self, left, right):
        object.__setattr__(self, "left", frozenset(left))
        object.__setattr__(self, "right", frozenset(right))
        if not self.left or not self.right:
            raise ValueError("both sides must be nonempty")
        if self.left & self.right:
            raise ValueError("sides must be disjoint")


def side_partition(n: int) -> tuple[int, ...]:
    """Cut an admissible side size into parts of 4 and 6.

    Sizes 0 mod 6 become all 6s, sizes 2 mod 6 two 4s then 6s, sizes
    4 mod 6 one 4 then 6s.
    """
    if n % 2:
        raise ValueError(f"side size must be even, got {n}")
    if n < 4:
        raise ValueError(f"side size must be at least 4, got {n}")
    if n % 6 == 0:
        return (6,) * (n // 6)
    if n % 6 == 2:
        return (4, 4) + (6,) * ((n - 8) // 6)
    return (4,) + (6,) * ((n - 4) // 6)


def _seed_maps(part, group):
    """Vertex mapping from the fitting seed onto (4-or-6 part, 6-group)."""
    if len(part) == 6:
        seed = load_base("b66_hexagons")
    else:
        seed = load_base("b46_hexagons")
    host = seed.host
    mapping = {}
    for src, dst in zip(sorted(host.left), part):
        mapping[src] = dst
    for src, dst in zip(sorted(host.right), group):
        mapping[src] = dst
    return seed, mapping


def c6_decompose_bipartite(spec: BipartiteSpec) -> Design:
    """Decompose the complete bipartite graph on the given sides into
    hexagons, mn/6 of them, each alternating between the sides."""
    m, n = len(spec.left), len(spec.right)
    for label, size in (("left", m), ("right", n)):
        if size < 4:
            raise InfeasibleParametersError(
                f"{label} side has {size} vertices; both sides need at least 4"
            )
        if size % 2:
            raise InfeasibleParametersError(
                f"{label} side has {size} vertices; both sides must be even"
            )
    if (m * n) % 6:
        raise InfeasibleParametersError(
            f"6 must divide the edge count, but {m} * {n} = {m * n} is not divisible by 6"
        )
    if m % 6 == 0:
        axis, other = sorted(spec.left), sorted(spec.right)
    else:
        assert n % 6 == 0, "one even side must be divisible by 6 when 3 divides mn"
        axis, other = sorted(spec.right), sorted(spec.left)
    groups = [axis[i : i + 6] for i in range(0, len(axis), 6)]
    parts = []
    at = 0
    for size in side_partition(len(other)):
        parts.append(other[at : at + size])
        at += size
    blocks = []
    for group in groups:
        for part in parts:
            seed, mapping = _seed_maps(part, group)
            blocks.extend(relabel_block(b, mapping) for b in seed.blocks)
    return Design(
        host=CompleteBipartite(spec.left, spec.right),
        kind=Kind.DECOMPOSITION,
        blocks=tuple(blocks),
    )
