"""Vertices, edges, hosts, and the two block shapes.

A block is either a hexagon (a 6-cycle) or a prism (two triangles joined by
a perfect matching, which is the complement of a 6-cycle on the same six
vertices).  Everything in this module is an immutable value and every
operation is a pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

Edge = tuple[int, int]


class InvalidBlockError(ValueError):
    """A block whose vertex tuple violates its shape invariants."""


def edge(u: int, v: int) -> Edge:
    """Normalized undirected edge: the ordered pair (min, max)."""
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edge_set(pairs) -> frozenset[Edge]:
    return frozenset(edge(u, v) for u, v in pairs)


# ---------------------------------------------------------------------------
# hosts


@dataclass(frozen=True)
class Complete:
    """The complete graph on vertices 0..n-1."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")


@dataclass(frozen=True)
class CompleteBipartite:
    """All edges between two disjoint vertex sets."""

    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        object.__setattr__(self, "right", frozenset(self.right))
        if not self.left or not self.right:
            raise ValueError("both sides must be nonempty")
        if self.left & self.right:
            raise ValueError("sides must be disjoint")


@dataclass(frozen=True)
class Explicit:
    """An explicit edge multiset; repeated pairs are multiplicities."""

    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple(sorted(edge(u, v) for u, v in self.edges))
        )


Host = Complete | CompleteBipartite | Explicit


def host_vertices(host: Host) -> tuple[int, ...]:
    if isinstance(host, Complete):
        return tuple(range(host.n))
    if isinstance(host, CompleteBipartite):
        return tuple(sorted(host.left | host.right))
    return tuple(sorted({v for e in host.edges for v in e}))


def host_edges(host: Host) -> Counter:
    """Edge multiset of a host, keyed by normalized edges."""
    if isinstance(host, Complete):
        return Counter(itertools.combinations(range(host.n), 2))
    if isinstance(host, CompleteBipartite):
        return Counter(edge(u, v) for u in host.left for v in host.right)
    return Counter(host.edges)


# ---------------------------------------------------------------------------
# blocks


@dataclass(frozen=True)
class Hexagon:
    """The 6-cycle a-b-c-d-e-f-a written as the tuple (a, b, c, d, e, f)."""

    vertices: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) != 6:
            raise InvalidBlockError(f"hexagon needs 6 vertices: {self.vertices}")


@dataclass(frozen=True)
class Prism:
    """Two triangles plus the matching pairing equal positions.

    [a, b, c; d, e, f] has triangles {a, b, c} and {d, e, f} and the rungs
    a-d, b-e, c-f.  The edge set is the complement of a 6-cycle.
    """

    first: tuple[int, int, int]
    second: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(self.first))
        object.__setattr__(self, "second", tuple(self.second))
        if len(self.first) != 3 or len(self.second) != 3:
            raise InvalidBlockError(
                f"prism needs two vertex triples: {self.first}; {self.second}"
            )


Block = Hexagon | Prism


def block_vertices(block: Block) -> tuple[int, ...]:
    if isinstance(block, Hexagon):
        return block.vertices
    return block.first + block.second


def block_edges(block: Block) -> frozenset[Edge]:
    """The 6 (hexagon) or 9 (prism) edges of a block."""
    vs = block_vertices(block)
    if len(set(vs)) != 6:
        raise InvalidBlockError(f"block vertices must be distinct: {block}")
    if isinstance(block, Hexagon):
        a, b, c, d, e, f = vs
        return frozenset(
            {edge(a, b), edge(b, c), edge(c, d), edge(d, e), edge(e, f), edge(a, f)}
        )
    a, b, c = block.first
    d, e, f = block.second
    return frozenset(
        {
            edge(a, b), edge(b, c), edge(a, c),
            edge(d, e), edge(e, f), edge(d, f),
            edge(a, d), edge(b, e), edge(c, f),
        }
    )


def canonical_form(block: Block) -> Block:
    """A unique representative: two blocks agree here iff their edge sets agree.

    Hexagons take the lexicographically least of the 12 rotations and
    reflections.  Prisms lead with the sorted triangle containing the least
    vertex; the second triple is written in matching order against the first.
    """
    block_edges(block)  # reject malformed input
    if isinstance(block, Hexagon):
        t = block.vertices
        variants = []
        for seq in (t, t[::-1]):
            for i in range(6):
                variants.append(seq[i:] + seq[:i])
        return Hexagon(min(variants))
    partner = {}
    for x, y in zip(block.first, block.second):
        partner[x] = y
        partner[y] = x
    t1 = set(block.first)
    t2 = set(block.second)
    lead = t1 if min(t1) < min(t2) else t2
    first = tuple(sorted(lead))
    return Prism(first, tuple(partner[v] for v in first))


def recognize(edges) -> Block | None:
    """Classify an edge set as a hexagon or prism, in canonical form.

    Returns a Hexagon for any connected 2-regular 6-vertex edge set, a Prism
    for any 3-regular 6-vertex edge set carrying exactly two vertex-disjoint
    triangles, and None for anything else.
    """
    try:
        es = edge_set(edges)
    except ValueError:
        return None
    vs = sorted({v for e in es for v in e})
    if len(vs) != 6:
        return None
    deg = Counter(v for e in es for v in e)

    if len(es) == 6 and all(deg[v] == 2 for v in vs):
        nbr = {v: [] for v in vs}
        for u, v in es:
            nbr[u].append(v)
            nbr[v].append(u)
        start = vs[0]
        cycle = [start, min(nbr[start])]
        while True:
            prev, cur = cycle[-2], cycle[-1]
            nxt = nbr[cur][0] if nbr[cur][1] == prev else nbr[cur][1]
            if nxt == start:
                break
            cycle.append(nxt)
        if len(cycle) != 6:
            return None  # disconnected, e.g. two triangles
        return canonical_form(Hexagon(tuple(cycle)))

    if len(es) == 9 and all(deg[v] == 3 for v in vs):
        triangles = [
            t
            for t in itertools.combinations(vs, 3)
            if edge(t[0], t[1]) in es and edge(t[0], t[2]) in es and edge(t[1], t[2]) in es
        ]
        if len(triangles) != 2:
            return None
        t1, t2 = triangles
        if set(t1) & set(t2):
            return None
        tri_edges = {
            edge(a, b) for t in triangles for a, b in itertools.combinations(t, 2)
        }
        rungs = es - tri_edges
        partner = {}
        for u, v in rungs:
            if (u in t1) == (v in t1):
                return None
            partner[u] = v
            partner[v] = u
        if len(partner) != 6:
            return None
        return canonical_form(Prism(t1, tuple(partner[v] for v in t1)))

    return None


def relabel_block(block: Block, mapping) -> Block:
    if isinstance(block, Hexagon):
        return Hexagon(tuple(mapping[v] for v in block.vertices))
    return Prism(
        tuple(mapping[v] for v in block.first),
        tuple(mapping[v] for v in block.second),
    )


# ---------------------------------------------------------------------------
# designs


class Kind(Enum):
    DECOMPOSITION = "decomposition"
    PACKING = "packing"
    COVERING = "covering"


@dataclass(frozen=True)
class Design:
    """A list of blocks against a host, with an optional leave or padding.

    Decompositions use the blocks exactly; packings additionally name the
    uncovered leave edges; coverings name the padding multiset of edge reuses.
    Construction does not validate; the verifier reports on any Design.
    """

    host: Host
    kind: Kind
    blocks: tuple[Block, ...]
    leave: frozenset[Edge] = frozenset()
    padding: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(
            self, "leave", frozenset(edge(u, v) for u, v in self.leave)
        )
        object.__setattr__(
            self, "padding", tuple(sorted(edge(u, v) for u, v in self.padding))
        )

    @property
    def hexagon_count(self) -> int:
        return sum(1 for b in self.blocks if isinstance(b, Hexagon))

    @property
    def prism_count(self) -> int:
        return sum(1 for b in self.blocks if isinstance(b, Prism))


def relabel_design(design: Design, mapping: dict[int, int]) -> Design:
    """Apply a vertex bijection to every part of a design.

    The mapping must be a bijection on the host vertex set; verification
    verdicts are invariant under this operation.
    """
    vs = host_vertices(design.host)
    if sorted(mapping) != list(vs) or sorted(mapping.values()) != list(vs):
        raise ValueError("mapping must be a bijection on the host vertex set")
    host = design.host
    if isinstance(host, CompleteBipartite):
        host = CompleteBipartite(
            frozenset(mapping[v] for v in host.left),
            frozenset(mapping[v] for v in host.right),
        )
    elif isinstance(host, Explicit):
        host = Explicit(tuple(edge(mapping[u], mapping[v]) for u, v in host.edges))
    return Design(
        host=host,
        kind=design.kind,
        blocks=tuple(relabel_block(b, mapping) for b in design.blocks),
        leave=frozenset(edge(mapping[u], mapping[v]) for u, v in design.leave),
        padding=tuple(edge(mapping[u], mapping[v]) for u, v in design.padding),
    )
