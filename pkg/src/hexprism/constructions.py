"""Recursive construction of decompositions, packings, and coverings.

A complete graph is split into an ordered join of cliques.  Bundled base
designs land on single parts or on small groups of parts, every remaining
cross pair gets a bipartite hexagon fill, and the concatenation in layout
order is the output.  The three exceptional orders have no layout and are
built monolithically from a bundled design plus one block transformation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bases import load_base
from .bipartite import BipartiteSpec, c6_decompose_bipartite
from .catalog import CatalogKey, CatalogKind, get as catalog_get
from .core import (
    Complete,
    Design,
    Hexagon,
    Kind,
    Prism,
    canonical_form,
    edge,
    relabel_block,
)
from .feasibility import FeasibilityReport, classify, nonexistence_reason


class InfeasibleOrderError(ValueError):
    """The requested construction does not exist at this order."""

    def __init__(self, report: FeasibilityReport, message: str):
        super().__init__(message)
        self.report = report


class PartKind(Enum):
    K1 = 1
    K2 = 2
    K4 = 4
    K6 = 6
    K8 = 8
    K10 = 10
    K12 = 12
    K14 = 14
    K16 = 16


@dataclass(frozen=True)
class Part:
    kind: PartKind
    start: int

    @property
    def size(self) -> int:
        return self.kind.value

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.start + self.size))


@dataclass(frozen=True)
class JoinLayout:
    n: int
    parts: tuple[Part, ...]

    def __post_init__(self):
        at = 0
        for part in self.parts:
            if part.start != at:
                raise ValueError("part intervals must be contiguous from 0")
            at += part.size
        if at != self.n:
            raise ValueError(f"part sizes sum to {at}, expected {self.n}")

    def cross_pairs(self) -> tuple[tuple[int, int], ...]:
        k = len(self.parts)
        return tuple((i, j) for i in range(k) for j in range(i + 1, k))


def _layout(n: int, kinds) -> JoinLayout:
    parts = []
    at = 0
    for kind in kinds:
        parts.append(Part(kind, at))
        at += kind.value
    return JoinLayout(n, tuple(parts))


def join_layout(n: int, kind: Kind) -> JoinLayout:
    """The deterministic part sequence used to build the given kind at
    order n.  Orders handled monolithically (and orders where the kind does
    not apply) have no layout and raise with the feasibility report."""
    report = classify(n)
    K = PartKind
    if kind is Kind.DECOMPOSITION:
        if not report.decomposition_exists:
            raise InfeasibleOrderError(
                report, f"no decomposition of order {n}: {nonexistence_reason(n)}"
            )
        r = n % 6
        if r == 0:
            return _layout(n, [K.K6] * (n // 6))
        if r == 1:
            x = (n - 1) // 6
            if x % 2 == 0:
                return _layout(n, [K.K1] + [K.K12] * (x // 2))
            return _layout(n, [K.K1, K.K6] + [K.K12] * ((x - 1) // 2))
        if r == 3:
            x = (n - 3) // 6
            if x % 2 == 0:
                return _layout(n, [K.K1, K.K14] + [K.K12] * (x // 2 - 1))
            return _layout(n, [K.K1, K.K8] + [K.K12] * ((x - 1) // 2))
        return _layout(n, [K.K10] + [K.K6] * ((n - 4) // 6 - 1))

    if report.decomposition_exists:
        raise InfeasibleOrderError(
            report,
            f"order {n} admits a decomposition; {kind.value}s of it have no join layout",
        )
    if n in (7, 9, 10):
        raise InfeasibleOrderError(
            report, f"order {n} is handled monolithically and has no join layout"
        )
    r = n % 6
    if kind is Kind.PACKING:
        if r == 2:
            return _layout(n, [K.K2] + [K.K6] * ((n - 2) // 6))
        x = (n - 5) // 6
        if x % 2 == 0:
            return _layout(n, [K.K1, K.K16] + [K.K12] * (x // 2 - 1))
        return _layout(n, [K.K1, K.K10] + [K.K12] * ((x - 1) // 2))
    if kind is Kind.COVERING:
        if r == 2:
            return _layout(n, [K.K8] + [K.K6] * ((n - 2) // 6 - 1))
        x = (n - 5) // 6
        if x % 2 == 0:
            return _layout(n, [K.K1, K.K4] + [K.K12] * (x // 2))
        return _layout(n, [K.K1, K.K4, K.K6] + [K.K12] * ((x - 1) // 2))
    raise ValueError(f"unsupported kind {kind}")


# ---------------------------------------------------------------------------
# block transformations


def prism_minus_matching(p: Prism) -> tuple[Hexagon, frozenset]:
    """Drop a fixed perfect matching from the prism, leaving a hexagon.

    On the canonical form [a,b,c;d,e,f] the matching is {ab, cf, de}; the
    rung matching would leave two triangles instead, so one triangle edge,
    one rung, and one far-triangle edge are removed.
    """
    cp = canonical_form(p)
    a, b, c = cp.first
    d, e, f = cp.second
    matching = frozenset({edge(a, b), edge(c, f), edge(d, e)})
    return Hexagon((b, c, a, d, f, e)), matching


def hexagon_plus_factor(h: Hexagon) -> tuple[Prism, frozenset]:
    """Add a fixed 1-factor to the hexagon, producing a prism.

    On the canonical form (a,b,c,d,e,f) the added matching is {ac, df, be},
    closing triangles {a,b,c} and {d,e,f} with rungs cd, fa, be.
    """
    ch = canonical_form(h)
    a, b, c, d, e, f = ch.vertices
    matching = frozenset({edge(a, c), edge(d, f), edge(b, e)})
    return Prism((a, b, c), (f, e, d)), matching


def prism_to_two_hexagons(p: Prism) -> tuple[Hexagon, Hexagon, frozenset]:
    """Split the prism into two hexagons at the cost of doubling 3 edges.

    On the canonical form [a,b,c;d,e,f] the hexagons are (a,b,c,f,e,d) and
    (a,c,b,e,f,d); edges bc, ef, ad are used by both and form the padding.
    """
    cp = canonical_form(p)
    a, b, c = cp.first
    d, e, f = cp.second
    first = Hexagon((a, b, c, f, e, d))
    second = Hexagon((a, c, b, e, f, d))
    padding = frozenset({edge(b, c), edge(e, f), edge(a, d)})
    return first, second, padding


# ---------------------------------------------------------------------------
# assembly helpers


def _embed(design: Design, targets) -> tuple[tuple, frozenset, tuple]:
    """Blocks, leave, and padding of a bundled design mapped onto the target
    vertices, position by position from its 0-based labels."""
    mapping = {i: v for i, v in enumerate(targets)}
    blocks = tuple(relabel_block(b, mapping) for b in design.blocks)
    leave = frozenset(edge(mapping[u], mapping[v]) for u, v in design.leave)
    padding = tuple(edge(mapping[u], mapping[v]) for u, v in design.padding)
    return blocks, leave, padding


def _k8_packing_on_join_edge() -> Design:
    """The bundled 8-vertex packing relabeled so its leave is edge {0, 1}."""
    base = catalog_get(CatalogKey(CatalogKind.PACKING, 8))
    (u, v), = base.leave
    mapping = {u: 0, v: 1}
    rest = [w for w in range(8) if w not in (u, v)]
    for i, w in enumerate(rest):
        mapping[w] = i + 2
    blocks = tuple(relabel_block(b, mapping) for b in base.blocks)
    return Design(host=Complete(8), kind=Kind.PACKING, blocks=blocks, leave=frozenset({(0, 1)}))


def _span(layout: JoinLayout, indices) -> tuple[int, ...]:
    out = []
    for i in indices:
        out.extend(layout.parts[i].vertices)
    return tuple(out)


def _assemble(layout: JoinLayout, kind: Kind) -> Design:
    """Place base designs over the layout and fill the remaining cross pairs
    with bipartite hexagons."""
    kinds = tuple(p.kind for p in layout.parts)
    K = PartKind
    blocks: list = []
    leave: frozenset = frozenset()
    padding: tuple = ()
    consumed: set = set()
    others = range(1, len(layout.parts))

    def place(design: Design, indices) -> None:
        nonlocal leave, padding
        got_blocks, got_leave, got_padding = _embed(design, _span(layout, indices))
        blocks.extend(got_blocks)
        leave |= got_leave
        padding += got_padding
        consumed.update(
            (i, j) for i in indices for j in indices if i < j
        )

    if kind is Kind.DECOMPOSITION:
        if set(kinds) == {K.K6}:
            for i in range(len(layout.parts)):
                place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 6)), [i])
        elif kinds[0] is K.K10:
            place(load_base("k10_prisms"), [0])
            for i in others:
                place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 6)), [i])
        else:
            # a K1 part followed by clique parts; twelves pair with the K1
            if kinds[1] is K.K6:
                place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 19)), [0, 1, 2])
            elif kinds[1] is K.K14:
                place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 15)), [0, 1])
            elif kinds[1] is K.K8:
                place(load_base("k9_hexagons"), [0, 1])
            for i in others:
                if layout.parts[i].kind is K.K12 and (0, i) not in consumed:
                    place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 13)), [0, i])
    elif kind is Kind.PACKING:
        if kinds[0] is K.K2:
            block8 = _k8_packing_on_join_edge()
            for i in others:
                got, got_leave, _ = _embed(block8, (0, 1) + layout.parts[i].vertices)
                blocks.extend(got)
                consumed.add((0, i))
                leave = got_leave
        else:
            base_n = 17 if kinds[1] is K.K16 else 11
            place(catalog_get(CatalogKey(CatalogKind.PACKING, base_n)), [0, 1])
            for i in others:
                if layout.parts[i].kind is K.K12:
                    place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 13)), [0, i])
    else:
        if kinds[0] is K.K8:
            place(catalog_get(CatalogKey(CatalogKind.COVERING, 8)), [0])
            for i in others:
                place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 6)), [i])
        else:
            base_n = 11 if kinds[2] is K.K6 else 17
            place(catalog_get(CatalogKey(CatalogKind.COVERING, base_n)), [0, 1, 2])
            for i in others:
                if layout.parts[i].kind is K.K12 and (0, i) not in consumed:
                    place(catalog_get(CatalogKey(CatalogKind.DECOMPOSITION, 13)), [0, i])

    for i, j in layout.cross_pairs():
        if (i, j) in consumed:
            continue
        if layout.parts[i].size == 1 or layout.parts[j].size == 1:
            continue
        fill = c6_decompose_bipartite(
            BipartiteSpec(
                frozenset(layout.parts[i].vertices),
                frozenset(layout.parts[j].vertices),
            )
        )
        blocks.extend(fill.blocks)

    return Design(
        host=Complete(layout.n),
        kind=kind,
        blocks=tuple(blocks),
        leave=leave,
        padding=padding,
    )


# ---------------------------------------------------------------------------
# monolithic builds for the exceptional orders


def _pack_ten() -> Design:
    base = load_base("k10_prisms")
    hexagon, matching = prism_minus_matching(base.blocks[0])
    return Design(
        host=Complete(10),
        kind=Kind.PACKING,
        blocks=(hexagon,) + base.blocks[1:],
        leave=matching,
    )


def _cover_nine() -> Design:
    base = load_base("k9_hexagons")
    prism, matching = hexagon_plus_factor(base.blocks[0])
    return Design(
        host=Complete(9),
        kind=Kind.COVERING,
        blocks=(prism,) + base.blocks[1:],
        padding=tuple(sorted(matching)),
    )


def _cover_ten() -> Design:
    base = load_base("k10_prisms")
    first, second, doubled = prism_to_two_hexagons(base.blocks[0])
    return Design(
        host=Complete(10),
        kind=Kind.COVERING,
        blocks=(first, second) + base.blocks[1:],
        padding=tuple(sorted(doubled)),
    )


# ---------------------------------------------------------------------------
# entry points


def multidecompose(n: int) -> Design:
    """A decomposition of the order-n complete graph into hexagons and
    prisms, at least one of each.  Orders without one raise with the
    feasibility report attached."""
    report = classify(n)
    if not report.decomposition_exists:
        raise InfeasibleOrderError(
            report, f"no decomposition of order {n}: {nonexistence_reason(n)}"
        )
    return _assemble(join_layout(n, Kind.DECOMPOSITION), Kind.DECOMPOSITION)


def max_multipack(n: int) -> Design:
    """A maximum packing: the decomposition itself when one exists,
    otherwise a packing whose leave meets the minimum cardinality."""
    report = classify(n)
    if report.decomposition_exists:
        return multidecompose(n)
    if n == 7:
        return catalog_get(CatalogKey(CatalogKind.PACKING, 7))
    if n == 9:
        return catalog_get(CatalogKey(CatalogKind.PACKING, 9))
    if n == 10:
        return _pack_ten()
    return _assemble(join_layout(n, Kind.PACKING), Kind.PACKING)


def min_multicover(n: int) -> Design:
    """A minimum covering: the decomposition itself when one exists,
    otherwise a covering whose padding meets the minimum cardinality."""
    report = classify(n)
    if report.decomposition_exists:
        return multidecompose(n)
    if n == 7:
        return catalog_get(CatalogKey(CatalogKind.COVERING, 7))
    if n == 9:
        return _cover_nine()
    if n == 10:
        return _cover_ten()
    return _assemble(join_layout(n, Kind.COVERING), Kind.COVERING)
