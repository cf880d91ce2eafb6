"""Dependence graphs: arc diagrams on flag positions whose labels encode the
linear conditions ``F_t = N^{-l} F_s``, ``F_t = F_{t-1} + <e_l>`` and
``F_s = F_{s-1} + <f_l>``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arc_diagrams import (BLACK, GREEN, extended_cup_rowstrict,
                           extended_cup_standard)
from .tableaux import RowStrictTableau, TableauError, TableauType

NINV = "Ninv"
EVEC = "Evec"
FVEC = "Fvec"


@dataclass(frozen=True, order=True)
class GraphArc:
    s: int
    t: int
    colour: str
    kind: str
    l: int
    layer: str = "lower"

    @property
    def width(self) -> int:
        return (self.t - self.s) // 2

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "colour": self.colour,
                "label": {"kind": self.kind, "l": self.l}, "layer": self.layer}

    def label_text(self) -> str:
        return {NINV: f"N^-{self.l}", EVEC: f"e{self.l}", FVEC: f"f{self.l}"}[self.kind]


@dataclass(frozen=True)
class DependenceGraph:
    """Labelled arcs on integer nodes.

    Node ``0`` stands for the zero space, node ``i_l`` for ``F_{i_l}``; every
    other node is unlabelled.
    """

    ttype: TableauType
    arcs: tuple[GraphArc, ...]

    @property
    def labelled(self) -> tuple[int, ...]:
        return (0,) + self.ttype.dims

    @property
    def nodes(self) -> tuple[int, ...]:
        pts = set(self.labelled)
        for a in self.arcs:
            pts.update((a.s, a.t))
        return tuple(sorted(pts))

    @property
    def black(self) -> tuple[GraphArc, ...]:
        return tuple(a for a in self.arcs if a.colour == BLACK)

    @property
    def green(self) -> tuple[GraphArc, ...]:
        return tuple(a for a in self.arcs if a.colour == GREEN)

    def layer(self, name: str) -> tuple[GraphArc, ...]:
        return tuple(a for a in self.arcs if a.layer == name)

    def to_json(self) -> dict:
        return {"nodes": list(self.nodes), "labelled": list(self.labelled),
                "arcs": [a.to_json() for a in self.arcs]}


def _graph_arcs(diagram, ttype: TableauType, layer: str) -> list[GraphArc]:
    n, k = ttype.n, ttype.k
    out = [GraphArc(d - 2, d, BLACK, NINV, 1, layer) for d in ttype.doubles]
    for a in diagram.arcs:
        if a.t <= n:
            s, t = a.s - 1, a.t
            kind = NINV if a.colour == BLACK else EVEC
            out.append(GraphArc(s, t, a.colour, kind, (t - s) // 2, layer))
        else:
            s, t = a.s, a.t + 1
            out.append(GraphArc(s, t, GREEN, FVEC, k + 1 - (t - s) // 2, layer))
    return sorted(out)


def dep_graph_standard(s: RowStrictTableau) -> DependenceGraph:
    return DependenceGraph(s.ttype, tuple(_graph_arcs(extended_cup_standard(s), s.ttype,
                                                      "lower")))


def dep_graph_rowstrict(w: RowStrictTableau) -> DependenceGraph:
    return DependenceGraph(w.ttype, tuple(_graph_arcs(extended_cup_rowstrict(w), w.ttype,
                                                      "lower")))


def dep_graph_pair(w: RowStrictTableau, w2: RowStrictTableau) -> DependenceGraph:
    """Graph of ``w`` with the graph of ``w2`` reflected on top (layer ``upper``)."""
    if w.ttype != w2.ttype:
        raise TableauError(f"tableaux of different types: {w}, {w2}")
    lower = _graph_arcs(extended_cup_rowstrict(w), w.ttype, "lower")
    upper = _graph_arcs(extended_cup_rowstrict(w2), w.ttype, "upper")
    return DependenceGraph(w.ttype, tuple(sorted(lower + upper)))


def green_conditioned(g: DependenceGraph) -> set[int]:
    """Nodes carrying an ``e`` condition (arc end) or an ``f`` condition (arc start)."""
    return ({a.t for a in g.arcs if a.kind == EVEC}
            | {a.s for a in g.arcs if a.kind == FVEC})


def independents(g: DependenceGraph) -> set[int]:
    """Left ends of the free black components.

    A black component (isolated nodes included) is free when it consists of
    labelled nodes ``j > 0`` only and none of them carries a green condition;
    otherwise every space in it is pinned down by the zero space or by an
    ``e``/``f`` vector through the black ``N^{-l}`` relations.
    """
    dims = set(g.ttype.dims)
    pinned = green_conditioned(g)
    return {comp[0] for comp in black_components(g)
            if set(comp) <= dims and not set(comp) & pinned}


def black_components(g: DependenceGraph) -> list[tuple[int, ...]]:
    """Connected components of the black arcs, isolated nodes included."""
    nodes = g.nodes
    adj = {v: set() for v in nodes}
    for a in g.black:
        adj[a.s].add(a.t)
        adj[a.t].add(a.s)
    seen, comps = set(), []
    for v in nodes:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def black_arc_sequence(g: DependenceGraph, a: int, b: int) -> list[GraphArc] | None:
    """A chain of black arcs ``B_1..B_r`` from ``a`` to ``b`` with
    ``t(B_i) = s(B_{i+1})``; the empty chain when ``a == b``; ``None`` if no
    chain exists."""
    out: dict[int, list[GraphArc]] = {}
    for arc in g.black:
        out.setdefault(arc.s, []).append(arc)
    prev: dict[int, GraphArc | None] = {a: None}
    frontier = [a]
    while frontier:
        x = frontier.pop()
        if x == b:
            break
        for arc in out.get(x, ()):
            if arc.t not in prev and arc.t <= b:
                prev[arc.t] = arc
                frontier.append(arc.t)
    if b not in prev:
        return None
    chain, x = [], b
    while prev[x] is not None:
        chain.append(prev[x])
        x = prev[x].s
    return chain[::-1]


def nested_green(g: DependenceGraph, arc: GraphArc) -> list[GraphArc]:
    """Green arcs strictly nested inside ``arc`` in the same layer."""
    return [h for h in g.green if h != arc and h.layer == arc.layer
            and arc.s <= h.s < h.t <= arc.t]


def arc_sequence_claims(g: DependenceGraph):
    """Yield ``(arc, start, end)`` for every black-chain claim made about ``g``.

    Black arcs of width > 1 need a chain from ``s+1`` to ``t-1``.  Green ``e``
    arcs of width > 1 need a chain ending at ``t-1`` that starts at ``0`` or,
    if green arcs are nested inside, at their rightmost endpoint.
    """
    for arc in g.arcs:
        if arc.width <= 1:
            continue
        if arc.kind == NINV:
            yield arc, arc.s + 1, arc.t - 1
        elif arc.kind == EVEC:
            inner = nested_green(g, arc)
            start = max(h.t for h in inner) if inner else 0
            yield arc, start, arc.t - 1
