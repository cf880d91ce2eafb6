"""Cup diagrams, extended cup diagrams and coloured circle diagrams.

Positions ``1..n`` carry the weight sequence.  Virtual points to the left are
numbered ``0, -1, -2, ...`` going outward, virtual points to the right are
``n+1, n+2, ...``.  An arc touching a virtual point is green, every other arc
is black.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .tableaux import (CROSS, DOWN, UP, RowStrictTableau, TableauError, TableauType,
                       cup_arcs, weight_sequence)

BLACK = "black"
GREEN = "green"
RED = "red"


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Arc:
    s: int
    t: int
    colour: str = BLACK

    def __post_init__(self):
        if self.s >= self.t:
            raise DiagramError(f"arc needs s < t: ({self.s},{self.t})")

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "colour": self.colour}


def _colour_for(s: int, t: int, n: int) -> str:
    return GREEN if s < 1 or t > n else BLACK


def _check_noncrossing(arcs) -> None:
    for a in arcs:
        for b in arcs:
            if a.s < b.s < a.t < b.t:
                raise DiagramError(f"arcs cross: {a} and {b}")


@dataclass(frozen=True)
class ExtendedCupDiagram:
    """Crossingless matching on the positions ``lo..hi``.

    ``crosses`` are positions without a point.  When ``complete`` is true every
    other position is the endpoint of exactly one arc.
    """

    n: int
    arcs: tuple[Arc, ...]
    crosses: frozenset = frozenset()
    complete: bool = True

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        _check_noncrossing(self.arcs)
        seen = set()
        for a in self.arcs:
            if a.colour != _colour_for(a.s, a.t, self.n):
                raise DiagramError(f"arc {a} has the wrong colour")
            for p in (a.s, a.t):
                if p in seen or p in self.crosses:
                    raise DiagramError(f"point {p} used twice")
                seen.add(p)
        if self.complete:
            missing = [p for p in range(self.lo, self.hi + 1)
                       if p not in seen and p not in self.crosses]
            if missing:
                raise DiagramError(f"unmatched points {missing}")

    @property
    def lo(self) -> int:
        return min([1] + [a.s for a in self.arcs])

    @property
    def hi(self) -> int:
        return max([self.n] + [a.t for a in self.arcs])

    @property
    def left_outer(self) -> int:
        """Number of occupied positions ``< 1``."""
        return 1 - self.lo

    @property
    def right_outer(self) -> int:
        return self.hi - self.n

    @property
    def black_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a.colour == BLACK)

    @property
    def green_arcs(self) -> tuple[Arc, ...]:
        return tuple(a for a in self.arcs if a.colour == GREEN)

    @property
    def unmatched(self) -> tuple[int, ...]:
        used = {p for a in self.arcs for p in (a.s, a.t)}
        return tuple(p for p in range(self.lo, self.hi + 1)
                     if p not in used and p not in self.crosses)

    def arc_pairs(self) -> set[tuple[int, int]]:
        return {(a.s, a.t) for a in self.arcs}

    def to_json(self) -> dict:
        return {"points": [self.lo, self.hi], "crosses": sorted(self.crosses),
                "arcs": [a.to_json() for a in self.arcs]}

    @classmethod
    def from_json(cls, d: dict, n: int) -> ExtendedCupDiagram:
        arcs = tuple(Arc(a["s"], a["t"], a["colour"]) for a in d["arcs"])
        return cls(n, arcs, frozenset(d["crosses"]))


def _crosses(weights: str) -> frozenset:
    return frozenset(i for i, a in enumerate(weights, start=1) if a == CROSS)


def cup_diagram(w: RowStrictTableau) -> ExtendedCupDiagram:
    """Black cups on ``1..n``; unmatched points are allowed."""
    weights = weight_sequence(w)
    arcs = tuple(Arc(s, t) for s, t in cup_arcs(weights))
    return ExtendedCupDiagram(w.n, arcs, _crosses(weights), complete=False)


def _match_padded(weights: str, left: int, right: int, n: int) -> list[tuple[int, int]]:
    """Stack matching of ``v^`` on ``left`` virtual DOWNs, the word, then
    ``right`` virtual UPs.  Arcs between two virtual points are dropped."""
    symbols = [(p, DOWN) for p in range(1 - left, 1)]
    symbols += list(enumerate(weights, start=1))
    symbols += [(n + j, UP) for j in range(1, right + 1)]
    stack, arcs = [], []
    for p, a in symbols:
        if a == DOWN:
            stack.append(p)
        elif a == UP and stack:
            s = stack.pop()
            if 1 <= s <= n or 1 <= p <= n:
                arcs.append((s, p))
    return arcs


@lru_cache(maxsize=None)
def extended_cup_standard(s: RowStrictTableau) -> ExtendedCupDiagram:
    """Pad a standard tableau with ``n - 2k`` virtual DOWNs on the left."""
    if not s.is_standard:
        raise TableauError(f"{s} is not standard")
    weights = weight_sequence(s)
    pairs = _match_padded(weights, s.n - 2 * s.k, 0, s.n)
    arcs = tuple(Arc(a, b, _colour_for(a, b, s.n)) for a, b in pairs)
    return ExtendedCupDiagram(s.n, arcs, _crosses(weights))


@lru_cache(maxsize=None)
def extended_cup_rowstrict(w: RowStrictTableau) -> ExtendedCupDiagram:
    """Pad with ``n - k`` virtual DOWNs on the left and ``k`` virtual UPs on
    the right, match, and drop the unused virtual points."""
    weights = weight_sequence(w)
    pairs = _match_padded(weights, w.n - w.k, w.k, w.n)
    arcs = tuple(Arc(a, b, _colour_for(a, b, w.n)) for a, b in pairs)
    return ExtendedCupDiagram(w.n, arcs, _crosses(weights))


def pad_to(diagram: ExtendedCupDiagram, left: int) -> tuple[Arc, ...]:
    """Green arcs enclosing ``diagram`` until it has ``left`` points ``< 1``."""
    lo, hi = diagram.lo, diagram.hi
    out = []
    while 1 - lo < left:
        lo, hi = lo - 1, hi + 1
        out.append(Arc(lo, hi, GREEN))
    return tuple(out)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class Circle:
    points: tuple[int, ...]
    colour: str

    def to_json(self) -> dict:
        return {"points": list(self.points), "colour": self.colour}


def circle_colour(points, arcs, n: int) -> str:
    """Colour of a connected component given its positions and arcs."""
    left = sum(1 for p in set(points) if p < 1)
    right = sum(1 for p in set(points) if p > n)
    if left >= 2 or right >= 2:
        return RED
    if any(a.colour == GREEN for a in arcs):
        return GREEN
    return BLACK


@dataclass(frozen=True)
class CircleDiagram:
    """``lower`` with the reflection of ``upper`` stacked on top.

    ``lower_extra`` and ``upper_extra`` hold the green closure and padding
    arcs added so that both layers occupy the same points.
    """

    ttype: TableauType
    lower: ExtendedCupDiagram
    upper: ExtendedCupDiagram
    lower_extra: tuple[Arc, ...] = ()
    upper_extra: tuple[Arc, ...] = ()
    circles: tuple[Circle, ...] = field(default=(), compare=False)

    def __post_init__(self):
        lo_arcs, up_arcs = self.lower_arcs, self.upper_arcs
        lp = {p for a in lo_arcs for p in (a.s, a.t)}
        up = {p for a in up_arcs for p in (a.s, a.t)}
        if lp != up or self.lower.crosses != self.upper.crosses:
            raise DiagramError("layers do not occupy the same points")
        _check_noncrossing(lo_arcs)
        _check_noncrossing(up_arcs)
        uf = _UnionFind(sorted(lp))
        for a in lo_arcs + up_arcs:
            uf.union(a.s, a.t)
        groups: dict[int, list[int]] = {}
        for p in sorted(lp):
            groups.setdefault(uf.find(p), []).append(p)
        circles = []
        for pts in groups.values():
            ps = set(pts)
            arcs = [a for a in lo_arcs + up_arcs if a.s in ps]
            circles.append(Circle(tuple(pts), circle_colour(pts, arcs, self.n)))
        circles.sort(key=lambda c: c.points[0])
        object.__setattr__(self, "circles", tuple(circles))

    @property
    def n(self) -> int:
        return self.ttype.n

    @property
    def lower_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.lower.arcs + self.lower_extra))

    @property
    def upper_arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.upper.arcs + self.upper_extra))

    @property
    def lo(self) -> int:
        return min([1] + [a.s for a in self.lower_arcs])

    @property
    def hi(self) -> int:
        return max([self.n] + [a.t for a in self.lower_arcs])

    def count(self, colour: str) -> int:
        return sum(1 for c in self.circles if c.colour == colour)

    @property
    def black_circles(self) -> tuple[Circle, ...]:
        return tuple(c for c in self.circles if c.colour == BLACK)

    def circle_of(self, p: int) -> Circle:
        for c in self.circles:
            if p in c.points:
                return c
        raise KeyError(p)

    def to_json(self) -> dict:
        return {"points": [self.lo, self.hi], "crosses": sorted(self.lower.crosses),
                "lower": [a.to_json() for a in self.lower_arcs],
                "upper": [a.to_json() for a in self.upper_arcs],
                "circles": [c.to_json() for c in self.circles]}


def _same_type(w: RowStrictTableau, w2: RowStrictTableau) -> None:
    if w.ttype != w2.ttype:
        raise TableauError(f"tableaux of different types: {w}, {w2}")


@lru_cache(maxsize=None)
def circle_diagram(w: RowStrictTableau, w2: RowStrictTableau) -> CircleDiagram:
    """Stack the reflection of ``eC(w2)`` on ``eC(w)``.

    When one layer has fewer points, its surplus-free side is closed up by
    nested green arcs joining the outermost surplus points pairwise.
    """
    _same_type(w, w2)
    lower, upper = extended_cup_rowstrict(w), extended_cup_rowstrict(w2)
    target = max(lower.left_outer, upper.left_outer)
    return CircleDiagram(w.ttype, lower, upper, pad_to(lower, target),
                         pad_to(upper, target))


def outer_target(ttype: TableauType) -> int:
    """Number of left outer points every padded diagram of the type has."""
    return ttype.n - ttype.k - len(ttype.doubles)


def cc_plus(c: CircleDiagram) -> CircleDiagram:
    """Add enclosing green circles until the left outer points ``0, -1, ...``
    number ``n - k - #doubles``."""
    target = outer_target(c.ttype)
    lo, hi = c.lo, c.hi
    extra = []
    while 1 - lo < target:
        lo, hi = lo - 1, hi + 1
        extra.append(Arc(lo, hi, GREEN))
    if not extra:
        return c
    return CircleDiagram(c.ttype, c.lower, c.upper, c.lower_extra + tuple(extra),
                         c.upper_extra + tuple(extra))


@lru_cache(maxsize=None)
def circle_diagram_plus(w: RowStrictTableau, w2: RowStrictTableau) -> CircleDiagram:
    return cc_plus(circle_diagram(w, w2))


@lru_cache(maxsize=None)
def padded_arcs(w: RowStrictTableau) -> tuple[Arc, ...]:
    """Arcs of ``eC(w)`` together with the enclosing arcs used in every padded
    circle diagram containing ``w`` as a layer."""
    d = extended_cup_rowstrict(w)
    return tuple(sorted(d.arcs + pad_to(d, outer_target(w.ttype))))


def is_empty_intersection(c: CircleDiagram) -> bool:
    return any(circle.colour == RED for circle in c.circles)


@dataclass(frozen=True)
class Decomposition:
    """Node of a cup diagram decomposition.

    ``kind`` is ``"leaf"`` (one cup), ``"nested"`` (outer cup, then the
    inside) or ``"product"`` (first block, then the rest).
    """

    kind: str
    cups: tuple[tuple[int, int], ...]
    children: tuple[Decomposition, ...] = ()

    @property
    def leaves(self) -> int:
        if self.kind == "leaf":
            return 1
        return sum(ch.leaves for ch in self.children)

    @property
    def base_type(self) -> tuple[str, ...]:
        return ("CP1",) * self.leaves

    def to_json(self) -> dict:
        return {"kind": self.kind, "cups": [list(c) for c in self.cups],
                "children": [ch.to_json() for ch in self.children]}


def _renumber(cups) -> tuple[tuple[int, int], ...]:
    pts = sorted(p for c in cups for p in c)
    idx = {p: i for i, p in enumerate(pts, start=1)}
    return tuple(sorted((idx[s], idx[t]) for s, t in cups))


def _decompose(cups: tuple[tuple[int, int], ...]) -> Decomposition:
    if len(cups) == 1:
        return Decomposition("leaf", cups)
    m = 2 * len(cups)
    if (1, m) in cups:
        rest = _renumber([c for c in cups if c != (1, m)])
        return Decomposition("nested", cups, (Decomposition("leaf", ((1, 2),)),
                                              _decompose(rest)))
    first = next(c for c in cups if c[0] == 1)
    block = tuple(c for c in cups if c[1] <= first[1])
    rest = _renumber([c for c in cups if c[0] > first[1]])
    return Decomposition("product", cups, (_decompose(block), _decompose(rest)))


def decompose(diagram: ExtendedCupDiagram) -> Decomposition:
    """Split an all-black, fully matched cup diagram into its bundle tree."""
    if diagram.green_arcs or diagram.unmatched:
        raise DiagramError("decompose needs a fully matched diagram of black cups")
    cups = _renumber([(a.s, a.t) for a in diagram.arcs])
    if not cups:
        return Decomposition("product", ())
    return _decompose(cups)


def reassemble(node: Decomposition) -> tuple[tuple[int, int], ...]:
    """Rebuild the cups of a decomposition from its children alone."""
    if node.kind == "leaf":
        return ((1, 2),)
    if not node.children:
        return ()
    a, b = (reassemble(ch) for ch in node.children)
    if node.kind == "nested":
        m = 2 * (len(b) + 1)
        return tuple(sorted(((1, m),) + tuple((s + 1, t + 1) for s, t in b)))
    off = 2 * len(a)
    return tuple(sorted(a + tuple((s + off, t + off) for s, t in b)))


def delete_green(diagram: ExtendedCupDiagram) -> RowStrictTableau:
    """Standard tableau of full type whose cup diagram is the black part of
    ``diagram`` renumbered: left cup ends in the bottom row."""
    cups = _renumber([(a.s, a.t) for a in diagram.black_arcs])
    m = 2 * len(cups)
    bottom = sorted((s for s, _ in cups), reverse=True)
    top = sorted((t for _, t in cups), reverse=True)
    return RowStrictTableau(TableauType.full(m, len(cups)), tuple(top), tuple(bottom))
