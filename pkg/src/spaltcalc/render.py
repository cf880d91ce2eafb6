"""ASCII and SVG pictures of cup diagrams, circle diagrams and dependence graphs."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .arc_diagrams import BLACK, GREEN, RED, CircleDiagram, ExtendedCupDiagram
from .dependence_graphs import DependenceGraph

LETTER = {BLACK: "b", GREEN: "g", RED: "r"}
STROKE = {BLACK: "#000", GREEN: "#2a7f2a", RED: "#c00"}

SPACING = 40
MARGIN = 30


def _bracket_line(lo: int, hi: int, arcs, crosses, width: int) -> str:
    """One cell per position: ``b(`` opens an arc, ``b)`` closes it, ``x`` is a cross."""
    cells = {p: "." for p in range(lo, hi + 1)}
    for p in crosses:
        cells[p] = "x"
    for s, t, colour in arcs:
        cells[s] = LETTER[colour] + "("
        cells[t] = LETTER[colour] + ")"
    return "".join(cells[p].rjust(width) for p in range(lo, hi + 1)).rstrip()


def _label_line(lo: int, hi: int, width: int) -> str:
    return "".join(str(p).rjust(width) for p in range(lo, hi + 1))


def _width(lo: int, hi: int) -> int:
    return max(len(str(lo)), len(str(hi)), 2) + 1


def cup_ascii(d: ExtendedCupDiagram) -> str:
    w = _width(d.lo, d.hi)
    arcs = [(a.s, a.t, a.colour) for a in d.arcs]
    return "\n".join([_label_line(d.lo, d.hi, w),
                      _bracket_line(d.lo, d.hi, arcs, d.crosses, w)]) + "\n"


def _circle_colours(c: CircleDiagram) -> dict[int, str]:
    return {p: circle.colour for circle in c.circles for p in circle.points}


def circle_ascii(c: CircleDiagram) -> str:
    """Upper layer above the labels and lower layer below, each arc drawn in
    the colour of its circle."""
    lo, hi = c.lo, c.hi
    w = _width(lo, hi)
    col = _circle_colours(c)
    upper = [(a.s, a.t, col[a.s]) for a in c.upper_arcs]
    lower = [(a.s, a.t, col[a.s]) for a in c.lower_arcs]
    crosses = c.lower.crosses
    lines = [_bracket_line(lo, hi, upper, crosses, w), _label_line(lo, hi, w),
             _bracket_line(lo, hi, lower, crosses, w)]
    counts = ", ".join(f"{c.count(x)} {x}" for x in (BLACK, GREEN, RED))
    return "\n".join(lines) + f"\ncircles: {counts}\n"


def graph_ascii(g: DependenceGraph) -> str:
    nodes = g.nodes
    lo, hi = nodes[0], nodes[-1]
    w = _width(lo, hi)
    labelled = set(g.labelled)
    marks = "".join(("*" if p in labelled else ".").rjust(w) for p in range(lo, hi + 1))
    lines = []
    for layer in ("upper", "lower"):
        arcs = g.layer(layer)
        if arcs:
            lines.append(layer + ":")
            lines += [f"  ({a.s},{a.t}) {a.colour} {a.label_text()}" for a in arcs]
    return "\n".join([_label_line(lo, hi, w), marks] + lines) + "\n"


class _Canvas:
    def __init__(self, lo: int, hi: int, height: int):
        self.lo = lo
        self.width = (hi - lo) * SPACING + 2 * MARGIN
        self.height = height
        self.body: list[str] = []

    def x(self, p: int) -> int:
        return MARGIN + (p - self.lo) * SPACING

    def arc(self, s: int, t: int, colour: str, base: int, below: bool) -> None:
        r = (t - s) * SPACING // 2
        sweep = 0 if below else 1
        style = f'stroke="{STROKE[colour]}" fill="none"'
        if colour == GREEN:
            style += ' stroke-dasharray="6,4" stroke-width="2"'
        elif colour == RED:
            style += ' stroke-width="4"'
        else:
            style += ' stroke-width="2"'
        self.body.append(f'<path d="M {self.x(s)} {base} A {r} {r} 0 0 {sweep} '
                         f'{self.x(t)} {base}" {style}/>')

    def label(self, p: int, y: int, text: str) -> None:
        self.body.append(f'<text x="{self.x(p)}" y="{y}" font-size="12" '
                         f'text-anchor="middle">{escape(text)}</text>')

    def dot(self, p: int, y: int) -> None:
        self.body.append(f'<circle cx="{self.x(p)}" cy="{y}" r="2" fill="#000"/>')

    def render(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.width}" '
                f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">')
        return "\n".join([head] + self.body + ["</svg>"]) + "\n"


def _radius(arcs) -> int:
    return max([(t - s) * SPACING // 2 for s, t, _ in arcs], default=0)


def cup_svg(d: ExtendedCupDiagram) -> str:
    arcs = [(a.s, a.t, a.colour) for a in d.arcs]
    base = MARGIN + 10
    canvas = _Canvas(d.lo, d.hi, base + _radius(arcs) + MARGIN)
    for p in range(d.lo, d.hi + 1):
        canvas.label(p, base - 12, "x" if p in d.crosses else str(p))
    for s, t, colour in arcs:
        canvas.arc(s, t, colour, base, below=True)
    return canvas.render()


def circle_svg(c: CircleDiagram) -> str:
    col = _circle_colours(c)
    upper = [(a.s, a.t, col[a.s]) for a in c.upper_arcs]
    lower = [(a.s, a.t, col[a.s]) for a in c.lower_arcs]
    base = MARGIN + _radius(upper)
    canvas = _Canvas(c.lo, c.hi, base + _radius(lower) + MARGIN)
    for p in range(c.lo, c.hi + 1):
        if p in c.lower.crosses:
            canvas.label(p, base + 4, "x")
        else:
            canvas.dot(p, base)
    for s, t, colour in upper:
        canvas.arc(s, t, colour, base, below=False)
    for s, t, colour in lower:
        canvas.arc(s, t, colour, base, below=True)
    return canvas.render()


def graph_svg(g: DependenceGraph) -> str:
    nodes = g.nodes
    upper = [(a.s, a.t, a.colour) for a in g.layer("upper")]
    lower = [(a.s, a.t, a.colour) for a in g.layer("lower")]
    base = MARGIN + _radius(upper) + 10
    canvas = _Canvas(nodes[0], nodes[-1], base + _radius(lower) + MARGIN + 10)
    labelled = set(g.labelled)
    for p in range(nodes[0], nodes[-1] + 1):
        canvas.dot(p, base)
        if p in labelled:
            canvas.label(p, base + 16 if upper else base - 8, "0" if p == 0 else f"F{p}")
    for layer, below in (("upper", False), ("lower", True)):
        for a in g.layer(layer):
            canvas.arc(a.s, a.t, a.colour, base, below=below)
            r = (a.t - a.s) * SPACING // 2
            y = base + r + 12 if below else base - r - 4
            canvas.label((a.s + a.t) // 2, y, a.label_text())
    return canvas.render()
