"""The coloured TQFT on circle diagrams and the surgery product.

A black circle carries ``V = C[x]/(x^2)`` with basis ``1, x``; a green circle
carries ``C`` with basis ``1``; a red circle carries the zero space.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arc_diagrams import (BLACK, GREEN, RED, CircleDiagram, circle_diagram_plus,
                           padded_arcs)
from .tableaux import RowStrictTableau, TableauError, TableauType, enumerate_row_strict

ONE = "1"
X = "x"
LETTERS = {BLACK: (ONE, X), GREEN: (ONE,), RED: ()}
SHORT = {"b": BLACK, "g": GREEN, "r": RED}


class SizeError(RuntimeError):
    """Raised when an algebra table would exceed the configured size cap."""


class MissingGenerator(LookupError):
    """A surgery needed a colour signature that has no generator."""


@dataclass(frozen=True)
class GradedSpace:
    black_count: int
    is_zero: bool

    @property
    def dimension(self) -> int:
        return 0 if self.is_zero else 2 ** self.black_count

    @property
    def poincare(self) -> list[int]:
        """Coefficients of ``(1 + q^2)^b`` indexed by degree (empty if zero)."""
        if self.is_zero:
            return []
        coeffs = [0] * (2 * self.black_count + 1)
        for j in range(self.black_count + 1):
            coeffs[2 * j] = comb(self.black_count, j)
        return coeffs

    def poincare_text(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for d, c in enumerate(self.poincare):
            if not c:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def f_of(c: CircleDiagram) -> GradedSpace:
    return GradedSpace(c.count(BLACK), c.count(RED) > 0)


def _basis(colours) -> list[tuple[str, ...]]:
    return list(itertools.product(*(LETTERS[c] for c in colours)))


@dataclass(frozen=True)
class LinearMap:
    """Linear map between tensor products of circle spaces."""

    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    values: tuple  # ((in_letters, ((out_letters, coeff), ...)), ...)

    @classmethod
    def from_dict(cls, inputs, outputs, table: dict) -> LinearMap:
        inputs, outputs = tuple(inputs), tuple(outputs)
        rows = []
        for b in _basis(inputs):
            img = {k: Fraction(v) for k, v in table.get(b, {}).items() if v}
            rows.append((b, tuple(sorted(img.items()))))
        return cls(inputs, outputs, tuple(rows))

    def __call__(self, letters) -> dict:
        for b, img in self.values:
            if b == tuple(letters):
                return dict(img)
        raise ValueError(f"{letters} is not a basis vector of {self.inputs}")

    def matrix(self) -> dict:
        return {b: dict(img) for b, img in self.values}

    def then(self, other: LinearMap) -> LinearMap:
        """``other`` after ``self``."""
        if self.outputs != other.inputs:
            raise ValueError("colour mismatch in composition")
        table = {}
        for b, img in self.values:
            acc: dict = {}
            for mid, c in img:
                for out, d in other(mid).items():
                    acc[out] = acc.get(out, 0) + c * d
            table[b] = acc
        return LinearMap.from_dict(self.inputs, other.outputs, table)

    def tensor(self, other: LinearMap) -> LinearMap:
        table = {}
        for b1, img1 in self.values:
            for b2, img2 in other.values:
                acc = {}
                for o1, c1 in img1:
                    for o2, c2 in img2:
                        acc[o1 + o2] = acc.get(o1 + o2, 0) + c1 * c2
                table[b1 + b2] = acc
        return LinearMap.from_dict(self.inputs + other.inputs,
                                   self.outputs + other.outputs, table)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearMap) and self.inputs == other.inputs
                and self.outputs == other.outputs and self.matrix() == other.matrix())

    def __hash__(self):
        return hash((self.inputs, self.outputs, self.values))


@dataclass(frozen=True)
class GeneratorMap:
    kind: str
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    @property
    def map(self) -> LinearMap:
        return _TABLE[(self.kind, self.inputs, self.outputs)]


def _cols(text: str) -> tuple[str, ...]:
    return tuple(SHORT[c] for c in text)


def _build_table() -> dict:
    t = {}

    def put(kind, ins, outs, values=None):
        t[(kind, _cols(ins), _cols(outs))] = LinearMap.from_dict(_cols(ins), _cols(outs),
                                                                 values or {})

    put("merge", "bb", "b", {("1", "1"): {("1",): 1}, ("x", "1"): {("x",): 1},
                             ("1", "x"): {("x",): 1}, ("x", "x"): {}})
    put("merge", "bg", "g", {("1", "1"): {("1",): 1}, ("x", "1"): {}})
    put("merge", "gb", "g", {("1", "1"): {("1",): 1}, ("1", "x"): {}})
    put("merge", "gg", "g", {("1", "1"): {("1",): 1}})
    put("merge", "gg", "r")
    for ins in ("br", "rb", "gr", "rg", "rr"):
        put("merge", ins, "r")
    put("split", "b", "bb", {("1",): {("x", "1"): 1, ("1", "x"): 1},
                             ("x",): {("x", "x"): 1}})
    put("split", "g", "bg", {("1",): {("x", "1"): 1}})
    put("split", "g", "gb", {("1",): {("1", "x"): 1}})
    put("split", "g", "gg", {("1",): {}})
    for outs in ("gg", "br", "rb", "gr", "rg", "rr"):
        put("split", "r", outs)
    put("identity", "b", "b", {("1",): {("1",): 1}, ("x",): {("x",): 1}})
    put("identity", "g", "g", {("1",): {("1",): 1}})
    put("identity", "r", "r")
    put("birth", "", "b", {(): {("1",): 1}})
    put("death", "b", "", {("1",): {}, ("x",): {(): 1}})
    for a, b in itertools.product("bgr", repeat=2):
        ins = _cols(a + b)
        values = {(p, q): {(q, p): 1} for p, q in _basis(ins)}
        put("twist", a + b, b + a, values)
    return t


_TABLE = _build_table()


def generators() -> list[GeneratorMap]:
    return [GeneratorMap(*key) for key in _TABLE]


def generator(kind: str, inputs, outputs) -> GeneratorMap | None:
    key = (kind, tuple(inputs), tuple(outputs))
    return GeneratorMap(*key) if key in _TABLE else None


def generator_value(g: GeneratorMap, letters) -> dict:
    """Image of a pure tensor of letters as ``{out_letters: coeff}``."""
    letters = tuple(letters)
    for c, a in zip(g.inputs, letters):
        if a not in LETTERS[c]:
            raise ValueError(f"letter {a!r} is not allowed on a {c} circle")
    if len(letters) != len(g.inputs):
        raise ValueError("wrong number of letters")
    return g.map(letters)


# relation checking -------------------------------------------------------

def _gen(kind, ins, outs) -> LinearMap | None:
    return _TABLE.get((kind, tuple(ins), tuple(outs)))


def _idm(*cols) -> LinearMap | None:
    out = LinearMap.from_dict((), (), {(): {(): 1}})
    for c in cols:
        g = _gen("identity", (c,), (c,))
        out = out.tensor(g)
    return out


def _chain(*maps) -> LinearMap | None:
    if any(m is None for m in maps):
        return None
    out = maps[0]
    for m in maps[1:]:
        if out.outputs != m.inputs:
            return None
        out = out.then(m)
    return out


def _tens(*maps) -> LinearMap | None:
    if any(m is None for m in maps):
        return None
    out = maps[0]
    for m in maps[1:]:
        out = out.tensor(m)
    return out


def _relations():
    """Yield ``(name, boundary, sides)``; ``sides`` is a list of lists of maps,
    one list of interior colourings per side."""
    C = (BLACK, GREEN, RED)
    m = lambda a, b, c: _gen("merge", (a, b), (c,))
    d = lambda a, b, c: _gen("split", (a,), (b, c))
    tw = lambda a, b: _gen("twist", (a, b), (b, a))
    i = _idm
    birth = _gen("birth", (), (BLACK,))
    death = _gen("death", (BLACK,), ())

    for a, b, c, o in itertools.product(C, repeat=4):
        left = [_chain(_tens(m(a, b, e), i(c)), m(e, c, o)) for e in C]
        right = [_chain(_tens(i(a), m(b, c, f)), m(a, f, o)) for f in C]
        yield "associativity", (a, b, c, o), [left, right]
        left = [_chain(d(o, e, c), _tens(d(e, a, b), i(c))) for e in C]
        right = [_chain(d(o, a, f), _tens(i(a), d(f, b, c))) for f in C]
        yield "coassociativity", (o, a, b, c), [left, right]
    for a, o in itertools.product(C, repeat=2):
        ident = [i(a)] if a == o else []
        yield "left unit", (a, o), [[_chain(_tens(birth, i(a)), m(BLACK, a, o))], ident]
        yield "right unit", (a, o), [[_chain(_tens(i(a), birth), m(a, BLACK, o))], ident]
        yield "left counit", (a, o), [[_chain(d(a, BLACK, o), _tens(death, i(o)))], ident]
        yield "right counit", (a, o), [[_chain(d(a, o, BLACK), _tens(i(o), death))], ident]
        yield "twist unit", (a, o), [[_chain(_tens(birth, i(a)), tw(BLACK, a))] if a == o else [],
                                     [_tens(i(a), birth)] if a == o else []]
    for a, b, c, o in itertools.product(C, repeat=4):
        mid = [_chain(m(a, b, e), d(e, c, o)) for e in C]
        left = [_chain(_tens(i(a), d(b, p, o)), _tens(m(a, p, c), i(o))) for p in C]
        right = [_chain(_tens(d(a, c, q), i(b)), _tens(i(c), m(q, b, o))) for q in C]
        yield "frobenius", (a, b, c, o), [mid, left, right]
    for a, b, o in itertools.product(C, repeat=3):
        yield "commutativity", (a, b, o), [[_chain(tw(a, b), m(b, a, o))], [m(a, b, o)]]
        yield "cocommutativity", (o, a, b), [[_chain(d(o, a, b), tw(a, b))], [d(o, b, a)]]
    for a, b in itertools.product(C, repeat=2):
        yield "twist involution", (a, b), [[_chain(tw(a, b), tw(b, a))], [i(a, b)]]
    for a, b, c in itertools.product(C, repeat=3):
        left = _chain(_tens(tw(a, b), i(c)), _tens(i(b), tw(a, c)), _tens(tw(b, c), i(a)))
        right = _chain(_tens(i(a), tw(b, c)), _tens(tw(a, c), i(b)), _tens(i(c), tw(a, b)))
        yield "braid", (a, b, c), [[left], [right]]
        for o in C:
            left = _chain(_tens(m(a, b, o), i(c)), tw(o, c))
            right = _chain(_tens(i(a), tw(b, c)), _tens(tw(a, c), i(b)), _tens(i(c), m(a, b, o)))
            yield "twist naturality (merge)", (a, b, c, o), [[left], [right]]
            left = _chain(_tens(d(o, a, b), i(c)), _tens(i(a), tw(b, c)), _tens(tw(a, c), i(b)))
            right = _chain(tw(o, c), _tens(i(c), d(o, a, b)))
            yield "twist naturality (split)", (o, c, a, b), [[left], [right]]


@dataclass
class RelationReport:
    checked: list
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        names: dict = {}
        for name, _ in self.checked:
            names[name] = names.get(name, 0) + 1
        return names


def check_relations() -> RelationReport:
    """Check every coloured instance of the commutative Frobenius relations.

    An instance exists when every side of the relation admits at least one
    colouring by generators with the given boundary colours; all such
    colourings must give the same linear map.
    """
    checked, failures = [], []
    for name, boundary, sides in _relations():
        sides = [[x for x in side if x is not None] for side in sides]
        if any(not side for side in sides):
            continue
        maps = [x for side in sides for x in side]
        checked.append((name, boundary))
        if any(x != maps[0] for x in maps[1:]):
            failures.append((name, boundary, maps))
    return RelationReport(checked, failures)


def frobenius_example() -> tuple[LinearMap, LinearMap]:
    """Both sides of the mixed Frobenius relation on ``V (x) C``:
    ``(merge_bb (x) id) o (id (x) split_g->bg)`` and ``split_g->bg o merge_bg``."""
    left = _chain(_tens(_idm(BLACK), _gen("split", (GREEN,), (BLACK, GREEN))),
                  _tens(_gen("merge", (BLACK, BLACK), (BLACK,)), _idm(GREEN)))
    right = _chain(_gen("merge", (BLACK, GREEN), (GREEN,)),
                   _gen("split", (GREEN,), (BLACK, GREEN)))
    return left, right


# algebra ----------------------------------------------------------------

@dataclass(frozen=True)
class BasisElement:
    """A pure tensor in ``F(CC+(w, w2))``: one letter per black circle, in the
    order of the circles' smallest points."""

    w: RowStrictTableau
    w2: RowStrictTableau
    assignment: tuple[str, ...]

    def to_json(self) -> dict:
        return {"w": str(self.w), "w2": str(self.w2), "assignment": list(self.assignment)}

    def __lt__(self, other):
        return self.key() < other.key()

    def key(self):
        return (weight_key(self.w), weight_key(self.w2), self.assignment)


def weight_key(w: RowStrictTableau) -> tuple:
    return (w.ttype.dims, w.k, w.top, w.bottom)


class LinearCombination(dict):
    """Formal sum ``{BasisElement: Fraction}`` with zero terms dropped."""

    def add(self, b: BasisElement, c) -> None:
        v = self.get(b, Fraction(0)) + c
        if v:
            self[b] = v
        else:
            self.pop(b, None)

    def scaled(self, c) -> LinearCombination:
        out = LinearCombination()
        for b, v in self.items():
            out.add(b, v * c)
        return out

    def __iadd__(self, other):
        for b, v in other.items():
            self.add(b, v)
        return self

    def to_json(self) -> list:
        return [{"basis": b.to_json(), "coeff": str(v)} for b, v in sorted(self.items())]


def basis_elements(w: RowStrictTableau, w2: RowStrictTableau) -> list[BasisElement]:
    c = circle_diagram_plus(w, w2)
    if f_of(c).is_zero:
        return []
    return [BasisElement(w, w2, a) for a in itertools.product((ONE, X), repeat=c.count(BLACK))]


def algebra_basis(ttype: TableauType) -> list[BasisElement]:
    ws = enumerate_row_strict(ttype)
    return [b for w in ws for w2 in ws for b in basis_elements(w, w2)]


class _Stack:
    """Two stacked padded circle diagrams sharing the middle layer.

    Nodes are ``(level, position)``; level 0 is where ``CC+(w, w')`` lives and
    level 1 is where ``CC+(w', v')`` lives.
    """

    def __init__(self, w, mid, v2):
        self.n = w.n
        self.edges = set()
        for a in padded_arcs(w):
            self.edges.add(((0, a.s), (0, a.t), a.colour, "bottom"))
        for a in padded_arcs(mid):
            self.edges.add(((0, a.s), (0, a.t), a.colour, "cap"))
            self.edges.add(((1, a.s), (1, a.t), a.colour, "cup"))
        for a in padded_arcs(v2):
            self.edges.add(((1, a.s), (1, a.t), a.colour, "top"))
        self.middle = sorted((a.s, a.t) for a in padded_arcs(mid))

    def components(self) -> list[frozenset]:
        adj: dict = {}
        for u, v, _, _ in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen, comps = set(), []
        for start in sorted(adj):
            if start in seen:
                continue
            comp, todo = [], [start]
            seen.add(start)
            while todo:
                x = todo.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            comps.append(frozenset(comp))
        return comps

    def colour(self, comp: frozenset) -> str:
        positions = {p for _, p in comp}
        left = sum(1 for p in positions if p < 1)
        right = sum(1 for p in positions if p > self.n)
        if left >= 2 or right >= 2:
            return RED
        if any(c == GREEN for u, _, c, _ in self.edges if u in comp):
            return GREEN
        return BLACK

    def surgery(self, s: int, t: int) -> None:
        cap = next(e for e in self.edges if e[3] == "cap" and e[0] == (0, s) and e[1] == (0, t))
        cup = next(e for e in self.edges if e[3] == "cup" and e[0] == (1, s) and e[1] == (1, t))
        self.edges -= {cap, cup}
        self.edges.add(((0, s), (1, s), BLACK, "vertical"))
        self.edges.add(((0, t), (1, t), BLACK, "vertical"))


def _letters_on(circles, assignment, colours) -> dict:
    out, it = {}, iter(assignment)
    for circ, col in zip(circles, colours):
        out[circ] = next(it) if col == BLACK else ONE
    return out


def multiply(f: BasisElement, g: BasisElement, order=None) -> LinearCombination:
    """Surgery product ``f g``.

    ``order`` is a permutation of the middle arcs (pairs ``(s, t)``); by
    default they are contracted from the leftmost endpoint on.
    """
    if f.w.ttype != g.w.ttype:
        raise TableauError("basis elements of different types")
    result = LinearCombination()
    if f.w2 != g.w:
        return result
    stack = _Stack(f.w, f.w2, g.w2)

    comps = stack.components()
    comp_of = {}
    for level, el in ((0, f), (1, g)):
        cc = circle_diagram_plus(el.w, el.w2)
        cols = [c.colour for c in cc.circles]
        if RED in cols:
            return result
        circles = [next(x for x in comps if (level, c.points[0]) in x) for c in cc.circles]
        for circ, c in zip(circles, cc.circles):
            if stack.colour(circ) != c.colour:
                raise AssertionError("stack colours disagree with the circle diagram")
        comp_of.update(_letters_on(circles, el.assignment, cols))
    terms = {tuple(sorted(comp_of.items(), key=lambda kv: min(kv[0]))): Fraction(1)}

    schedule = list(stack.middle) if order is None else list(order)
    if sorted(schedule) != stack.middle:
        raise ValueError("order must be a permutation of the middle arcs")
    for s, t in schedule:
        old = {c: stack.colour(c) for c in stack.components()}
        a_comp = next(c for c in old if (0, s) in c)
        b_comp = next(c for c in old if (1, s) in c)
        stack.surgery(s, t)
        new = {c: stack.colour(c) for c in stack.components()}
        if a_comp != b_comp:
            merged = next(c for c in new if (0, s) in c)
            if (1, s) not in merged or (0, t) not in merged:
                raise AssertionError("merge did not produce one circle")
            ins, outs = (a_comp, b_comp), (merged,)
            kind = "merge"
        else:
            c1 = next(c for c in new if (0, s) in c)
            c2 = next(c for c in new if (0, t) in c)
            if c1 == c2:
                raise AssertionError("split did not produce two circles")
            ins, outs = (a_comp,), (c1, c2)
            kind = "split"
        in_cols = tuple(old[c] for c in ins)
        out_cols = tuple(new[c] for c in outs)
        gen = generator(kind, in_cols, out_cols)
        if gen is None:
            raise MissingGenerator(f"{kind} {in_cols} -> {out_cols}")
        if RED in in_cols or RED in out_cols:
            return result
        new_terms: dict = {}
        for state, coeff in terms.items():
            d = dict(state)
            letters = tuple(d.pop(c) for c in ins)
            for out_letters, v in generator_value(gen, letters).items():
                e = dict(d)
                e.update(zip(outs, out_letters))
                key = tuple(sorted(e.items(), key=lambda kv: min(kv[0])))
                new_terms[key] = new_terms.get(key, 0) + coeff * v
        terms = {k: v for k, v in new_terms.items() if v}
        if not terms:
            return result

    target = circle_diagram_plus(f.w, g.w2)
    final = stack.components()
    ordered = []
    for c in target.circles:
        comp = next(x for x in final if (0, c.points[0]) in x)
        if sorted(p for lv, p in comp if lv == 0) != list(c.points):
            raise AssertionError("contracted circles differ from the product diagram")
        if stack.colour(comp) != c.colour:
            raise AssertionError("contracted colours differ from the product diagram")
        ordered.append((comp, c.colour))
    for state, coeff in terms.items():
        d = dict(state)
        assignment = tuple(d[comp] for comp, col in ordered if col == BLACK)
        result.add(BasisElement(f.w, g.w2, assignment), coeff)
    return result


def random_schedule(f: BasisElement, rng: random.Random) -> list[tuple[int, int]]:
    middle = sorted((a.s, a.t) for a in padded_arcs(f.w2))
    rng.shuffle(middle)
    return middle


def multiply_combination(x: LinearCombination, y: LinearCombination,
                         table: dict | None = None) -> LinearCombination:
    out = LinearCombination()
    for a, ca in x.items():
        for b, cb in y.items():
            prod = table[(a, b)] if table is not None and (a, b) in table else multiply(a, b)
            out += prod.scaled(ca * cb)
    return out


def max_dim() -> int:
    return int(os.environ.get("CALC_MAX_DIM", "4096"))


@dataclass
class AlgebraTable:
    ttype: TableauType
    basis: list[BasisElement]
    products: dict  # (i, j) -> LinearCombination

    def index(self) -> dict:
        return {b: i for i, b in enumerate(self.basis)}

    def to_json(self) -> dict:
        idx = self.index()
        prods = []
        for (i, j) in sorted(self.products):
            res = self.products[(i, j)]
            prods.append({"i": i, "j": j,
                          "result": [{"k": idx[b], "coeff": str(c)}
                                     for b, c in sorted(res.items(), key=lambda kv: idx[kv[0]])]})
        return {"n": self.ttype.n, "k": self.ttype.k, "type": list(self.ttype.dims),
                "basis": [b.to_json() for b in self.basis], "products": prods}

    def product(self, x: LinearCombination, y: LinearCombination) -> LinearCombination:
        idx = self.index()
        out = LinearCombination()
        for a, ca in x.items():
            for b, cb in y.items():
                key = (idx[a], idx[b])
                if key in self.products:
                    out += self.products[key].scaled(ca * cb)
        return out


def algebra_table(ttype: TableauType, cap: int | None = None) -> AlgebraTable:
    """Structure constants of the surgery product on all basis elements.

    Products that vanish because the middle tableaux differ are omitted.
    """
    basis = algebra_basis(ttype)
    cap = max_dim() if cap is None else cap
    if len(basis) > cap:
        raise SizeError(f"algebra has dimension {len(basis)} > cap {cap}")
    by_left: dict = {}
    for j, b in enumerate(basis):
        by_left.setdefault(b.w, []).append(j)
    products = {}
    for i, a in enumerate(basis):
        for j in by_left.get(a.w2, []):
            products[(i, j)] = multiply(a, basis[j])
    return AlgebraTable(ttype, basis, products)


def check_associativity(table: AlgebraTable) -> list:
    """Basis triples ``(i, j, l)`` with ``(b_i b_j) b_l != b_i (b_j b_l)``."""
    basis = table.basis
    by_left: dict = {}
    for j, b in enumerate(basis):
        by_left.setdefault(b.w, []).append(j)
    bad = []
    for i, a in enumerate(basis):
        for j in by_left.get(a.w2, []):
            b = basis[j]
            for l in by_left.get(b.w2, []):
                c = basis[l]
                left = table.product(table.products[(i, j)], LinearCombination({c: Fraction(1)}))
                right = table.product(LinearCombination({a: Fraction(1)}), table.products[(j, l)])
                if left != right:
                    bad.append((i, j, l))
    return bad


def unit_report(table: AlgebraTable) -> dict:
    """Test whether the sum of the all-``1`` diagonal elements is a two-sided unit."""
    ws = enumerate_row_strict(table.ttype)
    unit = LinearCombination()
    for w in ws:
        els = basis_elements(w, w)
        if els:
            unit.add(BasisElement(w, w, (ONE,) * len(els[0].assignment)), Fraction(1))
    left = right = True
    for b in table.basis:
        e = LinearCombination({b: Fraction(1)})
        if table.product(unit, e) != e:
            left = False
        if table.product(e, unit) != e:
            right = False
    return {"left_unit": left, "right_unit": right, "unit_terms": len(unit)}
