"""Exhaustive property suites shared by the command line and the test suite.

Each suite returns a :class:`SuiteResult` holding the number of checked cases
and every failing case as a JSON-ready record.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from math import comb

from . import arc_diagrams, flag_oracle
from .arc_diagrams import (BLACK, GREEN, RED, circle_diagram, cup_diagram,
                           extended_cup_rowstrict, extended_cup_standard,
                           is_empty_intersection)
from .dependence_graphs import (arc_sequence_claims, black_arc_sequence,
                                dep_graph_pair, dep_graph_rowstrict,
                                dep_graph_standard, independents)
from .flag_oracle import (fixed_point_flag, fixed_points_in_intersection,
                          is_n_invariant, pi_inverse, pi_map, satisfies)
from .tableaux import (TableauType, all_types, enumerate_row_strict,
                       enumerate_standard, p_reduce, parse_tableau)
from .tqft_algebra import (ONE, X, algebra_table, check_associativity,
                           check_relations, f_of, frobenius_example, multiply,
                           random_schedule, unit_report)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, **record) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(record)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": len(self.failures),
                "first_counterexample": self.failures[0] if self.failures else None}


def clear_caches() -> None:
    """Drop memoised diagrams and flags so that timings start cold."""
    for module in (arc_diagrams, flag_oracle):
        for obj in vars(module).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def _types(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from all_types(n)


def _pairs(max_n: int):
    for t in _types(max_n):
        ws = enumerate_row_strict(t)
        for w in ws:
            for w2 in ws:
                yield w, w2


def filling_count(ttype: TableauType, standard: bool = False) -> int:
    """Count fillings by trying every row for every single entry."""
    singles, dbl, k = ttype.singles, ttype.doubles, ttype.k
    total = 0
    for rows in product((0, 1), repeat=len(singles)):
        bottom = sorted([v for v, r in zip(singles, rows) if r] + list(dbl), reverse=True)
        if len(bottom) != k:
            continue
        top = sorted([v for v, r in zip(singles, rows) if not r] + list(dbl), reverse=True)
        if standard and any(b > a for a, b in zip(top, bottom)):
            continue
        total += 1
    return total


def suite_counts(max_n: int = 10) -> SuiteResult:
    res = SuiteResult("counts")
    for t in _types(max_n):
        rs = enumerate_row_strict(t)
        st = enumerate_standard(t)
        res.check(len(rs) == filling_count(t) == comb(len(t.singles), t.k - len(t.doubles)),
                  type=t.to_json(), row_strict=len(rs), oracle=filling_count(t))
        res.check(len(st) == filling_count(t, standard=True),
                  type=t.to_json(), standard=len(st), oracle=filling_count(t, True))
        if t.is_full:
            expected = comb(t.n, t.k) - (comb(t.n, t.k - 1) if t.k else 0)
            res.check(len(st) == expected, type=t.to_json(), standard=len(st),
                      expected=expected)
    return res


def suite_equidimensional(max_n: int = 8) -> SuiteResult:
    """Black cups of ``eC(S)`` number ``k - #doubles`` for standard ``S``,
    and at most that for row strict tableaux."""
    res = SuiteResult("equidimensional")
    for t in _types(max_n):
        bound = t.k - len(t.doubles)
        for w in enumerate_row_strict(t):
            black = len(extended_cup_rowstrict(w).black_arcs)
            if w.is_standard:
                std = len(extended_cup_standard(w).black_arcs)
                res.check(black == std == bound, tableau=str(w), black=black,
                          expected=bound)
            else:
                res.check(black <= bound, tableau=str(w), black=black, bound=bound)
    return res


def suite_emptiness(max_n: int = 6) -> SuiteResult:
    """A fixed point satisfies both sets of conditions iff no circle is red;
    then there are at least ``2^black`` of them."""
    res = SuiteResult("emptiness")
    for w, w2 in _pairs(max_n):
        c = circle_diagram(w, w2)
        red = is_empty_intersection(c)
        fp = fixed_points_in_intersection(w, w2)
        ok = red == (not fp) and (red or len(fp) >= 2 ** c.count(BLACK))
        ok = ok and red == is_empty_intersection(circle_diagram(w2, w))
        res.check(ok, pair=[str(w), str(w2)], red=red, fixed_points=[str(u) for u in fp],
                  black=c.count(BLACK))
    return res


def suite_commuting_square(max_n: int = 6) -> SuiteResult:
    """``dim F(CC(w, w2)) = 2^#independents`` and red iff the space is zero."""
    res = SuiteResult("commuting-square")
    for w, w2 in _pairs(max_n):
        c = circle_diagram(w, w2)
        space = f_of(c)
        ind = independents(dep_graph_pair(w, w2))
        red = is_empty_intersection(c)
        ok = red == (space.dimension == 0) and (red or space.dimension == 2 ** len(ind))
        res.check(ok, pair=[str(w), str(w2)], dimension=space.dimension,
                  independents=sorted(ind), red=red)
    return res


def suite_fixedpoints(max_n: int = 6) -> SuiteResult:
    """Coordinate flags satisfy their own graphs and commute with reduction."""
    res = SuiteResult("fixedpoints")
    for t in _types(max_n):
        for w in enumerate_row_strict(t):
            flag = fixed_point_flag(w)
            ok = is_n_invariant(flag) and satisfies(dep_graph_rowstrict(w), flag)
            if w.is_standard:
                ok = ok and satisfies(dep_graph_standard(w), flag)
            res.check(ok, tableau=str(w), check="graph conditions")
            p = p_reduce(w)
            pushed = pi_map(flag)
            res.check(pushed == fixed_point_flag(p) and pi_inverse(pushed, t) == flag,
                      tableau=str(w), reduced=str(p), check="reduction of flags")
            res.check(len(extended_cup_rowstrict(w).black_arcs)
                      == len(extended_cup_rowstrict(p).black_arcs),
                      tableau=str(w), reduced=str(p), check="black cups under reduction")
    return res


def suite_bogen(max_n: int = 8) -> SuiteResult:
    """Every wide arc of every dependence graph has the claimed black chain."""
    res = SuiteResult("bogen")
    for t in _types(max_n):
        for w in enumerate_row_strict(t):
            graphs = [("rowstrict", dep_graph_rowstrict(w))]
            if w.is_standard:
                graphs.append(("standard", dep_graph_standard(w)))
            for kind, g in graphs:
                for arc, start, end in arc_sequence_claims(g):
                    res.check(black_arc_sequence(g, start, end) is not None,
                              tableau=str(w), graph=kind, arc=arc.to_json(),
                              start=start, end=end)
    return res


def suite_relations() -> SuiteResult:
    res = SuiteResult("relations")
    report = check_relations()
    for name, boundary in report.checked:
        bad = [f for f in report.failures if f[0] == name and f[1] == boundary]
        res.check(not bad, relation=name, boundary=[list(b) if isinstance(b, tuple) else b
                                                   for b in boundary])
    left, right = frobenius_example()
    expected = {(ONE, ONE): {(X, ONE): 1}, (X, ONE): {}}
    for side in (left, right):
        got = {k: dict(v) for k, v in side.matrix().items()}
        res.check(got == expected, relation="frobenius example", got=repr(got))
    return res


def suite_associativity(max_n: int = 5, schedules: int = 100, schedule_n: int = 4,
                        seed: int = 0) -> SuiteResult:
    """Associativity and unit on every type up to ``max_n``; independence of
    the surgery order on random schedules for the types of size ``schedule_n``."""
    res = SuiteResult("associativity")
    rng = random.Random(seed)
    for t in _types(max_n):
        table = algebra_table(t)
        bad = check_associativity(table)
        res.check(not bad, type=t.to_json(),
                  triples=[[str(table.basis[i].to_json()) for i in tr] for tr in bad[:1]])
        unit = unit_report(table)
        res.check(unit["left_unit"] and unit["right_unit"], type=t.to_json(), unit=unit)
        if t.n != schedule_n or not schedules:
            continue
        for (i, j), prod in table.products.items():
            a, b = table.basis[i], table.basis[j]
            for _ in range(schedules):
                order = random_schedule(a, rng)
                res.check(multiply(a, b, order) == prod, left=a.to_json(), right=b.to_json(),
                          order=[list(x) for x in order])
    return res


def suite_examples() -> SuiteResult:
    """The worked diagrams with hand-checked answers."""
    res = SuiteResult("examples")
    P = parse_tableau

    def arcs(d) -> set:
        return {(a.s, a.t, a.colour) for a in d.arcs}

    c = cup_diagram(P("531/643"))
    res.check(arcs(c) == {(4, 5, BLACK), (1, 6, BLACK)} and c.crosses == {2, 3},
              example="C(531/643)", got=c.to_json())
    e = extended_cup_standard(P("7543/631"))
    res.check(arcs(e) == {(1, 4, BLACK), (6, 7, BLACK), (0, 5, GREEN)},
              example="eC(7543/631)", got=e.to_json())
    e = extended_cup_rowstrict(P("6543/731"))
    res.check(arcs(e) == {(1, 4, BLACK), (0, 5, GREEN), (-1, 6, GREEN), (7, 8, GREEN)},
              example="eC(6543/731)", got=e.to_json())
    g = dep_graph_standard(P("7543/631"))
    res.check(sorted(a.label_text() for a in g.arcs) == ["N^-1", "N^-1", "N^-2", "e3"],
              example="depG(7543/631)", got=g.to_json())
    g = dep_graph_rowstrict(P("6543/731"))
    res.check(sorted(a.label_text() for a in g.arcs) == ["N^-1", "N^-2", "e3", "e4", "f3"],
              example="depG(6543/731)", got=g.to_json())
    c = circle_diagram(P("6543/731"), P("7543/631"))
    res.check((c.count(BLACK), c.count(GREEN), c.count(RED)) == (1, 2, 0),
              example="CC(6543/731, 7543/631)", got=c.to_json())
    c = circle_diagram(P("6543/731"), P("7653/431"))
    res.check(c.circles and all(x.colour == RED for x in c.circles),
              example="CC(6543/731, 7653/431)", got=c.to_json())
    return res


SUITES = {
    "counts": suite_counts,
    "equidimensional": suite_equidimensional,
    "emptiness": suite_emptiness,
    "fixedpoints": suite_fixedpoints,
    "associativity": suite_associativity,
    "relations": suite_relations,
    "bogen": suite_bogen,
    "commuting-square": suite_commuting_square,
    "examples": suite_examples,
}

SIZED = {"counts", "equidimensional", "emptiness", "fixedpoints", "associativity",
         "bogen", "commuting-square"}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    fn = SUITES[name]
    if name in SIZED and max_n is not None:
        return fn(max_n)
    return fn()
