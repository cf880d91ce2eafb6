import pytest
from hypothesis import given, strategies as st

from spaltcalc.arc_diagrams import (BLACK, GREEN, RED, Arc, Decomposition,
                                    DiagramError, ExtendedCupDiagram, cc_plus,
                                    circle_diagram, circle_diagram_plus,
                                    cup_diagram, decompose, delete_green,
                                    extended_cup_rowstrict,
                                    extended_cup_standard,
                                    is_empty_intersection, outer_target,
                                    padded_arcs, reassemble)
from spaltcalc.tableaux import (TableauType, all_types, enumerate_row_strict,
                                enumerate_standard, parse_tableau)
from spaltcalc.tqft_algebra import f_of

P = parse_tableau


def arcs(d):
    return {(a.s, a.t, a.colour) for a in d.arcs}


def pairs(max_n):
    for n in range(1, max_n + 1):
        for t in all_types(n):
            ws = enumerate_row_strict(t)
            for w in ws:
                for w2 in ws:
                    yield w, w2


def traced_circles(c):
    """Walk each closed curve by alternating lower and upper arcs."""
    lower = {}
    upper = {}
    for a in c.lower_arcs:
        lower[a.s], lower[a.t] = a.t, a.s
    for a in c.upper_arcs:
        upper[a.s], upper[a.t] = a.t, a.s
    seen, out = set(), []
    for start in sorted(lower):
        if start in seen:
            continue
        curve, p, use_lower = [], start, True
        while True:
            curve.append(p)
            seen.add(p)
            p = lower[p] if use_lower else upper[p]
            use_lower = not use_lower
            if p == start and use_lower:
                break
        out.append(sorted(set(curve)))
    return out


class TestCupDiagram:
    def test_example(self):
        c = cup_diagram(P("531/643"))
        assert c.arc_pairs() == {(4, 5), (1, 6)}
        assert c.crosses == {2, 3}

    def test_no_bottom_row(self):
        assert cup_diagram(P("4321")).arcs == ()

    def test_equal_rows(self):
        assert cup_diagram(P("43/21")).arc_pairs() == {(2, 3), (1, 4)}


class TestExtended:
    def test_standard_example(self):
        e = extended_cup_standard(P("7543/631"))
        assert arcs(e) == {(1, 4, BLACK), (6, 7, BLACK), (0, 5, GREEN)}
        assert e.crosses == {2, 3}

    def test_rowstrict_example(self):
        e = extended_cup_rowstrict(P("6543/731"))
        assert arcs(e) == {(1, 4, BLACK), (0, 5, GREEN), (-1, 6, GREEN), (7, 8, GREEN)}
        assert e.crosses == {2, 3}

    def test_all_green_example(self):
        e = extended_cup_rowstrict(P("21/43"))
        assert arcs(e) == {(0, 1, GREEN), (-1, 2, GREEN), (4, 5, GREEN), (3, 6, GREEN)}

    def test_half_filled_coincides_with_cups(self):
        for s in enumerate_standard(TableauType.full(6, 3)):
            assert extended_cup_standard(s).arcs == cup_diagram(s).arcs

    def test_all_crossed(self):
        e = extended_cup_standard(P("2/2"))
        assert e.arcs == () and e.crosses == {1, 2}

    @pytest.mark.parametrize("n", range(1, 9))
    def test_constructions_agree_on_standard(self, n):
        for t in all_types(n):
            for s in enumerate_standard(t):
                assert extended_cup_standard(s) == extended_cup_rowstrict(s)

    def test_crossing_rejected(self):
        with pytest.raises(DiagramError):
            ExtendedCupDiagram(4, (Arc(1, 3), Arc(2, 4)))

    def test_wrong_colour_rejected(self):
        with pytest.raises(DiagramError):
            ExtendedCupDiagram(2, (Arc(0, 3, BLACK), Arc(1, 2)))

    def test_unmatched_rejected(self):
        with pytest.raises(DiagramError):
            ExtendedCupDiagram(3, (Arc(1, 2),))

    def test_json_roundtrip(self):
        for w in enumerate_row_strict(TableauType(7, 3, (1, 3, 4, 5, 6, 7))):
            e = extended_cup_rowstrict(w)
            assert ExtendedCupDiagram.from_json(e.to_json(), w.n) == e
            assert e.to_json()["points"] == [e.lo, e.hi]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_black_cup_bound(self, n):
        for t in all_types(n):
            bound = t.k - len(t.doubles)
            for w in enumerate_row_strict(t):
                e = extended_cup_rowstrict(w)
                assert len(e.black_arcs) <= bound
                if w.is_standard:
                    assert len(e.black_arcs) == bound
                assert not e.unmatched


class TestCircleDiagram:
    def test_example(self):
        c = circle_diagram(P("6543/731"), P("7543/631"))
        got = {(circle.points, circle.colour) for circle in c.circles}
        assert got == {((1, 4), BLACK), ((0, 5), GREEN), ((-1, 6, 7, 8), GREEN)}
        assert not is_empty_intersection(c)

    def test_all_red_example(self):
        c = circle_diagram(P("6543/731"), P("7653/431"))
        assert c.circles and all(circle.colour == RED for circle in c.circles)
        assert is_empty_intersection(c)

    def test_mirror_of_plain_cups(self):
        for s in enumerate_standard(TableauType.full(8, 4)):
            c = circle_diagram(s, s)
            assert [x.colour for x in c.circles] == [BLACK] * len(cup_diagram(s).arcs)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_mirror_pairs(self, n):
        for t in all_types(n):
            for w in enumerate_row_strict(t):
                c = circle_diagram(w, w)
                assert len(c.circles) == len(extended_cup_rowstrict(w).arcs)
                assert not is_empty_intersection(c)

    def test_circles_match_tracing(self):
        for w, w2 in pairs(6):
            c = circle_diagram(w, w2)
            assert [list(x.points) for x in c.circles] == traced_circles(c)

    def test_red_rule_by_points(self):
        for w, w2 in pairs(6):
            c = circle_diagram(w, w2)
            for circle in c.circles:
                left = sum(p < 1 for p in circle.points)
                right = sum(p > w.n for p in circle.points)
                assert (circle.colour == RED) == (left >= 2 or right >= 2)
                if circle.colour == BLACK:
                    assert all(1 <= p <= w.n for p in circle.points)

    def test_red_symmetric(self):
        for w, w2 in pairs(6):
            assert (is_empty_intersection(circle_diagram(w, w2))
                    == is_empty_intersection(circle_diagram(w2, w)))

    def test_mismatched_types(self):
        with pytest.raises(ValueError):
            circle_diagram(P("21/43"), P("6543/731"))


class TestPadding:
    def test_fixpoint(self):
        for w, w2 in pairs(5):
            c = circle_diagram_plus(w, w2)
            assert cc_plus(c) is c

    def test_same_points_per_type(self):
        for n in range(1, 7):
            for t in all_types(n):
                ws = enumerate_row_strict(t)
                shapes = {(circle_diagram_plus(a, b).lo, circle_diagram_plus(a, b).hi)
                          for a in ws for b in ws}
                assert len(shapes) == 1
                lo, hi = shapes.pop()
                assert 1 - lo == outer_target(t)

    def test_added_circles_are_green_and_neutral(self):
        added = set()
        for w, w2 in pairs(6):
            c, plus = circle_diagram(w, w2), circle_diagram_plus(w, w2)
            extra = len(plus.circles) - len(c.circles)
            assert extra == outer_target(w.ttype) - (1 - c.lo)
            assert plus.count(BLACK) == c.count(BLACK) and plus.count(RED) == c.count(RED)
            assert f_of(plus) == f_of(c)
            added.add(extra)
        assert 1 in added

    def test_padded_layers(self):
        for w, w2 in pairs(6):
            plus = circle_diagram_plus(w, w2)
            assert plus.lower_arcs == padded_arcs(w)
            assert plus.upper_arcs == padded_arcs(w2)


def diagram(cups):
    n = 2 * len(cups)
    return ExtendedCupDiagram(n, tuple(Arc(s, t) for s, t in cups))


class TestDecompose:
    def test_nested_example(self):
        d = decompose(diagram({(3, 4), (5, 6), (2, 7), (1, 8)}))
        assert d.kind == "nested"
        leaf, rest = d.children
        assert leaf.kind == "leaf"
        assert set(reassemble(rest)) == {(2, 3), (4, 5), (1, 6)}

    def test_product_example(self):
        cups = {(2, 3), (1, 4), (5, 6), (9, 10), (8, 11), (7, 12)}
        d = decompose(diagram(cups))
        assert d.kind == "product"
        assert set(d.children[0].cups) == {(2, 3), (1, 4)}

    def test_single_cup(self):
        d = decompose(diagram({(1, 2)}))
        assert d.kind == "leaf" and d.base_type == ("CP1",)

    def test_empty(self):
        d = decompose(ExtendedCupDiagram(0, ()))
        assert d.cups == () and d.base_type == ()

    @pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
    def test_roundtrip(self, n):
        for s in enumerate_standard(TableauType.full(n, n // 2)):
            d = cup_diagram(s)
            tree = decompose(d)
            assert tree.leaves == len(d.arcs)
            assert set(reassemble(tree)) == d.arc_pairs()

    def test_rejects_green(self):
        with pytest.raises(DiagramError):
            decompose(extended_cup_rowstrict(P("6543/731")))

    @given(st.sampled_from(enumerate_standard(TableauType.full(12, 6))))
    def test_tree_shape(self, s):
        tree = decompose(cup_diagram(s))

        def walk(node: Decomposition):
            if node.kind == "leaf":
                assert node.cups == ((1, 2),) or len(node.cups) == 1
                return
            assert len(node.children) == 2
            for ch in node.children:
                walk(ch)
        walk(tree)


class TestDeleteGreen:
    def test_one_black_cup(self):
        assert str(delete_green(extended_cup_rowstrict(P("6543/731")))) == "2/1"

    def test_all_green(self):
        assert delete_green(extended_cup_rowstrict(P("21/43"))).n == 0

    def test_plain_cups(self):
        for s in enumerate_standard(TableauType.full(8, 4)):
            assert delete_green(extended_cup_standard(s)) == s

    @pytest.mark.parametrize("n", range(1, 8))
    def test_result_standard(self, n):
        for t in all_types(n):
            for w in enumerate_row_strict(t):
                e = extended_cup_rowstrict(w)
                s = delete_green(e)
                assert s.is_standard and s.k == len(e.black_arcs)
