from fractions import Fraction
from itertools import permutations

import pytest

from spaltcalc.arc_diagrams import (BLACK, GREEN, RED, circle_diagram,
                                    circle_diagram_plus, padded_arcs)
from spaltcalc.tableaux import TableauType, all_types, enumerate_row_strict, parse_tableau
from spaltcalc.tqft_algebra import (ONE, X, BasisElement, GradedSpace, LinearCombination,
                                    SizeError, algebra_basis, algebra_table,
                                    basis_elements, check_associativity,
                                    check_relations, f_of, frobenius_example,
                                    generator, generator_value, generators,
                                    multiply, multiply_combination, unit_report)

P = parse_tableau


class TestGradedSpace:
    def test_black_example(self):
        space = f_of(circle_diagram(P("6543/731"), P("7543/631")))
        assert (space.black_count, space.dimension, space.poincare_text()) == (1, 2, "1+q^2")

    def test_red_example(self):
        space = f_of(circle_diagram(P("6543/731"), P("7653/431")))
        assert space.is_zero and space.dimension == 0 and space.poincare_text() == "0"

    def test_two_black_circles(self):
        s = P("43/21")
        space = f_of(circle_diagram(s, s))
        assert space.dimension == 4 and space.poincare_text() == "1+2q^2+q^4"

    @pytest.mark.parametrize("b", range(6))
    def test_poincare_at_one(self, b):
        space = GradedSpace(b, False)
        assert sum(space.poincare) == space.dimension == 2 ** b


class TestGenerators:
    def value(self, kind, ins, outs, letters):
        return generator_value(generator(kind, ins, outs), letters)

    def test_table_rows(self):
        assert self.value("merge", (BLACK, BLACK), (BLACK,), (X, ONE)) == {(X,): 1}
        assert self.value("merge", (GREEN, GREEN), (GREEN,), (ONE, ONE)) == {(ONE,): 1}
        assert self.value("merge", (GREEN, GREEN), (RED,), (ONE, ONE)) == {}
        assert self.value("split", (GREEN,), (BLACK, GREEN), (ONE,)) == {(X, ONE): 1}

    def test_homogeneous(self):
        # every generator shifts the number of x letters by a fixed amount
        for g in generators():
            shifts = {out.count(X) - ins.count(X)
                      for ins, img in g.map.matrix().items() for out in img}
            assert len(shifts) <= 1, g

    def test_twist_involution(self):
        for g in generators():
            if g.kind != "twist":
                continue
            back = generator("twist", g.outputs, g.inputs)
            assert g.map.then(back.map) == generator("identity", (g.inputs[0],),
                                                     (g.inputs[0],)).map.tensor(
                generator("identity", (g.inputs[1],), (g.inputs[1],)).map)

    def test_black_frobenius(self):
        m = generator("merge", (BLACK, BLACK), (BLACK,)).map
        d = generator("split", (BLACK,), (BLACK, BLACK)).map
        i = generator("identity", (BLACK,), (BLACK,)).map
        assert d.tensor(i).then(i.tensor(m)) == m.then(d) == i.tensor(d).then(m.tensor(i))

    def test_relations(self):
        report = check_relations()
        assert report.ok, report.failures[:3]
        names = report.summary()
        for name in ("associativity", "coassociativity", "frobenius", "commutativity"):
            assert names.get(name), name

    def test_frobenius_example(self):
        left, right = frobenius_example()
        want = {(ONE, ONE): {(X, ONE): Fraction(1)}, (X, ONE): {}}
        assert left.matrix() == right.matrix() == want


def element(w, w2, *letters):
    return BasisElement(P(w), P(w2), tuple(letters))


class TestMultiply:
    def test_mismatched_middle(self):
        a = element("43/21", "43/21", ONE, ONE)
        b = element("42/31", "42/31", ONE)
        assert multiply(a, b) == {}

    def test_red_pair_has_no_basis(self):
        assert basis_elements(P("6543/731"), P("7653/431")) == []

    def test_idempotent(self):
        e = element("43/21", "43/21", ONE, ONE)
        assert multiply(e, e) == LinearCombination({e: Fraction(1)})
        x = element("43/21", "43/21", X, ONE)
        assert multiply(e, x) == multiply(x, e) == LinearCombination({x: Fraction(1)})
        assert multiply(x, x) == {}

    def test_all_orders_agree(self):
        for t in all_types(4):
            table = algebra_table(t)
            for (i, j), prod in table.products.items():
                a, b = table.basis[i], table.basis[j]
                middle = sorted((s.s, s.t) for s in padded_arcs(a.w2))
                for order in permutations(middle):
                    assert multiply(a, b, list(order)) == prod

    def test_bad_order(self):
        e = element("43/21", "43/21", ONE, ONE)
        with pytest.raises(ValueError):
            multiply(e, e, [(2, 3)])

    def test_linear_extension(self):
        table = algebra_table(TableauType.full(4, 2))
        x = LinearCombination({b: Fraction(i + 1) for i, b in enumerate(table.basis[:5])})
        y = LinearCombination({b: Fraction(2) for b in table.basis[3:9]})
        assert multiply_combination(x, y) == table.product(x, y)


class TestAlgebra:
    def test_dimension_by_brute_force(self):
        for n in range(1, 6):
            for t in all_types(n):
                ws = enumerate_row_strict(t)
                expected = sum(f_of(circle_diagram(a, b)).dimension for a in ws for b in ws)
                assert len(algebra_basis(t)) == expected

    def test_smallest_case(self):
        t = TableauType.full(2, 1)
        table = algebra_table(t)
        # three pairs give one green circle each, the mirror pair of 2/1 one black circle
        assert len(table.basis) == 1 + 1 + 1 + 2
        assert len(table.products) <= len(table.basis) ** 2

    @pytest.mark.parametrize("n", range(1, 5))
    def test_associative_and_unital(self, n):
        for t in all_types(n):
            table = algebra_table(t)
            assert check_associativity(table) == []
            report = unit_report(table)
            assert report["left_unit"] and report["right_unit"]

    def test_padding_neutral(self):
        for n in range(1, 6):
            for t in all_types(n):
                ws = enumerate_row_strict(t)
                for a in ws:
                    for b in ws:
                        assert f_of(circle_diagram_plus(a, b)) == f_of(circle_diagram(a, b))

    def test_size_cap(self, monkeypatch):
        monkeypatch.setenv("CALC_MAX_DIM", "3")
        with pytest.raises(SizeError):
            algebra_table(TableauType.full(4, 2))

    def test_json(self):
        data = algebra_table(TableauType.full(2, 1)).to_json()
        assert data["type"] == [1, 2] and len(data["basis"]) == 5
        assert all(isinstance(term["coeff"], str) for p in data["products"]
                   for term in p["result"])
