"""Exact rational linear algebra on ``C^n`` with basis ``e_1..e_{n-k}, f_1..f_k``.

The nilpotent ``N`` shifts both chains down: ``N e_i = e_{i-1}``,
``N f_i = f_{i-1}``, ``e_0 = f_0 = 0``.  Subspaces are kept in reduced row
echelon form so that equal subspaces have identical bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dependence_graphs import EVEC, FVEC, NINV, DependenceGraph, dep_graph_pair
from .tableaux import (RowStrictTableau, TableauError, TableauType,
                       enumerate_row_strict, fixed_point_profile, p_reduce)

Vector = tuple[Fraction, ...]


def rref(rows) -> tuple[Vector, ...]:
    """Reduced row echelon form of the span of ``rows`` (zero rows dropped)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return ()
    width = len(m[0])
    out, pivot_row = [], 0
    for col in range(width):
        piv = next((i for i in range(pivot_row, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [x / p for x in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col] != 0:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    out = [tuple(r) for r in m[:pivot_row]]
    return tuple(out)


def nullspace(rows, width: int) -> list[Vector]:
    """Basis of ``{v : r . v = 0 for all r in rows}``."""
    red = rref(rows)
    pivots = []
    for r in red:
        pivots.append(next(j for j, x in enumerate(r) if x != 0))
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Ambient:
    """The space ``C^n`` with the two-block nilpotent of Jordan type ``(n-k, k)``."""

    n: int
    k: int

    def e(self, i: int) -> Vector:
        return self._unit(i - 1) if 1 <= i <= self.n - self.k else self.zero()

    def f(self, i: int) -> Vector:
        return self._unit(self.n - self.k + i - 1) if 1 <= i <= self.k else self.zero()

    def zero(self) -> Vector:
        return (Fraction(0),) * self.n

    def _unit(self, j: int) -> Vector:
        v = [Fraction(0)] * self.n
        v[j] = Fraction(1)
        return tuple(v)

    def apply_n(self, v: Vector, power: int = 1) -> Vector:
        m = self.n - self.k
        e, f = list(v[:m]), list(v[m:])
        for _ in range(power):
            e = e[1:] + [Fraction(0)]
            f = f[1:] + [Fraction(0)]
        return tuple(e + f)

    def span(self, vectors) -> ExactSubspace:
        return ExactSubspace(self, rref(vectors) if vectors else ())

    def zero_space(self) -> ExactSubspace:
        return ExactSubspace(self, ())

    def full(self) -> ExactSubspace:
        return self.span([self._unit(j) for j in range(self.n)])

    def coordinate(self, t: int, b: int) -> ExactSubspace:
        """``<e_1..e_t, f_1..f_b>``."""
        return self.span([self.e(i) for i in range(1, t + 1)]
                         + [self.f(i) for i in range(1, b + 1)])


@dataclass(frozen=True)
class ExactSubspace:
    ambient: Ambient
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: Vector) -> bool:
        return len(rref(self.basis + (v,))) == self.dim

    def __le__(self, other: ExactSubspace) -> bool:
        return all(other.contains_vector(v) for v in self.basis)

    def __add__(self, other: ExactSubspace) -> ExactSubspace:
        return ExactSubspace(self.ambient, rref(self.basis + other.basis))

    def add_vector(self, v: Vector) -> ExactSubspace:
        return ExactSubspace(self.ambient, rref(self.basis + (v,)))

    def image(self, power: int = 1) -> ExactSubspace:
        amb = self.ambient
        return amb.span([amb.apply_n(v, power) for v in self.basis])

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.basis]


@lru_cache(maxsize=None)
def n_preimage(s: ExactSubspace, l: int = 1) -> ExactSubspace:
    """``{v : N^l v in s}``."""
    amb = s.ambient
    annihilator = nullspace(s.basis, amb.n) if s.basis else [amb._unit(j) for j in range(amb.n)]
    # v is in the preimage iff every functional of the annihilator kills N^l v
    rows = []
    for phi in annihilator:
        rows.append(tuple(sum(phi[i] * amb.apply_n(amb._unit(j), l)[i] for i in range(amb.n))
                          for j in range(amb.n)))
    if not rows:
        return amb.full()
    return ExactSubspace(amb, rref(nullspace(rows, amb.n)))


@dataclass(frozen=True)
class ExactFlag:
    ttype: TableauType
    spaces: tuple[ExactSubspace, ...]

    def __post_init__(self):
        dims = tuple(s.dim for s in self.spaces)
        if dims != self.ttype.dims:
            raise ValueError(f"flag dimensions {dims} do not match type {self.ttype.dims}")
        for a, b in zip(self.spaces, self.spaces[1:]):
            if not a <= b:
                raise ValueError("flag is not nested")

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.ttype.n, self.ttype.k)

    def space(self, index: int) -> ExactSubspace:
        """``F_index``; index ``0`` is the zero space."""
        if index == 0:
            return self.ambient.zero_space()
        return self.spaces[self.ttype.dims.index(index)]

    def to_json(self) -> list:
        return [s.to_json() for s in self.spaces]


@lru_cache(maxsize=None)
def fixed_point_flag(w: RowStrictTableau) -> ExactFlag:
    amb = Ambient(w.n, w.k)
    return ExactFlag(w.ttype, tuple(amb.coordinate(t, b) for t, b in fixed_point_profile(w)))


def is_n_invariant(flag: ExactFlag) -> bool:
    prev = flag.ambient.zero_space()
    for s in flag.spaces:
        if not s.image() <= prev:
            return False
        prev = s
    return True


@lru_cache(maxsize=None)
def conditions(g: DependenceGraph):
    """The linear conditions of ``g`` as tuples.

    ``("N", s, t, l)`` means ``F_t = N^{-l} F_s``; ``("E", t, l)`` means
    ``F_t = F_{t-1} + <e_l>``; ``("F", s, l)`` means ``F_s = F_{s-1} + <f_l>``.
    Arcs whose left end is an unlabelled node only impose their ``e`` condition.
    """
    labelled = set(g.labelled)
    out = set()
    for a in g.arcs:
        if a.kind == NINV and a.s in labelled and a.t in labelled:
            out.add(("N", a.s, a.t, a.l))
        elif a.kind == EVEC and a.t in labelled:
            out.add(("E", a.t, a.l))
        elif a.kind == FVEC and a.s in labelled:
            out.add(("F", a.s, a.l))
    return tuple(sorted(out))


def _previous(ttype: TableauType, index: int) -> int:
    dims = (0,) + ttype.dims
    return dims[dims.index(index) - 1]


def satisfies(g: DependenceGraph, flag: ExactFlag) -> bool:
    if g.ttype != flag.ttype:
        raise TableauError("graph and flag have different types")
    amb = flag.ambient
    for c in conditions(g):
        if c[0] == "N":
            _, s, t, l = c
            if flag.space(t) != n_preimage(flag.space(s), l):
                return False
        elif c[0] == "E":
            _, t, l = c
            prev = flag.space(_previous(g.ttype, t))
            if flag.space(t) != prev.add_vector(amb.e(l)):
                return False
        else:
            _, s, l = c
            prev = flag.space(_previous(g.ttype, s))
            if flag.space(s) != prev.add_vector(amb.f(l)):
                return False
    return True


def fixed_points_in_intersection(w: RowStrictTableau,
                                 w2: RowStrictTableau) -> list[RowStrictTableau]:
    """Fixed points ``w''`` whose coordinate flag meets both sets of conditions."""
    g = dep_graph_pair(w, w2)
    return [u for u in enumerate_row_strict(w.ttype) if satisfies(g, fixed_point_flag(u))]


def pi_map(flag: ExactFlag) -> ExactFlag:
    """Forget the spaces just above each skipped index and push the later ones
    down by ``N^l``; the image is a full flag in ``N^r V``."""
    if not is_n_invariant(flag):
        raise ValueError("pi_map needs an N-invariant flag")
    t = flag.ttype
    skipped = t.skipped
    r = len(skipped)
    out = []
    for d in t.dims:
        if d in t.doubles:
            continue
        l = sum(1 for j in skipped if j < d)
        out.append(flag.space(d).image(l))
    reduced = TableauType.full(t.n - 2 * r, t.k - r)
    small = Ambient(reduced.n, reduced.k)
    return ExactFlag(reduced, tuple(restrict(s, small) for s in out))


def restrict(s: ExactSubspace, small: Ambient) -> ExactSubspace:
    """View a subspace of ``<e_1..e_a, f_1..f_b>`` inside the smaller ambient."""
    big = s.ambient
    m, m2 = big.n - big.k, small.n - small.k
    rows = []
    for v in s.basis:
        e, f = v[:m], v[m:]
        if any(e[m2:]) or any(f[small.k:]):
            raise ValueError("subspace does not lie in the smaller ambient")
        rows.append(tuple(e[:m2]) + tuple(f[:small.k]))
    return small.span(rows)


def extend(s: ExactSubspace, big: Ambient) -> ExactSubspace:
    """Inverse of :func:`restrict`."""
    small = s.ambient
    m, m2 = big.n - big.k, small.n - small.k
    zero = Fraction(0)
    rows = []
    for v in s.basis:
        e, f = v[:m2], v[m2:]
        rows.append(tuple(e) + (zero,) * (m - m2) + tuple(f) + (zero,) * (big.k - small.k))
    return big.span(rows)


def pi_inverse(flag: ExactFlag, ttype: TableauType) -> ExactFlag:
    """Rebuild a flag of ``ttype`` from a full flag of the reduced type by
    taking ``N^{-l}`` preimages past the ``l``-th skipped index."""
    big = Ambient(ttype.n, ttype.k)
    skipped = ttype.skipped
    spaces = []
    for d in ttype.dims:
        l = sum(1 for j in skipped if j < d)
        src = d - 2 * l
        base = extend(flag.space(src), big) if src > 0 else big.zero_space()
        spaces.append(n_preimage(base, l) if l else base)
    return ExactFlag(ttype, tuple(spaces))


def reduce_tableau_flag(w: RowStrictTableau) -> tuple[ExactFlag, ExactFlag]:
    """``(pi(F(w)), F(p(w)))``, which agree for every row strict ``w``."""
    return pi_map(fixed_point_flag(w)), fixed_point_flag(p_reduce(w))
