"""Two-row tableaux of shape (n-k, k) with prescribed dimension type.

Rows are stored left to right in strictly decreasing order.  A value that
occurs twice (once in each row) is a *double entry*; it corresponds to a
step of size two in the dimension type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

UP = "^"
DOWN = "v"
CROSS = "x"


class TableauError(ValueError):
    """Raised for malformed types or fillings."""


class ConsistencyError(AssertionError):
    """Raised when two independent characterisations of a property disagree."""


@dataclass(frozen=True)
class TableauType:
    """Dimension type ``(i_1 < ... < i_m = n)`` together with ``(n, k)``.

    Every step ``i_l - i_{l-1}`` (with ``i_0 = 0``) must be 1 or 2.  The
    degenerate type ``n = 0`` with empty ``dims`` is allowed so that deleting
    all boxes stays a total operation.
    """

    n: int
    k: int
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        n, k, dims = self.n, self.k, self.dims
        if n < 0 or k < 0 or 2 * k > n:
            raise TableauError(f"need n >= 2k >= 0, got n={n}, k={k}")
        if n == 0:
            if dims:
                raise TableauError("type must be empty when n = 0")
            return
        if not dims or dims[-1] != n:
            raise TableauError(f"type must end with n={n}: {dims}")
        prev = 0
        for d in dims:
            if d - prev not in (1, 2):
                raise TableauError(f"type steps must be 1 or 2: {dims}")
            prev = d
        if len(self.doubles) > k:
            raise TableauError(f"type {dims} has more double entries than k={k}")

    @classmethod
    def full(cls, n: int, k: int) -> TableauType:
        return cls(n, k, tuple(range(1, n + 1)))

    @property
    def doubles(self) -> tuple[int, ...]:
        """Values that occur twice in every filling of this type."""
        out, prev = [], 0
        for d in self.dims:
            if d - prev == 2:
                out.append(d)
            prev = d
        return tuple(out)

    @property
    def singles(self) -> tuple[int, ...]:
        dbl = set(self.doubles)
        return tuple(d for d in self.dims if d not in dbl)

    @property
    def skipped(self) -> tuple[int, ...]:
        """Indices in ``1..n`` missing from the type (one below each double)."""
        return tuple(d - 1 for d in self.doubles)

    @property
    def is_full(self) -> bool:
        return not self.doubles

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "type": list(self.dims)}


def all_types(n: int):
    """Yield every valid ``TableauType`` with the given ``n``, all ``k``."""
    def steps(rest):
        if rest == 0:
            yield ()
            return
        for s in (1, 2):
            if s <= rest:
                for tail in steps(rest - s):
                    yield (s,) + tail

    for comp in steps(n):
        dims, acc = [], 0
        for s in comp:
            acc += s
            dims.append(acc)
        r = comp.count(2)
        for k in range(r, n // 2 + 1):
            yield TableauType(n, k, tuple(dims))


@dataclass(frozen=True)
class RowStrictTableau:
    """Row strict filling of shape ``(n-k, k)``.

    ``top`` has length ``n - k`` and ``bottom`` has length ``k``; both are
    strictly decreasing.  Each single value of the type occurs once and each
    double value occurs once in each row.
    """

    ttype: TableauType
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(int(v) for v in self.top))
        object.__setattr__(self, "bottom", tuple(int(v) for v in self.bottom))
        t = self.ttype
        top, bottom = self.top, self.bottom
        if len(top) != t.n - t.k or len(bottom) != t.k:
            raise TableauError(
                f"shape must be ({t.n - t.k},{t.k}), got ({len(top)},{len(bottom)})")
        for row in (top, bottom):
            if any(a <= b for a, b in zip(row, row[1:])):
                raise TableauError(f"rows must be strictly decreasing: {self}")
        dbl = set(t.doubles)
        singles = set(t.singles)
        ts, bs = set(top), set(bottom)
        if not dbl <= ts or not dbl <= bs:
            raise TableauError(f"double entries {sorted(dbl)} must be in both rows: {self}")
        rest = (ts - dbl) | (bs - dbl)
        if rest != singles or (ts - dbl) & (bs - dbl):
            raise TableauError(f"entries do not match type {t.dims}: {self}")

    @property
    def n(self) -> int:
        return self.ttype.n

    @property
    def k(self) -> int:
        return self.ttype.k

    @property
    def doubles(self) -> tuple[int, ...]:
        return self.ttype.doubles

    def __str__(self) -> str:
        sep = "," if self.n >= 10 else ""
        return sep.join(map(str, self.top)) + "/" + sep.join(map(str, self.bottom))

    def __repr__(self) -> str:
        return f"RowStrictTableau({self})"

    @property
    def is_standard(self) -> bool:
        """Column condition, cross-checked against the ballot condition."""
        by_columns = column_condition(self.top, self.bottom)
        by_ballot = ballot_condition(weight_sequence(self), self.n - 2 * self.k)
        if by_columns != by_ballot:
            raise ConsistencyError(f"column and ballot tests disagree on {self}")
        return by_columns

    def to_json(self) -> dict:
        d = self.ttype.to_json()
        d["top"] = list(self.top)
        d["bottom"] = list(self.bottom)
        return d

    @classmethod
    def from_json(cls, d: dict) -> RowStrictTableau:
        return cls(TableauType(d["n"], d["k"], tuple(d["type"])), tuple(d["top"]),
                   tuple(d["bottom"]))


def column_condition(top, bottom) -> bool:
    """Entries weakly decrease down every column (equality only for doubles)."""
    return all(b <= t for t, b in zip(top, bottom))


def ballot_condition(weights: str, prefix: int) -> bool:
    """Reading left to right after ``prefix`` virtual DOWN symbols, the number
    of UP symbols never exceeds the number of DOWN symbols (crosses ignored)."""
    balance = prefix
    for a in weights:
        if a == DOWN:
            balance += 1
        elif a == UP:
            balance -= 1
            if balance < 0:
                return False
    return True


def _split_row(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    if "," in s:
        return tuple(int(x) for x in s.split(",") if x.strip())
    return tuple(int(c) for c in s)


def parse_tableau(text: str, ttype: TableauType | None = None) -> RowStrictTableau:
    """Parse ``"top/bottom"`` such as ``"6543/731"`` (commas allowed as separators).

    Without an explicit type, the type is read off the entries: values that
    occur twice are double entries.
    """
    if "/" in text:
        a, b = text.split("/", 1)
    else:
        a, b = text, ""
    top, bottom = _split_row(a), _split_row(b)
    if ttype is None:
        n = max(top + bottom, default=0)
        ttype = TableauType(n, len(bottom), tuple(sorted(set(top) | set(bottom))))
    return RowStrictTableau(ttype, top, bottom)


def from_weights(ttype: TableauType, weights: str) -> RowStrictTableau:
    """Build the tableau whose weight sequence is ``weights``."""
    dbl = set(ttype.doubles)
    top, bottom = list(dbl), list(dbl)
    for v in ttype.singles:
        a = weights[v - 1]
        if a == UP:
            top.append(v)
        elif a == DOWN:
            bottom.append(v)
        else:
            raise TableauError(f"position {v} must be {UP} or {DOWN}")
    return RowStrictTableau(ttype, tuple(sorted(top, reverse=True)),
                            tuple(sorted(bottom, reverse=True)))


def weight_sequence(w: RowStrictTableau) -> str:
    """The word ``a_1..a_n``: ``x`` at ``i-1, i`` for a double ``i``, otherwise
    ``^`` for a top-row value and ``v`` for a bottom-row value."""
    out = [None] * w.n
    for d in w.doubles:
        out[d - 2] = out[d - 1] = CROSS
    dbl = set(w.doubles)
    for v in w.top:
        if v not in dbl:
            out[v - 1] = UP
    for v in w.bottom:
        if v not in dbl:
            out[v - 1] = DOWN
    return "".join(out)


def enumerate_row_strict(ttype: TableauType) -> list[RowStrictTableau]:
    """Every row strict tableau of the type, sorted by weight string (``^`` < ``v``)."""
    singles = ttype.singles
    free = ttype.k - len(ttype.doubles)
    out = []
    for down in combinations(singles, free):
        ds = set(down)
        crossed = set(ttype.doubles) | set(ttype.skipped)
        weights = "".join(CROSS if v in crossed else (DOWN if v in ds else UP)
                          for v in range(1, ttype.n + 1))
        out.append(from_weights(ttype, weights))
    out.sort(key=weight_sequence)
    return out


def enumerate_standard(ttype: TableauType) -> list[RowStrictTableau]:
    return [w for w in enumerate_row_strict(ttype) if w.is_standard]


def match_pairs(weights: str, opener: str, closer: str, skip=()) -> list[tuple[int, int]]:
    """Stack matching of ``opener`` ... ``closer`` pairs on a 1-based word.

    Positions in ``skip`` and crosses are ignored.  This is the same as
    repeatedly joining adjacent ``opener closer`` pairs.
    """
    stack, arcs = [], []
    for i, a in enumerate(weights, start=1):
        if i in skip:
            continue
        if a == opener:
            stack.append(i)
        elif a == closer and stack:
            arcs.append((stack.pop(), i))
    return arcs


def cup_arcs(weights: str) -> list[tuple[int, int]]:
    """Arcs of the plain cup diagram: first ``v^`` pairs, then the remaining ``^v``."""
    first = match_pairs(weights, DOWN, UP)
    used = {p for arc in first for p in arc}
    second = match_pairs(weights, UP, DOWN, skip=used)
    return sorted(first + second)


def s_of_w(w: RowStrictTableau) -> RowStrictTableau:
    """The standard tableau with the same cup diagram as ``w``.

    Left cup ends go to the bottom row; right ends and unmatched points go to
    the top row.
    """
    weights = list(weight_sequence(w))
    for i, a in enumerate(weights):
        if a != CROSS:
            weights[i] = UP
    for s, _ in cup_arcs(weight_sequence(w)):
        weights[s - 1] = DOWN
    return from_weights(w.ttype, "".join(weights))


def phi(s: RowStrictTableau) -> RowStrictTableau:
    """Lower the bottom-row copy of each double entry by one.

    The result has full type ``(1..n)``.
    """
    if not s.is_standard:
        raise TableauError(f"{s} is not standard")
    dbl = set(s.doubles)
    bottom = tuple(v - 1 if v in dbl else v for v in s.bottom)
    return RowStrictTableau(TableauType.full(s.n, s.k), s.top, bottom)


def phi_inverse(s: RowStrictTableau, ttype: TableauType) -> RowStrictTableau:
    """Inverse of :func:`phi` for the given target type."""
    dbl = set(ttype.doubles)
    bottom = tuple(v + 1 if v + 1 in dbl else v for v in s.bottom)
    return RowStrictTableau(ttype, s.top, bottom)


def columns(s: RowStrictTableau) -> dict[int, int]:
    """1-based column index of every value of a tableau without doubles."""
    col = {}
    for row in (s.top, s.bottom):
        for j, v in enumerate(row, start=1):
            col[v] = j
    return col


def i_sigma(s: RowStrictTableau) -> set[int]:
    """``{i : column(i) <= column(i+1)}`` for a standard tableau of full type."""
    if not s.ttype.is_full:
        raise TableauError("i_sigma needs a tableau of full type")
    col = columns(s)
    return {i for i in range(1, s.n) if col[i] <= col[i + 1]}


def in_phi_image(s: RowStrictTableau, ttype: TableauType) -> bool:
    """Membership test ``{1..n-1} - dims`` contained in ``i_sigma(s)``."""
    missing = set(range(1, ttype.n)) - set(ttype.dims)
    return missing <= i_sigma(s)


def p_reduce(w: RowStrictTableau) -> RowStrictTableau:
    """Delete the boxes of double entries and close up the numbering."""
    dbl = sorted(w.doubles)
    r = len(dbl)

    def shift(v):
        return v - 2 * sum(1 for d in dbl if d < v)

    top = tuple(shift(v) for v in w.top if v not in dbl)
    bottom = tuple(shift(v) for v in w.bottom if v not in dbl)
    return RowStrictTableau(TableauType.full(w.n - 2 * r, w.k - r), top, bottom)


def fixed_point_profile(w: RowStrictTableau) -> list[tuple[int, int]]:
    """For every ``i_l`` the numbers of top and bottom entries ``<= i_l``."""
    return [(sum(1 for v in w.top if v <= d), sum(1 for v in w.bottom if v <= d))
            for d in w.ttype.dims]
