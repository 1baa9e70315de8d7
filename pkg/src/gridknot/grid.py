"""Grid diagrams on the n x n torus.

Columns and rows are 1-indexed, rows counted bottom to top.  ``X[i]`` is the
row of the X marking in column ``i`` (stored 0-based in a tuple, so column
``i`` lives at ``X[i - 1]``).  The knot is drawn with horizontal arcs O -> X,
vertical arcs X -> O, and horizontal arcs passing *over* vertical ones.

Grid states are permutations ``pi`` of ``1..n``: the point set
``{(i, pi(i))}`` on the intersections of vertical line ``i`` and horizontal
line ``pi(i)``.  Line ``i`` is the left edge of column ``i``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .planar import PlanarDiagram


class GridError(ValueError):
    """Base class for invalid grid input."""


class NotPermutation(GridError):
    pass


class SharedSquare(GridError):
    def __init__(self, column: int):
        super().__init__(f"column {column} holds both an X and an O")
        self.column = column


class IllegalCommutation(GridError):
    pass


class NoSuchStabilization(GridError):
    pass


class MultiComponent(GridError):
    pass


def _is_perm(values: Sequence[int], n: int) -> bool:
    return sorted(values) == list(range(1, n + 1))


@dataclass(frozen=True)
class GridDiagram:
    n: int
    X: tuple[int, ...]
    O: tuple[int, ...]

    def __init__(self, X: Iterable[int], O: Iterable[int]):
        X = tuple(int(v) for v in X)
        O = tuple(int(v) for v in O)
        object.__setattr__(self, "n", len(X))
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "O", O)

    # column/row lookups, all 1-indexed
    def x_row(self, col: int) -> int:
        return self.X[col - 1]

    def o_row(self, col: int) -> int:
        return self.O[col - 1]

    def x_col(self, row: int) -> int:
        return self._x_cols[row - 1]

    def o_col(self, row: int) -> int:
        return self._o_cols[row - 1]

    @property
    def _x_cols(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for c, r in enumerate(self.X, 1):
            cols[r - 1] = c
        return tuple(cols)

    @property
    def _o_cols(self) -> tuple[int, ...]:
        cols = [0] * self.n
        for c, r in enumerate(self.O, 1):
            cols[r - 1] = c
        return tuple(cols)

    def markings(self) -> set[tuple[int, int]]:
        """All marked cells as (column, row)."""
        cells = {(c, r) for c, r in enumerate(self.X, 1)}
        cells.update((c, r) for c, r in enumerate(self.O, 1))
        return cells

    # -- serialization --------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "X": list(self.X), "O": list(self.O)}

    @classmethod
    def from_json(cls, data: dict) -> "GridDiagram":
        g = cls(data["X"], data["O"])
        if "n" in data and data["n"] != g.n:
            raise GridError(f"n={data['n']} does not match marking arrays of length {g.n}")
        validate(g)
        return g

    @classmethod
    def load(cls, path) -> "GridDiagram":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def ascii(self) -> str:
        """Rows top to bottom, one character per cell."""
        lines = []
        for r in range(self.n, 0, -1):
            line = []
            for c in range(1, self.n + 1):
                if self.X[c - 1] == r:
                    line.append("X")
                elif self.O[c - 1] == r:
                    line.append("O")
                else:
                    line.append(".")
            lines.append("".join(line))
        return "\n".join(lines)

    @classmethod
    def from_ascii(cls, text: str) -> "GridDiagram":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        n = len(lines)
        X = [0] * n
        O = [0] * n
        for i, line in enumerate(lines):
            if len(line) != n:
                raise GridError("ASCII grid must be square")
            r = n - i
            for c, ch in enumerate(line, 1):
                if ch == "X":
                    if X[c - 1]:
                        raise NotPermutation(f"column {c} has two X's")
                    X[c - 1] = r
                elif ch == "O":
                    if O[c - 1]:
                        raise NotPermutation(f"column {c} has two O's")
                    O[c - 1] = r
                elif ch != ".":
                    raise GridError(f"unexpected character {ch!r}")
        g = cls(X, O)
        validate(g)
        return g


def validate(G: GridDiagram) -> None:
    """Raise if G is not a legal grid diagram."""
    if G.n < 2 or len(G.O) != G.n:
        raise NotPermutation("X and O must have equal length n >= 2")
    if not _is_perm(G.X, G.n):
        raise NotPermutation(f"X={list(G.X)} is not a permutation of 1..{G.n}")
    if not _is_perm(G.O, G.n):
        raise NotPermutation(f"O={list(G.O)} is not a permutation of 1..{G.n}")
    for c, (x, o) in enumerate(zip(G.X, G.O), 1):
        if x == o:
            raise SharedSquare(c)


def is_valid(G: GridDiagram) -> bool:
    try:
        validate(G)
    except GridError:
        return False
    return True


# -- grid states ------------------------------------------------------------

GridState = tuple  # a permutation, 1-indexed values, pi(i) = state[i - 1]


def x_plus(G: GridDiagram) -> GridState:
    """The state at the upper-right corners of the X's."""
    n = G.n
    pi = [0] * n
    for i in range(1, n + 1):
        pi[i % n] = G.X[i - 1] % n + 1
    return tuple(pi)


# -- symmetries and moves --------------------------------------------------


def diagonal_mirror(G: GridDiagram) -> GridDiagram:
    """Reflect in the upper-left/lower-right diagonal and swap X with O.

    The cell (c, r) goes to (n + 1 - r, n + 1 - c).
    """
    n = G.n
    X = [0] * n
    O = [0] * n
    for c in range(1, n + 1):
        X[n - G.O[c - 1]] = n + 1 - c
        O[n - G.X[c - 1]] = n + 1 - c
    return GridDiagram(X, O)


def translate(G: GridDiagram, dx: int = 0, dy: int = 0) -> GridDiagram:
    """Torus translation: column c -> c + dx, row r -> r + dy (mod n)."""
    n = G.n
    X = [0] * n
    O = [0] * n
    for c in range(1, n + 1):
        nc = (c - 1 + dx) % n
        X[nc] = (G.X[c - 1] - 1 + dy) % n + 1
        O[nc] = (G.O[c - 1] - 1 + dy) % n + 1
    return GridDiagram(X, O)


def transpose(G: GridDiagram) -> GridDiagram:
    """Swap the roles of rows and columns, keeping marking types."""
    return GridDiagram(G._x_cols, G._o_cols)


def _interleaved(a: tuple[int, int], b: tuple[int, int]) -> bool:
    # chords on a circle; shared endpoints count as interleaved
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    if len({a0, a1, b0, b1}) < 4:
        return True
    return (a0 < b0 < a1) != (a0 < b1 < a1)


def commute_columns(G: GridDiagram, col: int) -> GridDiagram:
    """Swap column ``col`` with column ``col + 1`` (cyclically)."""
    n = G.n
    c1 = (col - 1) % n
    c2 = col % n
    if _interleaved((G.X[c1], G.O[c1]), (G.X[c2], G.O[c2])):
        raise IllegalCommutation(f"columns {c1 + 1} and {c2 + 1} interleave")
    X = list(G.X)
    O = list(G.O)
    X[c1], X[c2] = X[c2], X[c1]
    O[c1], O[c2] = O[c2], O[c1]
    return GridDiagram(X, O)


def commute_rows(G: GridDiagram, row: int) -> GridDiagram:
    return transpose(commute_columns(transpose(G), row))


class LegendrianEffect(str, Enum):
    ISOTOPY = "Isotopy"
    POSITIVE_STAB = "PositiveStab"
    NEGATIVE_STAB = "NegativeStab"
    POSITIVE_DESTAB = "PositiveDestab"
    NEGATIVE_DESTAB = "NegativeDestab"


# Empty corner of the 2x2 block for each X-type stabilization, as
# (dcol, drow) offsets.  The O sits in the opposite corner.  Pinned by the
# front: X:NE lowers tb and raises r, X:SW lowers both.
_STAB_EMPTY_CORNER = {
    "NW": (0, 1),
    "NE": (1, 1),
    "SW": (0, 0),
    "SE": (1, 0),
}

_STAB_EFFECT = {
    "NW": LegendrianEffect.ISOTOPY,
    "SE": LegendrianEffect.ISOTOPY,
    "NE": LegendrianEffect.POSITIVE_STAB,
    "SW": LegendrianEffect.NEGATIVE_STAB,
}

_DESTAB_EFFECT = {
    LegendrianEffect.ISOTOPY: LegendrianEffect.ISOTOPY,
    LegendrianEffect.POSITIVE_STAB: LegendrianEffect.POSITIVE_DESTAB,
    LegendrianEffect.NEGATIVE_STAB: LegendrianEffect.NEGATIVE_DESTAB,
}


def stabilize(G: GridDiagram, col: int, kind: str) -> GridDiagram:
    """X-type stabilization at the X in column ``col``.

    The X cell becomes a 2x2 block with X's on one diagonal, an O in one
    remaining corner and ``kind`` naming the corner left empty.
    """
    kind = kind.upper().removeprefix("X:")
    if kind not in _STAB_EMPTY_CORNER:
        raise NoSuchStabilization(f"unknown stabilization type {kind!r}")
    n = G.n
    if not 1 <= col <= n:
        raise NoSuchStabilization(f"column {col} out of range")
    r = G.X[col - 1]
    ex, ey = _STAB_EMPTY_CORNER[kind]
    ox, oy = 1 - ex, 1 - ey

    def shift_c(c: int) -> int:
        return c + 1 if c > col else c

    def shift_r(rr: int) -> int:
        return rr + 1 if rr > r else rr

    X = [0] * (n + 1)
    O = [0] * (n + 1)
    for c in range(1, n + 1):
        if c != col:
            X[shift_c(c) - 1] = shift_r(G.X[c - 1])
            O[shift_c(c) - 1] = shift_r(G.O[c - 1])
    # block column/row through the new O is complete; the other block
    # column keeps the old column's O, the other block row the old row's O
    o_col, o_row = col + ox, r + oy
    e_col, e_row = col + ex, r + ey
    O[o_col - 1] = o_row
    X[o_col - 1] = e_row
    X[e_col - 1] = o_row
    O[e_col - 1] = shift_r(G.O[col - 1])
    O[shift_c(G.o_col(r)) - 1] = e_row
    out = GridDiagram(X, O)
    validate(out)
    return out


def destabilize(G: GridDiagram, col: int, row: int) -> tuple[GridDiagram, str]:
    """Undo an X-type stabilization whose 2x2 block has lower-left cell (col, row).

    Returns the smaller grid and the stabilization type that was undone.
    Blocks wrapping around the torus are handled by translating first.
    """
    n = G.n
    if n <= 2:
        raise NoSuchStabilization("cannot destabilize a 2x2 grid")
    dx = 1 - col if col == n else 0
    dy = 1 - row if row == n else 0
    if dx or dy:
        H, kind = destabilize(translate(G, dx, dy), col + dx, row + dy)
        return translate(H, -dx % H.n, -dy % H.n), kind
    cells = {}
    for dc in (0, 1):
        for dr in (0, 1):
            c, r = col + dc, row + dr
            if G.X[c - 1] == r:
                cells[(dc, dr)] = "X"
            elif G.O[c - 1] == r:
                cells[(dc, dr)] = "O"
    if len(cells) != 3 or sorted(cells.values()) != ["O", "X", "X"]:
        raise NoSuchStabilization(f"no X-type stabilization block at ({col}, {row})")
    (ox, oy), = [k for k, v in cells.items() if v == "O"]
    empty = (1 - ox, 1 - oy)
    if empty in cells:
        raise NoSuchStabilization("block markings are not in stabilized position")
    kind = {v: k for k, v in _STAB_EMPTY_CORNER.items()}[empty]
    drop_c = col + ox
    drop_r = row + oy
    keep_c = col + empty[0]
    keep_r = row + empty[1]

    def shrink_c(c: int) -> int:
        return c - 1 if c > drop_c else c

    def shrink_r(r: int) -> int:
        return r - 1 if r > drop_r else r

    X = [0] * (n - 1)
    O = [0] * (n - 1)
    for c in range(1, n + 1):
        if c == drop_c:
            continue
        xr, orow = G.X[c - 1], G.O[c - 1]
        if c == keep_c:
            xr = keep_r
        X[shrink_c(c) - 1] = shrink_r(xr)
        O[shrink_c(c) - 1] = shrink_r(orow)
    out = GridDiagram(X, O)
    validate(out)
    return out, kind


@dataclass(frozen=True)
class MoveResult:
    grid: GridDiagram
    effect: LegendrianEffect


def cromwell_move(G: GridDiagram, kind: str, at: Sequence[int] = ()) -> MoveResult:
    """Apply one Cromwell move.

    kind: ``translation`` (at = (dx, dy)), ``commutation`` (at = (col,)
    or ("row", r) style via ``commutation-row``), ``stab:NW|NE|SW|SE`` (at =
    (col,)), ``destab`` (at = (col, row) of the block's lower-left cell).
    """
    validate(G)
    kind_l = kind.lower()
    if kind_l == "translation":
        dx, dy = (list(at) + [0, 0])[:2]
        return MoveResult(translate(G, dx, dy), LegendrianEffect.ISOTOPY)
    if kind_l in ("commutation", "commutation-col"):
        return MoveResult(commute_columns(G, at[0]), LegendrianEffect.ISOTOPY)
    if kind_l == "commutation-row":
        return MoveResult(commute_rows(G, at[0]), LegendrianEffect.ISOTOPY)
    if kind_l.startswith("stab:"):
        st = kind.split(":", 1)[1].upper()
        return MoveResult(stabilize(G, at[0], st), _STAB_EFFECT.get(st, LegendrianEffect.ISOTOPY))
    if kind_l == "destab":
        H, st = destabilize(G, at[0], at[1])
        return MoveResult(H, _DESTAB_EFFECT[_STAB_EFFECT[st]])
    raise GridError(f"unknown move {kind!r}")


def stabilization_effect(kind: str) -> LegendrianEffect:
    return _STAB_EFFECT[kind.upper().removeprefix("X:")]


# -- knot diagrams and fronts ---------------------------------------------


def _trace(G: GridDiagram) -> list[list[tuple[int, int, str]]]:
    """Walk the link; returns per component the marking sequence (col, row, type)."""
    seen = set()
    comps = []
    for start in range(1, G.n + 1):
        if start in seen:
            continue
        comp = []
        c = start
        while c not in seen:
            seen.add(c)
            comp.append((c, G.X[c - 1], "X"))
            r = G.O[c - 1]
            comp.append((c, r, "O"))
            c = G.x_col(r)
        comps.append(comp)
    return comps


def components(G: GridDiagram) -> int:
    return len(_trace(G))


def _strictly_between(v: int, a: int, b: int) -> bool:
    lo, hi = (a, b) if a < b else (b, a)
    return lo < v < hi


def grid_to_planar(G: GridDiagram) -> PlanarDiagram:
    """Oriented diagram: horizontal O->X arcs over vertical X->O arcs."""
    validate(G)
    n = G.n
    xcols = G._x_cols
    ocols = G._o_cols
    crossings: dict[tuple[int, int], int] = {}
    signs: list[int] = []
    # crossing at column c (vertical under) and row r (horizontal over)
    for r in range(1, n + 1):
        co, cx = ocols[r - 1], xcols[r - 1]
        hdir = 1 if cx > co else -1
        for c in range(min(co, cx) + 1, max(co, cx)):
            if _strictly_between(r, G.X[c - 1], G.O[c - 1]):
                vdir = 1 if G.O[c - 1] > G.X[c - 1] else -1
                crossings[(c, r)] = len(signs)
                signs.append(hdir * vdir)
    cycles = []
    free = 0
    for comp in _trace(G):
        seq = []
        for c, r, kind in comp:
            if kind == "X":
                # vertical run from X to O in column c
                o = G.O[c - 1]
                step = 1 if o > r else -1
                for rr in range(r + step, o, step):
                    if (c, rr) in crossings:
                        seq.append(2 * crossings[(c, rr)])
            else:
                x = xcols[r - 1]
                step = 1 if x > c else -1
                for cc in range(c + step, x, step):
                    if (cc, r) in crossings:
                        seq.append(2 * crossings[(cc, r)] + 1)
        if seq:
            cycles.append(seq)
        else:
            free += 1
    return PlanarDiagram.from_cycles(cycles, signs, free)


def writhe(G: GridDiagram) -> int:
    return sum(grid_to_planar(G).signs)


@dataclass(frozen=True)
class FrontData:
    writhe: int
    cusps_up: int
    cusps_down: int

    @property
    def tb(self) -> int:
        return self.writhe - (self.cusps_up + self.cusps_down) // 2

    @property
    def r(self) -> int:
        return (self.cusps_down - self.cusps_up) // 2

    @property
    def sl(self) -> int:
        return self.tb - self.r


def front_data(G: GridDiagram) -> FrontData:
    """Front of the Legendrian knot obtained by turning the grid 45 degrees clockwise.

    Corners opening NE or SW become cusps.  A cusp is traversed downward
    when the knot runs from the vertical arm into the horizontal arm at an
    NE-opening corner, or from the horizontal into the vertical arm at an
    SW-opening one.
    """
    validate(G)
    comps = _trace(G)
    if len(comps) != 1:
        raise MultiComponent(f"grid has {len(comps)} components")
    up = down = 0
    xcols = G._x_cols
    ocols = G._o_cols
    for c in range(1, G.n + 1):
        for kind, r in (("X", G.X[c - 1]), ("O", G.O[c - 1])):
            other_r = G.O[c - 1] if kind == "X" else G.X[c - 1]
            other_c = ocols[r - 1] if kind == "X" else xcols[r - 1]
            vert_up = other_r > r
            horiz_right = other_c > c
            if vert_up and horiz_right:
                # opens NE: left cusp; O enters from the vertical (upper) branch
                if kind == "O":
                    down += 1
                else:
                    up += 1
            elif not vert_up and not horiz_right:
                # opens SW: right cusp; O enters from the vertical (lower) branch
                if kind == "O":
                    up += 1
                else:
                    down += 1
    return FrontData(writhe(G), up, down)
