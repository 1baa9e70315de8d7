"""The tilde grid complex over GF(2) and the x+ vanishing question.

States are permutations ``pi`` stored as 1-based tuples: the state has a
point on the intersection of vertical line ``i`` and horizontal line
``pi[i-1]``.  Line ``c`` is the left edge of column ``c`` and line ``r``
the bottom edge of row ``r``.

A rectangle goes from state ``y`` to state ``x`` when its lower-left and
upper-right corners are points of ``y`` and the other two corners are
points of ``x``.  It must have no X, no O and no point of ``y`` in its
interior; rectangles wrap around the torus.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from . import gf2
from .grid import GridDiagram, GridError, MultiComponent, components, validate, x_plus

State = tuple[int, ...]
Chain = frozenset  # frozenset[State]; addition is symmetric difference

BRUTE_FORCE_MAX_N = 7


class SizeMismatch(GridError):
    pass


class TooLarge(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def _check_state(y: State, G: GridDiagram) -> None:
    if len(y) != G.n or sorted(y) != list(range(1, G.n + 1)):
        raise SizeMismatch(f"state {y} is not a permutation of 1..{G.n}")


def _open(v: int, a: int, b: int, n: int) -> bool:
    """v strictly inside the cyclic interval (a, b)."""
    return 0 < (v - a) % n < (b - a) % n


def _half_open(v: int, a: int, b: int, n: int) -> bool:
    """v in the cyclic interval [a, b)."""
    return (v - a) % n < (b - a) % n


def _empty(G: GridDiagram, pts: State, i: int, j: int, r0: int, r1: int) -> bool:
    """Rectangle with columns [i, j) and rows [r0, r1), all cyclic, 1-based.

    ``pts`` supplies the state points that must avoid the interior; the
    corner columns i and j can never be strictly inside.
    """
    n = G.n
    c = i
    while c != j:
        if _half_open(G.X[c - 1], r0, r1, n) or _half_open(G.O[c - 1], r0, r1, n):
            return False
        c = c % n + 1
        if c != j and _open(pts[c - 1], r0, r1, n):
            return False
    return True


def differential(y: State, G: GridDiagram) -> Chain:
    """Boundary of a single state: the states reached by empty rectangles."""
    _check_state(y, G)
    n = G.n
    out: set[State] = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            if _empty(G, y, i, j, y[i - 1], y[j - 1]):
                x = list(y)
                x[i - 1], x[j - 1] = y[j - 1], y[i - 1]
                out ^= {tuple(x)}
    return frozenset(out)


def adjoint(x: State, G: GridDiagram) -> Chain:
    """States y whose boundary contains x."""
    _check_state(x, G)
    n = G.n
    out: set[State] = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            # y has lower-left (i, x[j]) and upper-right (j, x[i])
            if _empty(G, x, i, j, x[j - 1], x[i - 1]):
                y = list(x)
                y[i - 1], y[j - 1] = x[j - 1], x[i - 1]
                out ^= {tuple(y)}
    return frozenset(out)


def boundary(c: Iterable[State], G: GridDiagram) -> Chain:
    out: set[State] = set()
    for y in c:
        out ^= differential(y, G)
    return frozenset(out)


def d_squared(G: GridDiagram, y: State) -> Chain:
    """The boundary of the boundary of y; empty for a differential."""
    return boundary(differential(y, G), G)


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class NullChain:
    chain: tuple[State, ...]

    kind = "NullChain"

    def to_json(self) -> dict:
        return {"kind": self.kind, "chain": [list(s) for s in self.chain]}


@dataclass(frozen=True)
class NonVanishing:
    A: tuple[State, ...]
    B: tuple[State, ...]
    D: tuple[int, ...]  # row k: boundary of A[k] as a bitmask over B (bit m <-> B[m])
    rank: int

    kind = "NonVanishing"

    def matrix_rows(self) -> list[str]:
        width = len(self.B)
        return ["".join("1" if row >> m & 1 else "0" for m in range(width)) for row in self.D]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "A": [list(s) for s in self.A],
            "B": [list(s) for s in self.B],
            "matrix": self.matrix_rows(),
            "rank": self.rank,
        }


ThetaCertificate = Union[NullChain, NonVanishing]


def certificate_from_json(data: dict) -> ThetaCertificate:
    kind = data.get("kind")
    if kind == "NullChain":
        return NullChain(tuple(tuple(s) for s in data["chain"]))
    if kind == "NonVanishing":
        B = tuple(tuple(s) for s in data["B"])
        D = tuple(sum(1 << m for m, ch in enumerate(row) if ch == "1") for row in data["matrix"])
        return NonVanishing(tuple(tuple(s) for s in data["A"]), B, D, int(data["rank"]))
    raise ValueError(f"unknown certificate kind {kind!r}")


# -- saturation --------------------------------------------------------------


@dataclass(frozen=True)
class Saturation:
    A: tuple[State, ...]
    B: tuple[State, ...]
    D: tuple[int, ...]
    layers: tuple[tuple[int, int], ...]  # (|A_k|, |B_k|) per round


def saturate(G: GridDiagram, state_cap: int | None = None) -> Saturation:
    """Grow A and B from x+ until neither gains a state.

    B_0 = {x+}; A_k holds the new states with a rectangle into B_(k-1);
    B_k holds the new states hit by a rectangle out of A_k.
    """
    xp = x_plus(G)
    A: set[State] = set()
    B: set[State] = {xp}
    images: dict[State, Chain] = {}
    frontier = {xp}
    layers = [(0, 1)]
    while frontier:
        new_a = set()
        for x in frontier:
            new_a |= adjoint(x, G)
        new_a -= A
        A |= new_a
        new_b = set()
        for y in new_a:
            images[y] = differential(y, G)
            new_b |= images[y]
        new_b -= B
        B |= new_b
        if state_cap is not None and len(A) + len(B) > state_cap:
            raise BudgetExceeded(f"saturation exceeded {state_cap} states")
        if new_a or new_b:
            layers.append((len(new_a), len(new_b)))
        frontier = new_b
    a_list = tuple(sorted(A))
    b_list = tuple(sorted(B))
    b_index = {s: m for m, s in enumerate(b_list)}
    D = tuple(sum(1 << b_index[x] for x in images[y]) for y in a_list)
    return Saturation(a_list, b_list, D, tuple(layers))


def _require_knot(G: GridDiagram) -> None:
    validate(G)
    if components(G) != 1:
        raise MultiComponent(f"grid has {components(G)} components")


def theta_vanishes(G: GridDiagram, state_cap: int | None = None) -> ThetaCertificate:
    """Decide whether x+ is a boundary; the answer comes with a certificate.

    Every chain whose boundary is x+ can be cut down to the saturated set
    A, so solving inside A is complete.
    """
    _require_knot(G)
    sat = saturate(G, state_cap)
    target = 1 << sat.B.index(x_plus(G))
    combo = gf2.solve(list(sat.D), target)
    if combo is not None:
        return NullChain(tuple(sat.A[k] for k in range(len(sat.A)) if combo >> k & 1))
    return NonVanishing(sat.A, sat.B, sat.D, gf2.rank(sat.D))


def verify_certificate(G: GridDiagram, cert: ThetaCertificate) -> bool:
    """Check a certificate from scratch; never raises on a bad certificate."""
    try:
        _require_knot(G)
        xp = x_plus(G)
        if isinstance(cert, NullChain):
            if len(set(cert.chain)) != len(cert.chain):
                return False
            for y in cert.chain:
                _check_state(y, G)
            return boundary(cert.chain, G) == frozenset({xp})
        if isinstance(cert, NonVanishing):
            sat = saturate(G)
            if sat.A != tuple(cert.A) or sat.B != tuple(cert.B) or sat.D != tuple(cert.D):
                return False
            if gf2.rank(cert.D) != cert.rank:
                return False
            return gf2.solve(list(cert.D), 1 << sat.B.index(xp)) is None
    except (GridError, ValueError):
        return False
    return False


# -- exhaustive oracle -------------------------------------------------------


def all_states(n: int) -> Iterator[State]:
    return itertools.permutations(range(1, n + 1))


def brute_force_theta(G: GridDiagram) -> bool:
    """True when x+ is a boundary, solved over all n! states."""
    _require_knot(G)
    n = G.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force needs n <= {BRUTE_FORCE_MAX_N}, got {n} ({math.factorial(n)} states)")
    index = {s: k for k, s in enumerate(all_states(n))}
    basis = gf2.XorBasis()
    for y in index:
        vec = 0
        for x in differential(y, G):
            vec |= 1 << index[x]
        basis.insert(vec, 0)
    rest, _ = basis.reduce(1 << index[x_plus(G)])
    return rest == 0
