"""HOMFLY-PT polynomial by skein recursion to descending diagrams.

Convention: ``x P(L+) - x^-1 P(L-) = z P(L0)``, ``P(unknot) = 1``.  A
descending diagram with c components is the c-component unlink and has
value ``delta^(c-1)`` with ``delta = (x - x^-1) / z``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .planar import PlanarDiagram, braid_closure
from .poly import GaussLaurentPoly, LaurentPoly, x_poly

DEFAULT_CROSSING_CAP = 16

ONE = LaurentPoly.const(1)
DELTA = LaurentPoly({(1, -1): 1, (-1, -1): -1})


class DiagramTooLarge(RuntimeError):
    pass


class OddZPower(ValueError):
    pass


class NegativeZPower(ValueError):
    pass


def _delta_pow(k: int) -> LaurentPoly:
    out = ONE
    for _ in range(k):
        out = out * DELTA
    return out


class _Skein:
    def __init__(self):
        self.memo: dict[tuple, LaurentPoly] = {}
        self.nodes = 0

    def value(self, d: PlanarDiagram) -> LaurentPoly:
        d = d.simplify()
        pieces = d.split()
        total = len(pieces) + d.free_loops
        out = _delta_pow(max(total - 1, 0))
        for piece in pieces:
            out = out * self.connected(piece, None)
        return out

    def connected(self, d: PlanarDiagram, plan) -> LaurentPoly:
        s = d.simplify()
        if s.crossings != d.crossings:
            return self.value(s)
        key = d.canonical_code()
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if plan is None:
            plan = _best_plan(d)
        k = _first_bad(d, plan)
        if k is None:
            res = _delta_pow(len(plan) - 1)
        else:
            u, o = 2 * k, 2 * k + 1
            sw_plan = [o if p == u else u if p == o else p for p in plan]
            p_sw = self.connected(d.switch(k), sw_plan)
            p_sm = self.value(d.smooth(k))
            if d.signs[k] > 0:
                res = p_sw.shift(-2, 0) + p_sm.shift(-1, 1)
            else:
                res = p_sw.shift(2, 0) - p_sm.shift(1, 1)
        self.memo[key] = res
        return res


def _walk(d: PlanarDiagram, plan: Sequence[int]):
    for start in plan:
        p = start
        while True:
            yield p
            p = d.succ[p]
            if p == start:
                break


def _first_bad(d: PlanarDiagram, plan: Sequence[int]) -> int | None:
    seen = set()
    for p in _walk(d, plan):
        k = p >> 1
        if k in seen:
            continue
        seen.add(k)
        if not p & 1:
            return k
    return None


def _count_bad(d: PlanarDiagram, plan: Sequence[int]) -> int:
    seen = set()
    bad = 0
    for p in _walk(d, plan):
        k = p >> 1
        if k not in seen:
            seen.add(k)
            bad += not p & 1
    return bad


def _best_plan(d: PlanarDiagram) -> list[int]:
    """Base points (one per component, in order) with few non-descending crossings."""
    cycles = d.cycles()
    starts = []
    for cyc in cycles:
        members = set(cyc)
        best, best_bad = cyc[0], None
        for s in cyc:
            bad = _count_bad(d, [s]) - sum(
                1 for p in cyc if not p & 1 and (p ^ 1) not in members
            )
            if best_bad is None or bad < best_bad:
                best, best_bad = s, bad
        starts.append(best)
    if len(starts) == 1:
        return starts
    if len(starts) <= 5:
        return min(
            (list(order) for order in itertools.permutations(starts)),
            key=lambda plan: _count_bad(d, plan),
        )
    return starts


def homfly(d: PlanarDiagram, crossing_cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    """HOMFLY-PT polynomial as a Laurent polynomial in (x, z).

    The cap applies after Reidemeister I/II simplification.
    """
    s = d.simplify()
    if s.crossings > crossing_cap:
        raise DiagramTooLarge(f"{s.crossings} crossings exceed the cap of {crossing_cap}")
    return _Skein().value(s)


def homfly_braid(strands: int, letters: Sequence[int], crossing_cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly:
    return homfly(braid_closure(strands, letters), crossing_cap)


# -- specializations ---------------------------------------------------------


def eval_z0(p: LaurentPoly) -> LaurentPoly:
    """Substitute z = 0; the result is a Laurent polynomial in x alone."""
    if any(k[1] < 0 for k in p.terms):
        raise NegativeZPower("z = 0 needs nonnegative z-degrees")
    return x_poly({k[0]: v for k, v in p.terms.items() if k[1] == 0})


def eval_z2i(p: LaurentPoly, strict: bool = False) -> GaussLaurentPoly:
    """Substitute z = 2i.

    Even z-powers give real coefficients via z^2 = -4; odd powers carry a
    factor of i.  With ``strict`` odd powers are refused (knot input).
    """
    out: dict[int, list[int]] = {}
    for (xe, ze), c in p.terms.items():
        if ze < 0:
            raise NegativeZPower("z = 2i evaluation needs nonnegative z-degrees")
        if ze % 2 and strict:
            raise OddZPower(f"odd z-degree {ze} in a knot polynomial")
        val = c * (2 ** ze) * (-1) ** (ze // 2)
        slot = out.setdefault(xe, [0, 0])
        slot[ze % 2] += val
    return GaussLaurentPoly({e: (v[0], v[1]) for e, v in out.items()})


# -- closed forms ------------------------------------------------------------


def torus_formula_z0(p: int) -> LaurentPoly:
    """T(2, 2p+1) at z = 0: x^(-2p-2) (-p + (p+1) x^2)."""
    return x_poly({-2 * p - 2: -p, -2 * p: p + 1})


def torus_formula_z2i(p: int) -> GaussLaurentPoly:
    """T(2, 2p+1) at z = 2i: -(-x^2)^(-p-1) (p + (p+1) x^2)."""
    m = p + 1
    s = -((-1) ** m)
    return GaussLaurentPoly({-2 * m: (s * p, 0), -2 * m + 2: (s * (p + 1), 0)})


def family_formula_z0(a: int, b: int) -> LaurentPoly:
    """x^(-2a-2b-6) (-2a-2 + (3a+3-b) x^2 + (b-a) x^4)."""
    e = -2 * a - 2 * b - 6
    return x_poly({e: -2 * a - 2, e + 2: 3 * a + 3 - b, e + 4: b - a})


def family_formula_z2i(a: int, b: int) -> GaussLaurentPoly:
    """-(-x^2)^(-a-b-3) (2(1+a)(1+2b) + (3+3a+7b+8ab) x^2 + (a+3b+4ab) x^4)."""
    m = a + b + 3
    s = -((-1) ** m)
    c0 = 2 * (1 + a) * (1 + 2 * b)
    c2 = 3 + 3 * a + 7 * b + 8 * a * b
    c4 = a + 3 * b + 4 * a * b
    return GaussLaurentPoly({-2 * m: (s * c0, 0), -2 * m + 2: (s * c2, 0), -2 * m + 4: (s * c4, 0)})
