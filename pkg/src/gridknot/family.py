"""The two-parameter family K(a, b): braids, grid diagrams and certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .braid import BraidWord, braid_equal, conjugate, exchange_move, exchange_sites, word
from .grid import GridDiagram, validate


class NegativeParam(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    c: int = 0
    d: int = 0

    def __post_init__(self):
        _check(self.a, self.b, self.c, self.d)

    @property
    def e(self) -> int:
        return 2 * self.b + 7

    @property
    def f(self) -> int:
        return 2 * self.a + 2 * self.b + 9


def _check(*params: int) -> None:
    for p in params:
        if p < 0:
            raise NegativeParam(f"parameters must be nonnegative, got {params}")


def b1_word(a: int, b: int) -> BraidWord:
    """s3 s2^-2 s3^(2a+2) s2 s3^-1 s1^-1 s2 s1^(2b+2)."""
    _check(a, b)
    return word(4, (3, 1), (2, -2), (3, 2 * a + 2), (2, 1), (3, -1), (1, -1), (2, 1), (1, 2 * b + 2))


def b2_word(a: int, b: int) -> BraidWord:
    """s3 s2^-2 s3^(2a+2) s2 s3^-1 s1^(2b+2) s2 s1^-1."""
    _check(a, b)
    return word(4, (3, 1), (2, -2), (3, 2 * a + 2), (2, 1), (3, -1), (1, 2 * b + 2), (2, 1), (1, -1))


def conjectured_word(a: int, b: int, c: int, d: int) -> BraidWord:
    """s3 s2^(-2c-2) s3^(2a+2) s2 s3^(-2d-1) s1^-1 s2 s1^(2b+2); (c, d) = (0, 0) is b1_word."""
    _check(a, b, c, d)
    return word(
        4, (3, 1), (2, -2 * c - 2), (3, 2 * a + 2), (2, 1), (3, -2 * d - 1), (1, -1), (2, 1), (1, 2 * b + 2)
    )


def bprime_g1_word(a: int, b: int) -> BraidWord:
    """s3^(2a+3) s2 s3^-1 s1^-2 s2^(2b+1) s1 s2^-1 s1."""
    return word(4, (3, 2 * a + 3), (2, 1), (3, -1), (1, -2), (2, 2 * b + 1), (1, 1), (2, -1), (1, 1))


def bprime_g2_word(a: int, b: int) -> BraidWord:
    """s3^(2a+2) s2 s1 s3 s2 s1 s3 s2 s3^(2b+1) s1^-1 s2^-1 s1^-2 s2^-1 s1^-1 s2^-1."""
    return word(
        4,
        (3, 2 * a + 2), (2, 1), (1, 1), (3, 1), (2, 1), (1, 1), (3, 1), (2, 1), (3, 2 * b + 1),
        (1, -1), (2, -1), (1, -2), (2, -1), (1, -1), (2, -1),
    )


def bprime_g2_rewritten(a: int, b: int) -> BraidWord:
    """s3^(2a+2) s2 s3^-1 s1^(2b+2) s2 s1^-1 s3 s2^-2, conjugate to b2_word(a, b)."""
    return word(4, (3, 2 * a + 2), (2, 1), (3, -1), (1, 2 * b + 2), (2, 1), (1, -1), (3, 1), (2, -2))


def g1(a: int, b: int) -> GridDiagram:
    """Grid of size 2a+2b+9 whose B' braid is bprime_g1_word(a, b).

    Layout, with w = 2b+2 the width of the superdiagonal block:
    columns 1, 2, then the block (columns 3..w+2, rows 5..w+4: X one above
    the diagonal, O one below), columns w+3, w+4, then the diagonal block
    of width 2a+3 (X on the diagonal, O two rows below).
    """
    _check(a, b)
    w = 2 * b + 2
    n = 2 * a + 2 * b + 9
    X = [5, 4] + [c + 3 for c in range(3, w + 2)] + [2, 1, 3] + list(range(w + 5, n + 1))
    O = [1, n - 1, 3] + [c + 1 for c in range(4, w + 3)] + [4, n, 2] + [c - 2 for c in range(w + 6, n + 1)]
    G = GridDiagram(X, O)
    validate(G)
    return G


def g2(a: int, b: int) -> GridDiagram:
    """Grid of size 2a+2b+10 whose B' braid is bprime_g2_word(a, b).

    Columns 1-4 hold X's on the antidiagonal; two diagonal blocks follow
    (width 2b+2 starting at column 5, width 2a+3 ending at column n), each
    with X on the diagonal and O two rows below.
    """
    _check(a, b)
    w = 2 * b + 2
    n = 2 * a + 2 * b + 10
    X = [4, 3, 2, 1] + list(range(5, n + 1))
    O = (
        [n - 1, w + 5, 4, w + 4, n, 3]
        + [c - 2 for c in range(7, w + 5)]
        + [2, 1, w + 3]
        + [c - 2 for c in range(w + 8, n + 1)]
    )
    G = GridDiagram(X, O)
    validate(G)
    return G


def g1_x_plus(a: int, b: int) -> tuple[int, ...]:
    """x+ of g1: (1, 6, 5, 7, ..., e, 3, 2, 4, e+1, ..., f) with e = 2b+7, f = 2a+2b+9."""
    e, f = 2 * b + 7, 2 * a + 2 * b + 9
    return (1, 6, 5, *range(7, e + 1), 3, 2, 4, *range(e + 1, f + 1))


def g1_null_chain(a: int, b: int) -> list[tuple[int, ...]]:
    """The three states whose boundaries sum to x+ on g1(a, b)."""
    e, f = 2 * b + 7, 2 * a + 2 * b + 9
    mid = tuple(range(7, e))
    tail = tuple(range(e + 1, f + 1))
    y1 = (1, 6, 5, *mid, e, 2, 3, 4, *tail)
    y2 = (1, 5, 6, *mid, 2, e, 3, 4, *tail)
    y3 = (1, 4, 6, *mid, 2, 5, 3, e, *tail)
    return [y1, y2, y3]


def g2_state(prefix: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Expand the abbreviated five-entry state with the identity tail."""
    n = 2 * a + 2 * b + 10
    return tuple(prefix) + tuple(range(6, n + 1))


# abbreviated saturation sets for g2 (first five entries; identity tail)
G2_X_PLUS = (1, 5, 4, 3, 2)
G2_A_STATES = [
    (1, 4, 5, 3, 2), (1, 5, 3, 4, 2), (1, 5, 4, 2, 3),
    (4, 1, 5, 2, 3), (3, 5, 1, 2, 4), (2, 4, 5, 1, 3), (2, 5, 3, 1, 4),
    (1, 4, 2, 5, 3), (4, 1, 2, 3, 5), (5, 1, 2, 4, 3), (2, 4, 1, 3, 5),
    (5, 2, 1, 3, 4),
]
G2_B_STATES = [
    G2_X_PLUS,
    (4, 1, 5, 3, 2), (3, 5, 1, 4, 2), (2, 5, 4, 1, 3),
    (4, 2, 5, 1, 3), (3, 5, 2, 1, 4), (4, 1, 2, 5, 3), (2, 4, 1, 5, 3),
    (4, 2, 1, 3, 5), (5, 2, 1, 4, 3),
]


# (a, b) -> knot table name; reported as given, not checked here
KNOWN_NAMES = {
    (0, 0): "mirror of 10_132",
    (0, 1): "12n_120",
    (1, 0): "12n_199",
    (0, 2): "14n_2016",
    (1, 1): "14n_3606",
    (2, 0): "14n_5045",
}


def flype_pair_7_2() -> tuple[BraidWord, BraidWord]:
    """The 7_2 pair s3^2 s2^2 s3^-1 s1^2 s2 s1^-1 <-> s3^2 s2^2 s3^-1 s1^-1 s2 s1^2."""
    return (
        word(4, (3, 2), (2, 2), (3, -1), (1, 2), (2, 1), (1, -1)),
        word(4, (3, 2), (2, 2), (3, -1), (1, -1), (2, 1), (1, 2)),
    )


# -- the conjugation / exchange chain ----------------------------------------


@dataclass
class ChainStep:
    move: str
    word: BraidWord
    ok: bool

    def to_json(self) -> dict:
        return {"move": self.move, "word": str(self.word), "ok": self.ok}


def _chain_words(a: int, b: int) -> list[BraidWord]:
    A, B = 2 * a + 3, 2 * b + 1
    return [
        word(4, (2, -1), (3, -1), (2, A), (1, 1), (2, -1), (3, 1), (2, 1), (1, -1), (2, B), (1, 1), (2, -1)),
        word(4, (2, -1), (3, 1), (2, A), (1, 1), (2, -1), (3, -1), (2, 1), (1, -1), (2, B), (1, 1), (2, -1)),
        word(4, (2, -1), (3, 1), (2, A), (3, 1), (2, -1), (1, -1), (2, 1), (3, -1), (2, B), (1, 1), (2, -1)),
        word(4, (2, -1), (3, 1), (2, A), (3, 1), (2, -1), (1, 1), (2, 1), (3, -1), (2, B), (1, -1), (2, -1)),
    ]


def _exchange(w: BraidWord, gen: int, expected: BraidWord) -> bool:
    return any(exchange_move(w, site, gen) == expected for site in exchange_sites(w, gen))


def g1_chain(a: int, b: int) -> list[ChainStep]:
    """Take B'(G1(a, b)) to B1(a, b) by conjugations and exchange moves.

    Conjugation steps and the middle rewriting are checked as group
    equalities; exchange steps must reproduce the next word letter for letter.
    """
    _check(a, b)
    start = bprime_g1_word(a, b)
    w1, w2, w3, w4 = _chain_words(a, b)
    target = b1_word(a, b)
    return [
        ChainStep("start", start, True),
        ChainStep("conj s1", w1, braid_equal(conjugate(start, 1), w1)),
        ChainStep("exch s3", w2, _exchange(w1, 3, w2)),
        ChainStep("braid relations", w3, braid_equal(w2, w3)),
        ChainStep("exch s1", w4, _exchange(w3, 1, w4)),
        ChainStep("conj s3", target, braid_equal(conjugate(w4, 3), target)),
    ]


def g2_chain(a: int, b: int) -> list[ChainStep]:
    """B'(G2(a, b)) rewritten by braid relations, then conjugated to B2(a, b)."""
    _check(a, b)
    start = bprime_g2_word(a, b)
    mid = bprime_g2_rewritten(a, b)
    target = b2_word(a, b)
    # mid = u v with v = s3 s2^-2 and target = v u, so target = v mid v^-1
    v = BraidWord(4, (3, -2, -2))
    return [
        ChainStep("start", start, True),
        ChainStep("braid relations", mid, braid_equal(start, mid)),
        ChainStep("conj s3 s2^-2", target, braid_equal(v * mid * v.inverse(), target)),
    ]


# -- primality ---------------------------------------------------------------


def _root_identity(family: tuple[int, int, int], torus_root: Fraction) -> Fraction:
    c0, c2, c4 = family
    t = torus_root
    return c0 + c2 * t + c4 * t * t


@dataclass
class PrimalityCertificate:
    a: int
    b: int
    search_bound: int
    solutions: list[int]
    difference_vanishes: bool  # b(1 + a) = 0
    passes: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "search_bound": self.search_bound,
            "solutions": self.solutions,
            "difference_vanishes": self.difference_vanishes,
            "passes": self.passes,
            "note": self.note,
        }


def identity_z0(a: int, b: int, p: int) -> int:
    """p^2 - (a+b+1)p - (2a+2): zero iff the torus factor's z=0 root kills the family's."""
    return p * p - (a + b + 1) * p - (2 * a + 2)


def identity_z2i(a: int, b: int, p: int) -> int:
    """p^2 - (a+b+1)p - (2a+2+4b+4ab), the z = 2i analogue."""
    return p * p - (a + b + 1) * p - (2 * a + 2 + 4 * b + 4 * a * b)


def _divides_at(a: int, b: int, p: int) -> bool:
    """Both specializations of T(2,2p+1) divide those of K(a,b) (root test in x^2)."""
    z0 = (-2 * a - 2, 3 * a + 3 - b, b - a)
    z2i = (2 * (1 + a) * (1 + 2 * b), 3 + 3 * a + 7 * b + 8 * a * b, a + 3 * b + 4 * a * b)
    return (
        _root_identity(z0, Fraction(p, p + 1)) == 0
        and _root_identity(z2i, Fraction(-p, p + 1)) == 0
    )


def primality_check(a: int, b: int) -> PrimalityCertificate:
    """Rule out a torus-knot summand T(2, 2p+1), p not in {0, -1}.

    Divisibility at z = 0 and z = 2i forces both integer identities; they
    differ by 4b(1 + a), and with b = 0 the first needs (a+1)(a+9) square.
    """
    _check(a, b)
    bound = 2 * a + 2 * b + 10
    sols = []
    for p in range(-bound, bound + 1):
        if p in (0, -1):
            continue
        both = identity_z0(a, b, p) == 0 and identity_z2i(a, b, p) == 0
        if both != _divides_at(a, b, p):
            raise AssertionError(f"identity mismatch at a={a}, b={b}, p={p}")
        if both:
            sols.append(p)
    diff_zero = b * (1 + a) == 0
    if (a, b) == (0, 0):
        passes = sols == [2] and diff_zero
        note = "only p = 2; K(0,0) is handled by its knot-table identification"
    else:
        passes = not sols
        note = "no admissible p" if passes else "unexpected solution"
    return PrimalityCertificate(a, b, bound, sols, diff_zero, passes, note)


# -- end-to-end report -------------------------------------------------------


@dataclass
class Report:
    a: int
    b: int
    sections: dict = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)
    certified: bool = False

    @property
    def verdict(self) -> str:
        return "transversely nonsimple pair certified" if self.certified else "not certified"

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "known_name": KNOWN_NAMES.get((self.a, self.b)),
            "sections": self.sections,
            "errors": self.errors,
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        lines = [f"K({self.a},{self.b})"]
        name = KNOWN_NAMES.get((self.a, self.b))
        if name:
            lines.append(f"  listed as {name} (not checked)")
        for key, val in self.sections.items():
            status = val.get("status", "ok" if val.get("ok") else "FAIL")
            lines.append(f"  {key}: {status}")
            for k2, v2 in val.items():
                if k2 in ("status", "ok") or isinstance(v2, (list, dict)):
                    continue
                lines.append(f"    {k2}: {v2}")
        for err in self.errors:
            lines.append(f"  error: {err}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def reproduce(a: int, b: int, crossing_cap: int | None = None, state_cap: int | None = None) -> Report:
    """Run every check behind the nonsimplicity claim for K(a, b)."""
    from . import floer, homfly
    from .braid import bprime, grid_to_braid, sl
    from .grid import front_data

    _check(a, b)
    if crossing_cap is None:
        crossing_cap = homfly.DEFAULT_CROSSING_CAP
    rep = Report(a, b)
    B1, B2 = b1_word(a, b), b2_word(a, b)
    G1, G2 = g1(a, b), g2(a, b)

    s1, s2 = sl(B1), sl(B2)
    sl_g = [sl(grid_to_braid(G1)), sl(grid_to_braid(G2))]
    fronts = [front_data(G1).sl, front_data(G2).sl]
    rep.sections["self_linking"] = {
        "ok": s1 == s2 == 2 * a + 2 * b - 1 and sl_g == [s1, s1] and fronts == [s1, s1],
        "sl_B1": s1,
        "sl_B2": s2,
        "sl_grids": sl_g,
        "tb_minus_r_grids": fronts,
    }

    c1, c2 = g1_chain(a, b), g2_chain(a, b)
    rep.sections["braids"] = {
        "ok": bprime(G1) == bprime_g1_word(a, b)
        and bprime(G2) == bprime_g2_word(a, b)
        and all(s.ok for s in c1 + c2),
        "g1_chain": [s.to_json() for s in c1],
        "g2_chain": [s.to_json() for s in c2],
    }

    try:
        t1 = floer.theta_vanishes(G1, state_cap)
        t2 = floer.theta_vanishes(G2, state_cap)
    except floer.BudgetExceeded as exc:
        rep.errors.append(f"budget: {exc}")
        rep.sections["theta"] = {"ok": False, "status": "budget exceeded"}
    else:
        ok = (
            isinstance(t1, floer.NullChain)
            and isinstance(t2, floer.NonVanishing)
            and floer.verify_certificate(G1, t1)
            and floer.verify_certificate(G2, t2)
        )
        rep.sections["theta"] = {
            "ok": ok,
            "g1": t1.kind,
            "g1_chain_size": len(t1.chain) if isinstance(t1, floer.NullChain) else None,
            "g2": t2.kind,
            "g2_sizes": f"|A|={len(t2.A)} |B|={len(t2.B)} rank={t2.rank}"
            if isinstance(t2, floer.NonVanishing) else None,
            "g1_certificate": t1.to_json(),
            "g2_certificate": t2.to_json(),
        }

    try:
        P = homfly.homfly_braid(4, B1.letters, crossing_cap)
    except homfly.DiagramTooLarge as exc:
        rep.sections["homfly"] = {"ok": True, "status": "skipped", "reason": str(exc)}
    else:
        z0 = homfly.eval_z0(P)
        z2i = homfly.eval_z2i(P, strict=True)
        rep.sections["homfly"] = {
            "ok": z0 == homfly.family_formula_z0(a, b) and z2i == homfly.family_formula_z2i(a, b),
            "P": str(P),
            "z0": str(z0),
            "z2i": str(z2i),
        }

    prime = primality_check(a, b)
    rep.sections["primality"] = {"ok": prime.passes, "solutions": str(prime.solutions), "note": prime.note}

    rep.certified = not rep.errors and all(v.get("ok") for v in rep.sections.values())
    return rep
