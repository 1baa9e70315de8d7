"""Acceptance checks, one test per criterion.

Each test prints ``criterion k: PASS|FAIL`` and the session summary lists all
of them.  Run standalone with ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time

import pytest

from conftest import FIXTURES, fixture_grid, random_grid
from gridknot.braid import (
    BraidWord,
    bprime,
    braid_equal,
    braid_to_grid,
    exchange_move,
    exchange_sites,
    grid_to_braid,
    markov_stabilize,
    sl,
)
from gridknot.family import (
    G2_A_STATES,
    G2_B_STATES,
    b1_word,
    b2_word,
    bprime_g1_word,
    bprime_g2_word,
    g1,
    g1_chain,
    g1_null_chain,
    g2,
    g2_state,
    primality_check,
)
from gridknot.floer import (
    NonVanishing,
    NullChain,
    all_states,
    boundary,
    brute_force_theta,
    d_squared,
    theta_vanishes,
)
from gridknot.grid import (
    GridDiagram,
    IllegalCommutation,
    commute_columns,
    commute_rows,
    components,
    front_data,
    grid_to_planar,
    stabilize,
    translate,
    x_plus,
)
from gridknot.homfly import (
    eval_z0,
    eval_z2i,
    family_formula_z0,
    family_formula_z2i,
    homfly,
    homfly_braid,
    torus_formula_z0,
    torus_formula_z2i,
)
from oracles import dense_rank

SMALL = list(itertools.product(range(3), repeat=2))


def _check(acceptance, k, title, body):
    """Run ``body(failures)``; an exception counts as a failure, not a missing line."""
    failures = []
    try:
        body(failures)
    except Exception as exc:  # noqa: BLE001
        failures.append(f"{type(exc).__name__}: {exc}")
    acceptance(k, title, not failures)
    assert not failures, failures[:10]


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def test_criterion_1_theta_vanishes_on_g1(acceptance):
    def body(failures):
        for a, b in SMALL:
            G = g1(a, b)
            cert, dt = _timed(theta_vanishes, G)
            if not isinstance(cert, NullChain):
                failures.append(f"g1({a},{b}) gave {cert.kind}")
            if dt >= 1.0:
                failures.append(f"g1({a},{b}) took {dt:.2f}s")
            if boundary(g1_null_chain(a, b), G) != frozenset({x_plus(G)}):
                failures.append(f"g1({a},{b}) hand chain does not bound x+")
            if isinstance(cert, NullChain) and boundary(cert.chain, G) != frozenset({x_plus(G)}):
                failures.append(f"g1({a},{b}) solver chain does not bound x+")

    _check(acceptance, 1, "theta vanishes on G1 with a verified null chain", body)


def test_criterion_2_theta_nonvanishing_on_g2(acceptance):
    def body(failures):
        for a, b in SMALL:
            G = g2(a, b)
            cert, dt = _timed(theta_vanishes, G)
            if dt >= 1.0:
                failures.append(f"g2({a},{b}) took {dt:.2f}s")
            if not isinstance(cert, NonVanishing):
                failures.append(f"g2({a},{b}) gave {cert.kind}")
                continue
            if (len(cert.A), len(cert.B), cert.rank) != (12, 10, 8):
                failures.append(f"g2({a},{b}) sizes {len(cert.A)}, {len(cert.B)}, rank {cert.rank}")
            if set(cert.A) != {g2_state(s, a, b) for s in G2_A_STATES}:
                failures.append(f"g2({a},{b}) A differs from the listed states")
            if set(cert.B) != {g2_state(s, a, b) for s in G2_B_STATES}:
                failures.append(f"g2({a},{b}) B differs from the listed states")
            # independent check that x+ is not a sum of rows
            dense = [[row >> m & 1 for m in range(len(cert.B))] for row in cert.D]
            target = [1 if s == x_plus(G) else 0 for s in cert.B]
            if dense_rank(dense + [target]) != dense_rank(dense) + 1:
                failures.append(f"g2({a},{b}) x+ lies in the image")

    _check(acceptance, 2, "theta nonvanishing on G2 with |A|=12, |B|=10, rank 8", body)


def test_criterion_3_bprime_identities(acceptance):
    def body(failures):
        for a, b in SMALL:
            for name, G, w in (("g1", g1(a, b), bprime_g1_word(a, b)), ("g2", g2(a, b), bprime_g2_word(a, b))):
                if not braid_equal(bprime(G), w):
                    failures.append(f"B'({name}({a},{b})) differs from the stated word")

    _check(acceptance, 3, "B' word identities", body)


def test_criterion_4_proof_chain(acceptance):
    def body(failures):
        for a, b in SMALL:
            steps = g1_chain(a, b)
            moves = [s.move for s in steps]
            if moves != ["start", "conj s1", "exch s3", "braid relations", "exch s1", "conj s3"]:
                failures.append(f"({a},{b}) unexpected move list {moves}")
            if steps[0].word != bprime(g1(a, b)) or steps[-1].word != b1_word(a, b):
                failures.append(f"({a},{b}) chain endpoints wrong")
            failures += [f"({a},{b}) step {s.move} failed" for s in steps if not s.ok]

    _check(acceptance, 4, "conjugation and exchange chain from B'(G1) to B1", body)


def test_criterion_5_homfly_formulas(acceptance):
    def body(failures):
        for a, b in [(0, 0), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)]:
            P = homfly_braid(4, b1_word(a, b).letters)
            if eval_z0(P) != family_formula_z0(a, b):
                failures.append(f"z=0 mismatch at ({a},{b})")
            if eval_z2i(P, strict=True) != family_formula_z2i(a, b):
                failures.append(f"z=2i mismatch at ({a},{b})")
        for p in range(1, 5):
            P = homfly_braid(2, (1,) * (2 * p + 1))
            if eval_z0(P) != torus_formula_z0(p) or eval_z2i(P, strict=True) != torus_formula_z2i(p):
                failures.append(f"torus mismatch at p={p}")

    _check(acceptance, 5, "HOMFLY-PT specializations of the family and of T(2,2p+1)", body)


def test_criterion_6_self_linking(acceptance):
    def body(failures):
        for a, b in itertools.product(range(5), repeat=2):
            if not sl(b1_word(a, b)) == sl(b2_word(a, b)) == 2 * a + 2 * b - 1:
                failures.append(f"sl mismatch at ({a},{b})")
        grids = [fixture_grid("g1_1_1.json"), fixture_grid("g2_1_1.json")]
        grids += [g1(a, b) for a, b in SMALL] + [g2(a, b) for a, b in SMALL]
        rng = random.Random(2024)
        grids += [random_grid(rng, rng.randint(2, 8)) for _ in range(150)]
        for G in grids:
            f = front_data(G)
            if f.tb - f.r != sl(grid_to_braid(G)):
                failures.append(f"tb - r != sl for {G}")

    _check(acceptance, 6, "self-linking numbers and tb - r = sl", body)


def _cromwell_variants(G, rng):
    out = [translate(G, rng.randrange(G.n), rng.randrange(G.n))]
    for _ in range(4):
        k = rng.randint(1, G.n)
        try:
            out.append(commute_columns(G, k) if rng.random() < 0.5 else commute_rows(G, k))
        except IllegalCommutation:
            pass
    out.append(stabilize(G, rng.randint(1, G.n), rng.choice(["NW", "NE", "SW", "SE"])))
    return out


def test_criterion_7_property_suites(acceptance):
    def body(failures):
        rng = random.Random(7)

        # d^2 = 0: every state for n <= 6, random states up to n = 16
        for n in range(2, 7):
            for _ in range(2):
                G = random_grid(rng, n, knot=False)
                if any(d_squared(G, y) for y in all_states(n)):
                    failures.append(f"d^2 != 0 on {G}")
        for n in range(7, 17):
            for _ in range(5):
                G = random_grid(rng, n, knot=False)
                for _ in range(20):
                    y = list(range(1, n + 1))
                    rng.shuffle(y)
                    if d_squared(G, tuple(y)):
                        failures.append(f"d^2 != 0 on {G} at {y}")

        # exhaustive oracle: all knot grids with n <= 5, then random n = 6, 7
        for n in range(2, 6):
            for X in itertools.permutations(range(1, n + 1)):
                for O in itertools.permutations(range(1, n + 1)):
                    if any(p == q for p, q in zip(X, O)):
                        continue
                    G = GridDiagram(X, O)
                    if components(G) == 1 and isinstance(theta_vanishes(G), NullChain) != brute_force_theta(G):
                        failures.append(f"oracle disagrees on {G}")
        for _ in range(100):
            G = random_grid(rng, rng.choice([6, 7]))
            if isinstance(theta_vanishes(G), NullChain) != brute_force_theta(G):
                failures.append(f"oracle disagrees on {G}")

        # grid and braid closure agree on every fixture
        for path in sorted(FIXTURES.glob("*.json")):
            G = GridDiagram.load(path)
            B = grid_to_braid(G)
            if homfly(grid_to_planar(G)) != homfly_braid(B.strands, B.letters, crossing_cap=40):
                failures.append(f"closure mismatch on {path.name}")

        # invariance under Markov, Cromwell and exchange moves
        checked = cromwell_checked = 0
        while checked < 60:
            n = rng.randint(2, 4)
            letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(rng.randint(1, 8)))
            B = BraidWord(n, letters)
            ref = homfly_braid(n, letters)
            S = markov_stabilize(B)
            if homfly_braid(S.strands, S.letters) != ref:
                failures.append(f"Markov changed HOMFLY of {B}")
            G = braid_to_grid(B)
            for H in _cromwell_variants(G, rng):
                if grid_to_planar(H).simplify().crossings <= 14:
                    if homfly(grid_to_planar(H), crossing_cap=14) != ref:
                        failures.append(f"Cromwell move changed HOMFLY of {B}")
                    cromwell_checked += 1
            checked += 1
        for _ in range(40):
            u = [rng.choice([2, -2, 3, -3]) for _ in range(rng.randint(0, 5))]
            v = [rng.choice([2, -2, 3, -3]) for _ in range(rng.randint(0, 5))]
            e = rng.choice([1, -1])
            w = BraidWord(4, (e, *u, -e, *v))
            x = exchange_move(w, exchange_sites(w, 1)[0], 1)
            if homfly_braid(4, w.letters) != homfly_braid(4, x.letters):
                failures.append(f"exchange changed HOMFLY of {w}")
        if cromwell_checked < 100:
            failures.append(f"only {cromwell_checked} Cromwell instances within 14 crossings")

    _check(acceptance, 7, "d^2 = 0, oracle agreement, closure agreement, move invariance", body)


def test_criterion_8_primality(acceptance):
    def body(failures):
        for a, b in itertools.product(range(6), repeat=2):
            cert = primality_check(a, b)
            if not cert.passes:
                failures.append(f"({a},{b}) failed: {cert.solutions}")
            if (a, b) == (0, 0) and cert.solutions != [2]:
                failures.append(f"(0,0) exception branch gave {cert.solutions}")
            if (a, b) != (0, 0) and cert.solutions:
                failures.append(f"({a},{b}) has solutions {cert.solutions}")

    _check(acceptance, 8, "primality arithmetic for a, b <= 5", body)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
