"""Compare the saturation solver for theta-hat with exhaustive linear algebra.

    python scripts/oracle_sweep.py --exhaustive-max 5 --random 200 --seed 1

Every knot grid up to --exhaustive-max is checked, then --random grids of
size 6 or 7.  Also tallies how often theta-hat vanishes.
"""

from __future__ import annotations

import argparse
import itertools
import random
import time
from collections import Counter
from dataclasses import dataclass

from gridknot.floer import NullChain, brute_force_theta, theta_vanishes
from gridknot.grid import GridDiagram, components


@dataclass(frozen=True)
class SweepConfig:
    exhaustive_max: int = 5
    random_count: int = 200
    seed: int = 1


def knot_grids(n: int):
    for X in itertools.permutations(range(1, n + 1)):
        for O in itertools.permutations(range(1, n + 1)):
            if any(a == b for a, b in zip(X, O)):
                continue
            G = GridDiagram(X, O)
            if components(G) == 1:
                yield G


def random_knot_grid(rng: random.Random, n: int) -> GridDiagram:
    while True:
        X, O = list(range(1, n + 1)), list(range(1, n + 1))
        rng.shuffle(X)
        rng.shuffle(O)
        if all(a != b for a, b in zip(X, O)):
            G = GridDiagram(X, O)
            if components(G) == 1:
                return G


def run(cfg: SweepConfig) -> int:
    tally: Counter = Counter()
    bad = []

    def check(G: GridDiagram, label: str) -> None:
        fast = isinstance(theta_vanishes(G), NullChain)
        tally[(label, fast)] += 1
        if fast != brute_force_theta(G):
            bad.append(G)

    t = time.perf_counter()
    for n in range(2, cfg.exhaustive_max + 1):
        for G in knot_grids(n):
            check(G, f"n={n}")
    rng = random.Random(cfg.seed)
    for _ in range(cfg.random_count):
        n = rng.choice([6, 7])
        check(random_knot_grid(rng, n), f"n={n} random")
    labels = sorted({k[0] for k in tally})
    for lab in labels:
        print(f"{lab:>14}: {tally[(lab, True)]:>5} vanishing, {tally[(lab, False)]:>5} nonvanishing")
    print(f"disagreements: {len(bad)}  ({time.perf_counter() - t:.1f}s)")
    for G in bad[:10]:
        print("  ", G)
    return 1 if bad else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--exhaustive-max", type=int, default=5)
    p.add_argument("--random", type=int, default=200, dest="random_count")
    p.add_argument("--seed", type=int, default=1)
    return run(SweepConfig(**vars(p.parse_args())))


if __name__ == "__main__":
    raise SystemExit(main())
