"""Run the full certification for K(a, b) over a range of parameters.

    python scripts/reproduce_family.py --max-a 2 --max-b 2 --out reports/

Writes one JSON report per (a, b) plus a summary table on stdout.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from gridknot.config import load_config
from gridknot.family import reproduce


@dataclass(frozen=True)
class SweepConfig:
    max_a: int = 2
    max_b: int = 2
    out: Path | None = None
    config: str | None = None


def run(cfg: SweepConfig) -> int:
    settings = load_config(cfg.config)
    if cfg.out:
        cfg.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    print(f"{'a':>2} {'b':>2} {'size':>4} {'secs':>6}  homfly    verdict")
    for a in range(cfg.max_a + 1):
        for b in range(cfg.max_b + 1):
            t = time.perf_counter()
            rep = reproduce(a, b, settings.homfly_crossing_cap, settings.theta_state_cap)
            dt = time.perf_counter() - t
            homfly = rep.sections.get("homfly", {}).get("status", "checked")
            print(f"{a:>2} {b:>2} {2 * a + 2 * b + 10:>4} {dt:>6.2f}  {homfly:<8}  {rep.verdict}")
            failures += not rep.certified
            if cfg.out:
                (cfg.out / f"k_{a}_{b}.json").write_text(json.dumps(rep.to_json(), indent=1) + "\n")
    return 1 if failures else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-a", type=int, default=2)
    p.add_argument("--max-b", type=int, default=2)
    p.add_argument("--out", type=Path)
    p.add_argument("--config")
    args = p.parse_args()
    return run(SweepConfig(args.max_a, args.max_b, args.out, args.config))


if __name__ == "__main__":
    raise SystemExit(main())
