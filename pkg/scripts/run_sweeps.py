"""Run the exhaustive sweeps and write one JSON summary per sweep.

    python3 scripts/run_sweeps.py --max-rank 5 --lo -2 --hi 2 --out results/
"""

import argparse
import json
import time
from pathlib import Path

from ffbundles.sequences import SWEEPS, SlopeWindow


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--lo", default="-2")
    p.add_argument("--hi", default="2")
    p.add_argument("--only", default=",".join(SWEEPS))
    p.add_argument("--out", type=Path, default=Path("results"))
    a = p.parse_args()

    window = SlopeWindow(a.lo, a.hi, a.max_rank)
    a.out.mkdir(parents=True, exist_ok=True)
    for name in a.only.split(","):
        t = time.perf_counter()
        summary = SWEEPS[name](window)
        elapsed = time.perf_counter() - t
        target = a.out / f"{name}_r{a.max_rank}.json"
        target.write_text(json.dumps(summary.to_dict(), sort_keys=True, indent=2) + "\n")
        print(
            f"{name:13s} triples={summary.triples:7d} skipped={summary.skipped:5d} "
            f"ineq_fail={summary.inequality_failures:4d} eq_fail={summary.equality_failures:5d} "
            f"violations={len(summary.violations):5d} {elapsed:6.1f}s -> {target}"
        )


if __name__ == "__main__":
    main()
