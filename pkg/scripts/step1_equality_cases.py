"""List step-1 triples where the kernel bound is attained by some K other than D.

For each such triple, prints the extra kernels and whether each one shares
its top slope with E (then the top piece contributes nothing) or not.
"""

import argparse

from ffbundles.bundles import mu_max
from ffbundles.sequences import SlopeWindow, screened_triples, verify_key_inequality_kernel


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--lo", default="-2")
    p.add_argument("--hi", default="2")
    p.add_argument("--limit", type=int, default=20)
    a = p.parse_args()

    window = SlopeWindow(a.lo, a.hi, a.max_rank)
    shown = total = 0
    split = 0
    for D, E, F in screened_triples(window, "D"):
        rep = verify_key_inequality_kernel(D, E, F)
        if not rep.applicable:
            continue
        extra = [r.candidate for r in rep.rows if r.equality and not r.expected_equality]
        if not extra:
            continue
        total += 1
        split += E == D + F
        if shown < a.limit:
            shown += 1
            kinds = ", ".join(f"{K} ({'top slope = mu_max(E)' if mu_max(K) == mu_max(E) else 'other'})" for K in extra)
            print(f"D={D} | E={E} | F={F}{'  [split]' if E == D + F else ''}\n    equality also at: {kinds}")
    print(f"\n{total} triples with equality away from K = D ({split} of them split)")


if __name__ == "__main__":
    main()
