#!/usr/bin/env python3
"""Seeded random sweep over the bigger towers: every positive verdict from
the decision engine must come with a passing certificate.

Usage: random_soundness.py [seed] [trials-per-size]
"""

import random
import sys

import wreath_sylow as ws
from wreath_sylow.tower import random_element

SIZES = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)]


def main(seed: int = 0, trials: int = 40) -> int:
    rng = random.Random(seed)
    failures = 0
    for p, n in SIZES:
        tw = ws.tower(p, n)
        histogram = {"yes": 0, "not_direct_summand": 0, "socle_gap": 0}
        for _ in range(trials):
            gens = [random_element(tw, rng) for _ in range(rng.randrange(1, 4))]
            handle = ws.closure_handle(tw, gens)
            decision = ws.decide(handle)
            if decision.has_complement:
                histogram["yes"] += 1
                if not ws.verify_complement(handle, decision).passed:
                    failures += 1
                    print(f"FAILED certificate at p={p} n={n}")
            else:
                histogram[decision.reason] += 1
        print(f"p={p} n={n}: {histogram} over {trials} trials")
    print("all certificates passed" if failures == 0 else f"{failures} failures")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 0
    trials = int(sys.argv[2]) if len(sys.argv) > 2 else 40
    sys.exit(main(seed, trials))
