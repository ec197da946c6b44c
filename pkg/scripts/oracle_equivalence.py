#!/usr/bin/env python3
"""Sweep every normal subgroup of the enumerable towers and compare the
decision engine's verdict with exhaustive complement search.

Prints one row per normal subgroup; exits nonzero on any disagreement.
"""

import sys
import time

import wreath_sylow as ws
from wreath_sylow import oracle

SIZES = [(2, 2), (3, 2), (2, 3)]


def main() -> int:
    bad = 0
    for p, n in SIZES:
        tw = ws.tower(p, n)
        start = time.perf_counter()
        group = oracle.bfs_closure(ws.shift_gens(tw))
        normals = oracle.all_normal_subgroups(group)
        print(f"tower p={p} n={n}: order {group.order}, {len(normals)} normal subgroups")
        for sub in normals:
            handle = ws.closure_handle(tw, sub.sorted_elements())
            decision = ws.decide(handle)
            oracle_has = oracle.has_complement(group, sub)
            verified = (
                ws.verify_complement(handle, decision).passed
                if decision.has_complement
                else None
            )
            ok = decision.has_complement == oracle_has and verified is not False
            bad += 0 if ok else 1
            print(
                f"  |N|={p}^{handle.order_exponent:<2} depth={handle.j}"
                f"  engine={'yes' if decision.has_complement else 'no ':<3}"
                f" oracle={'yes' if oracle_has else 'no ':<3}"
                f" certificate={verified}"
                f" {'' if ok else '  <-- MISMATCH'}"
            )
        print(f"  done in {time.perf_counter() - start:.1f}s")
    print("all verdicts agree" if bad == 0 else f"{bad} MISMATCHES")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
