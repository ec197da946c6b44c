import pytest

import wreath_sylow as ws
from wreath_sylow import oracle

# the sizes small enough for exhaustive subgroup work
ENUMERABLE = [(2, 2), (3, 2), (2, 3)]


@pytest.fixture(scope="session")
def enumerated():
    """Fully enumerated towers with their normal subgroup lists, built once."""
    out = {}
    for p, n in ENUMERABLE:
        tw = ws.tower(p, n)
        group = oracle.bfs_closure(ws.shift_gens(tw))
        out[(p, n)] = {
            "tower": tw,
            "group": group,
            "normals": oracle.all_normal_subgroups(group),
        }
    return out


@pytest.fixture(scope="session")
def oracle_verdicts(enumerated):
    """Engine decision and oracle complement verdict per normal subgroup."""
    import time

    start = time.perf_counter()
    rows_by_size = {}
    for key, data in enumerated.items():
        tw, group = data["tower"], data["group"]
        rows = []
        for sub in data["normals"]:
            handle = ws.closure_handle(tw, sub.sorted_elements())
            decision = ws.decide(handle)
            rows.append(
                {
                    "sub": sub,
                    "handle": handle,
                    "decision": decision,
                    "oracle_has": oracle.has_complement(group, sub),
                }
            )
        rows_by_size[key] = rows
    return {"rows": rows_by_size, "elapsed": time.perf_counter() - start}
