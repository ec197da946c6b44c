"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
stream; every criterion asserts its stated runtime bound where one exists.
"""

import time

import wreath_sylow as ws
from wreath_sylow import oracle
from wreath_sylow.cli import main
from wreath_sylow.corpus import run_corpus
from wreath_sylow.gallery import gallery_mod9, gallery_quaternion_central
from wreath_sylow.linalg import Subspace, lower_central_series
from wreath_sylow.partition import (
    all_normal_specs,
    partition_generators,
    partition_has_complement,
    tail_commutator_spec,
)
from wreath_sylow.perm import conjugate
from wreath_sylow.tower import point_action_matrices, rotation_subgroup_gens


def _report(k, label, elapsed, bound=None):
    line = f"ACCEPTANCE {k} ({label}): PASS in {elapsed:.2f}s"
    if bound is not None:
        line += f" (bound {bound}s)"
    print(line)


def test_criterion_1_generator_corpus(capsys):
    start = time.perf_counter()
    assert main(["gens", "--p", "3", "--n", "3"]) == 0
    out = capsys.readouterr().out
    lines = dict(line.split(" = ") for line in out.strip().splitlines())
    expected = {
        "s0": "(0 9 18)(1 10 19)(2 11 20)(3 12 21)(4 13 22)(5 14 23)(6 15 24)(7 16 25)(8 17 26)",
        "s1": "(0 3 6)(1 4 7)(2 5 8)",
        "s2": "(0 1 2)",
        "e0": "(9 18)(10 19)(11 20)(12 21)(13 22)(14 23)(15 24)(16 25)(17 26)",
        # the digit-1 scaling map from its defining formula
        "e1": "(3 6)(4 7)(5 8)(12 15)(13 16)(14 17)(21 24)(22 25)(23 26)",
        "e2": "(1 2)(4 5)(7 8)(10 11)(13 14)(16 17)(19 20)(22 23)(25 26)",
        "r1": "(9 12 15)(10 13 16)(11 14 17)(18 21 24)(19 22 25)(20 23 26)",
        "r2": "(3 4 5)(6 7 8)",
        "base0": "(0 1 2)", "base1": "(3 4 5)", "base2": "(6 7 8)",
        "base3": "(9 10 11)", "base4": "(12 13 14)", "base5": "(15 16 17)",
        "base6": "(18 19 20)", "base7": "(21 22 23)", "base8": "(24 25 26)",
    }
    for name, cycles in expected.items():
        assert lines[name] == cycles, name
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    with capsys.disabled():
        _report(1, "generator corpus", elapsed, 1)


def test_criterion_2_decision_corpus(capsys):
    start = time.perf_counter()
    results = run_corpus()
    for r in results:
        assert r["ok"], r
    names = [r["name"] for r in results]
    assert len(names) == 7
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    with capsys.disabled():
        _report(2, "decision corpus", elapsed, 5)


def test_criterion_3_oracle_equivalence(capsys, oracle_verdicts):
    start = time.perf_counter()
    total = 0
    for (p, n), rows in oracle_verdicts["rows"].items():
        for row in rows:
            assert row["decision"].has_complement == row["oracle_has"], (
                p, n, row["sub"].order,
            )
            if row["decision"].has_complement:
                cert = ws.verify_complement(row["handle"], row["decision"])
                assert cert.passed, (p, n, row["sub"].order, cert.checks)
            total += 1
    assert total >= 40
    elapsed = time.perf_counter() - start + oracle_verdicts["elapsed"]
    with capsys.disabled():
        _report(3, f"oracle equivalence on {total} normal subgroups", elapsed)


def test_criterion_4_invariant_suites(capsys, enumerated):
    start = time.perf_counter()
    for (p, n), data in enumerated.items():
        tw, group = data["tower"], data["group"]
        tails = {}
        for j in range(n + 1):
            elems = [x for x in group.elements if ws.in_tail(tw, j, x)]
            tails[j] = oracle.GroupSet(frozenset(elems), tuple(elems), group.identity)
        for sub in data["normals"]:
            # the tail commutator subgroup at the depth level is contained
            if sub.order > 1:
                j = ws.depth(tw, sub.sorted_elements())
                k = oracle.derived_subgroup(tails[j])
                assert k.elements <= sub.elements
            # a strict drop in the tail chain intersection propagates down
            sizes = [
                sum(1 for x in sub.elements if ws.in_tail(tw, j, x))
                for j in range(n + 1)
            ]
            drops = [k for k in range(n) if sizes[k + 1] < sizes[k]]
            if drops:
                assert drops == list(range(drops[0], n))
    # order-p tail elements commuting with something outside land in the
    # derived subgroup
    for p, n in [(2, 3), (3, 2)]:
        data = enumerated[(p, n)]
        tw, group = data["tower"], data["group"]
        derived = oracle.derived_subgroup(group)
        e = group.identity
        tail1 = [x for x in group.elements if ws.in_tail(tw, 1, x)]
        outside = [x for x in group.elements if not ws.in_tail(tw, 1, x)]
        for y in tail1:
            if y == e or oracle.element_order(y, e) != p:
                continue
            if any(x * y == y * x for x in outside):
                assert y in derived.elements
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(4, "structural invariant suites", elapsed)


def test_criterion_5_uniseriality(capsys):
    start = time.perf_counter()
    for p, top in [(2, 4), (3, 3), (5, 2)]:
        for n in range(1, top + 1):
            tw = ws.tower(p, n)
            chain = lower_central_series(
                Subspace.full(p, tw.degree), point_action_matrices(tw)
            )
            assert len(chain) == tw.degree + 1
            assert [c.rank for c in chain] == list(range(tw.degree, -1, -1))
    for n, length in [(2, 2), (3, 4)]:
        tw = ws.tower(2, n)
        group = oracle.bfs_closure(ws.shift_gens(tw))
        rot = oracle.bfs_closure(rotation_subgroup_gens(tw))
        assert rot.order == 2**length
        chain = oracle.commutator_chain(group, rot)
        assert len(chain) == length + 1
        assert all(a.order == 2 * b.order for a, b in zip(chain, chain[1:]))
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    with capsys.disabled():
        _report(5, "uniserial chains", elapsed, 10)


def test_criterion_6_scaling_group(capsys):
    start = time.perf_counter()
    for p, n in [(3, 3), (3, 4), (5, 2)]:
        tw = ws.tower(p, n)
        scales = ws.scale_gens(tw)
        assert oracle.bfs_closure(scales).order == (p - 1) ** n
        shifts = ws.shift_gens(tw)
        for k, eta in enumerate(scales):
            for i, sig in enumerate(shifts):
                assert conjugate(sig, eta) == (sig**tw.r if k == i else sig)
            for i in range(1, n):
                rho = ws.co_shift_gen(tw, i)
                assert conjugate(rho, eta) == (rho**tw.r if k == i else rho)
    # the worked example: the closure moves under the digit-2 scaling map,
    # its complement does not
    tw = ws.tower(3, 3)
    s0, s1, s2 = ws.shift_gens(tw)
    gamma = s1 * conjugate(s1, s0) * conjugate(s1, s0 * s0)
    handle = ws.closure_handle(tw, [gamma * s2])
    orbit = ws.scale_orbit(handle)
    assert orbit[2][2] is False
    decision = ws.decide(handle)
    cert = ws.verify_complement(handle, decision)
    assert cert.checks["scale_invariance"]
    comp = oracle.bfs_closure(list(decision.gens))
    for eta in ws.scale_gens(tw):
        again = oracle.bfs_closure([conjugate(g, eta) for g in decision.gens])
        assert again.elements == comp.elements
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        _report(6, "scaling group checks", elapsed)


def test_criterion_7_partition_crosscheck(capsys, enumerated):
    start = time.perf_counter()
    count = 0
    for p, n in [(3, 3), (2, 4)]:
        tw = ws.tower(p, n)
        for spec in all_normal_specs(p, n):
            handle = ws.closure_handle(tw, partition_generators(tw, spec))
            decision = ws.decide(handle)
            assert decision.has_complement == partition_has_complement(spec), spec
            if decision.has_complement:
                assert ws.verify_complement(handle, decision).passed, spec
            count += 1
    for p, n in [(2, 3), (3, 2)]:
        data = enumerated[(p, n)]
        tw, group = data["tower"], data["group"]
        for j in range(n):
            elems = [x for x in group.elements if ws.in_tail(tw, j, x)]
            tail = oracle.GroupSet(frozenset(elems), tuple(elems), group.identity)
            derived = oracle.derived_subgroup(tail)
            gens = partition_generators(tw, tail_commutator_spec(p, n, j))
            part = (
                oracle.bfs_closure(gens)
                if gens
                else oracle.bfs_closure([group.identity])
            )
            assert part.elements == derived.elements
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    with capsys.disabled():
        _report(7, f"partition crosscheck on {count} normal specs", elapsed, 60)


def test_criterion_8_gallery(capsys):
    start = time.perf_counter()
    q = gallery_quaternion_central()
    assert q["complement_count"] == 6
    assert q["orbit_type"] == [3, 3]
    assert q["invariant_complements"] == 0
    m = gallery_mod9()
    assert m["group_order"] == 243
    assert m["normal_order"] == 81
    assert m["complement_count"] == 54
    assert m["invariant_complements"] == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    with capsys.disabled():
        _report(8, "counterexample gallery", elapsed, 10)


def test_criterion_9_appendix(capsys, enumerated):
    start = time.perf_counter()
    expected = {(3, 2): (3, 1), (2, 2): (2, 3), (2, 3): (4, 9)}
    for (p, n), want in expected.items():
        group = enumerated[(p, n)]["group"]
        assert oracle.max_abelian_stats(group, p) == want, (p, n)
    # self-centralizing checks at degrees 4, 8 and 9
    for p, n in [(2, 2), (2, 3), (3, 2)]:
        tw = ws.tower(p, n)
        base = oracle.bfs_closure(ws.base_translations(tw))
        cz_base = oracle.centralizer_in_sym(ws.base_translations(tw), tw.degree)
        assert cz_base.elements <= base.elements
        tower_set = enumerated[(p, n)]["group"]
        cz_tower = oracle.centralizer_in_sym(ws.shift_gens(tw), tw.degree)
        assert cz_tower.elements <= tower_set.elements
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    with capsys.disabled():
        _report(9, "largest abelian subgroups and centralizers", elapsed, 120)
