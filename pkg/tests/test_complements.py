import random

import pytest

import wreath_sylow as ws
from wreath_sylow import oracle
from wreath_sylow.complements import (
    REASON_NOT_SUMMAND,
    REASON_SOCLE_GAP,
    complement_order_exponent,
    decision_json,
    tail_commutator_exponent,
)
from wreath_sylow.perm import Perm, conjugate
from wreath_sylow.tower import random_element
from wreath_sylow.uniserial import STYLE_CO_SHIFT, STYLE_PREFIX

T33 = ws.tower(3, 3)
T34 = ws.tower(3, 4)


def gamma(tw):
    s0, s1 = ws.shift_gen(tw, 0), ws.shift_gen(tw, 1)
    return s1 * conjugate(s1, s0) * conjugate(s1, s0 * s0)


def test_closure_handle_shift0():
    handle = ws.closure_handle(T33, [ws.shift_gen(T33, 0)])
    assert handle.j == 0
    assert handle.image.rows == ((1, 0, 0),)
    # tail commutator accounts for 3^10, the image for one more power of 3
    assert tail_commutator_exponent(T33, 0) == 10
    assert handle.order_exponent == 11


def test_closure_handle_empty():
    handle = ws.closure_handle(T33, [])
    assert handle.j == 3
    assert handle.order_exponent == 0


def test_closure_handle_gamma_shift2():
    handle = ws.closure_handle(T33, [gamma(T33) * ws.shift_gen(T33, 2)])
    assert handle.j == 1
    assert handle.image.rank == 3
    # |K| = (3^4)^3 / 3^6 = 3^6, so |N| = 3^9
    assert handle.order_exponent == 9


def test_closure_order_matches_oracle_at_3_11():
    # 3^11 elements, counted by the packed normal-closure walk
    count = oracle.normal_closure_order(
        [ws.shift_gen(T33, 0)], ws.shift_gens(T33)
    )
    assert count == 3**11


def test_member_examples():
    handle = ws.closure_handle(T33, [gamma(T33) * ws.shift_gen(T33, 2)])
    for g in handle.gens:
        assert ws.member(handle, g)
    assert not ws.member(handle, ws.shift_gen(T33, 0))
    # commutators of tail elements always belong
    rng = random.Random(0)
    for _ in range(5):
        x, y = (_random_tail(T33, 1, rng) for _ in range(2))
        assert ws.member(handle, ws.commutator(x, y))


def _random_tail(tw, j, rng):
    local = ws.tower(tw.p, tw.n - j)
    size = tw.p ** (tw.n - j)
    images = []
    for b in range(tw.p**j):
        loc = random_element(local, rng)
        images.extend(b * size + loc.images[y] for y in range(size))
    return Perm(images)


def test_decide_shift0_gets_co_shift_complement():
    handle = ws.closure_handle(T33, [ws.shift_gen(T33, 0)])
    decision = ws.decide(handle)
    assert decision.has_complement
    assert decision.style == STYLE_CO_SHIFT
    assert decision.levels == (1, 2)
    assert [ws.format_cycles(g) for g in decision.gens] == [
        "(9 12 15)(10 13 16)(11 14 17)(18 21 24)(19 22 25)(20 23 26)",
        "(3 4 5)(6 7 8)",
    ]
    assert complement_order_exponent(handle, decision) == 2
    cert = ws.verify_complement(handle, decision)
    assert cert.passed
    assert cert.numbers["tail_part_rank"] == 2


def test_decide_gamma_gets_prefix_complement():
    handle = ws.closure_handle(T33, [gamma(T33) * ws.shift_gen(T33, 2)])
    decision = ws.decide(handle)
    assert decision.has_complement
    assert decision.style == STYLE_PREFIX
    assert decision.gens == (ws.shift_gen(T33, 0), ws.shift_gen(T33, 1))
    assert complement_order_exponent(handle, decision) == 4
    assert ws.verify_complement(handle, decision).passed


def test_decide_socle_gap_at_height_4():
    handle = ws.closure_handle(T34, [gamma(T34) * ws.shift_gen(T34, 2)])
    decision = ws.decide(handle)
    assert not decision.has_complement
    assert decision.reason == REASON_SOCLE_GAP


def test_decide_not_summand():
    s1, s2, s3 = (ws.shift_gen(T34, i) for i in (1, 2, 3))
    s0 = ws.shift_gen(T34, 0)
    delta = s2 * conjugate(s3.inverse() * conjugate(s3, s1), s0)
    handle = ws.closure_handle(T34, [delta])
    assert handle.j == 2
    decision = ws.decide(handle)
    assert not decision.has_complement
    assert decision.reason == REASON_NOT_SUMMAND


def test_decide_trivial_and_full():
    trivial = ws.closure_handle(T33, [])
    decision = ws.decide(trivial)
    assert decision.has_complement and decision.gens == tuple(ws.shift_gens(T33))
    assert ws.verify_complement(trivial, decision).passed

    full = ws.closure_handle(T33, ws.shift_gens(T33))
    decision = ws.decide(full)
    assert decision.has_complement and decision.gens == ()
    assert decision.levels == ()
    assert complement_order_exponent(full, decision) == 0
    assert ws.verify_complement(full, decision).passed


def test_verify_rejects_negative_decision():
    handle = ws.closure_handle(T34, [gamma(T34) * ws.shift_gen(T34, 2)])
    with pytest.raises(ValueError):
        ws.verify_complement(handle, ws.decide(handle))


def test_scale_orbit_moves_gamma_closure():
    # scaling digit 1 or 2 rescales exactly one of the coupled parts, which
    # changes the closure; scaling digit 0 permutes the conjugates only
    handle = ws.closure_handle(T33, [gamma(T33) * ws.shift_gen(T33, 2)])
    orbit = ws.scale_orbit(handle)
    assert [same for _, _, same in orbit] == [True, False, False]
    # a closure generated by shift powers is fixed by every scaling map
    handle0 = ws.closure_handle(T33, [ws.shift_gen(T33, 0)])
    assert all(same for _, _, same in ws.scale_orbit(handle0))


def test_scale_invariant_complement_as_subgroups():
    # conjugating the complement generators by any scaling map regenerates
    # the same subgroup, checked on full element sets
    handle = ws.closure_handle(T33, [gamma(T33) * ws.shift_gen(T33, 2)])
    decision = ws.decide(handle)
    comp = oracle.bfs_closure(list(decision.gens))
    for eta in ws.scale_gens(T33):
        conj = oracle.bfs_closure([conjugate(g, eta) for g in decision.gens])
        assert conj.elements == comp.elements


def test_depth_propagation_on_closures():
    # once the intersection with the tail chain drops strictly, it keeps dropping
    rng = random.Random(4)
    for p, n in [(2, 3), (3, 2), (2, 2)]:
        tw = ws.tower(p, n)
        group = oracle.bfs_closure(ws.shift_gens(tw))
        for _ in range(6):
            gens = [random_element(tw, rng) for _ in range(rng.randrange(1, 3))]
            closure = oracle.normal_closure(gens, ws.shift_gens(tw))
            sizes = []
            for j in range(n + 1):
                sizes.append(sum(1 for x in closure.elements if ws.in_tail(tw, j, x)))
            drops = [k for k in range(n) if sizes[k + 1] < sizes[k]]
            if drops:
                assert drops == list(range(drops[0], n))


def test_randomized_soundness_all_sizes():
    rng = random.Random(20240809)
    for p, n in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)]:
        tw = ws.tower(p, n)
        decided = 0
        for _ in range(12):
            gens = [random_element(tw, rng) for _ in range(rng.randrange(1, 4))]
            handle = ws.closure_handle(tw, gens)
            decision = ws.decide(handle)
            if decision.has_complement:
                decided += 1
                cert = ws.verify_complement(handle, decision)
                assert cert.passed, (p, n, cert.checks)
        # with identity generators possible, at least the trivial cases decide
        assert decided >= 1


def test_order_exponent_against_enumeration(enumerated):
    for (p, n), data in enumerated.items():
        tw = data["tower"]
        for sub in data["normals"]:
            handle = ws.closure_handle(tw, sub.sorted_elements())
            assert p**handle.order_exponent == sub.order


def test_member_agrees_with_enumeration(enumerated):
    data = enumerated[(2, 3)]
    tw, group = data["tower"], data["group"]
    rng = random.Random(1)
    subs = [s for s in data["normals"] if 1 < s.order < group.order]
    for sub in rng.sample(subs, min(4, len(subs))):
        handle = ws.closure_handle(tw, sub.sorted_elements())
        for x in rng.sample(group.sorted_elements(), 40):
            assert ws.member(handle, x) == (x in sub.elements)


def test_decision_json_shape():
    handle = ws.closure_handle(T33, [ws.shift_gen(T33, 0)])
    report = decision_json(handle, ws.decide(handle))
    assert report["schema"] == 1
    assert report["verdict"] == "HasComplement"
    assert report["Z"] == [1, 2]
    assert report["orders"] == {"N": 11, "C": 2, "Pn": 13}
    assert all(report["checks"].values())

    bad = ws.closure_handle(T34, [gamma(T34) * ws.shift_gen(T34, 2)])
    report = decision_json(bad, ws.decide(bad))
    assert report["verdict"] == "NoComplement"
    assert report["reason"] == REASON_SOCLE_GAP
    assert report["orders"]["C"] is None
